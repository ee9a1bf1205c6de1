#pragma once

// Ordered involution tuples (s_1, ..., s_r): the string property, the
// intersection property, Schlafli type and degeneracy.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "stringc/coxeter.hpp"
#include "stringc/errors.hpp"
#include "stringc/perm.hpp"
#include "stringc/permgroup.hpp"

namespace stringc {

/// An ordered tuple of permutations of one degree, with memoized interval
/// subgroups <s_i, ..., s_j>. Construction does not require the generators
/// to be involutions; the predicates below report that instead.
///
/// The memo tables are mutated by const queries, so one instance must not be
/// queried from several threads at once. Copies are independent.
class GeneratorString {
 public:
  GeneratorString() = default;

  GeneratorString(std::size_t degree, std::vector<Permutation> gens)
      : degree_(degree), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return gens_.size(); }
  const std::vector<Permutation>& gens() const noexcept { return gens_; }
  const Permutation& operator[](std::size_t i) const { return gens_.at(i); }

  /// <s_first, ..., s_last> (0-based, inclusive); trivial when first > last.
  const PermutationGroup& interval(std::size_t first, std::size_t last) const {
    if (first > last) {
      if (!trivial_) trivial_ = PermutationGroup(degree_, {});
      return *trivial_;
    }
    if (last >= gens_.size()) throw InvalidArgument("interval out of range");
    auto key = std::make_pair(first, last);
    auto it = intervals_.find(key);
    if (it == intervals_.end()) {
      std::vector<Permutation> sub(gens_.begin() + static_cast<std::ptrdiff_t>(first),
                                   gens_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
      it = intervals_.emplace(key, PermutationGroup(degree_, std::move(sub))).first;
    }
    return it->second;
  }

  /// <s_1, ..., s_r>.
  const PermutationGroup& group() const {
    return gens_.empty() ? interval(1, 0) : interval(0, gens_.size() - 1);
  }

  GeneratorString reversed() const {
    return GeneratorString(degree_, {gens_.rbegin(), gens_.rend()});
  }

  /// (s_first, ..., s_last), 0-based inclusive.
  GeneratorString substring(std::size_t first, std::size_t last) const {
    if (last >= gens_.size() || first > last)
      throw InvalidArgument("substring out of range");
    return GeneratorString(
        degree_, {gens_.begin() + static_cast<std::ptrdiff_t>(first),
                  gens_.begin() + static_cast<std::ptrdiff_t>(last) + 1});
  }

  friend bool operator==(const GeneratorString& a, const GeneratorString& b) {
    return a.degree_ == b.degree_ && a.gens_ == b.gens_;
  }

 private:
  friend bool interval_intersection_property(const GeneratorString&, std::size_t,
                                             std::size_t, std::uint64_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  mutable std::map<std::pair<std::size_t, std::size_t>, PermutationGroup> intervals_;
  mutable std::map<std::pair<std::size_t, std::size_t>, bool> ip_memo_;
  mutable std::optional<PermutationGroup> trivial_;
};

inline std::ostream& operator<<(std::ostream& os, const GeneratorString& s) {
  os << '[';
  for (std::size_t i = 0; i < s.rank(); ++i) os << (i ? ", " : "") << s[i];
  return os << ']';
}

/// Every generator is an involution and non-adjacent generators commute.
inline bool is_string_group(const GeneratorString& s) {
  for (const auto& g : s.gens())
    if (!is_involution(g)) return false;
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = i + 2; j < s.rank(); ++j)
      if (!commute(s[i], s[j])) return false;
  return true;
}

/// Orders of s_i s_{i+1}; empty for rank <= 1.
inline std::vector<std::uint64_t> schlafli(const GeneratorString& s) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i + 1 < s.rank(); ++i) out.push_back(order(s[i] * s[i + 1]));
  return out;
}

inline bool is_degenerate(const GeneratorString& s) {
  for (auto p : schlafli(s))
    if (p == 2) return true;
  return false;
}

/// Intersection property of the substring s_first..s_last, memoized. Uses
/// the facet recursion: both facets are C-strings and
/// |<s_first..s_{last-1}> n <s_{first+1}..s_last>| = |<s_{first+1}..s_{last-1}>|.
/// The middle group lies in both facets, so equal orders mean equal groups.
inline bool interval_intersection_property(const GeneratorString& s,
                                           std::size_t first, std::size_t last,
                                           std::uint64_t cap) {
  if (last <= first) return true;
  if (last == first + 1) return s[first] != s[last];
  auto key = std::make_pair(first, last);
  if (auto it = s.ip_memo_.find(key); it != s.ip_memo_.end()) return it->second;
  bool ok = interval_intersection_property(s, first, last - 1, cap) &&
            interval_intersection_property(s, first + 1, last, cap) &&
            intersection_order(s.interval(first, last - 1), s.interval(first + 1, last),
                               cap) == s.interval(first + 1, last - 1).order();
  s.ip_memo_.emplace(key, ok);
  return ok;
}

/// Requires a string group; throws PreconditionViolation otherwise.
inline bool intersection_property(const GeneratorString& s,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
  if (!is_string_group(s))
    throw PreconditionViolation("intersection property needs a string group");
  if (s.rank() <= 1) return true;
  return interval_intersection_property(s, 0, s.rank() - 1, cap);
}

/// Is s a C-string of g: a string group with the intersection property whose
/// generators lie in g and generate all of it.
inline bool is_cstring_of(const GeneratorString& s, const PermutationGroup& g,
                          std::uint64_t cap = kDefaultEnumerationCap) {
  if (s.degree() != g.degree()) throw DegreeMismatch(s.degree(), g.degree());
  if (!is_string_group(s)) return false;
  for (const auto& x : s.gens())
    if (!g.contains(x)) return false;
  if (s.group().order() != g.order()) return false;
  return intersection_property(s, cap);
}

/// C-string of the group it generates.
inline bool is_cstring(const GeneratorString& s,
                       std::uint64_t cap = kDefaultEnumerationCap) {
  return is_string_group(s) && intersection_property(s, cap);
}

/// Is p in the sign-change subgroup N of D_n <= Sym(2n): a product of an
/// even number of transpositions (i, n+i).
inline bool in_sign_change_subgroup(const Permutation& p, std::size_t n) {
  if (p.degree() != 2 * n) throw DegreeMismatch(p.degree(), 2 * n);
  auto img = p.data();
  std::size_t flips = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (img[i] == i && img[n + i] == n + i) continue;
    if (img[i] == n + i && img[n + i] == i) {
      ++flips;
      continue;
    }
    return false;
  }
  return flips % 2 == 0;
}

/// Sign-change subgroup N of D_n as a permutation group of degree 2n.
inline PermutationGroup sign_change_subgroup(std::size_t n) {
  std::vector<Permutation> gens;
  const auto m = static_cast<Point>(n);
  for (Point i = 1; i < m; ++i)
    gens.push_back(from_cycles({{i, m + i}, {i + 1, m + i + 1}}, 2 * n));
  return PermutationGroup(2 * n, std::move(gens));
}

/// Shortcut for tuples (s_1..s_r) in D_n <= Sym(2n) whose facet
/// (s_1..s_{r-1}) is a C-string complementing the sign changes N. Returns
/// whether s_r lies in N but not in Z(D_n); true certifies the tuple as a
/// C-string of D_n without an intersection computation on the full tuple.
/// With s_r in N, false means the tuple generates a proper subgroup. With
/// s_r outside N the result is false and says nothing about the tuple.
///
/// Throws PreconditionViolation, when s_r is in N but the shortcut does not
/// apply: not a string group, a generator outside D_n, a facet that is not a
/// C-string, or a facet that is not a complement of N (|facet| |N| = |D_n|
/// with trivial intersection).
inline bool fast_check_last_in_N(const GeneratorString& s, std::size_t n,
                                 const PermutationGroup& dn,
                                 std::uint64_t cap = kDefaultEnumerationCap) {
  if (s.degree() != 2 * n) throw PreconditionViolation("degree must be 2n");
  if (s.rank() < 2) throw PreconditionViolation("rank must be at least 2");
  const std::size_t r = s.rank();
  const auto& last = s[r - 1];
  if (!in_sign_change_subgroup(last, n)) return false;
  if (!is_string_group(s)) throw PreconditionViolation("not a string group");
  for (const auto& x : s.gens())
    if (!dn.contains(x)) throw PreconditionViolation("generator outside D_n");
  if (!interval_intersection_property(s, 0, r - 2, cap))
    throw PreconditionViolation("facet is not a C-string");
  const auto& facet = s.interval(0, r - 2);
  auto signs = sign_change_subgroup(n);
  if (facet.order() * signs.order() != dn.order() ||
      intersection_order(facet, signs, cap) != 1)
    throw PreconditionViolation("facet is not a complement of the sign changes");
  // Z(D_n) is trivial for odd n and {1, full sign change} for even n.
  bool full = true;
  for (std::size_t i = 0; i < n; ++i) full = full && last.data()[i] == n + i;
  return !full;
}

inline bool fast_check_last_in_N(const GeneratorString& s, std::size_t n,
                                 std::uint64_t cap = kDefaultEnumerationCap) {
  const auto m = static_cast<std::uint32_t>(n);
  return fast_check_last_in_N(s, n, PermutationGroup(2 * n, dn_coxeter_generators(m)),
                              cap);
}

/// Verifies s as a C-string of dn (the D_n realization in Sym(2n)), using the
/// sign-change shortcut when its preconditions hold and the general
/// verifier otherwise.
inline bool verify_dn_cstring(const GeneratorString& s, std::size_t n,
                              const PermutationGroup& dn,
                              std::uint64_t cap = kDefaultEnumerationCap) {
  if (s.degree() == 2 * n && s.rank() >= 2 && in_sign_change_subgroup(s[s.rank() - 1], n)) {
    try {
      return fast_check_last_in_N(s, n, dn, cap);
    } catch (const PreconditionViolation&) {
    }
  }
  return is_cstring_of(s, dn, cap);
}

}  // namespace stringc
