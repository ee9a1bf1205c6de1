#pragma once

// Equivalence of generating tuples of one group: s_i -> t_i extends to an
// automorphism iff the assignment is consistent along every edge of the
// Cayley graph. Duality reverses the tuple.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stringc/cstring.hpp"
#include "stringc/errors.hpp"
#include "stringc/indexed_group.hpp"

namespace stringc {

inline GeneratorString dual(const GeneratorString& s) { return s.reversed(); }

/// Column of right multiplication by q: column[g] = index of g * q.
inline std::vector<ElementIndex> right_multiplication(const IndexedGroup& g,
                                                      const Permutation& q) {
  std::vector<ElementIndex> column(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    column[i] = g.product(static_cast<ElementIndex>(i), q);
  return column;
}

/// Breadth-first search of the Cayley graph on the s-columns, mapping
/// g*s_i to phi(g)*t_i. Returns phi as a table when it is consistent on every
/// edge and injective; the s-columns must generate the group.
inline std::optional<std::vector<ElementIndex>> cayley_map(
    const IndexedGroup& g, std::span<const std::vector<ElementIndex>* const> s,
    std::span<const std::vector<ElementIndex>* const> t) {
  if (s.size() != t.size()) return std::nullopt;
  constexpr ElementIndex kUnset = 0xffffffffu;
  const std::size_t n = g.size();
  std::vector<ElementIndex> phi(n, kUnset);
  std::vector<bool> hit(n, false);
  std::vector<ElementIndex> queue;
  queue.reserve(n);
  const ElementIndex e = g.identity_index();
  phi[e] = e;
  hit[e] = true;
  queue.push_back(e);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementIndex x = queue[k];
    const ElementIndex fx = phi[x];
    for (std::size_t i = 0; i < s.size(); ++i) {
      const ElementIndex y = (*s[i])[x];
      const ElementIndex fy = (*t[i])[fx];
      if (phi[y] == kUnset) {
        if (hit[fy]) return std::nullopt;
        phi[y] = fy;
        hit[fy] = true;
        queue.push_back(y);
      } else if (phi[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return phi;
}

namespace detail {

inline void require_generates(const PermutationGroup& g, const GeneratorString& s) {
  if (s.degree() != g.degree()) throw DegreeMismatch(s.degree(), g.degree());
  for (const auto& x : s.gens())
    if (!g.contains(x)) throw PreconditionViolation("generator outside the group");
  if (s.group().order() != g.order())
    throw PreconditionViolation("tuple does not generate the group");
}

}  // namespace detail

/// The automorphism of g extending s_i -> t_i, as an index table over
/// IndexedGroup(g), or nullopt if there is none. Both tuples must generate g.
inline std::optional<std::vector<ElementIndex>> find_automorphism(
    const IndexedGroup& ig, const GeneratorString& s, const GeneratorString& t) {
  detail::require_generates(ig.group(), s);
  detail::require_generates(ig.group(), t);
  if (s.rank() != t.rank()) return std::nullopt;
  std::vector<std::vector<ElementIndex>> columns;
  columns.reserve(2 * s.rank());
  for (const auto& x : s.gens()) columns.push_back(right_multiplication(ig, x));
  for (const auto& x : t.gens()) columns.push_back(right_multiplication(ig, x));
  std::vector<const std::vector<ElementIndex>*> sc, tc;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    sc.push_back(&columns[i]);
    tc.push_back(&columns[s.rank() + i]);
  }
  return cayley_map(ig, sc, tc);
}

/// Does s_i -> t_i extend to an automorphism of g?
inline bool extend_automorphism(const PermutationGroup& g, const GeneratorString& s,
                                const GeneratorString& t,
                                std::uint64_t cap = kDefaultEnumerationCap) {
  IndexedGroup ig(g, cap);
  return find_automorphism(ig, s, t).has_value();
}

inline bool is_palindrome(const std::vector<std::uint64_t>& v) {
  return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2),
                    v.rbegin());
}

/// Some automorphism of g reverses s.
inline bool is_self_dual(const PermutationGroup& g, const GeneratorString& s,
                         std::uint64_t cap = kDefaultEnumerationCap) {
  if (!is_palindrome(schlafli(s))) return false;
  return extend_automorphism(g, s, dual(s), cap);
}

/// Invariant of a tuple under automorphisms and reversal: rank, Schlafli
/// type, orders of all interval subgroups and of all products s_i s_j, and
/// the order of s_1 s_2 ... s_r, taking the smaller of the readings of s and
/// of its reverse. A filter, never a decision.
struct Fingerprint {
  std::vector<std::uint64_t> data;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// interval_order(i, j) must return |<s_i..s_j>| (0-based, i <= j).
template <class IntervalOrder>
Fingerprint make_fingerprint(std::span<const Permutation> gens, IntervalOrder&& interval_order) {
  const std::size_t r = gens.size();
  std::vector<std::vector<std::uint64_t>> iv(r, std::vector<std::uint64_t>(r, 1));
  std::vector<std::vector<std::uint64_t>> po(r, std::vector<std::uint64_t>(r, 1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      iv[i][j] = interval_order(i, j);
      po[i][j] = po[j][i] = order(gens[i] * gens[j]);
    }
  auto full_product = [&](bool reversed) -> std::uint64_t {
    if (r == 0) return 1;
    Permutation p(gens[0].degree());
    for (std::size_t i = 0; i < r; ++i) p = p * gens[reversed ? r - 1 - i : i];
    return order(p);
  };
  auto reading = [&](bool reversed) {
    auto at = [&](std::size_t i) { return reversed ? r - 1 - i : i; };
    std::vector<std::uint64_t> d{r};
    for (std::size_t i = 0; i + 1 < r; ++i) d.push_back(po[at(i)][at(i + 1)]);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        auto a = at(i), b = at(j);
        d.push_back(iv[std::min(a, b)][std::max(a, b)]);
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) d.push_back(po[at(i)][at(j)]);
    d.push_back(full_product(reversed));
    return d;
  };
  return Fingerprint{std::min(reading(false), reading(true))};
}

inline Fingerprint fingerprint(const GeneratorString& s) {
  return make_fingerprint(std::span<const Permutation>(s.gens()),
                          [&](std::size_t i, std::size_t j) { return s.interval(i, j).order(); });
}

}  // namespace stringc
