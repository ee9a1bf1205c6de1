#pragma once

// Coxeter matrices, the named finite types, coset enumeration and permutation
// realizations.
//
// Generator numbering (1-based, as printed; the code is 0-based):
//   A_n   path 1-2-...-n
//   B_n   path with m_12 = 4
//   D_n   bonds 1-3 and i-(i+1) for i >= 2 (1 and 2 commute); in Sym(2n)
//         generator 1 = (1,n+2)(2,n+1), generator i+1 = (i,i+1)(n+i,n+i+1)
//   E_n   1-3-4-5-...-n with 2 attached to 4
//   F4    1-2-3-4 with m_23 = 4
//   H3,H4 path with m_12 = 5
//   I2(m) m_12 = m
// Dropping the last generator gives E6 > D5, E7 > E6, E8 > E7, H4 > H3,
// D_n > D_{n-1}, B_n > B_{n-1}, A_n > A_{n-1}.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stringc/errors.hpp"
#include "stringc/perm.hpp"
#include "stringc/permgroup.hpp"

namespace stringc {

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  /// Rank-n matrix with all off-diagonal entries 2.
  explicit CoxeterMatrix(std::size_t rank) : rank_(rank), m_(rank * rank, 2) {
    for (std::size_t i = 0; i < rank; ++i) m_[i * rank + i] = 1;
  }

  static CoxeterMatrix from_entries(std::size_t rank,
                                    std::vector<std::vector<std::uint32_t>> m) {
    if (m.size() != rank) throw InvalidArgument("Coxeter matrix has wrong size");
    CoxeterMatrix c(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      if (m[i].size() != rank)
        throw InvalidArgument("Coxeter matrix has wrong size");
      for (std::size_t j = 0; j < rank; ++j) c.m_[i * rank + j] = m[i][j];
    }
    c.validate();
    return c;
  }

  std::size_t rank() const noexcept { return rank_; }

  /// 0-based entry.
  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return m_[i * rank_ + j];
  }

  /// Sets m_ij = m_ji (0-based); m must be at least 2.
  void set(std::size_t i, std::size_t j, std::uint32_t m) {
    if (i == j || i >= rank_ || j >= rank_)
      throw InvalidArgument("bad Coxeter matrix index");
    if (m < 2) throw InvalidArgument("off-diagonal Coxeter entries must be >= 2");
    m_[i * rank_ + j] = m;
    m_[j * rank_ + i] = m;
  }

  /// The submatrix on the given (0-based) generators, in that order.
  CoxeterMatrix restricted(const std::vector<std::size_t>& gens) const {
    CoxeterMatrix c(gens.size());
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b)
        if (a != b) c.m_[a * gens.size() + b] = (*this)(gens[a], gens[b]);
    return c;
  }

  void validate() const {
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) {
        auto v = (*this)(i, j);
        if (i == j && v != 1) throw InvalidArgument("diagonal must be 1");
        if (i != j && v < 2) throw InvalidArgument("off-diagonal must be >= 2");
        if (v != (*this)(j, i)) throw InvalidArgument("matrix must be symmetric");
      }
  }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> m_;
};

enum class CoxeterFamily { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

struct CoxeterType {
  CoxeterFamily family;
  std::uint32_t parameter;  // rank for A/B/D, m for I2, rank for the rest

  std::string name() const {
    switch (family) {
      case CoxeterFamily::A: return "A" + std::to_string(parameter);
      case CoxeterFamily::B: return "B" + std::to_string(parameter);
      case CoxeterFamily::D: return "D" + std::to_string(parameter);
      case CoxeterFamily::I2: return "I2(" + std::to_string(parameter) + ")";
      case CoxeterFamily::H3: return "H3";
      case CoxeterFamily::H4: return "H4";
      case CoxeterFamily::F4: return "F4";
      case CoxeterFamily::E6: return "E6";
      case CoxeterFamily::E7: return "E7";
      case CoxeterFamily::E8: return "E8";
    }
    return "?";
  }
};

inline CoxeterMatrix named_diagram(CoxeterFamily family, std::uint32_t n) {
  auto path = [](std::size_t rank) {
    CoxeterMatrix c(rank);
    for (std::size_t i = 0; i + 1 < rank; ++i) c.set(i, i + 1, 3);
    return c;
  };
  auto fixed_rank = [&](std::uint32_t want) {
    if (n != want)
      throw InvalidArgument("this family has rank " + std::to_string(want));
  };
  switch (family) {
    case CoxeterFamily::A: {
      if (n < 1) throw InvalidArgument("A_n needs n >= 1");
      return path(n);
    }
    case CoxeterFamily::B: {
      if (n < 2) throw InvalidArgument("B_n needs n >= 2");
      auto c = path(n);
      c.set(0, 1, 4);
      return c;
    }
    case CoxeterFamily::D: {
      if (n < 4) throw InvalidArgument("D_n needs n >= 4");
      CoxeterMatrix c(n);
      c.set(0, 2, 3);
      for (std::size_t i = 1; i + 1 < n; ++i) c.set(i, i + 1, 3);
      return c;
    }
    case CoxeterFamily::I2: {
      if (n < 3) throw InvalidArgument("I2(m) needs m >= 3");
      CoxeterMatrix c(2);
      c.set(0, 1, n);
      return c;
    }
    case CoxeterFamily::H3:
    case CoxeterFamily::H4: {
      fixed_rank(family == CoxeterFamily::H3 ? 3 : 4);
      auto c = path(n);
      c.set(0, 1, 5);
      return c;
    }
    case CoxeterFamily::F4: {
      fixed_rank(4);
      auto c = path(4);
      c.set(1, 2, 4);
      return c;
    }
    case CoxeterFamily::E6:
    case CoxeterFamily::E7:
    case CoxeterFamily::E8: {
      fixed_rank(family == CoxeterFamily::E6   ? 6
                 : family == CoxeterFamily::E7 ? 7
                                               : 8);
      CoxeterMatrix c(n);
      c.set(0, 2, 3);
      c.set(1, 3, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) c.set(i, i + 1, 3);
      return c;
    }
  }
  throw InvalidArgument("unknown Coxeter family");
}

inline CoxeterMatrix named_diagram(const CoxeterType& t) {
  return named_diagram(t.family, t.parameter);
}

/// Parses "A5", "D6", "I2(7)", "H3", "E7" (case-insensitive letters).
inline CoxeterType parse_coxeter_type(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '_') s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  auto fail = [&] {
    throw InvalidArgument("unknown group name \"" + std::string(text) + "\"");
  };
  auto number = [&](std::string_view digits) -> std::uint32_t {
    if (digits.empty() || digits.size() > 6) fail();
    std::uint32_t v = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
      v = v * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    return v;
  };
  if (s.rfind("I2(", 0) == 0 && s.size() > 4 && s.back() == ')') {
    CoxeterType t{CoxeterFamily::I2, number(std::string_view(s).substr(3, s.size() - 4))};
    named_diagram(t);
    return t;
  }
  if (s.size() < 2) fail();
  std::uint32_t n = number(std::string_view(s).substr(1));
  CoxeterType t{};
  switch (s[0]) {
    case 'A': t = {CoxeterFamily::A, n}; break;
    case 'B': t = {CoxeterFamily::B, n}; break;
    case 'D': t = {CoxeterFamily::D, n}; break;
    case 'H': t = {n == 3 ? CoxeterFamily::H3 : CoxeterFamily::H4, n}; break;
    case 'F': t = {CoxeterFamily::F4, n}; break;
    case 'E':
      t = {n == 6 ? CoxeterFamily::E6 : n == 7 ? CoxeterFamily::E7 : CoxeterFamily::E8, n};
      break;
    default: fail();
  }
  named_diagram(t);  // validates the parameter
  return t;
}

/// Closed coset table: entry (c, g) is the coset reached from c by
/// generator g. Generators are involutions, so every column is an
/// involutory permutation of the cosets.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t generators, std::vector<std::uint32_t> rows)
      : generators_(generators), rows_(std::move(rows)) {}

  std::size_t size() const noexcept {
    return generators_ == 0 ? 1 : rows_.size() / generators_;
  }
  std::size_t generators() const noexcept { return generators_; }
  std::uint32_t operator()(std::size_t coset, std::size_t gen) const {
    return rows_[coset * generators_ + gen];
  }

 private:
  std::size_t generators_ = 0;
  std::vector<std::uint32_t> rows_;
};

struct ToddCoxeterOptions {
  std::size_t max_cosets = 1'000'000;
  /// Process relators last-to-first; the result must not depend on it.
  bool reverse_relators = false;
};

namespace detail {

// HLT coset enumeration specialised to involutory generators.
class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t gens, std::size_t max_cosets)
      : gens_(gens), max_cosets_(max_cosets) {
    new_coset();
  }

  void run(const std::vector<std::vector<std::size_t>>& relators,
           const std::vector<std::size_t>& subgroup) {
    for (std::size_t g : subgroup) scan_and_fill(0, {g});
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      for (const auto& w : relators) {
        if (!live(alpha)) break;
        scan_and_fill(alpha, w);
      }
      if (!live(alpha)) continue;
      for (std::size_t g = 0; g < gens_; ++g)
        if (entry(alpha, g) == kUndefined) define(alpha, g);
    }
  }

  CosetTable compact() {
    std::vector<std::uint32_t> number(parent_.size(), kUndefined);
    std::uint32_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(c)) number[c] = next++;
    std::vector<std::uint32_t> rows;
    rows.reserve(static_cast<std::size_t>(next) * gens_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t g = 0; g < gens_; ++g) {
        auto d = entry(c, g);
        if (d == kUndefined) throw InvariantViolation("coset table not closed");
        rows.push_back(number[d]);
      }
    }
    return CosetTable(gens_, std::move(rows));
  }

 private:
  static constexpr std::uint32_t kUndefined = 0xffffffffu;

  std::uint32_t& entry(std::size_t c, std::size_t g) { return table_[c * gens_ + g]; }
  bool live(std::size_t c) const { return parent_[c] == c; }

  std::uint32_t new_coset() {
    if (parent_.size() >= max_cosets_)
      throw CapExceeded("coset enumeration", parent_.size() + 1, max_cosets_);
    auto c = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + gens_, kUndefined);
    return c;
  }

  void define(std::size_t c, std::size_t g) {
    auto d = new_coset();
    entry(c, g) = d;
    entry(d, g) = static_cast<std::uint32_t>(c);
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      auto next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::uint32_t gamma = queue[i];
      for (std::size_t x = 0; x < gens_; ++x) {
        std::uint32_t delta = entry(gamma, x);
        if (delta == kUndefined) continue;
        if (entry(delta, x) == gamma) entry(delta, x) = kUndefined;
        std::uint32_t mu = rep(gamma);
        std::uint32_t nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, x) != kUndefined) {
          merge(mu, entry(nu, x), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, x) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t alpha, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::uint32_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndefined)
        f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)]) != kUndefined)
        b = entry(b, w[static_cast<std::size_t>(j--)]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        auto g = w[static_cast<std::size_t>(i)];
        entry(f, g) = b;
        entry(b, g) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::size_t gens_;
  std::size_t max_cosets_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> table_;
};

inline std::vector<std::vector<std::size_t>> coxeter_relators(const CoxeterMatrix& m) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      std::vector<std::size_t> w;
      for (std::uint32_t k = 0; k < m(i, j); ++k) {
        w.push_back(i);
        w.push_back(j);
      }
      out.push_back(std::move(w));
    }
  return out;
}

}  // namespace detail

/// Action of W(M) on the cosets of the parabolic subgroup generated by the
/// given (0-based) generators. Throws CapExceeded when more than max_cosets
/// cosets are ever defined.
inline CosetTable todd_coxeter(const CoxeterMatrix& m,
                               const std::vector<std::size_t>& parabolic,
                               const ToddCoxeterOptions& options = {}) {
  for (auto g : parabolic)
    if (g >= m.rank()) throw InvalidArgument("parabolic generator out of range");
  if (m.rank() == 0) return CosetTable(0, {});
  auto relators = detail::coxeter_relators(m);
  if (options.reverse_relators) std::reverse(relators.begin(), relators.end());
  detail::CosetEnumerator e(m.rank(), options.max_cosets);
  e.run(relators, parabolic);
  return e.compact();
}

inline CosetTable todd_coxeter(const CoxeterMatrix& m,
                               const std::vector<std::size_t>& parabolic,
                               std::size_t max_cosets) {
  ToddCoxeterOptions options;
  options.max_cosets = max_cosets;
  return todd_coxeter(m, parabolic, options);
}

/// Permutation group on the live cosets, one generator per Coxeter generator.
inline PermutationGroup coset_action(const CosetTable& t) {
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < t.generators(); ++g) {
    std::vector<Point> images(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) images[c] = t(c, g);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermutationGroup(t.size(), std::move(gens));
}

/// |W(M)| by recursion over maximal parabolics: drop the last generator and
/// multiply by the index found by coset enumeration.
inline std::uint64_t coxeter_order(const CoxeterMatrix& m,
                                   std::size_t max_cosets = 1'000'000) {
  std::uint64_t result = 1;
  CoxeterMatrix current = m;
  while (current.rank() > 1) {
    std::vector<std::size_t> parabolic(current.rank() - 1);
    std::iota(parabolic.begin(), parabolic.end(), std::size_t{0});
    auto table = todd_coxeter(current, parabolic, max_cosets);
    result = detail::checked_mul(result, table.size());
    current = current.restricted(parabolic);
  }
  if (current.rank() == 1) result = detail::checked_mul(result, 2);
  return result;
}

/// True iff the generators satisfy the Coxeter relations with exactly the
/// orders m_ij and generate a group of order |W(M)|, i.e. realize W(M)
/// faithfully.
inline bool verify_presentation(const std::vector<Permutation>& gens,
                                const CoxeterMatrix& m) {
  if (gens.size() != m.rank()) return false;
  if (gens.empty()) return true;
  const auto degree = gens.front().degree();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != degree) return false;
    if (order(gens[i]) != 2) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (order(gens[i] * gens[j]) != m(i, j)) return false;
  }
  return PermutationGroup(degree, gens).order() == coxeter_order(m);
}

/// beta_0 = (1,n+1)(2,n+2), beta_i = (i,i+1)(n+i,n+i+1) in Sym(2n). They
/// generate a copy of D_n (order 2^(n-1) n!), but beta_0 negates two
/// coordinates and is not a reflection, so this is not a Coxeter generating
/// set; see dn_coxeter_generators.
inline std::vector<Permutation> dn_permutation_rep(std::uint32_t n) {
  if (n < 4) throw InvalidArgument("D_n realization needs n >= 4");
  std::vector<Permutation> out;
  const std::size_t degree = 2 * static_cast<std::size_t>(n);
  out.push_back(from_cycles({{1, n + 1}, {2, n + 2}}, degree));
  for (Point i = 1; i < n; ++i)
    out.push_back(from_cycles({{i, i + 1}, {n + i, n + i + 1}}, degree));
  return out;
}

/// Coxeter generators of the same subgroup of Sym(2n), in the D_n numbering
/// above: beta_0 is replaced by the reflection (1,n+2)(2,n+1).
inline std::vector<Permutation> dn_coxeter_generators(std::uint32_t n) {
  auto out = dn_permutation_rep(n);
  out[0] = from_cycles({{1, n + 2}, {2, n + 1}}, 2 * static_cast<std::size_t>(n));
  return out;
}

struct Realization {
  CoxeterType type;
  PermutationGroup group;
  /// 0-based generators of the parabolic whose cosets are permuted; empty
  /// for the D_n realization in Sym(2n) and for regular actions.
  std::vector<std::size_t> parabolic;
  bool regular = false;
  std::string note;
};

/// Faithful permutation realization of a named type.
///
/// D_n uses the degree-2n signed-permutation form. Every other type acts on
/// the cosets of the maximal parabolic obtained by dropping the last
/// generator (degrees: H3 12, H4 120, F4 24, E6 27, E7 56, E8 240, A_n n+1,
/// B_n 2n, I2(m) m). The action's order is checked against coxeter_order and
/// an unfaithful action would fall back to the regular one. For the
/// irreducible named types the parabolic has trivial core, so the fallback
/// is defensive.
inline Realization realize(const CoxeterType& type,
                           std::size_t max_cosets = 1'000'000) {
  auto m = named_diagram(type);
  if (type.family == CoxeterFamily::D) {
    PermutationGroup g(2 * static_cast<std::size_t>(type.parameter),
                       dn_coxeter_generators(type.parameter));
    return {type, g, {}, false, "signed permutations of degree 2n"};
  }
  const auto expected = coxeter_order(m, max_cosets);
  std::vector<std::size_t> parabolic(m.rank() - 1);
  std::iota(parabolic.begin(), parabolic.end(), std::size_t{0});
  auto group = coset_action(todd_coxeter(m, parabolic, max_cosets));
  if (group.order() == expected)
    return {type, group, parabolic, false,
            "action on cosets of a maximal parabolic"};
  auto regular = coset_action(todd_coxeter(m, {}, max_cosets));
  if (regular.order() != expected)
    throw InvariantViolation("regular action of " + type.name() +
                             " has the wrong order");
  return {type, regular, {}, true, "regular action (parabolic action unfaithful)"};
}

inline Realization realize(std::string_view name,
                           std::size_t max_cosets = 1'000'000) {
  return realize(parse_coxeter_type(name), max_cosets);
}

}  // namespace stringc
