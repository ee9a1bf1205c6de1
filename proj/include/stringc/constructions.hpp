#pragma once

// Explicit C-string families: rank-n strings of D_n for odd n, rank-3 and
// rank-r strings of D_n for even n (all inside the degree-2n realization),
// and the Sym(n) skeleton they are built on.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stringc/cstring.hpp"
#include "stringc/errors.hpp"
#include "stringc/perm.hpp"

namespace stringc {

namespace detail {

using Pairs = std::vector<std::pair<Point, Point>>;

inline Permutation from_pairs(const Pairs& pairs, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  cycles.reserve(pairs.size());
  for (auto [a, b] : pairs) cycles.push_back({a, b});
  return from_cycles(cycles, degree);
}

/// (a,a+1)(a+2,a+3)... while the second point is at most last.
inline Pairs alternating_pairs(Point a, Point last) {
  Pairs out;
  for (Point x = a; x + 1 <= last; x += 2) out.emplace_back(x, x + 1);
  return out;
}

/// The same pairs on 1..n and again shifted by n.
inline Pairs doubled(const Pairs& pairs, Point n) {
  Pairs out = pairs;
  for (auto [a, b] : pairs) out.emplace_back(a + n, b + n);
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace detail

/// Rank-d string of Sym(n): s_k = (k,k+1) for k <= d-2, then
/// s_{d-1} = (d-1,d)(d+1,d+2)... and s_d = (d,d+1)(d+2,d+3)... up to n.
/// Schlafli type {3^(d-3), 6, n-d+2}.
inline GeneratorString sym_skeleton(std::uint32_t n, std::uint32_t d) {
  detail::require(n >= 5, "sym-skeleton needs n >= 5");
  detail::require(d >= 3 && d + 2 <= n, "sym-skeleton needs 3 <= d <= n-2");
  std::vector<Permutation> gens;
  for (Point k = 1; k + 2 <= d; ++k) gens.push_back(detail::from_pairs({{k, k + 1}}, n));
  gens.push_back(detail::from_pairs(detail::alternating_pairs(d - 1, n), n));
  gens.push_back(detail::from_pairs(detail::alternating_pairs(d, n), n));
  return GeneratorString(n, std::move(gens));
}

/// t_1 = prod_{j=2..n} (j,n+j), t_i = (i-1,i)(n+i-1,n+i) for 2 <= i <= n.
/// Rank-n C-string of D_n (n odd) with Schlafli type {4,3^(n-2)}.
inline GeneratorString dn_odd_rank_n(std::uint32_t n) {
  detail::require(n >= 5 && n % 2 == 1, "dn-odd needs odd n >= 5");
  const std::size_t degree = 2 * static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  detail::Pairs t1;
  for (Point j = 2; j <= n; ++j) t1.emplace_back(j, n + j);
  gens.push_back(detail::from_pairs(t1, degree));
  for (Point i = 2; i <= n; ++i)
    gens.push_back(detail::from_pairs({{i - 1, i}, {n + i - 1, n + i}}, degree));
  return GeneratorString(degree, std::move(gens));
}

/// t_1 = (1,2)(n+1,n+2)(n-1,2n-1)(n,2n), t_2 = (2,3)(4,5)...(n-2,n-1),
/// t_3 = (3,4)(5,6)...(n-1,n), the last two doubled onto n+1..2n.
/// Rank-3 C-string of D_n (n even) with Schlafli type {12, n-1}.
inline GeneratorString dn_even_rank3(std::uint32_t n) {
  detail::require(n >= 6 && n % 2 == 0, "dn-even-rank3 needs even n >= 6");
  const std::size_t degree = 2 * static_cast<std::size_t>(n);
  return GeneratorString(
      degree,
      {detail::from_pairs({{1, 2}, {n + 1, n + 2}, {n - 1, 2 * n - 1}, {n, 2 * n}}, degree),
       detail::from_pairs(detail::doubled(detail::alternating_pairs(2, n - 1), n), degree),
       detail::from_pairs(detail::doubled(detail::alternating_pairs(3, n), n), degree)});
}

/// Rank-r C-string of D_n (n even, 4 <= r <= n-1) with Schlafli type
/// {3^(r-4), 6, n-r+3, 4}: the rank-(r-1) Sym(n) skeleton doubled onto both
/// halves of 1..2n, followed by t_r = (n-1,2n-1)(n,2n) for odd r or
/// (n-2,2n-2)(n-1,2n-1) for even r.
inline GeneratorString dn_even_rank_r(std::uint32_t n, std::uint32_t r) {
  detail::require(n >= 6 && n % 2 == 0, "dn-even needs even n >= 6");
  detail::require(r >= 4 && r + 1 <= n, "dn-even needs 4 <= r <= n-1");
  const std::size_t degree = 2 * static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  for (Point i = 1; i + 3 <= r; ++i)
    gens.push_back(detail::from_pairs({{i, i + 1}, {n + i, n + i + 1}}, degree));
  gens.push_back(
      detail::from_pairs(detail::doubled(detail::alternating_pairs(r - 2, n), n), degree));
  gens.push_back(
      detail::from_pairs(detail::doubled(detail::alternating_pairs(r - 1, n), n), degree));
  if (r % 2 == 1)
    gens.push_back(detail::from_pairs({{n - 1, 2 * n - 1}, {n, 2 * n}}, degree));
  else
    gens.push_back(detail::from_pairs({{n - 2, 2 * n - 2}, {n - 1, 2 * n - 1}}, degree));
  return GeneratorString(degree, std::move(gens));
}

}  // namespace stringc
