#pragma once

// Rank reduction: a non-degenerate C-string (s_1, ..., s_r), r >= 4, with
// s_1 in <s_1 s_3, s_4> yields the rank r-1 C-string
// (s_2, s_1 s_3, s_4, ..., s_r) of the same group.

#include <cstdint>
#include <string>
#include <vector>

#include "stringc/cstring.hpp"
#include "stringc/errors.hpp"

namespace stringc {

/// Is s_1 in <s_1 s_3, s_4>? Needs rank >= 4.
inline bool reducible(const GeneratorString& s) {
  if (s.rank() < 4) throw PreconditionViolation("rank reduction needs rank >= 4");
  PermutationGroup h(s.degree(), {s[0] * s[2], s[3]});
  return h.contains(s[0]);
}

/// (s_2, s_1 s_3, s_4, ..., s_r). The input must be a non-degenerate C-string
/// with s_1 in <s_1 s_3, s_4>; the output is verified against <S> and a
/// failure there throws InvariantViolation.
inline GeneratorString reduce(const GeneratorString& s,
                              std::uint64_t cap = kDefaultEnumerationCap) {
  if (!reducible(s)) throw PreconditionViolation("s_1 is not in <s_1 s_3, s_4>");
  if (is_degenerate(s)) throw PreconditionViolation("rank reduction needs a non-degenerate string");
  if (!is_cstring(s, cap)) throw PreconditionViolation("rank reduction needs a C-string");
  std::vector<Permutation> gens{s[1], s[0] * s[2]};
  for (std::size_t i = 3; i < s.rank(); ++i) gens.push_back(s[i]);
  GeneratorString out(s.degree(), std::move(gens));
  if (!is_cstring_of(out, s.group(), cap))
    throw InvariantViolation("reduced string failed verification: " +
                             std::to_string(s.rank()) + " -> " + std::to_string(out.rank()));
  return out;
}

/// Number of reductions guaranteed by Schlafli parity: the length of the run
/// of odd entries starting at p_3, capped at r - 3. Advisory only; the chain
/// itself is driven by the membership test.
inline std::size_t parity_reduction_bound(const std::vector<std::uint64_t>& schlafli) {
  const std::size_t r = schlafli.size() + 1;
  if (r < 4) return 0;
  std::size_t run = 0;
  for (std::size_t i = 2; i < schlafli.size() && schlafli[i] % 2 == 1; ++i) ++run;
  return std::min(run, r - 3);
}

/// s, reduce(s), reduce(reduce(s)), ... while the rank is at least 4 and the
/// membership test holds. Every stage is verified. A degenerate stage ends
/// the chain.
inline std::vector<GeneratorString> reduce_chain(const GeneratorString& s,
                                                 std::uint64_t cap = kDefaultEnumerationCap) {
  if (!is_cstring(s, cap)) throw PreconditionViolation("reduce_chain needs a C-string");
  std::vector<GeneratorString> chain{s};
  while (chain.back().rank() >= 4 && !is_degenerate(chain.back()) && reducible(chain.back()))
    chain.push_back(reduce(chain.back(), cap));
  return chain;
}

}  // namespace stringc
