#include "stringc/cstring.hpp"

#include <random>

#include <gtest/gtest.h>

#include "stringc/constructions.hpp"
#include "stringc/coxeter.hpp"
#include "support/oracles.hpp"

namespace stringc {
namespace {

using Schlafli = std::vector<std::uint64_t>;

GeneratorString coxeter_string(std::string_view name) {
  auto r = realize(name);
  return GeneratorString(r.group.degree(), r.group.generators());
}

// B3 on three extra points times a transposition: Schlafli type {2,3,4}.
GeneratorString degenerate_example() {
  return GeneratorString(8, {from_cycles({{7, 8}}, 8), from_cycles({{1, 2}, {4, 5}}, 8),
                             from_cycles({{2, 3}, {5, 6}}, 8), from_cycles({{3, 6}}, 8)});
}

TEST(StringGroup, Examples) {
  EXPECT_TRUE(is_string_group(dn_odd_rank_n(5)));
  EXPECT_TRUE(is_string_group(
      GeneratorString(3, {from_cycles({{1, 2}}, 3), from_cycles({{1, 3}}, 3)})));
  EXPECT_FALSE(is_string_group(GeneratorString(
      4, {from_cycles({{1, 2}}, 4), from_cycles({{3, 4}}, 4), from_cycles({{1, 2, 3}}, 4)})));
  // (1,2) and (2,3) are two apart but do not commute.
  EXPECT_FALSE(is_string_group(GeneratorString(
      4, {from_cycles({{1, 2}}, 4), from_cycles({{3, 4}}, 4), from_cycles({{2, 3}}, 4)})));
  EXPECT_THROW(GeneratorString(4, {identity(5)}), DegreeMismatch);
}

TEST(Schlafli, Families) {
  EXPECT_EQ(schlafli(dn_odd_rank_n(5)), (Schlafli{4, 3, 3, 3}));
  EXPECT_EQ(schlafli(dn_even_rank3(6)), (Schlafli{12, 5}));
  EXPECT_EQ(schlafli(dn_even_rank_r(6, 5)), (Schlafli{3, 6, 4, 4}));
  EXPECT_TRUE(schlafli(GeneratorString(2, {from_cycles({{1, 2}}, 2)})).empty());
}

TEST(Schlafli, ReversalReverses) {
  for (const auto& s : {dn_odd_rank_n(7), dn_even_rank_r(8, 6), sym_skeleton(9, 5),
                        coxeter_string("H4")}) {
    auto forward = schlafli(s);
    std::reverse(forward.begin(), forward.end());
    EXPECT_EQ(schlafli(s.reversed()), forward);
  }
}

TEST(Degenerate, Examples) {
  auto d = degenerate_example();
  EXPECT_EQ(schlafli(d), (Schlafli{2, 3, 4}));
  EXPECT_TRUE(is_degenerate(d));
  EXPECT_TRUE(is_cstring(d));
  EXPECT_FALSE(is_degenerate(dn_odd_rank_n(5)));
  EXPECT_FALSE(is_degenerate(GeneratorString(2, {from_cycles({{1, 2}}, 2)})));
}

TEST(IntersectionProperty, Examples) {
  EXPECT_TRUE(intersection_property(dn_odd_rank_n(5)));
  auto s = from_cycles({{1, 2}}, 3);
  EXPECT_FALSE(intersection_property(GeneratorString(3, {s, s})));
  EXPECT_TRUE(intersection_property(GeneratorString(3, {s})));
  EXPECT_TRUE(intersection_property(GeneratorString(3, {})));
  EXPECT_THROW(intersection_property(GeneratorString(3, {from_cycles({{1, 2, 3}}, 3)})),
               PreconditionViolation);
  for (auto name : {"A3", "B3", "H3", "A4", "B4", "F4", "H4"})
    EXPECT_TRUE(intersection_property(coxeter_string(name))) << name;
}

// Compares the facet recursion with the subset-pair definition on random
// involution tuples from small groups, plus known C-strings. Every group
// used has order at most 2000.
TEST(IntersectionProperty, AgreesWithBruteForce) {
  std::vector<PermutationGroup> groups;
  for (auto name : {"A3", "B3", "H3", "A4", "D4", "B4", "I2(6)", "D5"})
    groups.push_back(realize(name).group);
  groups.push_back(PermutationGroup(10, dn_permutation_rep(5)));
  std::mt19937_64 rng(31337);
  std::size_t positives = 0, negatives = 0;
  for (const auto& g : groups) {
    ASSERT_LE(g.order(), 2000u);
    auto invs = involutions(g);
    int accepted = 0;
    for (int attempt = 0; attempt < 4000 && accepted < 40; ++attempt) {
      std::size_t rank = 2 + rng() % 3;
      std::vector<Permutation> gens;
      for (std::size_t k = 0; k < rank; ++k) gens.push_back(invs[rng() % invs.size()]);
      GeneratorString s(g.degree(), gens);
      if (!is_string_group(s)) continue;
      ++accepted;
      bool fast = intersection_property(s);
      EXPECT_EQ(fast, testing::brute_force_intersection_property(g.degree(), gens)) << s;
      (fast ? positives : negatives) += 1;
    }
  }
  for (auto name : {"A3", "B3", "H3", "A4", "B4"}) {
    auto s = coxeter_string(name);
    EXPECT_TRUE(testing::brute_force_intersection_property(s.degree(), s.gens()));
    ++positives;
  }
  auto d = degenerate_example();
  EXPECT_TRUE(testing::brute_force_intersection_property(d.degree(), d.gens()));
  EXPECT_GT(positives, 20u);
  EXPECT_GT(negatives, 20u);
}

TEST(IntersectionProperty, IntervalsOfFamiliesAreCStrings) {
  for (const auto& s : {dn_odd_rank_n(7), dn_even_rank_r(8, 6), dn_even_rank3(8),
                        sym_skeleton(8, 5)}) {
    ASSERT_TRUE(is_cstring(s));
    for (std::size_t i = 0; i < s.rank(); ++i)
      for (std::size_t j = i; j < s.rank(); ++j)
        EXPECT_TRUE(is_cstring(s.substring(i, j))) << s << " [" << i << "," << j << "]";
  }
}

TEST(IsCStringOf, Examples) {
  PermutationGroup d5(10, dn_permutation_rep(5));
  auto t = dn_odd_rank_n(5);
  EXPECT_TRUE(is_cstring_of(t, d5));
  auto facet = t.substring(1, 4);
  EXPECT_EQ(facet.group().order(), 120u);
  EXPECT_FALSE(is_cstring_of(facet, d5));
  EXPECT_TRUE(is_cstring_of(GeneratorString(4, {}), PermutationGroup(4, {})));
  EXPECT_THROW(is_cstring_of(t, PermutationGroup(12, {})), DegreeMismatch);
  // Sym(5) on 1..5 against Sym(5) on 2..6: equal orders, wrong group.
  std::vector<Permutation> low, high;
  for (Point i = 1; i <= 4; ++i) {
    low.push_back(from_cycles({{i, i + 1}}, 6));
    high.push_back(from_cycles({{i + 1, i + 2}}, 6));
  }
  EXPECT_TRUE(is_cstring_of(GeneratorString(6, low), PermutationGroup(6, low)));
  EXPECT_FALSE(is_cstring_of(GeneratorString(6, low), PermutationGroup(6, high)));
}

TEST(SignChanges, Membership) {
  EXPECT_TRUE(in_sign_change_subgroup(from_cycles({{4, 10}, {5, 11}}, 12), 6));
  EXPECT_FALSE(in_sign_change_subgroup(from_cycles({{4, 10}}, 12), 6));
  EXPECT_FALSE(in_sign_change_subgroup(from_cycles({{1, 2}, {7, 8}}, 12), 6));
  EXPECT_TRUE(in_sign_change_subgroup(identity(12), 6));
  EXPECT_EQ(sign_change_subgroup(6).order(), 32u);
  std::size_t count = 0;
  for (const auto& p : elements(PermutationGroup(12, dn_permutation_rep(6))))
    count += in_sign_change_subgroup(p, 6);
  EXPECT_EQ(count, 32u);
}

GeneratorString with_last(const GeneratorString& s, const Permutation& last) {
  auto gens = s.gens();
  gens.back() = last;
  return GeneratorString(s.degree(), gens);
}

TEST(FastCheck, Examples) {
  auto s = dn_even_rank_r(6, 4);
  EXPECT_EQ(s[3], from_cycles({{4, 10}, {5, 11}}, 12));
  EXPECT_TRUE(fast_check_last_in_N(s, 6));
  auto full = from_cycles({{1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}}, 12);
  EXPECT_FALSE(fast_check_last_in_N(with_last(s, full), 6));
  EXPECT_FALSE(fast_check_last_in_N(with_last(s, from_cycles({{1, 2}, {7, 8}}, 12)), 6));
}

TEST(FastCheck, PreconditionViolations) {
  // Facet of the odd family generates all of D_n, not a complement of N.
  auto t = dn_odd_rank_n(5);
  auto extended = GeneratorString(10, [&] {
    auto g = t.gens();
    g.push_back(from_cycles({{1, 6}, {2, 7}}, 10));
    return g;
  }());
  EXPECT_THROW(fast_check_last_in_N(extended, 5), PreconditionViolation);
  EXPECT_THROW(fast_check_last_in_N(dn_even_rank_r(6, 4), 5), PreconditionViolation);
}

// The shortcut agrees with the general verifier whenever it applies.
TEST(FastCheck, AgreesWithGeneralVerifier) {
  for (std::uint32_t n : {6u, 8u}) {
    PermutationGroup dn(2 * n, dn_coxeter_generators(n));
    auto signs = elements(sign_change_subgroup(n));
    for (std::uint32_t r = 4; r < n; ++r) {
      auto s = dn_even_rank_r(n, r);
      EXPECT_TRUE(fast_check_last_in_N(s, n, dn));
      EXPECT_TRUE(is_cstring_of(s, dn));
      // Every sign change that keeps the string property.
      int tried = 0;
      for (const auto& x : signs) {
        if (!is_involution(x)) continue;
        auto candidate = with_last(s, x);
        if (!is_string_group(candidate)) continue;
        if (++tried > 6) break;
        EXPECT_EQ(fast_check_last_in_N(candidate, n, dn), is_cstring_of(candidate, dn))
            << candidate;
        EXPECT_EQ(verify_dn_cstring(candidate, n, dn), is_cstring_of(candidate, dn));
      }
      EXPECT_GT(tried, 0);
    }
  }
}

}  // namespace
}  // namespace stringc
