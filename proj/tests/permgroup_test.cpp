#include "stringc/permgroup.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "stringc/indexed_group.hpp"
#include "support/oracles.hpp"

namespace stringc {
namespace {

std::vector<Permutation> dn_betas(std::size_t n) {
  std::vector<Permutation> out;
  Point m = static_cast<Point>(n);
  out.push_back(from_cycles({{1, m + 1}, {2, m + 2}}, 2 * n));
  for (Point i = 1; i < m; ++i)
    out.push_back(from_cycles({{i, i + 1}, {m + i, m + i + 1}}, 2 * n));
  return out;
}

PermutationGroup sym(std::size_t n) {
  std::vector<Permutation> gens;
  for (Point i = 1; i < n; ++i)
    gens.push_back(from_cycles({{i, i + 1}}, n));
  return PermutationGroup(n, gens);
}

TEST(GroupOrder, DnRealizations) {
  // 2^(n-1) n!
  EXPECT_EQ(group_order(PermutationGroup(10, dn_betas(5))), 1920u);
  EXPECT_EQ(group_order(PermutationGroup(12, dn_betas(6))), 23040u);
  EXPECT_EQ(testing::naive_closure(10, dn_betas(5)).size(), 1920u);
}

TEST(GroupOrder, SmallCases) {
  EXPECT_EQ(group_order(PermutationGroup(2, {from_cycles({{1, 2}}, 2)})), 2u);
  EXPECT_EQ(group_order(PermutationGroup(5, {})), 1u);
  EXPECT_EQ(group_order(sym(7)), 5040u);
}

TEST(GroupOrder, MatchesNaiveClosureOnRandomSubgroups) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t degree = 2 + rng() % 7;  // up to 8
    std::size_t ngens = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < ngens; ++k)
      gens.push_back(testing::random_permutation(degree, rng));
    PermutationGroup g(degree, gens);
    auto naive = testing::naive_closure(degree, gens);
    ASSERT_EQ(g.order(), naive.size()) << "trial " << trial;
    for (const auto& x : gens) EXPECT_TRUE(contains(g, x));
  }
}

TEST(Contains, AgreesWithElementsOnAllOfSym) {
  std::mt19937_64 rng(99);
  for (std::size_t degree = 3; degree <= 6; ++degree) {
    auto all = testing::symmetric_group_elements(degree);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Permutation> gens{testing::random_permutation(degree, rng)};
      if (trial % 2) gens.push_back(testing::random_permutation(degree, rng));
      PermutationGroup g(degree, gens);
      auto elems = elements(g);
      std::set<Permutation> members(elems.begin(), elems.end());
      ASSERT_EQ(members.size(), elems.size());
      for (const auto& p : all)
        EXPECT_EQ(contains(g, p), members.count(p) == 1);
    }
  }
}

TEST(Contains, Basics) {
  PermutationGroup g(3, {from_cycles({{1, 2}}, 3)});
  EXPECT_TRUE(contains(g, from_cycles({{1, 2}}, 3)));
  EXPECT_FALSE(contains(g, from_cycles({{1, 3}}, 3)));
  EXPECT_THROW(contains(g, identity(4)), DegreeMismatch);
}

TEST(Elements, Counts) {
  EXPECT_EQ(elements(sym(3)).size(), 6u);
  EXPECT_EQ(elements(PermutationGroup(4, {})).size(), 1u);
  EXPECT_THROW(elements(sym(8), 1000), CapExceeded);
}

TEST(IntersectionOrder, AgainstBruteForce) {
  PermutationGroup a(4, {from_cycles({{1, 2}}, 4), from_cycles({{2, 3}}, 4)});
  PermutationGroup b(4, {from_cycles({{1, 2, 3}}, 4), from_cycles({{2, 3, 4}}, 4)});
  EXPECT_EQ(intersection_order(a, b), 3u);
  EXPECT_EQ(intersection_order(a, a), 6u);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t degree = 4 + rng() % 4;
    std::vector<Permutation> ga{testing::random_permutation(degree, rng)};
    std::vector<Permutation> gb{testing::random_permutation(degree, rng),
                                testing::random_permutation(degree, rng)};
    if (trial % 3 == 0) ga.push_back(testing::random_permutation(degree, rng));
    auto sa = testing::naive_set(degree, ga);
    auto sb = testing::naive_set(degree, gb);
    std::vector<Permutation> both;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(both));
    EXPECT_EQ(intersection_order(PermutationGroup(degree, ga),
                                 PermutationGroup(degree, gb)),
              both.size());
  }
}

TEST(Involutions, Counts) {
  EXPECT_EQ(involutions(sym(3)).size(), 3u);
  EXPECT_EQ(involutions(sym(4)).size(), 9u);
  EXPECT_TRUE(involutions(PermutationGroup(3, {})).empty());
  // Brute force over the D5 realization.
  auto all = testing::naive_closure(10, dn_betas(5));
  auto count = std::count_if(all.begin(), all.end(),
                             [](const Permutation& p) { return is_involution(p); });
  EXPECT_EQ(involutions(PermutationGroup(10, dn_betas(5))).size(),
            static_cast<std::size_t>(count));
}

TEST(InvolutionClasses, Sym4) {
  auto classes = involution_classes(sym(4));
  ASSERT_EQ(classes.size(), 2u);
  std::multiset<std::size_t> sizes{classes[0].size, classes[1].size};
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{3, 6}));
  // Representatives are least by image sequence.
  EXPECT_EQ(classes[0].representative, from_cycles({{3, 4}}, 4));
  EXPECT_EQ(classes[0].size, 6u);
  EXPECT_EQ(classes[1].representative, from_cycles({{1, 2}, {3, 4}}, 4));
}

TEST(InvolutionClasses, AbelianAndSym3) {
  PermutationGroup v(4, {from_cycles({{1, 2}}, 4), from_cycles({{3, 4}}, 4)});
  auto classes = involution_classes(v);
  ASSERT_EQ(classes.size(), 3u);
  for (const auto& c : classes) EXPECT_EQ(c.size, 1u);
  auto s3 = involution_classes(sym(3));
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_EQ(s3[0].size, 3u);
}

TEST(InvolutionClasses, PartitionWithWitnesses) {
  for (auto g : {PermutationGroup(10, dn_betas(5)), sym(5)}) {
    auto invs = involutions(g);
    auto classes = involution_classes(g);
    std::size_t total = 0;
    std::set<Permutation> seen;
    for (const auto& c : classes) {
      total += c.size;
      ASSERT_EQ(c.members.size(), c.witnesses.size());
      for (std::size_t k = 0; k < c.size; ++k) {
        EXPECT_TRUE(contains(g, c.witnesses[k]));
        EXPECT_EQ(conjugate(c.representative, c.witnesses[k]), c.members[k]);
        EXPECT_TRUE(seen.insert(c.members[k]).second);
      }
    }
    EXPECT_EQ(total, invs.size());
  }
}

TEST(CommutingInvolutions, Sym4Transposition) {
  auto s = from_cycles({{1, 2}}, 4);
  auto out = commuting_involutions(sym(4), s);
  std::set<Permutation> got(out.begin(), out.end());
  std::set<Permutation> want{s, from_cycles({{3, 4}}, 4),
                             from_cycles({{1, 2}, {3, 4}}, 4)};
  EXPECT_EQ(got, want);
  // Brute force commutation over all involutions.
  std::size_t expected = 0;
  for (const auto& t : involutions(sym(4)))
    if (s * t == t * s) ++expected;
  EXPECT_EQ(out.size(), expected);
}

TEST(CommutingInvolutions, AbelianGivesAll) {
  PermutationGroup v(6, {from_cycles({{1, 2}}, 6), from_cycles({{3, 4}}, 6),
                         from_cycles({{5, 6}}, 6)});
  EXPECT_EQ(commuting_involutions(v, from_cycles({{1, 2}}, 6)).size(),
            involutions(v).size());
}

TEST(IndexedGroup, RanksAndProducts) {
  PermutationGroup g(10, dn_betas(5));
  IndexedGroup ig(g);
  ASSERT_EQ(ig.size(), 1920u);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    auto i = static_cast<ElementIndex>(rng() % ig.size());
    auto j = static_cast<ElementIndex>(rng() % ig.size());
    EXPECT_EQ(ig.index_of(ig.element(i)), i);
    EXPECT_EQ(ig.element(ig.product(i, j)), ig.element(i) * ig.element(j));
  }
  EXPECT_TRUE(ig.element(ig.identity_index()).is_identity());
  EXPECT_FALSE(ig.find(from_cycles({{1, 2}}, 10)).has_value());
  auto h = closure(ig, std::vector<Permutation>{g.generators()[1], g.generators()[2]});
  EXPECT_EQ(h.size, 6u);
}

TEST(Orbits, TransitivityOfDn) {
  EXPECT_TRUE(is_transitive(PermutationGroup(10, dn_betas(5))));
  PermutationGroup split(4, {from_cycles({{1, 2}}, 4)});
  auto o = orbits(split);
  ASSERT_EQ(o.size(), 3u);
  EXPECT_EQ(o[0], (std::vector<Point>{1, 2}));
}

}  // namespace
}  // namespace stringc
