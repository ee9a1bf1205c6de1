#include "stringc/coxeter.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace stringc {
namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<Permutation> adjacent_transpositions(Point n) {
  std::vector<Permutation> out;
  for (Point i = 1; i < n; ++i) out.push_back(from_cycles({{i, i + 1}}, n));
  return out;
}

// Every relator word fixes every coset and each column is an involution.
void expect_closed(const CosetTable& t, const CoxeterMatrix& m) {
  for (std::size_t c = 0; c < t.size(); ++c)
    for (std::size_t g = 0; g < t.generators(); ++g) {
      ASSERT_LT(t(c, g), t.size());
      ASSERT_EQ(t(t(c, g), g), c);
    }
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j)
      for (std::size_t c = 0; c < t.size(); ++c) {
        std::size_t x = c;
        for (std::uint32_t k = 0; k < m(i, j); ++k) x = t(t(x, i), j);
        ASSERT_EQ(x, c);
      }
}

TEST(NamedDiagram, Shapes) {
  auto a3 = named_diagram(CoxeterFamily::A, 3);
  EXPECT_EQ(a3(0, 1), 3u);
  EXPECT_EQ(a3(1, 2), 3u);
  EXPECT_EQ(a3(0, 2), 2u);
  EXPECT_EQ(named_diagram(CoxeterFamily::I2, 5)(0, 1), 5u);
  auto d5 = named_diagram(CoxeterFamily::D, 5);
  EXPECT_EQ(d5(0, 1), 2u);
  EXPECT_EQ(d5(0, 2), 3u);
  EXPECT_EQ(d5(1, 2), 3u);
  EXPECT_EQ(d5(3, 4), 3u);
  auto e6 = named_diagram(CoxeterFamily::E6, 6);
  EXPECT_EQ(e6(1, 3), 3u);
  EXPECT_EQ(e6(1, 2), 2u);
  EXPECT_EQ(named_diagram(CoxeterFamily::F4, 4)(1, 2), 4u);
  EXPECT_EQ(named_diagram(CoxeterFamily::H4, 4)(0, 1), 5u);
  EXPECT_EQ(named_diagram(CoxeterFamily::B, 3)(0, 1), 4u);
}

TEST(NamedDiagram, InvalidParameters) {
  EXPECT_THROW(named_diagram(CoxeterFamily::D, 3), InvalidArgument);
  EXPECT_THROW(named_diagram(CoxeterFamily::I2, 2), InvalidArgument);
  EXPECT_THROW(named_diagram(CoxeterFamily::E7, 6), InvalidArgument);
  EXPECT_THROW(named_diagram(CoxeterFamily::A, 0), InvalidArgument);
}

TEST(NamedDiagram, ParsesNames) {
  EXPECT_EQ(parse_coxeter_type("A5").name(), "A5");
  EXPECT_EQ(parse_coxeter_type("d6").name(), "D6");
  EXPECT_EQ(parse_coxeter_type("I2(7)").name(), "I2(7)");
  EXPECT_EQ(parse_coxeter_type("E7").family, CoxeterFamily::E7);
  EXPECT_EQ(parse_coxeter_type("H3").family, CoxeterFamily::H3);
  EXPECT_THROW(parse_coxeter_type("E9"), InvalidArgument);
  EXPECT_THROW(parse_coxeter_type("Q4"), InvalidArgument);
  EXPECT_THROW(parse_coxeter_type("D"), InvalidArgument);
  EXPECT_THROW(parse_coxeter_type("I2(x)"), InvalidArgument);
}

TEST(CoxeterMatrix, Validation) {
  EXPECT_THROW(CoxeterMatrix::from_entries(2, {{1, 3}, {4, 1}}), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix::from_entries(2, {{2, 3}, {3, 1}}), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix::from_entries(2, {{1, 1}, {1, 1}}), InvalidArgument);
  EXPECT_NO_THROW(CoxeterMatrix::from_entries(2, {{1, 6}, {6, 1}}));
}

TEST(DnPermutationRep, D5) {
  auto b = dn_permutation_rep(5);
  ASSERT_EQ(b.size(), 5u);
  EXPECT_EQ(to_cycle_string(b[0]), "(1,6)(2,7)");
  EXPECT_EQ(to_cycle_string(b[1]), "(1,2)(6,7)");
  EXPECT_EQ(to_cycle_string(b[4]), "(4,5)(9,10)");
  EXPECT_EQ(PermutationGroup(10, b).order(), 1920u);
  EXPECT_EQ(PermutationGroup(12, dn_permutation_rep(6)).order(), 23040u);
  for (std::size_t i = 1; i < b.size(); ++i)
    for (std::size_t j = i + 2; j < b.size(); ++j) EXPECT_TRUE(commute(b[i], b[j]));
  EXPECT_THROW(dn_permutation_rep(3), InvalidArgument);
}

TEST(ToddCoxeter, SmallIndices) {
  auto a3 = named_diagram(CoxeterFamily::A, 3);
  auto t = todd_coxeter(a3, {0, 1});
  EXPECT_EQ(t.size(), 4u);
  expect_closed(t, a3);

  auto f4 = named_diagram(CoxeterFamily::F4, 4);
  auto tf = todd_coxeter(f4, {0, 1, 2});
  EXPECT_EQ(tf.size(), 24u);
  EXPECT_EQ(tf.size(), 1152u / 48u);
  expect_closed(tf, f4);

  auto i25 = named_diagram(CoxeterFamily::I2, 5);
  EXPECT_EQ(todd_coxeter(i25, {}).size(), 10u);
  EXPECT_EQ(todd_coxeter(a3, {}).size(), 24u);
  EXPECT_EQ(todd_coxeter(a3, {0, 1, 2}).size(), 1u);
}

TEST(ToddCoxeter, ExceptionalIndices) {
  auto e6 = named_diagram(CoxeterFamily::E6, 6);
  auto t = todd_coxeter(e6, {0, 1, 2, 3, 4});
  EXPECT_EQ(t.size(), 27u);
  EXPECT_EQ(t.size(), 51840u / 1920u);
  expect_closed(t, e6);
  auto h4 = named_diagram(CoxeterFamily::H4, 4);
  EXPECT_EQ(todd_coxeter(h4, {0, 1, 2}).size(), 120u);
  EXPECT_EQ(todd_coxeter(named_diagram(CoxeterFamily::E7, 7), {0, 1, 2, 3, 4, 5}).size(),
            56u);
  EXPECT_EQ(todd_coxeter(named_diagram(CoxeterFamily::E8, 8), {0, 1, 2, 3, 4, 5, 6}).size(),
            240u);
}

TEST(ToddCoxeter, CapExceeded) {
  EXPECT_THROW(todd_coxeter(named_diagram(CoxeterFamily::E8, 8), {}, 1000), CapExceeded);
  // Affine triangle group: infinite index.
  CoxeterMatrix affine(3);
  affine.set(0, 1, 3);
  affine.set(1, 2, 3);
  affine.set(0, 2, 3);
  EXPECT_THROW(todd_coxeter(affine, {}, 5000), CapExceeded);
  EXPECT_THROW(todd_coxeter(affine, {7}), InvalidArgument);
}

TEST(ToddCoxeter, IndependentOfRelatorOrder) {
  struct Case {
    CoxeterMatrix m;
    std::vector<std::size_t> parabolic;
  };
  std::vector<Case> cases{
      {named_diagram(CoxeterFamily::H3, 3), {}},
      {named_diagram(CoxeterFamily::F4, 4), {1, 2}},
      {named_diagram(CoxeterFamily::E6, 6), {0, 1, 2, 3, 4}},
  };
  for (const auto& c : cases) {
    ToddCoxeterOptions forward, backward;
    backward.reverse_relators = true;
    auto a = todd_coxeter(c.m, c.parabolic, forward);
    auto b = todd_coxeter(c.m, c.parabolic, backward);
    EXPECT_EQ(a.size(), b.size());
    expect_closed(b, c.m);
  }
}

TEST(CosetAction, RegularAndParabolic) {
  auto a3 = named_diagram(CoxeterFamily::A, 3);
  auto reg = coset_action(todd_coxeter(a3, {}));
  EXPECT_EQ(reg.degree(), 24u);
  EXPECT_EQ(reg.order(), 24u);
  auto e6 = coset_action(todd_coxeter(named_diagram(CoxeterFamily::E6, 6), {0, 1, 2, 3, 4}));
  EXPECT_EQ(e6.degree(), 27u);
  EXPECT_EQ(e6.order(), 51840u);
  auto h4 = coset_action(todd_coxeter(named_diagram(CoxeterFamily::H4, 4), {0, 1, 2}));
  EXPECT_EQ(h4.degree(), 120u);
  EXPECT_EQ(h4.order(), 14400u);
}

TEST(CoxeterOrder, KnownValues) {
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::A, 1)), 2u);
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::H3, 3)), 120u);
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::H4, 4)), 14400u);
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::F4, 4)), 1152u);
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::E6, 6)), 51840u);
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::E7, 7)), 2903040u);
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::E7, 7)), 56u * 51840u);
  EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::E8, 8)), 696729600u);
  EXPECT_EQ(coxeter_order(CoxeterMatrix(0)), 1u);
  EXPECT_EQ(coxeter_order(CoxeterMatrix(3)), 8u);
}

TEST(CoxeterOrder, ClassicalFormulas) {
  for (std::uint32_t n = 1; n <= 6; ++n)
    EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::A, n)), factorial(n + 1));
  for (std::uint32_t n = 2; n <= 6; ++n)
    EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::B, n)), (1u << n) * factorial(n));
  for (std::uint32_t n = 4; n <= 7; ++n)
    EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::D, n)),
              (1u << (n - 1)) * factorial(n));
  for (std::uint32_t m = 3; m <= 12; ++m)
    EXPECT_EQ(coxeter_order(named_diagram(CoxeterFamily::I2, m)), 2u * m);
}

// Chain order of a coset action against the recursive order, for every
// named type of rank at most 6 plus H4 and F4.
TEST(CoxeterOrder, MatchesChainOrderOfCosetAction) {
  std::vector<CoxeterType> types{{CoxeterFamily::H3, 3}, {CoxeterFamily::H4, 4},
                                 {CoxeterFamily::F4, 4}, {CoxeterFamily::E6, 6}};
  for (std::uint32_t n = 1; n <= 6; ++n) types.push_back({CoxeterFamily::A, n});
  for (std::uint32_t n = 2; n <= 6; ++n) types.push_back({CoxeterFamily::B, n});
  for (std::uint32_t n = 4; n <= 6; ++n) types.push_back({CoxeterFamily::D, n});
  for (std::uint32_t m = 3; m <= 8; ++m) types.push_back({CoxeterFamily::I2, m});
  for (const auto& t : types) {
    auto m = named_diagram(t);
    auto expected = coxeter_order(m);
    if (expected <= 5000) {
      auto reg = coset_action(todd_coxeter(m, {}));
      EXPECT_EQ(reg.order(), expected) << t.name();
    }
    auto r = realize(t);
    EXPECT_EQ(r.group.order(), expected) << t.name();
    EXPECT_TRUE(verify_presentation(r.group.generators(), m)) << t.name();
  }
}

TEST(Realize, DegreesOfExceptionalTypes) {
  EXPECT_EQ(realize("H3").group.degree(), 12u);
  EXPECT_EQ(realize("H4").group.degree(), 120u);
  EXPECT_EQ(realize("F4").group.degree(), 24u);
  EXPECT_EQ(realize("E6").group.degree(), 27u);
  EXPECT_EQ(realize("E7").group.degree(), 56u);
  auto e8 = realize("E8");
  EXPECT_EQ(e8.group.degree(), 240u);
  EXPECT_EQ(e8.group.order(), 696729600u);
  EXPECT_EQ(realize("D5").group.degree(), 10u);
  EXPECT_FALSE(realize("I2(5)").regular);
  auto i26 = realize("I2(6)");
  EXPECT_FALSE(i26.regular);
  EXPECT_EQ(i26.group.degree(), 6u);
  EXPECT_EQ(i26.group.order(), 12u);
}

TEST(VerifyPresentation, Examples) {
  for (Point n = 3; n <= 6; ++n)
    EXPECT_TRUE(verify_presentation(adjacent_transpositions(n),
                                    named_diagram(CoxeterFamily::A, n - 1)));
  // beta_0 beta_2 has order 4, so the beta generating set is not a Coxeter
  // system even though it generates the same group as the Coxeter one.
  auto d5 = named_diagram(CoxeterFamily::D, 5);
  EXPECT_FALSE(verify_presentation(dn_permutation_rep(5), d5));
  EXPECT_EQ(order(dn_permutation_rep(5)[0] * dn_permutation_rep(5)[2]), 4u);
  EXPECT_TRUE(verify_presentation(dn_coxeter_generators(5), d5));
  PermutationGroup beta(10, dn_permutation_rep(5));
  for (const auto& s : dn_coxeter_generators(5)) EXPECT_TRUE(beta.contains(s));
  EXPECT_FALSE(verify_presentation(adjacent_transpositions(4),
                                   named_diagram(CoxeterFamily::B, 3)));
  EXPECT_FALSE(verify_presentation(adjacent_transpositions(4),
                                   named_diagram(CoxeterFamily::A, 4)));
  // Pairwise orders all match 2 but the group has order 4, not 8.
  auto s = from_cycles({{1, 2}}, 4);
  auto t = from_cycles({{3, 4}}, 4);
  EXPECT_FALSE(verify_presentation({s, t, s * t}, CoxeterMatrix(3)));
  EXPECT_TRUE(verify_presentation({s, t}, CoxeterMatrix(2)));
}

}  // namespace
}  // namespace stringc
