#include <gtest/gtest.h>

#include <random>

#include "chern/expr_parse.hpp"
#include "chern/filtration.hpp"
#include "oracles/oracles.hpp"

using namespace chern;

namespace {

PresentedRingPtr ring_of(const std::vector<std::string>& vars, const std::vector<std::string>& q) {
  RingPtr P = PolyRing::make(vars);
  return make_ring(P, parse_all(q, P));
}

RingIdeal RI(const PresentedRingPtr& R, const std::vector<std::string>& g) {
  return RingIdeal(R, parse_all(g, R->ambient()));
}

std::vector<oracle::Exp2> exps(const std::vector<std::pair<int, int>>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Filtration, AdicTerms) {
  auto R = ring_of({"x", "y"}, {});
  auto F = Filtration::adic(RI(R, {"x^2", "x*y", "y^2"}));
  EXPECT_TRUE(same_ideal(F->term(3), ring_power(RingIdeal::maximal(R), 6)));
  EXPECT_TRUE(F->term(0).is_unit());
  EXPECT_TRUE(F->term(-2).is_unit());
  EXPECT_TRUE(same_ideal(F->term(1), RI(R, {"x^2", "x*y", "y^2"})));
}

TEST(NewtonClosure, WorkedValues) {
  using V = std::vector<std::pair<int, int>>;
  EXPECT_EQ(newton_closure_exponents({{3, 0}, {0, 2}}, 1), (V{{0, 2}, {2, 1}, {3, 0}}));
  EXPECT_EQ(newton_closure_exponents({{4, 0}, {0, 3}}, 1), (V{{0, 3}, {2, 2}, {3, 1}, {4, 0}}));
  EXPECT_EQ(newton_closure_exponents({{3, 0}, {0, 2}}, 2), (V{{0, 4}, {2, 3}, {3, 2}, {5, 1}, {6, 0}}));
  V m5;
  for (int a = 0; a <= 5; ++a) m5.push_back({a, 5 - a});
  EXPECT_EQ(newton_closure_exponents({{1, 0}, {0, 1}}, 5), m5);
}

TEST(NewtonClosure, AgreesWithPolygonOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<int, int>> gens{{1 + e(rng), 0}, {0, 1 + e(rng)}, {e(rng), e(rng)}};
    for (unsigned n = 1; n <= 3; ++n) {
      auto got = newton_closure_exponents(gens, n);
      auto expect = oracle::closure_generators2(exps(gens), static_cast<int>(n));
      EXPECT_EQ(exps(got), expect) << "trial " << trial << " n " << n;
    }
  }
}

TEST(NewtonClosure, TermsAreIntegrallyClosedAndContainPowers) {
  auto R = ring_of({"x", "y"}, {});
  auto F = Filtration::newton_closure(RI(R, {"x^5", "x*y^2", "y^3"}));
  auto A = Filtration::adic(RI(R, {"x^5", "x*y^2", "y^3"}));
  for (int n = 1; n <= 4; ++n) {
    RingIdeal t = F->term(n);
    EXPECT_TRUE(t.contains(A->term(n)));
    EXPECT_TRUE(same_ideal(RingIdeal(R, newton_closure(t.lift(), 1).gens()), t));
    EXPECT_TRUE(F->term(n).contains(F->term(n + 1)));
    EXPECT_TRUE(F->term(n + 1).contains(ring_product(F->term(1), F->term(n))));
  }
}

TEST(NewtonClosure, Rejections) {
  auto S = ring_of({"x", "y"}, {"x*y"});
  try {
    Filtration::newton_closure(RI(S, {"x^3"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClosureUnsupported);
  }
  auto R = ring_of({"x", "y"}, {});
  EXPECT_THROW(Filtration::newton_closure(RI(R, {"x^3 + y", "y^2"})), Error);
}

TEST(Admissibility, Constants) {
  auto R = ring_of({"x", "y"}, {});
  EXPECT_EQ(admissibility_check(*Filtration::adic(RI(R, {"x^3", "y^2"})), 6), 0u);
  EXPECT_EQ(admissibility_check(*Filtration::newton_closure(RI(R, {"x^3", "y^2"})), 6), 1u);
  EXPECT_EQ(admissibility_check(*Filtration::newton_closure(RI(R, {"x", "y"})), 6), 0u);
}

TEST(GradedRegularity, Cases) {
  auto R = ring_of({"x", "y"}, {});
  auto P = R->ambient();
  auto adic = Filtration::adic(RI(R, {"x^2", "x*y", "y^2"}));
  EXPECT_TRUE(graded_regularity_check(*adic, parse_in("x^2", P), 6).passed);
  auto closure = Filtration::newton_closure(RI(R, {"x^3", "y^2"}));
  EXPECT_TRUE(graded_regularity_check(*closure, parse_in("x^3", P), 6).passed);
  auto S = ring_of({"x", "y"}, {"y^2", "x*y"});
  auto bad = Filtration::adic(RingIdeal::maximal(S));
  auto rep = graded_regularity_check(*bad, parse_in("x", S->ambient()), 6);
  EXPECT_FALSE(rep.passed);
  EXPECT_FALSE(rep.regular_element);
}
