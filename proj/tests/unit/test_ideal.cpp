#include <gtest/gtest.h>

#include <random>

#include "chern/expr_parse.hpp"
#include "chern/ideal.hpp"
#include "oracles/oracles.hpp"

using namespace chern;

namespace {

RingPtr R2() { return PolyRing::make({"x", "y"}); }
Ideal I(const RingPtr& R, const std::vector<std::string>& g) { return Ideal(R, parse_all(g, R)); }

Ideal monomial_ideal(const RingPtr& R, const std::vector<oracle::Exp2>& pts) {
  std::vector<Polynomial> g;
  for (auto [a, b] : pts) g.push_back(Polynomial::monomial(R, Monomial(std::vector<int>{a, b})));
  return Ideal(R, g);
}

}  // namespace

TEST(IdealOps, SumProductPower) {
  RingPtr R = R2();
  EXPECT_TRUE(same_ideal(ideal_product(I(R, {"x"}), I(R, {"y"})), I(R, {"x*y"})));
  EXPECT_TRUE(same_ideal(ideal_power(I(R, {"x^2", "x*y", "y^2"}), 2),
                         I(R, {"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"})));
  EXPECT_TRUE(ideal_power(I(R, {"x"}), 0).is_unit());
  EXPECT_TRUE(same_ideal(ideal_sum(I(R, {"x"}), I(R, {"y"})), I(R, {"x", "y"})));
}

TEST(IdealOps, Colon) {
  RingPtr R = R2();
  EXPECT_TRUE(same_ideal(ideal_colon(I(R, {"x^2", "x*y"}), I(R, {"x"})), I(R, {"x", "y"})));
  EXPECT_TRUE(same_ideal(ideal_colon(I(R, {"x*y", "y^2"}), I(R, {"y"})), I(R, {"x", "y"})));
  EXPECT_TRUE(same_ideal(ideal_colon(I(R, {"x^4"}), I(R, {"x", "y"})), I(R, {"x^4"})));
  EXPECT_THROW(ideal_colon(I(R, {"x"}), Polynomial(R)), Error);
}

TEST(IdealOps, ColonOfNonMonomialIdeal) {
  RingPtr R = PolyRing::make({"x", "y", "z"});
  Ideal A = I(R, {"x*y - z^2", "x^3 - y*z"});
  Polynomial f = parse_in("x + z", R);
  Ideal C = ideal_colon(A, f);
  // (A : f) * f inside A, and A inside (A : f)
  for (const Polynomial& g : C.gens()) EXPECT_TRUE(A.contains(g * f));
  EXPECT_TRUE(C.contains(A));
}

TEST(IdealOps, Intersection) {
  RingPtr R = R2();
  EXPECT_TRUE(same_ideal(ideal_intersect(I(R, {"x"}), I(R, {"y"})), I(R, {"x*y"})));
  EXPECT_TRUE(same_ideal(ideal_intersect(I(R, {"x^2", "y"}), I(R, {"x"})), I(R, {"x^2", "x*y"})));
  Ideal A = I(R, {"x^2 - y", "x*y^2 + 1"});
  EXPECT_TRUE(same_ideal(ideal_intersect(A, A), A));
  Ideal B = I(R, {"x + y", "y^3"});
  Ideal M = ideal_intersect(A, B);
  EXPECT_TRUE(A.contains(M));
  EXPECT_TRUE(B.contains(M));
  EXPECT_TRUE(M.contains(ideal_product(A, B)));
}

TEST(Colength, WorkedValues) {
  RingPtr R = R2();
  EXPECT_EQ(colength(I(R, {"x^2", "x*y", "y^2"})), 3u);
  EXPECT_EQ(colength(I(R, {"x^4", "x^3*y", "x*y^3", "y^4"})), 11u);
  EXPECT_FALSE(colength(I(R, {"x"})).has_value());
  EXPECT_EQ(colength(Ideal::unit(R)), 0u);
}

TEST(Colength, AgreesWithLatticeOracle) {
  RingPtr R = R2();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> e(0, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<oracle::Exp2> pts{{1 + e(rng), 0}, {0, 1 + e(rng)}};
    for (int k = 0; k < 3; ++k) pts.push_back({e(rng), e(rng)});
    long long expect = oracle::colength2(pts);
    Colength got = colength(monomial_ideal(R, pts));
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(static_cast<long long>(*got), expect);
  }
}

TEST(Colength, SumIsBoundedByEachSummand) {
  RingPtr R = R2();
  Ideal A = I(R, {"x^3", "y^4", "x*y^2"}), B = I(R, {"x^2 - y^2", "y^5"});
  auto ca = colength(A), cb = colength(B), cs = colength(ideal_sum(A, B));
  ASSERT_TRUE(ca && cb && cs);
  EXPECT_LE(*cs, std::min(*ca, *cb));
}

TEST(MonomialDimension, WorkedValues) {
  RingPtr R = R2();
  EXPECT_EQ(monomial_dimension(I(R, {"y^2", "x*y"})), 1u);
  EXPECT_EQ(monomial_dimension(Ideal::zero(R)), 2u);
  EXPECT_EQ(monomial_dimension(I(R, {"x", "y"})), 0u);
  EXPECT_THROW(monomial_dimension(I(R, {"x + y"})), Error);
}
