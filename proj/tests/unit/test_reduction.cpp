#include <gtest/gtest.h>

#include "chern/expr_parse.hpp"
#include "chern/hilbert.hpp"
#include "chern/reduction.hpp"

using namespace chern;

namespace {

PresentedRingPtr ring_of(const std::vector<std::string>& vars, const std::vector<std::string>& q) {
  RingPtr P = PolyRing::make(vars);
  return make_ring(P, parse_all(q, P));
}

RingIdeal RI(const PresentedRingPtr& R, const std::vector<std::string>& g) {
  return RingIdeal(R, parse_all(g, R->ambient()));
}

}  // namespace

TEST(IsReduction, WorkedValues) {
  auto R = ring_of({"x", "y"}, {});
  auto F = Filtration::adic(RI(R, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(is_reduction(*F, RI(R, {"x^2", "y^2"}), 10), 1u);
  auto M = Filtration::adic(RingIdeal::maximal(R));
  EXPECT_FALSE(is_reduction(*M, RI(R, {"x"}), 10).has_value());

  auto C = ring_of({"a", "b"}, {"b^2 - a^3"});
  EXPECT_EQ(is_reduction(*Filtration::adic(RingIdeal::maximal(C)), RI(C, {"a"}), 10), 1u);

  auto S = ring_of({"x", "y"}, {"y^2", "x*y"});
  EXPECT_EQ(is_reduction(*Filtration::adic(RingIdeal::maximal(S)), RI(S, {"x"}), 10), 1u);
}

TEST(IsReduction, ClosureFiltrationAcceptsItsSeed) {
  auto R = ring_of({"x", "y"}, {});
  auto F = Filtration::newton_closure(RI(R, {"x^3", "y^2"}));
  EXPECT_EQ(is_reduction(*F, RI(R, {"x^3", "y^2"}), 10), 1u);
}

TEST(FindMinimalReduction, PrincipalAndGeneric) {
  auto K = ring_of({"x"}, {});
  auto F = Filtration::adic(RI(K, {"x^3"}));
  Reduction r = find_minimal_reduction(F, 1);
  ASSERT_EQ(r.gens.size(), 1u);
  EXPECT_EQ(r.gens[0], parse_in("x^3", K->ambient()));

  auto R = ring_of({"x", "y"}, {});
  auto G = Filtration::adic(RI(R, {"x^2", "x*y", "y^2"}));
  Reduction a = find_minimal_reduction(G, 42);
  Reduction b = find_minimal_reduction(G, 42);
  ASSERT_EQ(a.gens.size(), 2u);
  EXPECT_EQ(a.gens, b.gens);
  EXPECT_TRUE(is_reduction(*G, RingIdeal(R, a.gens), 10).has_value());
}

TEST(FindMinimalReduction, MultiplicityIsPreserved) {
  auto R = ring_of({"x", "y"}, {});
  auto F = Filtration::adic(RI(R, {"x^4", "x^3*y", "x*y^3", "y^4"}));
  Reduction r = find_minimal_reduction(F, 7);
  auto eF = hilbert_fit(F, 14).coeffs.e[0];
  auto eJ = hilbert_fit(Filtration::adic(RingIdeal(R, r.gens)), 14).coeffs.e[0];
  EXPECT_EQ(eF, 16);
  EXPECT_EQ(eJ, eF);
}
