#include "chern/reduction.hpp"

#include <map>
#include <random>

namespace chern {

std::optional<unsigned> is_reduction(const Filtration& f, const RingIdeal& j, unsigned max_n, unsigned window) {
  if (!f.term(1).contains(j)) return std::nullopt;
  std::map<unsigned, bool> ok;
  auto holds = [&](unsigned n) {
    auto it = ok.find(n);
    if (it != ok.end()) return it->second;
    RingIdeal next = f.term(static_cast<int>(n) + 1);
    RingIdeal prod = ring_product(j, f.term(static_cast<int>(n)));
    bool v = locally_equal(next, prod);
    ok.emplace(n, v);
    return v;
  };
  for (unsigned n0 = 0; n0 <= max_n; ++n0) {
    bool all = true;
    for (unsigned n = n0; n <= n0 + window && all; ++n) all = holds(n);
    if (all) return n0;
  }
  return std::nullopt;
}

Reduction verify_reduction(const FiltrationPtr& f, std::vector<Polynomial> gens, unsigned max_n) {
  RingIdeal j(f->ring(), gens);
  auto n0 = is_reduction(*f, j, max_n);
  if (!n0) throw Error(ErrorKind::NotAReduction, j.to_string() + " is not a reduction of the filtration");
  Reduction r;
  r.gens = std::move(gens);
  r.verified_at = *n0;
  return r;
}

Reduction find_minimal_reduction(const FiltrationPtr& f, std::uint64_t seed, unsigned max_n) {
  const PresentedRing& R = *f->ring();
  const std::size_t d = R.dim();
  const PrimeField& F = R.ambient()->field();
  std::vector<Polynomial> base = f->term(1).gens();
  if (base.empty()) throw Error(ErrorKind::NoReductionFound, "I_1 is zero");
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 1; attempt <= 10; ++attempt) {
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < d; ++k) {
      Polynomial g(R.ambient());
      for (const Polynomial& b : base) g = g + b.scaled(static_cast<std::uint32_t>(rng() % F.characteristic()));
      if (!g.is_zero()) g = g.monic();
      gens.push_back(std::move(g));
    }
    bool degenerate = false;
    for (const Polynomial& g : gens) degenerate = degenerate || g.is_zero();
    if (degenerate) continue;
    auto n0 = is_reduction(*f, RingIdeal(f->ring(), gens), max_n);
    if (n0) {
      Reduction r;
      r.gens = std::move(gens);
      r.verified_at = *n0;
      r.attempts = attempt;
      return r;
    }
  }
  throw Error(ErrorKind::NoReductionFound, "no reduction among 10 random draws");
}

}  // namespace chern
