#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chern/filtration.hpp"

namespace chern {

struct Reduction {
  std::vector<Polynomial> gens;
  unsigned verified_at = 0;  // n0 with J I_n = I_{n+1} for n0 <= n <= n0 + window
  unsigned window = 3;
  unsigned attempts = 0;     // random draws used; 0 when supplied
};

/// Least n0 <= max_n such that J I_n and I_{n+1} agree at the origin for all
/// n in [n0, n0 + window]; nullopt if none.
std::optional<unsigned> is_reduction(const Filtration& f, const RingIdeal& j, unsigned max_n,
                                     unsigned window = 3);

/// d = dim R random combinations of the generators of I_1 (coefficients drawn
/// from the full field), retried up to 10 times. Deterministic in `seed`.
/// Throws NoReductionFound.
Reduction find_minimal_reduction(const FiltrationPtr& f, std::uint64_t seed, unsigned max_n = 10);

/// Checks a supplied reduction. Throws NotAReduction.
Reduction verify_reduction(const FiltrationPtr& f, std::vector<Polynomial> gens, unsigned max_n = 10);

}  // namespace chern
