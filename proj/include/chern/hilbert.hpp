#pragma once

#include <cstdint>
#include <vector>

#include "chern/filtration.hpp"

namespace chern {

struct HilbertTable {
  FiltrationPtr filtration;
  unsigned dim = 0;
  unsigned max_n = 0;
  std::vector<std::int64_t> values;  // H(0..max_n); H(n) = 0 for n <= 0

  /// H(n) with the convention H(n) = 0 for n <= 0. Throws RangeExceeded past max_n.
  std::int64_t at(std::int64_t n) const;
};

struct HilbertCoefficients {
  unsigned dim = 0;
  std::vector<std::int64_t> e;  // e_0 .. e_d
  unsigned postulation = 0;     // least n >= 0 with H = P on [n, max_n]
};

/// Throws NotMPrimary when some length is infinite.
HilbertTable hilbert_table(const FiltrationPtr& f, unsigned max_n);

/// Exact fit in the binomial basis on the last d+1 table points, confirmed on
/// a guard window of 3 earlier points. Throws NoStabilization.
HilbertCoefficients fit_coefficients(const HilbertTable& table);

/// P(n) for any integer n; binomials are evaluated as polynomials in n.
std::int64_t hilbert_poly_eval(const HilbertCoefficients& c, std::int64_t n);

/// d-th backward difference of P - H at n, with H = 0 at nonpositive
/// arguments and P not truncated. Throws RangeExceeded unless 1 <= n <= max_n.
std::int64_t delta_pd_minus_h(const HilbertTable& table, const HilbertCoefficients& c, std::int64_t n);

/// k-th backward difference of H at n.
std::int64_t delta_h(const HilbertTable& table, unsigned k, std::int64_t n);

struct HilbertFit {
  HilbertTable table;
  HilbertCoefficients coeffs;
};

/// Table and fit; on NoStabilization the range is doubled once.
HilbertFit hilbert_fit(const FiltrationPtr& f, unsigned max_n);

/// Generalized binomial coefficient C(x, k), k >= 0.
std::int64_t binomial(std::int64_t x, unsigned k);

}  // namespace chern
