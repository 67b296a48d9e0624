#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "chern/expr_parse.hpp"
#include "chern/local_ring.hpp"

namespace chern {

/// Descending filtration n -> I_n of a presented ring, evaluated lazily.
/// I_n is the unit ideal for n <= 0.
class Filtration {
 public:
  /// {I^n}.
  static std::shared_ptr<const Filtration> adic(RingIdeal seed);
  /// {integral closure of I^n} for a monomial ideal of k[x,y]. Throws
  /// ClosureUnsupported or NotMPrimary.
  static std::shared_ptr<const Filtration> newton_closure(RingIdeal seed);

  FiltrationKind kind() const { return kind_; }
  const PresentedRingPtr& ring() const { return seed_.ring(); }
  /// The ideal I the filtration is built from (I_1 for adic filtrations).
  const RingIdeal& seed() const { return seed_; }

  RingIdeal term(int n) const;

 private:
  Filtration(FiltrationKind kind, RingIdeal seed);

  FiltrationKind kind_;
  RingIdeal seed_;
  mutable std::mutex mutex_;
  mutable std::map<int, RingIdeal> memo_;
};

using FiltrationPtr = std::shared_ptr<const Filtration>;

/// Exponent vectors (a, b) of the minimal generators of the integral closure
/// of I^n, I a monomial ideal of k[x,y] containing pure powers of x and y.
std::vector<std::pair<int, int>> newton_closure_exponents(const std::vector<std::pair<int, int>>& gens,
                                                          unsigned n);
/// The same as an ideal of the ambient ring. Throws ClosureUnsupported or
/// NotMPrimary.
Ideal newton_closure(const Ideal& seed, unsigned n);

/// Least k with I^n in I_n in I^(n-k) for 1 <= n <= N. Throws
/// NotAdmissibleUpTo when I^n is not inside I_n.
unsigned admissibility_check(const Filtration& f, unsigned max_n);

struct RegularityReport {
  bool regular_element = false;
  bool passed = false;
  unsigned checked_up_to = 0;
  std::optional<unsigned> failed_at;
  std::string witness;  // a generator of (I_n : x) outside I_{n-1}
};

/// Checks that x is regular on R and (I_n : x) = I_{n-1} for 2 <= n <= N.
/// Evidence for x* being a nonzerodivisor of the associated graded ring on
/// the checked range only.
RegularityReport graded_regularity_check(const Filtration& f, const Polynomial& x, unsigned max_n);

}  // namespace chern
