#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "chern/ideal.hpp"

namespace chern {

/// R = P/Q localized at the origin m = (x_1, ..., x_m). All ideals of R are
/// carried as their preimages in P, so Groebner work stays in the ambient
/// polynomial ring.
class PresentedRing {
 public:
  PresentedRing(RingPtr ambient, std::vector<Polynomial> quotient);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& defining_ideal() const { return q_; }
  std::size_t dim() const { return dim_; }
  bool is_polynomial_ring() const { return q_.is_zero(); }

  /// Normal form modulo Q.
  Polynomial reduce(const Polynomial& f) const;
  /// m^N as an ideal of P (without Q).
  const Ideal& maximal_power(unsigned n) const;

 private:
  RingPtr ambient_;
  Ideal q_;
  std::size_t dim_ = 0;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, Ideal> powers_;
};

using PresentedRingPtr = std::shared_ptr<const PresentedRing>;

/// Throws ZeroDimensionalRing when dim R = 0.
PresentedRingPtr make_ring(const RingPtr& ambient, std::vector<Polynomial> quotient);

/// Ideal of a presented ring; `lift()` = Q + (gens) always contains Q.
class RingIdeal {
 public:
  RingIdeal() = default;
  RingIdeal(PresentedRingPtr ring, std::vector<Polynomial> gens);

  static RingIdeal unit(const PresentedRingPtr& ring);
  static RingIdeal zero(const PresentedRingPtr& ring);
  static RingIdeal maximal(const PresentedRingPtr& ring);

  const PresentedRingPtr& ring() const { return ring_; }
  /// Generators reduced modulo Q, zero classes dropped.
  const std::vector<Polynomial>& gens() const { return gens_; }
  const Ideal& lift() const { return lift_; }

  bool contains(const Polynomial& f) const { return lift_.contains(f); }
  bool contains(const RingIdeal& other) const;
  bool is_unit() const { return lift_.is_unit(); }

  std::string to_string() const;

 private:
  PresentedRingPtr ring_;
  std::vector<Polynomial> gens_;
  Ideal lift_;
};

RingIdeal ring_sum(const RingIdeal& a, const RingIdeal& b);
RingIdeal ring_product(const RingIdeal& a, const RingIdeal& b);
RingIdeal ring_power(const RingIdeal& a, unsigned n);
/// The principal ideal (f).
RingIdeal ring_principal(const PresentedRingPtr& ring, const Polynomial& f);
RingIdeal ring_scale(const Polynomial& f, const RingIdeal& a);
RingIdeal ring_intersect(const RingIdeal& a, const RingIdeal& b);
RingIdeal ring_colon(const RingIdeal& a, const Polynomial& f);
RingIdeal ring_colon(const RingIdeal& a, const RingIdeal& b);
/// (0 : f) in R.
RingIdeal annihilator(const PresentedRingPtr& ring, const Polynomial& f);

/// Equality of lifts, i.e. equality as ideals of P/Q.
bool same_ideal(const RingIdeal& a, const RingIdeal& b);
/// For small inside big: equality after localizing at m (Nakayama test
/// big = small + m*big).
bool locally_equal(const RingIdeal& big, const RingIdeal& small);

/// lambda(R/I) as the colength of Q + lift (global count).
Colength length_of_quotient(const RingIdeal& i);
/// True when R/I has finite length and every variable has a pure power in I,
/// so the support of R/I is exactly the origin. False for the unit ideal.
bool is_m_primary(const RingIdeal& i);
/// Finite colength with support inside the origin (the unit ideal counts).
bool supported_at_origin(const Ideal& a);
/// (Q : f) = Q.
bool is_regular_element(const PresentedRing& ring, const Polynomial& f);
/// Each element regular modulo the previous ones.
bool is_regular_sequence(const PresentedRingPtr& ring, const std::vector<Polynomial>& seq);

struct SubquotientOptions {
  unsigned window = 3;
  unsigned max_steps = 40;
};

/// lambda(A/B) for B inside A, measured at the origin. When B is supported at
/// the origin this is a difference of colengths; otherwise
/// lambda(R/(B + m^N)) - lambda(R/(A + m^N)) for increasing N until constant
/// on `window` consecutive N. Throws NotNested or NoStabilization.
std::uint64_t subquotient_length(const RingIdeal& a, const RingIdeal& b,
                                 const SubquotientOptions& options = {});
/// Same quantity, always through the m^N route.
std::uint64_t subquotient_length_saturating(const RingIdeal& a, const RingIdeal& b,
                                            const SubquotientOptions& options = {});
/// lambda(R/I) at the origin.
std::uint64_t local_length(const RingIdeal& i);

}  // namespace chern
