#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chern/poly.hpp"

namespace chern {

/// Limits that turn runaway computations into ResourceCap errors.
struct GroebnerOptions {
  std::size_t max_pairs = 5'000'000;
  std::uint32_t max_degree = 4096;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted ascending by leading
/// monomial. Unique for a given ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const {
    return elements_.size() == 1 && elements_.front().leading_monomial().is_one();
  }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Full reduction of f by the reducers (which need not form a basis). The
/// remainder has no term divisible by a reducer's leading monomial.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Buchberger's algorithm with Gebauer-Moeller pair management and normal
/// selection. `ring` fixes the order; generators must live in an equal ring.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const GroebnerOptions& options = {});

/// Generators of <gens> intersected with k[keep], returned in the original ring.
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens,
                                  std::span<const std::size_t> keep,
                                  const GroebnerOptions& options = {});

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace chern
