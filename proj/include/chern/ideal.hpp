#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chern/groebner.hpp"
#include "chern/poly.hpp"

namespace chern {

/// Number of standard monomials; std::nullopt stands for an infinite count.
using Colength = std::optional<std::uint64_t>;

/// Ideal of the ambient polynomial ring with a lazily computed reduced
/// Groebner basis in the ring's order. Copies share the cached basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal unit(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring);
  static Ideal from_basis(GroebnerBasis gb);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const GroebnerBasis& gb() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_monomial() const;
  bool is_zero() const { return gb().is_zero_ideal(); }
  bool is_unit() const { return gb().is_unit_ideal(); }
  /// Largest total degree among basis elements.
  std::uint32_t max_basis_degree() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Equality as ideals (reduced bases coincide).
bool same_ideal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// A^0 is the unit ideal.
Ideal ideal_power(const Ideal& a, unsigned n);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (A : f); throws ZeroDivisorGenerator when f = 0.
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
/// (A : B), intersected over the generators of B.
Ideal ideal_colon(const Ideal& a, const Ideal& b);

/// f / b for f in (b); throws NotNested when b does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& b);

/// Standard monomials of the monomial ideal generated by `leading`.
Colength count_standard_monomials(std::span<const Monomial> leading, std::size_t nvars);
Colength colength(const Ideal& a);

/// Krull dimension of P/M for a monomial ideal M. Throws NotMonomial.
std::size_t monomial_dimension(const Ideal& m);
/// Krull dimension of P/A, read off the initial ideal.
std::size_t krull_dimension(const Ideal& a);

}  // namespace chern
