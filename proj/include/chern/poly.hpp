#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chern/errors.hpp"

namespace chern {

// ---------------------------------------------------------------------------
// Prime field
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

bool is_prime(std::uint64_t n);

/// Element of Z/p in canonical form 0 <= value < modulus.
struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t modulus = kDefaultCharacteristic;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric() const;
};

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const;

  FieldElement element(std::uint32_t v) const { return {v % p_, p_}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Monomials and orders
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMaxVars = 8;
using Exponent = std::uint16_t;

/// Exponent vector of fixed capacity; the owning ring decides how many slots
/// are live. Unused slots stay zero so equality and hashing ignore arity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, Exponent e);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires this | other.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// The first `block` variables are eliminated: they are compared first (by
  /// grevlex within the block), ties broken by grevlex on the rest.
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

// ---------------------------------------------------------------------------
// Polynomial ring
// ---------------------------------------------------------------------------

class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, MonomialOrder order,
           std::uint32_t characteristic = kDefaultCharacteristic);

  static std::shared_ptr<const PolyRing> make(
      std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
      std::uint32_t characteristic = kDefaultCharacteristic);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  const PrimeField& field() const { return field_; }

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, names_.size());
  }
  std::string format(const Monomial& m) const;

  /// Structural equality: same names, order and characteristic.
  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.order_ == b.order_ && a.field_ == b.field_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
  PrimeField field_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;
};

/// Sparse polynomial over Z/p. Terms are strictly descending in the ring's
/// order with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Terms in any order, possibly repeated; they are normalized.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::uint32_t total_degree() const;

  /// Throws ZeroPolynomial.
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times(const Monomial& m, std::uint32_t c = 1) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  /// Same polynomial re-expressed in `target`, whose variable j is source
  /// variable `index_map[j]` (or absent when index_map[j] < 0). Source
  /// variables missing from the map must not occur.
  Polynomial mapped(RingPtr target, std::span<const int> index_map) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void check_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::pair<Monomial, FieldElement> leading_term(const Polynomial& f);

enum class ArithOp { Add, Sub, Mul, ScalarMul };

/// `poly_arith(ScalarMul, f, g)` multiplies f by the constant polynomial g.
Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);

}  // namespace chern
