#include "chern/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace chern {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ClosureUnsupported: return "ClosureUnsupported";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::ZeroDivisorGenerator: return "ZeroDivisorGenerator";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::ZeroDimensionalRing: return "ZeroDimensionalRing";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::NotAdmissibleUpTo: return "NotAdmissibleUpTo";
    case ErrorKind::RegularityFails: return "RegularityFails";
    case ErrorKind::RangeExceeded: return "RangeExceeded";
    case ErrorKind::NoReductionFound: return "NoReductionFound";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotAReduction: return "NotAReduction";
    case ErrorKind::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorKind::HomologyRouteUnavailable: return "HomologyRouteUnavailable";
    case ErrorKind::NotRegularSequence: return "NotRegularSequence";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

bool Error::is_input_error() const noexcept {
  switch (kind_) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::MalformedDocument:
    case ErrorKind::InvalidField:
    case ErrorKind::ClosureUnsupported:
    case ErrorKind::ZeroDimensionalRing:
    case ErrorKind::NotMPrimary:
    case ErrorKind::NotAReduction:
    case ErrorKind::Usage:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t FieldElement::symmetric() const {
  std::int64_t v = value;
  return v > static_cast<std::int64_t>(modulus / 2) ? v - modulus : v;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) +
                                             " is not a prime below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::ZeroDivisorGenerator, "inverse of zero in Z/p");
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars)
    throw Error(ErrorKind::ArityMismatch, "too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0)
      throw Error(ErrorKind::ArityMismatch, "negative exponent");
    if (exponents[i] > std::numeric_limits<Exponent>::max())
      throw Error(ErrorKind::ResourceCap, "exponent overflow");
    set(i, static_cast<Exponent>(exponents[i]));
  }
}

Monomial Monomial::variable(std::size_t index, Exponent power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t{exp_[i]} + other.exp_[i];
    if (e > std::numeric_limits<Exponent>::max())
      throw Error(ErrorKind::ResourceCap, "exponent overflow in monomial product");
    r.exp_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = other.exp_[i] - exp_[i];
  r.degree_ = other.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::min(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

namespace {

// Reverse-lex tie break on [lo, hi): smaller exponent in the last differing
// variable wins.
int revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int partial_degree_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  return da == db ? 0 : (da < db ? -1 : 1);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind_) {
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return revlex(a, b, 0, nvars);
    case Kind::Lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      std::size_t k = std::min(block_, nvars);
      if (int c = partial_degree_cmp(a, b, 0, k)) return c;
      if (int c = revlex(a, b, 0, k)) return c;
      if (int c = partial_degree_cmp(a, b, k, nvars)) return c;
      return revlex(a, b, k, nvars);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order,
                   std::uint32_t characteristic)
    : names_(std::move(names)), order_(order), field_(characteristic) {
  if (names_.empty() || names_.size() > kMaxVars)
    throw Error(ErrorKind::ArityMismatch,
                "rings need between 1 and " + std::to_string(kMaxVars) + " variables");
}

RingPtr PolyRing::make(std::vector<std::string> names, MonomialOrder order,
                       std::uint32_t characteristic) {
  return std::make_shared<const PolyRing>(std::move(names), order, characteristic);
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  const PolyRing& R = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::uint32_t c = t.coeff % R.field().characteristic();
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = R.field().add(merged.back().coeff, c);
    } else {
      merged.push_back({t.mono, c});
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t v = ring->field().from_int(c);
  Polynomial p(std::move(ring));
  if (v != 0) p.terms_.push_back({Monomial{}, v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff) {
  Polynomial p(std::move(ring));
  coeff %= p.ring_->field().characteristic();
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& g) const {
  if (ring_ == g.ring_) return;
  if (!ring_ || !g.ring_ || !(*ring_ == *g.ring_))
    throw Error(ErrorKind::ArityMismatch, "polynomials live in different rings");
}

namespace {

// Merge a + c*b for descending term lists.
std::vector<Term> merge_axpy(const PolyRing& R, const std::vector<Term>& a,
                             const std::vector<Term>& b, std::uint32_t c) {
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = R.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, F.mul(c, b[j].coeff)});
      ++j;
    } else {
      std::uint32_t s = F.add(a[i].coeff, F.mul(c, b[j].coeff));
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, F.mul(c, b[j].coeff)});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_ring(g);
  Polynomial r(ring_);
  r.terms_ = merge_axpy(*ring_, terms_, g.terms_, 1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  check_ring(g);
  Polynomial r(ring_);
  r.terms_ = merge_axpy(*ring_, terms_, g.terms_, ring_->field().characteristic() - 1);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().characteristic() - 1); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  Polynomial r(ring_);
  c %= ring_->field().characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, ring_->field().mul(c, t.coeff)});
  return r;
}

Polynomial Polynomial::times(const Monomial& m, std::uint32_t c) const {
  Polynomial r(ring_);
  c %= ring_->field().characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the order is preserved.
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(c, t.coeff)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const Polynomial& small = size() <= g.size() ? *this : g;
  const Polynomial& big = size() <= g.size() ? g : *this;
  std::vector<Term> acc;
  for (const Term& t : small.terms_) {
    acc = merge_axpy(*ring_, acc, big.times(t.mono).terms_, t.coeff);
  }
  Polynomial r(ring_);
  r.terms_ = std::move(acc);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::uint32_t lc = terms_.front().coeff;
  if (lc == 1) return *this;
  return scaled(ring_->field().inv(lc));
}

Polynomial Polynomial::mapped(RingPtr target, std::span<const int> index_map) const {
  if (index_map.size() != target->nvars())
    throw Error(ErrorKind::ArityMismatch, "variable map does not match target ring");
  if (target->field().characteristic() != ring_->field().characteristic())
    throw Error(ErrorKind::ArityMismatch, "characteristic mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    std::uint32_t moved = 0;
    for (std::size_t j = 0; j < index_map.size(); ++j) {
      if (index_map[j] < 0) continue;
      Exponent e = t.mono[static_cast<std::size_t>(index_map[j])];
      m.set(j, e);
      moved += e;
    }
    if (moved != t.mono.degree())
      throw Error(ErrorKind::ArityMismatch, "variable dropped by ring map occurs in polynomial");
    out.push_back({m, t.coeff});
  }
  return Polynomial(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    std::int64_t c = FieldElement{t.coeff, ring_->field().characteristic()}.symmetric();
    bool negative = c < 0;
    std::uint64_t mag = static_cast<std::uint64_t>(negative ? -c : c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += ring_->format(t.mono);
    }
  }
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  if (f.ring_ != g.ring_ && f.ring_ && g.ring_ && !(*f.ring_ == *g.ring_)) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coeff != g.terms_[i].coeff)
      return false;
  return true;
}

std::pair<Monomial, FieldElement> leading_term(const Polynomial& f) {
  const Term& t = f.leading();
  return {t.mono, FieldElement{t.coeff, f.ring()->field().characteristic()}};
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
    case ArithOp::ScalarMul:
      if (!g.is_constant())
        throw Error(ErrorKind::ArityMismatch, "scalar multiplication by a non-constant");
      return g.is_zero() ? Polynomial(f.ring()) : f.scaled(g.terms().front().coeff);
  }
  return {};
}

}  // namespace chern
