#include "chern/local_ring.hpp"

#include <algorithm>

namespace chern {

PresentedRing::PresentedRing(RingPtr ambient, std::vector<Polynomial> quotient)
    : ambient_(std::move(ambient)), q_(ambient_, std::move(quotient)) {
  q_.gb();
  dim_ = krull_dimension(q_);
}

Polynomial PresentedRing::reduce(const Polynomial& f) const { return normal_form(f, q_.gb()); }

const Ideal& PresentedRing::maximal_power(unsigned n) const {
  std::lock_guard lock(mutex_);
  auto it = powers_.find(n);
  if (it != powers_.end()) return it->second;
  // All monomials of degree n.
  const std::size_t nv = ambient_->nvars();
  std::vector<Polynomial> gens;
  std::vector<int> e(nv, 0);
  auto emit = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == nv) {
      e[var] = left;
      gens.push_back(Polynomial::monomial(ambient_, Monomial(e)));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  emit(emit, 0, static_cast<int>(n));
  return powers_.emplace(n, Ideal(ambient_, std::move(gens))).first->second;
}

PresentedRingPtr make_ring(const RingPtr& ambient, std::vector<Polynomial> quotient) {
  auto ring = std::make_shared<const PresentedRing>(ambient, std::move(quotient));
  if (ring->dim() == 0)
    throw Error(ErrorKind::ZeroDimensionalRing, "the presented ring has Krull dimension 0");
  return ring;
}

// ---------------------------------------------------------------------------

RingIdeal::RingIdeal(PresentedRingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (const Polynomial& g : gens) {
    Polynomial r = ring_->reduce(g);
    if (!r.is_zero()) gens_.push_back(std::move(r));
  }
  std::vector<Polynomial> lift = ring_->defining_ideal().gb().elements();
  lift.insert(lift.end(), gens_.begin(), gens_.end());
  lift_ = Ideal(ring_->ambient(), std::move(lift));
}

RingIdeal RingIdeal::unit(const PresentedRingPtr& ring) {
  return RingIdeal(ring, {Polynomial::constant(ring->ambient(), 1)});
}

RingIdeal RingIdeal::zero(const PresentedRingPtr& ring) { return RingIdeal(ring, {}); }

RingIdeal RingIdeal::maximal(const PresentedRingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->ambient()->nvars(); ++i)
    vars.push_back(Polynomial::variable(ring->ambient(), i));
  return RingIdeal(ring, std::move(vars));
}

bool RingIdeal::contains(const RingIdeal& other) const {
  for (const Polynomial& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

std::string RingIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

namespace {

// Basis elements of the lift that are nonzero in R; a generating set of the
// ideal of R with few redundant elements.
std::vector<Polynomial> essential_gens(const RingIdeal& a) {
  std::vector<Polynomial> out;
  const Ideal& q = a.ring()->defining_ideal();
  for (const Polynomial& g : a.lift().gb().elements())
    if (!q.contains(g)) out.push_back(g);
  return out;
}

RingIdeal from_lift(const PresentedRingPtr& ring, const Ideal& lift) {
  std::vector<Polynomial> gens;
  const Ideal& q = ring->defining_ideal();
  for (const Polynomial& g : lift.gb().elements())
    if (!q.contains(g)) gens.push_back(g);
  return RingIdeal(ring, std::move(gens));
}

}  // namespace

RingIdeal ring_sum(const RingIdeal& a, const RingIdeal& b) {
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ring_product(const RingIdeal& a, const RingIdeal& b) {
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) gens.push_back(f * g);
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ring_power(const RingIdeal& a, unsigned n) {
  RingIdeal result = RingIdeal::unit(a.ring());
  for (unsigned k = 0; k < n; ++k) {
    RingIdeal reduced = k == 0 ? result : RingIdeal(a.ring(), essential_gens(result));
    result = ring_product(reduced, a);
  }
  return result;
}

RingIdeal ring_principal(const PresentedRingPtr& ring, const Polynomial& f) {
  return RingIdeal(ring, {f});
}

RingIdeal ring_scale(const Polynomial& f, const RingIdeal& a) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.gens()) gens.push_back(f * g);
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ring_intersect(const RingIdeal& a, const RingIdeal& b) {
  // Both lifts contain Q, so the intersection of lifts is the lift of A /\ B.
  return from_lift(a.ring(), ideal_intersect(a.lift(), b.lift()));
}

RingIdeal ring_colon(const RingIdeal& a, const Polynomial& f) {
  Polynomial r = a.ring()->reduce(f);
  if (r.is_zero()) return RingIdeal::unit(a.ring());
  return from_lift(a.ring(), ideal_colon(a.lift(), r));
}

RingIdeal ring_colon(const RingIdeal& a, const RingIdeal& b) {
  // Generators of Q contribute the unit ideal, so only b.gens() matter.
  std::optional<Ideal> result;
  for (const Polynomial& g : b.gens()) {
    Ideal part = ideal_colon(a.lift(), g);
    result = result ? ideal_intersect(*result, part) : part;
  }
  if (!result) return RingIdeal::unit(a.ring());
  return from_lift(a.ring(), *result);
}

RingIdeal annihilator(const PresentedRingPtr& ring, const Polynomial& f) {
  return ring_colon(RingIdeal::zero(ring), f);
}

bool same_ideal(const RingIdeal& a, const RingIdeal& b) { return same_ideal(a.lift(), b.lift()); }

bool locally_equal(const RingIdeal& big, const RingIdeal& small) {
  if (same_ideal(big, small)) return true;
  if (supported_at_origin(small.lift())) return false;
  RingIdeal m_big = ring_product(RingIdeal::maximal(big.ring()), big);
  RingIdeal test = ring_sum(small, m_big);
  return test.contains(big);
}

Colength length_of_quotient(const RingIdeal& i) { return colength(i.lift()); }

bool supported_at_origin(const Ideal& a) {
  Colength len = colength(a);
  if (!len) return false;
  if (*len == 0) return true;
  const RingPtr& ring = a.ring();
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    Monomial m = Monomial::variable(v, static_cast<Exponent>(std::min<std::uint64_t>(*len, 65535)));
    if (!a.contains(Polynomial::monomial(ring, m))) return false;
  }
  return true;
}

bool is_m_primary(const RingIdeal& i) {
  if (i.is_unit()) return false;
  return supported_at_origin(i.lift());
}

bool is_regular_element(const PresentedRing& ring, const Polynomial& f) {
  Polynomial r = ring.reduce(f);
  if (r.is_zero()) return false;
  const Ideal& q = ring.defining_ideal();
  if (q.is_zero()) return true;
  return same_ideal(ideal_colon(q, r), q);
}

bool is_regular_sequence(const PresentedRingPtr& ring, const std::vector<Polynomial>& seq) {
  Ideal current = ring->defining_ideal();
  for (const Polynomial& f : seq) {
    Polynomial r = normal_form(f, current.gb());
    if (r.is_zero()) return false;
    if (!current.is_zero() && !same_ideal(ideal_colon(current, r), current)) return false;
    if (current.is_unit()) return false;
    current = ideal_sum(current, Ideal(ring->ambient(), {r}));
    if (current.is_unit()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void check_nested(const RingIdeal& a, const RingIdeal& b) {
  if (!a.contains(b))
    throw Error(ErrorKind::NotNested,
                "subquotient needs B inside A; got A = " + a.to_string() + ", B = " + b.to_string());
}

std::uint64_t colength_or_throw(const Ideal& i) {
  Colength c = colength(i);
  if (!c) throw Error(ErrorKind::NoStabilization, "ideal plus m^N has infinite colength");
  return *c;
}

}  // namespace

std::uint64_t subquotient_length_saturating(const RingIdeal& a, const RingIdeal& b,
                                            const SubquotientOptions& options) {
  check_nested(a, b);
  const PresentedRing& R = *a.ring();
  // Below the generator degrees both sides collapse to m^N, so start above.
  unsigned start = std::max(a.lift().max_basis_degree(), b.lift().max_basis_degree()) + 1;
  std::uint64_t last = 0;
  unsigned run = 0;
  for (unsigned step = 0; step < options.max_steps; ++step) {
    const unsigned n = start + step;
    const Ideal& mn = R.maximal_power(n);
    std::uint64_t lb = colength_or_throw(ideal_sum(b.lift(), mn));
    std::uint64_t la = colength_or_throw(ideal_sum(a.lift(), mn));
    std::uint64_t value = lb - la;
    run = (step > 0 && value == last) ? run + 1 : 1;
    last = value;
    if (run >= options.window) return value;
  }
  throw Error(ErrorKind::NoStabilization,
              "lambda(A/B) did not stabilize within " + std::to_string(options.max_steps) +
                  " powers of m (infinite length?)");
}

std::uint64_t subquotient_length(const RingIdeal& a, const RingIdeal& b,
                                 const SubquotientOptions& options) {
  check_nested(a, b);
  if (b.contains(a)) return 0;
  if (supported_at_origin(b.lift())) {
    std::uint64_t lb = colength_or_throw(b.lift());
    std::uint64_t la = colength_or_throw(a.lift());
    return lb - la;
  }
  return subquotient_length_saturating(a, b, options);
}

std::uint64_t local_length(const RingIdeal& i) {
  return subquotient_length(RingIdeal::unit(i.ring()), i);
}

}  // namespace chern
