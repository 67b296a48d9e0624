#include "chern/ideal.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace chern {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  std::erase_if(gens_, [](const Polynomial& g) { return g.is_zero(); });
  for (Polynomial& g : gens_)
    if (g.ring() != ring_) {
      if (!g.ring() || !(*g.ring() == *ring_))
        throw Error(ErrorKind::ArityMismatch, "generator does not live in the ideal's ring");
      g = Polynomial(ring_, g.terms());
    }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::zero(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::from_basis(GroebnerBasis gb) {
  Ideal out(gb.ring(), gb.elements());
  std::call_once(out.cache_->once, [&] { out.cache_->gb = std::move(gb); });
  return out;
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(ring_, gens_); });
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, gb()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const Polynomial& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::uint32_t Ideal::max_basis_degree() const {
  std::uint32_t d = 0;
  for (const Polynomial& g : gb().elements()) d = std::max(d, g.total_degree());
  return d;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

bool same_ideal(const Ideal& a, const Ideal& b) { return a.gb() == b.gb(); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  Ideal result = Ideal::unit(a.ring());
  for (unsigned k = 0; k < n; ++k) {
    // Multiply the reduced basis of the previous power so generator counts
    // stay near the minimum.
    Ideal reduced = k == 0 ? result : Ideal(a.ring(), result.gb().elements());
    result = ideal_product(reduced, a);
  }
  return result;
}

namespace {

Ideal monomial_intersect(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gb().elements())
    for (const Polynomial& g : b.gb().elements())
      gens.push_back(Polynomial::monomial(a.ring(), f.leading_monomial().lcm(g.leading_monomial())));
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_monomial() && b.is_monomial()) return monomial_intersect(a, b);

  // <t*A, (1-t)*B> intersected with k[x].
  const std::size_t n = ring->nvars();
  if (n + 1 > kMaxVars) throw Error(ErrorKind::ResourceCap, "no room for the tag variable");
  std::vector<std::string> names{"@t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  RingPtr tagged = PolyRing::make(names, MonomialOrder::grevlex(), ring->field().characteristic());
  std::vector<int> up(n + 1, -1);
  for (std::size_t j = 0; j < n; ++j) up[j + 1] = static_cast<int>(j);
  Polynomial t = Polynomial::variable(tagged, 0);
  Polynomial one_minus_t = Polynomial::constant(tagged, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gb().elements()) gens.push_back(t * f.mapped(tagged, up));
  for (const Polynomial& g : b.gb().elements()) gens.push_back(one_minus_t * g.mapped(tagged, up));
  std::vector<std::size_t> keep(n);
  for (std::size_t j = 0; j < n; ++j) keep[j] = j + 1;
  std::vector<Polynomial> kept = eliminate(gens, keep);
  std::vector<int> down(n);
  for (std::size_t j = 0; j < n; ++j) down[j] = static_cast<int>(j + 1);
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const Polynomial& f : kept) out.push_back(f.mapped(ring, down));
  return Ideal(ring, std::move(out));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDivisorGenerator, "division by zero polynomial");
  const RingPtr& ring = f.ring();
  const PrimeField& F = ring->field();
  const Term& lb = b.leading();
  const std::uint32_t inv = F.inv(lb.coeff);
  std::vector<Term> quotient;
  Polynomial r = f;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono))
      throw Error(ErrorKind::NotNested, "exact division failed: " + b.to_string() +
                                            " does not divide " + f.to_string());
    Monomial m = lb.mono.quotient_of(lr.mono);
    std::uint32_t c = F.mul(lr.coeff, inv);
    quotient.push_back({m, c});
    r = r - b.times(m, c);
  }
  return Polynomial(ring, std::move(quotient));
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
  const RingPtr& ring = a.ring();
  if (f.is_zero()) throw Error(ErrorKind::ZeroDivisorGenerator, "colon by the zero element");
  if (a.contains(f)) return Ideal::unit(ring);
  if (a.is_zero()) return Ideal::zero(ring);  // P is a domain
  if (a.is_monomial() && f.is_monomial()) {
    const Monomial& m = f.leading_monomial();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : a.gb().elements()) {
      const Monomial& lg = g.leading_monomial();
      gens.push_back(Polynomial::monomial(ring, lg.gcd(m).quotient_of(lg)));
    }
    return Ideal(ring, std::move(gens));
  }
  Ideal meet = ideal_intersect(a, Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  gens.reserve(meet.gb().size());
  for (const Polynomial& g : meet.gb().elements()) gens.push_back(divide_exact(g, f));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  std::optional<Ideal> result;
  for (const Polynomial& g : b.gens()) {
    Ideal part = ideal_colon(a, g);
    result = result ? ideal_intersect(*result, part) : part;
    if (result->is_zero()) break;
  }
  return result ? *result : Ideal::unit(a.ring());
}

// ---------------------------------------------------------------------------

namespace {

using Exps = std::array<Exponent, kMaxVars>;

Colength count_recursive(std::vector<Exps>& gens, std::size_t k) {
  for (const Exps& g : gens) {
    bool is_one = true;
    for (std::size_t i = 0; i < k; ++i)
      if (g[i]) is_one = false;
    if (is_one) return 0;
  }
  if (k == 0) return 1;
  const std::size_t v = k - 1;
  // Smallest pure power of the last live variable bounds the slices.
  std::optional<Exponent> bound;
  for (const Exps& g : gens) {
    bool pure = true;
    for (std::size_t i = 0; i < v; ++i)
      if (g[i]) pure = false;
    if (pure && (!bound || g[v] < *bound)) bound = g[v];
  }
  if (!bound) return std::nullopt;
  if (k == 1) return *bound;
  std::uint64_t total = 0;
  std::vector<Exps> slice;
  for (Exponent e = 0; e < *bound; ++e) {
    slice.clear();
    for (const Exps& g : gens)
      if (g[v] <= e) slice.push_back(g);
    Colength part = count_recursive(slice, v);
    if (!part) return std::nullopt;
    total += *part;
  }
  return total;
}

}  // namespace

Colength count_standard_monomials(std::span<const Monomial> leading, std::size_t nvars) {
  std::vector<Exps> gens;
  gens.reserve(leading.size());
  for (const Monomial& m : leading) {
    Exps e{};
    for (std::size_t i = 0; i < nvars; ++i) e[i] = m[i];
    gens.push_back(e);
  }
  return count_recursive(gens, nvars);
}

Colength colength(const Ideal& a) {
  std::vector<Monomial> lead = a.gb().leading_monomials();
  return count_standard_monomials(lead, a.ring()->nvars());
}

std::size_t monomial_dimension(const Ideal& m) {
  if (!m.is_monomial()) throw Error(ErrorKind::NotMonomial, "monomial_dimension needs monomial generators");
  const std::size_t n = m.ring()->nvars();
  std::vector<unsigned> supports;
  for (const Polynomial& g : m.gens()) {
    unsigned s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading_monomial()[i]) s |= 1u << i;
    supports.push_back(s);
  }
  std::size_t best = 0;
  for (unsigned subset = 0; subset < (1u << n); ++subset) {
    bool admissible = std::none_of(supports.begin(), supports.end(),
                                   [&](unsigned s) { return (s & ~subset) == 0; });
    if (admissible) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(subset)));
  }
  return best;
}

std::size_t krull_dimension(const Ideal& a) {
  std::vector<Polynomial> lead;
  for (const Monomial& m : a.gb().leading_monomials())
    lead.push_back(Polynomial::monomial(a.ring(), m));
  return monomial_dimension(Ideal(a.ring(), std::move(lead)));
}

}  // namespace chern
