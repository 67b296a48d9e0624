#include "chern/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace chern {

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const Polynomial& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

// out = a[from..] - c * m * b[skip..]
void sub_shifted(const PolyRing& R, const std::vector<Term>& a, std::size_t from,
                 const std::vector<Term>& b, std::size_t skip, const Monomial& m,
                 std::uint32_t c, std::vector<Term>& out) {
  const PrimeField& F = R.field();
  const std::uint32_t nc = F.neg(c);
  out.clear();
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = skip;
  Monomial bj;
  bool have_bj = false;
  while (i < a.size() && j < b.size()) {
    if (!have_bj) {
      bj = b[j].mono * m;
      have_bj = true;
    }
    int cmp = R.compare(a[i].mono, bj);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bj, F.mul(nc, b[j].coeff)});
      ++j;
      have_bj = false;
    } else {
      std::uint32_t s = F.add(a[i].coeff, F.mul(nc, b[j].coeff));
      if (s != 0) out.push_back({bj, s});
      ++i;
      ++j;
      have_bj = false;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, F.mul(nc, b[j].coeff)});
}

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> reducers) {
  for (const Polynomial& g : reducers)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

// Same as find_reducer but over the active subset of a working basis.
const Polynomial* find_active_reducer(const Monomial& m, const std::vector<Polynomial>& basis,
                                      const std::vector<char>& active) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (active[k] && basis[k].leading_monomial().divides(m)) return &basis[k];
  return nullptr;
}

template <typename FindReducer>
Polynomial reduce_full(const Polynomial& f, FindReducer find) {
  const RingPtr& ring = f.ring();
  const PolyRing& R = *ring;
  const PrimeField& F = R.field();
  std::vector<Term> work = f.terms();
  std::vector<Term> scratch;
  std::vector<Term> remainder;
  std::size_t start = 0;
  while (start < work.size()) {
    const Term lt = work[start];
    const Polynomial* g = find(lt.mono);
    if (!g) {
      remainder.push_back(lt);
      ++start;
      continue;
    }
    const Term& glt = g->leading();
    std::uint32_t c = F.mul(lt.coeff, F.inv(glt.coeff));
    Monomial shift = glt.mono.quotient_of(lt.mono);
    sub_shifted(R, work, start + 1, g->terms(), 1, shift, c, scratch);
    std::swap(work, scratch);
    start = 0;
  }
  return Polynomial(ring, std::move(remainder));
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers) {
  if (f.is_zero()) return f;
  return reduce_full(f, [&](const Monomial& m) { return find_reducer(m, reducers); });
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, std::span<const Polynomial>(G.elements()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& a = f.leading();
  const Term& b = g.leading();
  Monomial l = a.mono.lcm(b.mono);
  const PrimeField& F = f.ring()->field();
  Polynomial left = f.times(a.mono.quotient_of(l), F.inv(a.coeff));
  Polynomial right = g.times(b.mono.quotient_of(l), F.inv(b.coeff));
  return left - right;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Minimal monic monomial generators, sorted ascending.
std::vector<Polynomial> minimal_monomial_basis(const RingPtr& ring,
                                               std::span<const Polynomial> gens) {
  std::vector<Monomial> monos;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) monos.push_back(g.leading_monomial());
  const PolyRing& R = *ring;
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return R.compare(a, b) < 0;
            });
  std::vector<Monomial> kept;
  for (const Monomial& m : monos) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Monomial& a, const Monomial& b) { return R.compare(a, b) < 0; });
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const Monomial& m : kept) out.push_back(Polynomial::monomial(ring, m, 1));
  return out;
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& options)
      : ring_(std::move(ring)), options_(options) {}

  void insert(Polynomial h) {
    if (h.total_degree() > options_.max_degree)
      throw Error(ErrorKind::ResourceCap,
                  "degree bound " + std::to_string(options_.max_degree) + " exceeded");
    const std::size_t hi = basis_.size();
    const Monomial lh = h.leading_monomial();
    const bool h_mono = h.is_monomial();
    basis_.push_back(std::move(h));
    active_.push_back(1);

    // Gebauer-Moeller update.
    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      candidates.push_back({k, hi, basis_[k].leading_monomial().lcm(lh)});
    }
    // A candidate survives when its leading monomials are coprime or when no
    // unprocessed candidate (later index) or surviving one (earlier index)
    // has an lcm dividing its lcm.
    std::vector<char> keep(candidates.size(), 0);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (basis_[candidates[a].i].leading_monomial().coprime(lh)) {
        keep[a] = 1;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a || (b < a && !keep[b])) continue;
        dominated = candidates[b].lcm.divides(candidates[a].lcm);
      }
      keep[a] = dominated ? 0 : 1;
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial li = basis_[p.i].leading_monomial().lcm(lh);
      Monomial lj = basis_[p.j].leading_monomial().lcm(lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      const Pair& p = candidates[a];
      if (basis_[p.i].leading_monomial().coprime(lh)) continue;  // first criterion
      if (h_mono && basis_[p.i].is_monomial()) continue;         // S-polynomial is zero
      pairs_.push_back(p);
    }
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(basis_[k].leading_monomial())) active_[k] = 0;
  }

  Polynomial reduce(const Polynomial& f) const {
    if (f.is_zero()) return f;
    return reduce_full(f, [&](const Monomial& m) { return find_active_reducer(m, basis_, active_); });
  }

  void run() {
    const PolyRing& R = *ring_;
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > options_.max_pairs)
        throw Error(ErrorKind::ResourceCap,
                    "pair budget " + std::to_string(options_.max_pairs) + " exhausted");
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        if (int c = R.compare(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      Polynomial s = s_polynomial(basis_[p.i], basis_[p.j]);
      Polynomial r = reduce(s);
      if (!r.is_zero()) insert(r.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    const PolyRing& R = *ring_;
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      const Monomial& lk = basis_[k].leading_monomial();
      bool redundant = false;
      for (const Polynomial& m : minimal)
        if (m.leading_monomial().divides(lk)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      std::erase_if(minimal, [&](const Polynomial& m) { return lk.divides(m.leading_monomial()); });
      minimal.push_back(basis_[k]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      // Leading terms are pairwise non-divisible, so only tails change.
      const Polynomial& g = minimal[k];
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(minimal[l]);
      Polynomial tail(ring_, std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
      Polynomial reduced_tail = normal_form(tail, others);
      std::vector<Term> terms;
      terms.reserve(reduced_tail.size() + 1);
      terms.push_back(g.leading());
      terms.insert(terms.end(), reduced_tail.terms().begin(), reduced_tail.terms().end());
      out.emplace_back(ring_, std::move(terms));
    }
    return out;
  }

 private:
  RingPtr ring_;
  GroebnerOptions options_;
  std::vector<Polynomial> basis_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const GroebnerOptions& options) {
  for (const Polynomial& g : gens)
    if (g.ring() && g.ring() != ring && !(*g.ring() == *ring))
      throw Error(ErrorKind::ArityMismatch, "generator does not live in the basis ring");

  std::vector<Polynomial> input;
  input.reserve(gens.size());
  bool all_monomial = true;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial h = g.ring() == ring ? g : Polynomial(ring, g.terms());
    if (h.leading_monomial().is_one())
      return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    all_monomial = all_monomial && h.is_monomial();
    input.push_back(h.monic());
  }
  if (all_monomial) return GroebnerBasis(ring, minimal_monomial_basis(ring, input));

  const PolyRing& R = *ring;
  std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    const Monomial& la = a.leading_monomial();
    const Monomial& lb = b.leading_monomial();
    if (la.degree() != lb.degree()) return la.degree() < lb.degree();
    return R.compare(la, lb) < 0;
  });

  Buchberger engine(ring, options);
  for (const Polynomial& g : input) {
    Polynomial r = engine.reduce(g);
    if (r.is_zero()) continue;
    if (r.leading_monomial().is_one()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    engine.insert(r.monic());
  }
  engine.run();
  return GroebnerBasis(ring, engine.reduced_basis());
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens,
                                  std::span<const std::size_t> keep,
                                  const GroebnerOptions& options) {
  if (gens.empty()) return {};
  const RingPtr& source = gens.front().ring();
  const std::size_t n = source->nvars();
  std::vector<char> kept(n, 0);
  for (std::size_t k : keep) {
    if (k >= n) throw Error(ErrorKind::ArityMismatch, "keep variable out of range");
    kept[k] = 1;
  }
  // Eliminated variables first, then kept ones.
  std::vector<int> to_source;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v)
    if (!kept[v]) {
      to_source.push_back(static_cast<int>(v));
      names.push_back(source->names()[v]);
    }
  const std::size_t block = to_source.size();
  for (std::size_t v = 0; v < n; ++v)
    if (kept[v]) {
      to_source.push_back(static_cast<int>(v));
      names.push_back(source->names()[v]);
    }
  if (block == 0) {
    GroebnerBasis G = buchberger(source, gens, options);
    return G.elements();
  }
  RingPtr elim = PolyRing::make(names, MonomialOrder::elimination(block),
                                source->field().characteristic());
  std::vector<Polynomial> mapped;
  mapped.reserve(gens.size());
  for (const Polynomial& g : gens) mapped.push_back(g.mapped(elim, to_source));
  GroebnerBasis G = buchberger(elim, mapped, options);

  std::vector<int> back(n, -1);
  for (std::size_t j = 0; j < to_source.size(); ++j)
    back[static_cast<std::size_t>(to_source[j])] = static_cast<int>(j);
  std::vector<Polynomial> out;
  for (const Polynomial& g : G.elements()) {
    const Monomial& lm = g.leading_monomial();
    bool free_of_block = true;
    for (std::size_t v = 0; v < block; ++v)
      if (lm[v] != 0) free_of_block = false;
    if (free_of_block) out.push_back(g.mapped(source, back));
  }
  return out;
}

}  // namespace chern
