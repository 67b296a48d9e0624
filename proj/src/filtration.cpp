#include "chern/filtration.hpp"

#include <algorithm>
#include <numeric>

namespace chern {

namespace {

using Exp2 = std::pair<int, int>;

struct Edge {
  long long wa, wb, c;  // wa*a + wb*b >= c on the polygon
};

std::vector<Exp2> minimal_points(std::vector<Exp2> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<Exp2> out;
  for (const Exp2& p : pts) {
    // sorted by a: p is minimal iff its b is below every earlier b
    if (out.empty() || p.second < out.back().second) {
      if (!out.empty() && out.back().first == p.first) out.pop_back();
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Edge> lower_hull_edges(const std::vector<Exp2>& gens) {
  std::vector<Exp2> pts = minimal_points(gens);
  if (pts.empty() || pts.front().first != 0 || pts.back().second != 0)
    throw Error(ErrorKind::NotMPrimary, "integral closure needs pure powers of both variables");
  std::vector<Exp2> hull;
  auto cross = [](Exp2 o, Exp2 a, Exp2 b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
  };
  for (const Exp2& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    long long wa = hull[i].second - hull[i + 1].second;
    long long wb = hull[i + 1].first - hull[i].first;
    long long g = std::gcd(wa, wb);
    wa /= g;
    wb /= g;
    edges.push_back({wa, wb, wa * hull[i].first + wb * hull[i].second});
  }
  return edges;
}

long long ceil_div(long long num, long long den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

}  // namespace

std::vector<Exp2> newton_closure_exponents(const std::vector<Exp2>& gens, unsigned n) {
  if (n == 0) return {{0, 0}};
  std::vector<Edge> edges = lower_hull_edges(gens);
  std::vector<Exp2> pts = minimal_points(gens);
  const long long A = static_cast<long long>(n) * pts.back().first;
  auto bmin = [&](long long a) {
    long long b = 0;
    for (const Edge& e : edges) b = std::max(b, ceil_div(static_cast<long long>(n) * e.c - e.wa * a, e.wb));
    return b;
  };
  std::vector<Exp2> out;
  long long prev = -1;
  for (long long a = 0; a <= A; ++a) {
    long long b = bmin(a);
    if (prev < 0 || b < prev) {
      if (a > 65535 || b > 65535) throw Error(ErrorKind::ResourceCap, "closure exponent overflow");
      out.push_back({static_cast<int>(a), static_cast<int>(b)});
      prev = b;
    }
    if (b == 0) break;
  }
  return out;
}

Ideal newton_closure(const Ideal& seed, unsigned n) {
  const RingPtr& ring = seed.ring();
  if (ring->nvars() != 2) throw Error(ErrorKind::ClosureUnsupported, "integral closure needs exactly 2 variables");
  if (!seed.is_monomial())
    throw Error(ErrorKind::ClosureUnsupported, "integral closure needs monomial generators");
  std::vector<Exp2> gens;
  for (const Polynomial& g : seed.gens()) gens.push_back({g.leading_monomial()[0], g.leading_monomial()[1]});
  std::vector<Polynomial> out;
  for (auto [a, b] : newton_closure_exponents(gens, n))
    out.push_back(Polynomial::monomial(ring, Monomial(std::vector<int>{a, b})));
  return Ideal(ring, std::move(out));
}

// ---------------------------------------------------------------------------

Filtration::Filtration(FiltrationKind kind, RingIdeal seed) : kind_(kind), seed_(std::move(seed)) {}

FiltrationPtr Filtration::adic(RingIdeal seed) {
  return FiltrationPtr(new Filtration(FiltrationKind::Adic, std::move(seed)));
}

FiltrationPtr Filtration::newton_closure(RingIdeal seed) {
  const PresentedRing& R = *seed.ring();
  if (!R.is_polynomial_ring())
    throw Error(ErrorKind::ClosureUnsupported, "integral closure needs an empty quotient");
  if (R.ambient()->nvars() != 2)
    throw Error(ErrorKind::ClosureUnsupported, "integral closure needs exactly 2 variables");
  for (const Polynomial& g : seed.gens())
    if (!g.is_monomial()) throw Error(ErrorKind::ClosureUnsupported, "integral closure needs monomial generators");
  if (!is_m_primary(seed)) throw Error(ErrorKind::NotMPrimary, "seed ideal " + seed.to_string() + " is not m-primary");
  return FiltrationPtr(new Filtration(FiltrationKind::NewtonClosure, std::move(seed)));
}

RingIdeal Filtration::term(int n) const {
  if (n <= 0) return RingIdeal::unit(ring());
  std::lock_guard lock(mutex_);
  auto hit = memo_.find(n);
  if (hit != memo_.end()) return hit->second;
  if (kind_ == FiltrationKind::NewtonClosure) {
    Ideal c = chern::newton_closure(seed_.lift(), static_cast<unsigned>(n));
    return memo_.emplace(n, RingIdeal(ring(), c.gens())).first->second;
  }
  // I^n from the largest cached power below n.
  int k = n - 1;
  while (k > 0 && !memo_.contains(k)) --k;
  RingIdeal current = k == 0 ? RingIdeal::unit(ring()) : memo_.at(k);
  const Ideal& q = ring()->defining_ideal();
  for (int j = k + 1; j <= n; ++j) {
    std::vector<Polynomial> base;
    if (j == 1) {
      base.push_back(Polynomial::constant(ring()->ambient(), 1));
    } else {
      for (const Polynomial& g : current.lift().gb().elements())
        if (!q.contains(g)) base.push_back(g);
    }
    std::vector<Polynomial> gens;
    for (const Polynomial& f : base)
      for (const Polynomial& g : seed_.gens()) gens.push_back(f * g);
    current = RingIdeal(ring(), std::move(gens));
    memo_.emplace(j, current);
  }
  return current;
}

unsigned admissibility_check(const Filtration& f, unsigned max_n) {
  FiltrationPtr powers = Filtration::adic(f.seed());
  unsigned k = 0;
  for (unsigned n = 1; n <= max_n; ++n) {
    RingIdeal in = f.term(static_cast<int>(n));
    if (!in.contains(powers->term(static_cast<int>(n))))
      throw Error(ErrorKind::NotAdmissibleUpTo, "I^" + std::to_string(n) + " is not inside I_" + std::to_string(n));
    unsigned kn = 0;
    while (kn < n && !powers->term(static_cast<int>(n - kn)).contains(in)) ++kn;
    k = std::max(k, kn);
  }
  return k;
}

RegularityReport graded_regularity_check(const Filtration& f, const Polynomial& x, unsigned max_n) {
  RegularityReport report;
  report.regular_element = is_regular_element(*f.ring(), x);
  report.passed = report.regular_element;
  if (!report.regular_element) {
    report.witness = "x is a zero divisor";
    return report;
  }
  for (unsigned n = 2; n <= max_n; ++n) {
    RingIdeal colon = ring_colon(f.term(static_cast<int>(n)), x);
    RingIdeal prev = f.term(static_cast<int>(n) - 1);
    report.checked_up_to = n;
    if (!same_ideal(colon, prev)) {
      report.passed = false;
      report.failed_at = n;
      for (const Polynomial& g : colon.gens())
        if (!prev.contains(g)) {
          report.witness = g.to_string();
          break;
        }
      return report;
    }
  }
  return report;
}

}  // namespace chern
