#pragma once

// Test-only reference computations. None of these call into the engine; they
// count lattice points, semigroup elements and finite differences directly.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Exp2 = std::pair<int, int>;

// Staircase count for a monomial ideal in 2 variables by scanning the box.
inline long long colength2(const std::vector<Exp2>& gens) {
  int ax = -1, by = -1;
  for (auto [a, b] : gens) {
    if (b == 0 && (ax < 0 || a < ax)) ax = a;
    if (a == 0 && (by < 0 || b < by)) by = b;
  }
  if (ax < 0 || by < 0) return -1;  // infinite
  long long count = 0;
  for (int a = 0; a < ax; ++a)
    for (int b = 0; b < by; ++b) {
      bool inside = false;
      for (auto [ga, gb] : gens)
        if (ga <= a && gb <= b) inside = true;
      if (!inside) ++count;
    }
  return count;
}

// Componentwise-minimal elements.
inline std::vector<Exp2> minimalize(std::vector<Exp2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Exp2> out;
  for (auto p : pts) {
    bool dominated = false;
    for (auto q : pts)
      if (q != p && q.first <= p.first && q.second <= p.second) dominated = true;
    if (!dominated) out.push_back(p);
  }
  return out;
}

// Exponents of I^n by brute-force sumset.
inline std::vector<Exp2> power2(const std::vector<Exp2>& gens, int n) {
  std::vector<Exp2> cur{{0, 0}};
  for (int k = 0; k < n; ++k) {
    std::vector<Exp2> next;
    for (auto p : cur)
      for (auto g : gens) next.push_back({p.first + g.first, p.second + g.second});
    cur = minimalize(std::move(next));
  }
  return cur;
}

// e lies in n*NP(I) iff e dominates n*(t*g1 + (1-t)*g2) for some pair of
// generators and t in [0,1]. Exact rational interval test.
inline bool in_scaled_newton2(const std::vector<Exp2>& gens, int n, Exp2 e) {
  for (auto g1 : gens)
    for (auto g2 : gens) {
      // constraint: n*(g2c + t*(g1c - g2c)) <= ec for c = x, y
      // t in [lo, hi], kept as fractions num/den with den > 0.
      long long lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 1;
      bool ok = true;
      auto apply = [&](long long coef, long long rhs) {
        // coef * t <= rhs
        if (coef == 0) {
          if (rhs < 0) ok = false;
        } else if (coef > 0) {
          // t <= rhs/coef
          if (rhs * hi_d < hi_n * coef) hi_n = rhs, hi_d = coef;
        } else {
          // t >= rhs/coef = (-rhs)/(-coef)
          if ((-rhs) * lo_d > lo_n * (-coef)) lo_n = -rhs, lo_d = -coef;
        }
      };
      apply(static_cast<long long>(n) * (g1.first - g2.first), e.first - static_cast<long long>(n) * g2.first);
      apply(static_cast<long long>(n) * (g1.second - g2.second), e.second - static_cast<long long>(n) * g2.second);
      if (ok && lo_n * hi_d <= hi_n * lo_d) return true;
    }
  return false;
}

inline long long closure_colength2(const std::vector<Exp2>& gens, int n) {
  int ax = 0, by = 0;
  for (auto [a, b] : gens) {
    if (b == 0) ax = std::max(ax, a);
    if (a == 0) by = std::max(by, b);
  }
  long long count = 0;
  for (int a = 0; a <= n * ax; ++a)
    for (int b = 0; b <= n * by; ++b)
      if (!in_scaled_newton2(gens, n, {a, b})) ++count;
  return count;
}

inline std::vector<Exp2> closure_generators2(const std::vector<Exp2>& gens, int n) {
  int ax = 0, by = 0;
  for (auto [a, b] : gens) {
    if (b == 0) ax = std::max(ax, a);
    if (a == 0) by = std::max(by, b);
  }
  std::vector<Exp2> pts;
  for (int a = 0; a <= n * ax; ++a)
    for (int b = 0; b <= n * by; ++b)
      if (in_scaled_newton2(gens, n, {a, b})) pts.push_back({a, b});
  return minimalize(std::move(pts));
}

// Numerical semigroup generated by `gens` (gcd 1). ord(s) is the largest
// number of generators summing to s; m^n of k[[t^g]] is spanned by t^s with
// ord(s) >= n, so lambda(R/m^n) = #{s in S : ord(s) < n}.
class Semigroup {
 public:
  explicit Semigroup(std::vector<int> gens) : gens_(std::move(gens)) {
    int g = 0;
    for (int x : gens_) g = std::gcd(g, x);
    if (g != 1) throw std::invalid_argument("semigroup generators need gcd 1");
    gmin_ = *std::min_element(gens_.begin(), gens_.end());
    extend(64);
    // conductor: first index after which gmin consecutive members appear
    int run = 0;
    for (int s = 0;; ++s) {
      extend(s + 1);
      run = ord_[s] >= 0 ? run + 1 : 0;
      if (run == gmin_) {
        conductor_ = s - gmin_ + 1;
        break;
      }
    }
  }

  int conductor() const { return conductor_; }
  bool contains(int s) {
    extend(s + 1);
    return s >= 0 && ord_[s] >= 0;
  }
  int ord(int s) {
    extend(s + 1);
    return ord_[s];
  }

  // lambda(R / m^n)
  long long length_mod_power(int n) {
    if (n <= 0) return 0;
    const int bound = conductor_ + n * gmin_;
    extend(bound + 1);
    long long count = 0;
    for (int s = 0; s <= bound; ++s)
      if (ord_[s] >= 0 && ord_[s] < n) ++count;
    return count;
  }

 private:
  void extend(int size) {
    while (static_cast<int>(ord_.size()) < size) {
      const int s = static_cast<int>(ord_.size());
      int best = s == 0 ? 0 : -1;
      for (int g : gens_)
        if (s - g >= 0 && ord_[s - g] >= 0) best = std::max(best, ord_[s - g] + 1);
      ord_.push_back(best);
    }
  }

  std::vector<int> gens_;
  int gmin_ = 1;
  int conductor_ = 0;
  std::vector<int> ord_;
};

// Hilbert coefficients from a table H(0..N) whose last entries follow a
// degree-d polynomial: extend P backwards with the constant d-th difference,
// then e_i = (-1)^i * (backward difference^(d-i) P)(0).
inline std::vector<long long> coefficients_by_differences(const std::vector<long long>& H, int d) {
  const int N = static_cast<int>(H.size()) - 1;
  if (N < d + 1) throw std::invalid_argument("table too short");
  // P values at N-d..N, shifted back to 0..d by Newton extrapolation.
  std::vector<long long> window(H.end() - (d + 1), H.end());
  const int start = N - d;
  // Build difference table of the window and walk backwards to n = -d.
  std::vector<std::vector<long long>> diff{window};
  for (int k = 1; k <= d; ++k) {
    std::vector<long long> row;
    for (std::size_t i = 1; i < diff.back().size(); ++i) row.push_back(diff.back()[i] - diff.back()[i - 1]);
    diff.push_back(row);
  }
  // leading column: values of Delta^k P at n = start + k (forward form)
  std::vector<long long> col(d + 1);
  for (int k = 0; k <= d; ++k) col[k] = diff[k][0];
  // P(start - j) for j = 1.. using reverse Newton steps
  std::vector<long long> P_back;  // P(start), P(start-1), ...
  P_back.push_back(col[0]);
  std::vector<long long> c = col;
  for (int step = 0; step < start + d; ++step) {
    // shift the leading column one step left: c[k] <- c[k] - c[k+1]
    for (int k = d - 1; k >= 0; --k) c[k] = c[k] - c[k + 1];
    P_back.push_back(c[0]);
  }
  auto P = [&](int n) { return P_back[static_cast<std::size_t>(start - n)]; };
  // backward differences at 0
  std::vector<long long> vals;
  for (int n = -d; n <= 0; ++n) vals.push_back(P(n));
  std::vector<long long> e(d + 1);
  for (int k = 0; k <= d; ++k) {
    // vals holds Delta^k P on [-d+k, 0]; last entry is Delta^k P(0)
    long long v = vals.back();
    const int i = d - k;
    e[i] = (i % 2 == 0) ? v : -v;
    std::vector<long long> next;
    for (std::size_t j = 1; j < vals.size(); ++j) next.push_back(vals[j] - vals[j - 1]);
    vals = next;
  }
  return e;
}

// Generalized binomial C(x, k) for integer x and k >= 0.
inline long long binom(long long x, int k) {
  if (k < 0) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

inline long long hilbert_poly(const std::vector<long long>& e, long long n) {
  const int d = static_cast<int>(e.size()) - 1;
  long long v = 0;
  for (int i = 0; i <= d; ++i) v += ((i % 2) ? -1 : 1) * e[i] * binom(n + d - 1 - i, d - i);
  return v;
}

}  // namespace oracle
