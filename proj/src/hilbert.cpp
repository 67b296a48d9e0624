#include "chern/hilbert.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace chern {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

cpp_rational binomial_q(std::int64_t x, unsigned k) {
  cpp_rational r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * cpp_rational(x - static_cast<std::int64_t>(i)) / cpp_rational(i + 1);
  return r;
}

std::int64_t to_int64(const cpp_int& v, const char* what) {
  if (v > cpp_int(INT64_MAX) || v < cpp_int(INT64_MIN)) throw Error(ErrorKind::ResourceCap, std::string(what) + " overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t binomial(std::int64_t x, unsigned k) {
  cpp_rational r = binomial_q(x, k);
  return to_int64(boost::multiprecision::numerator(r), "binomial");
}

std::int64_t HilbertTable::at(std::int64_t n) const {
  if (n <= 0) return 0;
  if (n > static_cast<std::int64_t>(max_n))
    throw Error(ErrorKind::RangeExceeded, "H(" + std::to_string(n) + ") beyond table bound " + std::to_string(max_n));
  return values[static_cast<std::size_t>(n)];
}

HilbertTable hilbert_table(const FiltrationPtr& f, unsigned max_n) {
  HilbertTable t;
  t.filtration = f;
  t.dim = static_cast<unsigned>(f->ring()->dim());
  t.max_n = max_n;
  t.values.assign(max_n + 1, 0);
  if (!is_m_primary(f->term(1)))
    throw Error(ErrorKind::NotMPrimary, "I_1 = " + f->term(1).to_string() + " is not m-primary");
  for (unsigned n = 1; n <= max_n; ++n) {
    Colength len = length_of_quotient(f->term(static_cast<int>(n)));
    if (!len) throw Error(ErrorKind::NotMPrimary, "R/I_" + std::to_string(n) + " has infinite length");
    t.values[n] = static_cast<std::int64_t>(*len);
  }
  return t;
}

HilbertCoefficients fit_coefficients(const HilbertTable& table) {
  const unsigned d = table.dim;
  const unsigned N = table.max_n;
  if (N < d + 4) throw Error(ErrorKind::NoStabilization, "table needs at least d + 4 entries past 0");
  // Basis functions b_i(n) = (-1)^i C(n+d-1-i, d-i); unknowns e_0..e_d.
  const unsigned m = d + 1;
  std::vector<std::vector<cpp_rational>> a(m, std::vector<cpp_rational>(m + 1));
  for (unsigned r = 0; r < m; ++r) {
    const std::int64_t n = static_cast<std::int64_t>(N - d + r);
    for (unsigned i = 0; i < m; ++i) {
      cpp_rational b = binomial_q(n + d - 1 - i, d - i);
      a[r][i] = (i % 2) ? -b : b;
    }
    a[r][m] = table.values[static_cast<std::size_t>(n)];
  }
  for (unsigned c = 0; c < m; ++c) {
    unsigned p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) throw Error(ErrorKind::NoStabilization, "singular fitting system");
    std::swap(a[p], a[c]);
    for (unsigned r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      cpp_rational k = a[r][c] / a[c][c];
      for (unsigned j = c; j <= m; ++j) a[r][j] -= k * a[c][j];
    }
  }
  HilbertCoefficients out;
  out.dim = d;
  for (unsigned i = 0; i < m; ++i) {
    cpp_rational v = a[i][m] / a[i][i];
    if (boost::multiprecision::denominator(v) != 1)
      throw Error(ErrorKind::NoStabilization, "non-integral Hilbert coefficient; table not yet polynomial");
    out.e.push_back(to_int64(boost::multiprecision::numerator(v), "Hilbert coefficient"));
  }
  // Guard window: three points before the fitting window must also agree.
  for (unsigned g = 1; g <= 3; ++g) {
    const std::int64_t n = static_cast<std::int64_t>(N - d) - g;
    if (hilbert_poly_eval(out, n) != table.at(n))
      throw Error(ErrorKind::NoStabilization, "H and the fitted polynomial disagree at n = " + std::to_string(n) +
                                                  "; raise max_n");
  }
  std::int64_t n = static_cast<std::int64_t>(N - d) - 4;
  while (n >= 0 && hilbert_poly_eval(out, n) == table.at(n)) --n;
  out.postulation = static_cast<unsigned>(n + 1);
  if (out.e.empty() || out.e[0] < 1) throw Error(ErrorKind::NoStabilization, "fitted multiplicity is not positive");
  return out;
}

std::int64_t hilbert_poly_eval(const HilbertCoefficients& c, std::int64_t n) {
  const unsigned d = c.dim;
  cpp_rational v = 0;
  for (unsigned i = 0; i <= d; ++i) {
    cpp_rational term = cpp_rational(c.e[i]) * binomial_q(n + d - 1 - i, d - i);
    v += (i % 2) ? -term : term;
  }
  return to_int64(boost::multiprecision::numerator(v), "Hilbert polynomial value");
}

std::int64_t delta_h(const HilbertTable& table, unsigned k, std::int64_t n) {
  std::int64_t v = 0;
  for (unsigned j = 0; j <= k; ++j) {
    std::int64_t term = binomial(k, j) * table.at(n - j);
    v += (j % 2) ? -term : term;
  }
  return v;
}

std::int64_t delta_pd_minus_h(const HilbertTable& table, const HilbertCoefficients& c, std::int64_t n) {
  if (n < 1 || n > static_cast<std::int64_t>(table.max_n))
    throw Error(ErrorKind::RangeExceeded, "n = " + std::to_string(n) + " outside [1, " +
                                              std::to_string(table.max_n) + "]");
  const unsigned d = table.dim;
  std::int64_t v = 0;
  for (unsigned j = 0; j <= d; ++j) {
    const std::int64_t m = n - j;
    std::int64_t term = binomial(d, j) * (hilbert_poly_eval(c, m) - table.at(m));
    v += (j % 2) ? -term : term;
  }
  return v;
}

HilbertFit hilbert_fit(const FiltrationPtr& f, unsigned max_n) {
  HilbertTable t = hilbert_table(f, max_n);
  try {
    HilbertCoefficients c = fit_coefficients(t);
    return {std::move(t), std::move(c)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoStabilization) throw;
  }
  HilbertTable t2 = hilbert_table(f, 2 * max_n);
  HilbertCoefficients c2 = fit_coefficients(t2);
  return {std::move(t2), std::move(c2)};
}

}  // namespace chern
