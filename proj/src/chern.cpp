#include "chern/chern.hpp"

#include <algorithm>

namespace chern {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::NotChecked: return "not-checked";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Violation: return "VIOLATION";
  }
  return "?";
}

namespace {

std::string range_text(unsigned from, unsigned to) {
  return "checked for " + std::to_string(from) + " <= n <= " + std::to_string(to);
}

Check check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::Verified : CheckStatus::Failed, std::move(detail)};
}

Check unchecked(std::string name, std::string detail = "hypotheses not met") {
  return {std::move(name), CheckStatus::NotChecked, std::move(detail)};
}

bool all_verified(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Verified; });
}

bool any_failed(const std::vector<Check>& checks) {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Failed; });
}

void settle(TheoremReport& r) {
  if (!all_verified(r.hypotheses))
    r.verdict = any_failed(r.conclusions) ? Verdict::Violation : Verdict::HypothesisNotMet;
  else
    r.verdict = any_failed(r.conclusions) ? Verdict::Violation : Verdict::Verified;
}

std::int64_t sublen(const RingIdeal& a, const RingIdeal& b) {
  return static_cast<std::int64_t>(subquotient_length(a, b));
}

void require_reduction(const Context& c, std::size_t size) {
  if (!c.reduction_at())
    throw Error(ErrorKind::NotAReduction, "the chosen J is not a reduction of the filtration");
  if (c.reduction().size() != size)
    throw Error(ErrorKind::WrongDimension, "J needs " + std::to_string(size) + " generators, got " +
                                               std::to_string(c.reduction().size()));
}

// lambda(((x):y meet I_{n-1}) / x I_{n-2})
std::int64_t dim2_h1(const Context& c, const RingIdeal& x_colon_y, const Polynomial& x, int n) {
  RingIdeal num = ring_intersect(x_colon_y, c.term(n - 1));
  RingIdeal den = ring_scale(x, c.term(n - 2));
  if (!num.contains(den))
    throw Error(ErrorKind::NotNested, "x I_{n-2} is not inside (x:y) meet I_{n-1} at n = " + std::to_string(n));
  return sublen(num, den);
}

std::int64_t dim1_h1(const Context& c, const RingIdeal& ann_x, int n) {
  return sublen(ring_intersect(ann_x, c.term(n - 1)), RingIdeal::zero(c.ring()));
}

// First order (0 or 1) whose leading element passes the regularity check.
std::optional<std::size_t> regular_order(const Context& c) {
  for (std::size_t i = 0; i < 2; ++i)
    if (c.regularity(i).passed) return i;
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

Context::Context(FiltrationPtr f, unsigned max_n, std::optional<std::vector<Polynomial>> reduction,
                 std::uint64_t seed)
    : f_(std::move(f)), fit_(hilbert_fit(f_, max_n)) {
  const unsigned N = fit_.table.max_n;
  const unsigned search = std::min(N, 10u);
  if (reduction) {
    supplied_ = true;
    reduction_ = std::move(*reduction);
    reduction_at_ = is_reduction(*f_, RingIdeal(ring(), reduction_), search);
  } else {
    Reduction r = find_minimal_reduction(f_, seed, search);
    reduction_ = std::move(r.gens);
    reduction_at_ = r.verified_at;
    attempts_ = r.attempts;
  }
  sum_bound_ = std::min(N, std::max(fit_.coeffs.postulation + dim() + 1, dim() + 1));
  check_bound_ = std::min(N, std::max(10u, sum_bound_));
}

std::int64_t Context::h0_length(int n) const {
  auto it = h0_.find(n);
  if (it != h0_.end()) return it->second;
  std::int64_t v = sublen(term(n), ring_product(j_ideal(), term(n - 1)));
  h0_.emplace(n, v);
  return v;
}

const RegularityReport& Context::regularity(std::size_t which) const {
  auto it = regularity_.find(which);
  if (it != regularity_.end()) return it->second;
  RegularityReport r;
  if (which < reduction_.size()) r = graded_regularity_check(*f_, reduction_[which], check_bound_);
  return regularity_.emplace(which, r).first->second;
}

bool Context::reduction_is_regular_sequence() const {
  if (!regular_sequence_) regular_sequence_ = is_regular_sequence(ring(), reduction_);
  return *regular_sequence_;
}

// ---------------------------------------------------------------------------

EulerChar euler_char_K(const Context& c, int n) {
  EulerChar out;
  out.value = delta_pd_minus_h(c.table(), c.coeffs(), n);
  const unsigned d = c.dim();
  if (d > 2) {
    out.unavailable_reason = "homology route implemented for d <= 2 only";
    return out;
  }
  if (!c.reduction_at() || c.reduction().size() != d) {
    out.unavailable_reason = "no verified reduction with d generators";
    return out;
  }
  if (d == 1) {
    const Polynomial& x = c.reduction()[0];
    std::int64_t h0 = c.h0_length(n);
    std::int64_t h1 = dim1_h1(c, annihilator(c.ring(), x), n);
    out.lengths = {h0, h1};
    out.homology = h0 - h1;
    return out;
  }
  auto order = regular_order(c);
  if (!order) {
    out.unavailable_reason = "graded regularity check failed for both generators of J";
    return out;
  }
  const Polynomial& x = c.reduction()[*order];
  const Polynomial& y = c.reduction()[1 - *order];
  std::int64_t h0 = c.h0_length(n);
  std::int64_t h1 = dim2_h1(c, ring_colon(ring_principal(c.ring(), x), y), x, n);
  RingIdeal ann_j = ring_colon(RingIdeal::zero(c.ring()), c.j_ideal());
  std::int64_t h2 = sublen(ring_intersect(ann_j, c.term(n - 2)), RingIdeal::zero(c.ring()));
  out.lengths = {h0, h1, h2};
  out.homology = h0 - h1 + h2;
  return out;
}

RouteResult e1_via_euler_differences(const Context& c) {
  RouteResult r;
  r.name = "euler-difference";
  r.available = true;
  r.terms.columns = {"n", "chi = delta^d[P-H](n)", "homology alternating sum"};
  std::string reason;
  for (unsigned n = 1; n <= c.sum_bound(); ++n) {
    EulerChar e = euler_char_K(c, static_cast<int>(n));
    r.value += e.value;
    r.terms.rows.push_back({static_cast<std::int64_t>(n), e.value, e.homology});
    if (!e.homology) reason = e.unavailable_reason;
  }
  r.notes.push_back("terms vanish for n >= postulation index + d = " +
                    std::to_string(c.coeffs().postulation + c.dim()));
  if (!reason.empty()) r.notes.push_back("homology column unavailable: " + reason);
  return r;
}

RouteResult e1_dim1(const Context& c) {
  if (c.dim() != 1) throw Error(ErrorKind::WrongDimension, "the dimension-1 formula needs dim R = 1");
  require_reduction(c, 1);
  RouteResult r;
  r.name = "dim1";
  r.available = true;
  r.terms.columns = {"n", "lambda(I_n/xI_{n-1})", "lambda((0:x) meet I_{n-1})", "term"};
  const Polynomial& x = c.reduction()[0];
  RingIdeal ann = annihilator(c.ring(), x);
  bool correction_seen = false;
  for (unsigned n = 1; n <= c.sum_bound(); ++n) {
    std::int64_t a = c.h0_length(static_cast<int>(n));
    std::int64_t b = dim1_h1(c, ann, static_cast<int>(n));
    correction_seen = correction_seen || b != 0;
    r.value += a - b;
    r.terms.rows.push_back({static_cast<std::int64_t>(n), a, b, a - b});
  }
  if (is_regular_element(*c.ring(), x))
    r.notes.push_back("x is regular, so (0:x) = 0 and the correction column vanishes (Cohen-Macaulay case)");
  else if (correction_seen)
    r.notes.push_back("x is a zero divisor; the correction column is nonzero");
  return r;
}

RouteResult e1_dim2(const Context& c, std::size_t first) {
  if (c.dim() != 2) throw Error(ErrorKind::WrongDimension, "the dimension-2 formula needs dim R = 2");
  require_reduction(c, 2);
  const RegularityReport& reg = c.regularity(first);
  if (!reg.passed) {
    std::string why = !reg.regular_element ? "x is not regular"
                                           : "(I_n : x) != I_{n-1} at n = " + std::to_string(*reg.failed_at) +
                                                 " (witness " + reg.witness + ")";
    throw Error(ErrorKind::HypothesisUnverified, why);
  }
  const Polynomial& x = c.reduction()[first];
  const Polynomial& y = c.reduction()[1 - first];
  RouteResult r;
  r.name = "dim2";
  r.available = true;
  r.terms.columns = {"n", "lambda(I_n/JI_{n-1})", "lambda(((x):y meet I_{n-1})/xI_{n-2})", "term"};
  RingIdeal xy = ring_colon(ring_principal(c.ring(), x), y);
  for (unsigned n = 1; n <= c.sum_bound(); ++n) {
    std::int64_t a = c.h0_length(static_cast<int>(n));
    std::int64_t b = dim2_h1(c, xy, x, static_cast<int>(n));
    r.value += a - b;
    r.terms.rows.push_back({static_cast<std::int64_t>(n), a, b, a - b});
  }
  r.notes.push_back("x = " + x.to_string() + ", y = " + y.to_string() +
                    "; graded regularity of x " + range_text(2, reg.checked_up_to));
  return r;
}

FundamentalLemmaResult fundamental_lemma(const Context& c) {
  if (c.dim() != 2) throw Error(ErrorKind::WrongDimension, "the fundamental lemma needs dim R = 2");
  require_reduction(c, 2);
  if (!c.reduction_is_regular_sequence())
    throw Error(ErrorKind::NotRegularSequence, "the generators of J do not form a regular sequence");
  FundamentalLemmaResult out;
  RouteResult& r = out.route;
  r.name = "fundamental-lemma";
  r.available = true;
  r.terms.columns = {"n", "lambda(I_n/JI_{n-1})", "lambda((I_{n-1}:J)/I_{n-2})", "term", "delta^2[P-H](n)"};
  const RingIdeal J = c.j_ideal();
  const std::int64_t boundary = c.e(0) - c.table().at(1);
  const std::int64_t chi1 = delta_pd_minus_h(c.table(), c.coeffs(), 1);
  r.terms.rows.push_back({1, std::nullopt, std::nullopt, boundary, chi1});
  out.identities.push_back({"boundary: e0 - lambda(R/I_1)", 1, chi1, boundary});
  r.value = boundary;
  for (unsigned n = 2; n <= c.sum_bound(); ++n) {
    const int m = static_cast<int>(n);
    std::int64_t a = c.h0_length(m);
    std::int64_t b = sublen(ring_colon(c.term(m - 1), J), c.term(m - 2));
    std::int64_t chi = delta_pd_minus_h(c.table(), c.coeffs(), m);
    r.value += a - b;
    r.terms.rows.push_back({m, a, b, a - b, chi});
    out.identities.push_back({"fundamental lemma per-n", m, chi, a - b});
  }
  r.notes.push_back("e1 = e0 - lambda(R/I_1) + sum over n >= 2; tail sum = " + std::to_string(r.value - boundary));
  return out;
}

std::vector<IdentityCheck> modified_koszul_identities(const Context& c, unsigned up_to, TermTable* table) {
  if (c.dim() != 2) throw Error(ErrorKind::WrongDimension, "the modified Koszul check needs dim R = 2");
  require_reduction(c, 2);
  if (!c.reduction_is_regular_sequence())
    throw Error(ErrorKind::NotRegularSequence, "the generators of J do not form a regular sequence");
  const RingIdeal J = c.j_ideal();
  if (table) table->columns = {"n", "delta^2 H(n)", "lambda H_0", "lambda H_1", "lambda H_2"};
  std::vector<IdentityCheck> out;
  for (unsigned n = 1; n <= up_to; ++n) {
    const int m = static_cast<int>(n);
    std::int64_t h0 = static_cast<std::int64_t>(local_length(ring_sum(c.term(m), J)));
    std::int64_t h1 = sublen(ring_intersect(J, c.term(m)), ring_product(J, c.term(m - 1)));
    std::int64_t h2 = sublen(ring_colon(c.term(m - 1), J), c.term(m - 2));
    std::int64_t lhs = delta_h(c.table(), 2, m);
    out.push_back({"modified Koszul alternating sum", m, lhs, h0 - h1 + h2});
    if (table) table->rows.push_back({m, lhs, h0, h1, h2});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void reduction_hypothesis(TheoremReport& r, const Context& c, std::size_t size) {
  bool ok = c.reduction_at().has_value() && c.reduction().size() == size;
  std::string detail = "J = " + c.j_ideal().to_string();
  if (c.reduction_at()) detail += ", J I_n = I_{n+1} from n0 = " + std::to_string(*c.reduction_at()) + " (window 3)";
  r.hypotheses.push_back(check("J is a reduction generated by " + std::to_string(size) + " element(s)", ok, detail));
}

void dim_hypothesis(TheoremReport& r, const Context& c, unsigned d) {
  r.hypotheses.push_back(check("dim R = " + std::to_string(d), c.dim() == d, "dim R = " + std::to_string(c.dim())));
}

void dim1_cm_hypotheses(TheoremReport& r, const Context& c) {
  dim_hypothesis(r, c, 1);
  reduction_hypothesis(r, c, 1);
  bool regular = !c.reduction().empty() && is_regular_element(*c.ring(), c.reduction()[0]);
  r.hypotheses.push_back(check("x is regular (Cohen-Macaulay evidence)", regular));
}

}  // namespace

TheoremReport verify_lipman(const Context& c) {
  TheoremReport r;
  r.id = "lipman";
  dim1_cm_hypotheses(r, c);
  const unsigned B = c.check_bound();
  if (!all_verified(r.hypotheses)) {
    r.conclusions.push_back(unchecked("lambda(I_{n-1}/I_n) <= e0"));
    r.conclusions.push_back(unchecked("I_n = x I_{n-1} iff lambda(I_{n-1}/I_n) = e0"));
    settle(r);
    return r;
  }
  const Polynomial& x = c.reduction()[0];
  const std::int64_t e0 = c.e(0);
  r.table.columns = {"n", "lambda(I_{n-1}/I_n)", "e0", "I_n = xI_{n-1}"};
  std::optional<unsigned> ineq_fail, bicond_fail;
  for (unsigned n = 1; n <= B; ++n) {
    const int m = static_cast<int>(n);
    std::int64_t lam = c.table().at(m) - c.table().at(m - 1);
    bool eq = locally_equal(c.term(m), ring_scale(x, c.term(m - 1)));
    r.table.rows.push_back({m, lam, e0, eq ? 1 : 0});
    if (lam > e0 && !ineq_fail) ineq_fail = n;
    if (eq != (lam == e0) && !bicond_fail) bicond_fail = n;
  }
  r.conclusions.push_back(check("lambda(I_{n-1}/I_n) <= e0", !ineq_fail,
                                ineq_fail ? "fails at n = " + std::to_string(*ineq_fail) : range_text(1, B)));
  r.conclusions.push_back(check("I_n = x I_{n-1} iff lambda(I_{n-1}/I_n) = e0", !bicond_fail,
                                bicond_fail ? "fails at n = " + std::to_string(*bicond_fail)
                                            : range_text(1, B) + ", both directions"));
  settle(r);
  return r;
}

TheoremReport verify_huneke_dim1(const Context& c) {
  TheoremReport r;
  r.id = "huneke-dim1";
  dim1_cm_hypotheses(r, c);
  if (c.dim() == 1) {
    const std::int64_t target = c.e(0) - c.table().at(1);
    r.hypotheses.push_back(check("e1 = e0 - lambda(R/I_1)", c.e(1) == target,
                                 "e1 = " + std::to_string(c.e(1)) + ", e0 - lambda(R/I_1) = " + std::to_string(target)));
  }
  const unsigned B = c.check_bound();
  if (!all_verified(r.hypotheses)) {
    r.conclusions.push_back(unchecked("H(n) = P(n) for n >= 1"));
    r.conclusions.push_back(unchecked("I_n = x I_{n-1} for n >= 2"));
    settle(r);
    return r;
  }
  const Polynomial& x = c.reduction()[0];
  r.table.columns = {"n", "H(n)", "P(n)", "I_n = xI_{n-1}"};
  std::optional<unsigned> hp_fail, eq_fail;
  for (unsigned n = 1; n <= B; ++n) {
    const int m = static_cast<int>(n);
    std::int64_t h = c.table().at(m), p = hilbert_poly_eval(c.coeffs(), m);
    Cell eq;
    if (n >= 2) {
      bool ok = locally_equal(c.term(m), ring_scale(x, c.term(m - 1)));
      eq = ok ? 1 : 0;
      if (!ok && !eq_fail) eq_fail = n;
    }
    r.table.rows.push_back({m, h, p, eq});
    if (h != p && !hp_fail) hp_fail = n;
  }
  r.conclusions.push_back(check("H(n) = P(n) for n >= 1", !hp_fail,
                                hp_fail ? "fails at n = " + std::to_string(*hp_fail) : range_text(1, B)));
  r.conclusions.push_back(check("I_n = x I_{n-1} for n >= 2", !eq_fail,
                                eq_fail ? "fails at n = " + std::to_string(*eq_fail) : range_text(2, B)));
  settle(r);
  return r;
}

TheoremReport verify_sally(const Context& c) {
  TheoremReport r;
  r.id = "sally";
  r.hypotheses.push_back(check("filtration is I-adic", c.filtration()->kind() == FiltrationKind::Adic));
  dim1_cm_hypotheses(r, c);
  if (c.dim() == 1) {
    const std::int64_t target = c.e(0) - c.table().at(1) + 1;
    r.hypotheses.push_back(check("e1 = e0 - lambda(R/I) + 1", c.e(1) == target,
                                 "e1 = " + std::to_string(c.e(1)) + ", e0 - lambda(R/I) + 1 = " + std::to_string(target)));
  }
  const unsigned B = c.check_bound();
  if (!all_verified(r.hypotheses)) {
    r.conclusions.push_back(unchecked("H(n) = P(n) for n > 1"));
    r.conclusions.push_back(unchecked("lambda(I^2/xI) = 1"));
    r.conclusions.push_back(unchecked("I^3 = x I^2"));
    settle(r);
    return r;
  }
  const Polynomial& x = c.reduction()[0];
  r.table.columns = {"n", "H(n)", "P(n)"};
  std::optional<unsigned> hp_fail;
  for (unsigned n = 1; n <= B; ++n) {
    const int m = static_cast<int>(n);
    std::int64_t h = c.table().at(m), p = hilbert_poly_eval(c.coeffs(), m);
    r.table.rows.push_back({m, h, p});
    if (n >= 2 && h != p && !hp_fail) hp_fail = n;
  }
  r.conclusions.push_back(check("H(n) = P(n) for n > 1", !hp_fail,
                                hp_fail ? "fails at n = " + std::to_string(*hp_fail) : range_text(2, B)));
  std::int64_t lam = sublen(c.term(2), ring_scale(x, c.term(1)));
  r.conclusions.push_back(check("lambda(I^2/xI) = 1", lam == 1, "lambda(I^2/xI) = " + std::to_string(lam)));
  bool cube = locally_equal(c.term(3), ring_scale(x, c.term(2)));
  r.conclusions.push_back(check("I^3 = x I^2", cube));
  r.notes.push_back("H(1) = " + std::to_string(c.table().at(1)) + ", P(1) = " +
                    std::to_string(hilbert_poly_eval(c.coeffs(), 1)));
  settle(r);
  return r;
}

TheoremReport verify_rees(const FiltrationPtr& f, const std::vector<Polynomial>& j, unsigned max_n) {
  TheoremReport r;
  r.id = "rees";
  const PresentedRingPtr& R = f->ring();
  RingIdeal J(R, j);
  r.hypotheses.push_back(check("dim R = 1", R->dim() == 1, "dim R = " + std::to_string(R->dim())));
  r.hypotheses.push_back(check("J generated by dim R elements", j.size() == R->dim()));
  bool inside = f->term(1).contains(J);
  r.hypotheses.push_back(check("J inside I_1", inside, "J = " + J.to_string()));
  bool parameter = is_m_primary(J);
  r.hypotheses.push_back(check("J is a parameter ideal (m-primary)", parameter));
  if (!inside || !parameter) {
    r.conclusions.push_back(unchecked("J is a reduction"));
    settle(r);
    return r;
  }
  HilbertFit fF = hilbert_fit(f, max_n);
  HilbertFit fJ = hilbert_fit(Filtration::adic(J), max_n);
  const std::int64_t e0F = fF.coeffs.e[0], e0J = fJ.coeffs.e[0];
  r.hypotheses.push_back(check("e0(J) = e0(I)", e0F == e0J,
                               "e0(J) = " + std::to_string(e0J) + ", e0(I) = " + std::to_string(e0F)));
  auto n0 = is_reduction(*f, J, std::min(10u, max_n));
  // Converse: a reduction always has the same multiplicity.
  r.conclusions.push_back(check("J reduction implies e0(J) = e0(I)", !n0 || e0F == e0J,
                                n0 ? "reduction at n0 = " + std::to_string(*n0) : "J is not a reduction"));
  if (all_verified(r.hypotheses))
    r.conclusions.push_back(check("J is a reduction", n0.has_value(),
                                  n0 ? "J I_n = I_{n+1} from n0 = " + std::to_string(*n0) + " (window 3)"
                                     : "no n0 <= " + std::to_string(std::min(10u, max_n))));
  else
    r.conclusions.push_back(unchecked("J is a reduction"));
  settle(r);
  return r;
}

TheoremReport verify_fundamental_lemma(const Context& c) {
  TheoremReport r;
  r.id = "fundamental-lemma";
  dim_hypothesis(r, c, 2);
  reduction_hypothesis(r, c, 2);
  if (all_verified(r.hypotheses))
    r.hypotheses.push_back(check("J generated by a regular sequence", c.reduction_is_regular_sequence()));
  if (!all_verified(r.hypotheses)) {
    r.conclusions.push_back(unchecked("per-n identity for n >= 2"));
    r.conclusions.push_back(unchecked("e1 assembled from the lemma equals the fitted e1"));
    settle(r);
    return r;
  }
  FundamentalLemmaResult fl = fundamental_lemma(c);
  r.table = fl.route.terms;
  std::optional<std::int64_t> fail;
  for (const IdentityCheck& id : fl.identities)
    if (!id.holds() && !fail) fail = id.n;
  r.conclusions.push_back(check("boundary term equals e0 - lambda(R/I_1) and per-n identity for n >= 2", !fail,
                                fail ? "fails at n = " + std::to_string(*fail) : range_text(1, c.sum_bound())));
  r.conclusions.push_back(check("e1 assembled from the lemma equals the fitted e1", fl.route.value == c.e(1),
                                "lemma " + std::to_string(fl.route.value) + ", fit " + std::to_string(c.e(1))));
  settle(r);
  return r;
}

TheoremReport verify_modified_koszul(const Context& c) {
  TheoremReport r;
  r.id = "modified-koszul";
  dim_hypothesis(r, c, 2);
  reduction_hypothesis(r, c, 2);
  if (all_verified(r.hypotheses))
    r.hypotheses.push_back(check("J generated by a regular sequence", c.reduction_is_regular_sequence()));
  if (!all_verified(r.hypotheses)) {
    r.conclusions.push_back(unchecked("delta^2 H(n) = lambda H_0 - lambda H_1 + lambda H_2"));
    settle(r);
    return r;
  }
  const unsigned B = c.check_bound();
  auto ids = modified_koszul_identities(c, B, &r.table);
  std::optional<std::int64_t> fail;
  for (const IdentityCheck& id : ids)
    if (!id.holds() && !fail) fail = id.n;
  r.conclusions.push_back(check("delta^2 H(n) = lambda H_0 - lambda H_1 + lambda H_2", !fail,
                                fail ? "fails at n = " + std::to_string(*fail) : range_text(1, B)));
  settle(r);
  return r;
}

namespace {

// (x^a, y^b) with a, b > 0 when the minimal generators are exactly two pure powers.
std::optional<std::vector<Polynomial>> pure_power_pair(const RingIdeal& j) {
  const PresentedRing& R = *j.ring();
  if (!R.is_polynomial_ring() || R.ambient()->nvars() != 2 || !j.lift().is_monomial()) return std::nullopt;
  const auto& basis = j.lift().gb().elements();
  if (basis.size() != 2) return std::nullopt;
  std::optional<Polynomial> px, py;
  for (const Polynomial& g : basis) {
    const Monomial& m = g.leading_monomial();
    if (m[1] == 0 && m[0] > 0) px = g;
    if (m[0] == 0 && m[1] > 0) py = g;
  }
  if (!px || !py) return std::nullopt;
  return std::vector<Polynomial>{*px, *py};
}

}  // namespace

TheoremReport verify_closure_dim2(const RingIdeal& j, unsigned max_n) {
  auto pair = pure_power_pair(j);
  if (!pair)
    throw Error(ErrorKind::ClosureUnsupported, "closure-dim2 needs J = (x^a, y^b) in k[x,y], got " + j.to_string());
  TheoremReport r;
  r.id = "closure-dim2";
  Context c(Filtration::newton_closure(j), max_n, *pair, 1);
  reduction_hypothesis(r, c, 2);
  auto order = c.reduction_at() ? regular_order(c) : std::nullopt;
  std::string reg_detail;
  if (order)
    reg_detail = "x = " + c.reduction()[*order].to_string() + "; " + range_text(2, c.regularity(*order).checked_up_to);
  r.hypotheses.push_back(check("x* regular in the associated graded ring (finite range)", order.has_value(),
                               reg_detail));
  if (!all_verified(r.hypotheses)) {
    r.conclusions.push_back(unchecked("closure formula equals the fitted e1"));
    settle(r);
    return r;
  }
  RouteResult route = e1_dim2(c, order.value_or(0));
  r.table = route.terms;
  std::optional<std::int64_t> fail;
  for (const auto& row : route.terms.rows) {
    std::int64_t n = *row[0];
    if (*row[3] != delta_pd_minus_h(c.table(), c.coeffs(), n) && !fail) fail = n;
  }
  r.conclusions.push_back(check("closure formula equals the fitted e1", route.value == c.e(1),
                                "formula " + std::to_string(route.value) + ", fit " + std::to_string(c.e(1))));
  r.conclusions.push_back(check("each term equals delta^2[P-H](n)", !fail,
                                fail ? "fails at n = " + std::to_string(*fail) : range_text(1, c.sum_bound())));
  r.notes.push_back("e0 = " + std::to_string(c.e(0)) + ", lambda(R/J) = " +
                    std::to_string(*length_of_quotient(j)));
  settle(r);
  return r;
}

// ---------------------------------------------------------------------------

ChernReport chern_report(const Context& c) {
  require_reduction(c, c.dim());
  ChernReport out;
  out.fit = c.coeffs();
  out.table = c.table();
  out.reduction = c.reduction();
  out.reduction_at = *c.reduction_at();
  out.reduction_supplied = c.reduction_supplied();
  out.reduction_attempts = c.reduction_attempts();
  out.sum_bound = c.sum_bound();
  out.check_bound = c.check_bound();

  RouteResult t11 = e1_via_euler_differences(c);
  for (const auto& row : t11.terms.rows)
    if (row[2]) out.identities.push_back({"euler characteristic: delta^d[P-H] vs homology", *row[0], *row[1], *row[2]});
  out.routes.push_back(std::move(t11));

  const unsigned d = c.dim();
  if (d == 1) {
    out.routes.push_back(e1_dim1(c));
  } else if (d == 2) {
    const bool closure = c.filtration()->kind() == FiltrationKind::NewtonClosure;
    const std::string name = closure && pure_power_pair(c.filtration()->seed()) ? "closure-dim2" : "dim2";
    RouteResult dim2;
    std::string reasons;
    for (std::size_t first = 0; first < 2 && !dim2.available; ++first) {
      try {
        dim2 = e1_dim2(c, first);
        if (first == 1) dim2.notes.push_back("the first order failed the regularity check; swapped x and y");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisUnverified) throw;
        reasons += std::string(reasons.empty() ? "" : "; ") + (first == 0 ? "(x, y): " : "(y, x): ") + e.what();
      }
    }
    dim2.name = name;
    if (!dim2.available) dim2.unavailable_reason = reasons;
    out.routes.push_back(std::move(dim2));

    if (c.reduction_is_regular_sequence()) {
      if (!closure) {
        FundamentalLemmaResult fl = fundamental_lemma(c);
        out.identities.insert(out.identities.end(), fl.identities.begin(), fl.identities.end());
        out.routes.push_back(std::move(fl.route));
      }
      auto mk = modified_koszul_identities(c, c.sum_bound());
      out.identities.insert(out.identities.end(), mk.begin(), mk.end());
    } else if (!closure) {
      RouteResult fl;
      fl.name = "fundamental-lemma";
      fl.unavailable_reason = "the generators of J do not form a regular sequence";
      out.routes.push_back(std::move(fl));
    }
  } else {
    out.notes.push_back("d >= 3: only the difference route is implemented");
  }

  out.consistent = true;
  for (const RouteResult& r : out.routes)
    if (r.available && r.value != out.fit.e[1]) out.consistent = false;
  for (const IdentityCheck& id : out.identities)
    if (!id.holds()) out.consistent = false;
  return out;
}

LoadedJob load_job(const JobSpec& spec) {
  LoadedJob job;
  job.spec = spec;
  RingPtr P = spec.ring();
  std::vector<Polynomial> q;
  for (const PolyExpr& e : spec.quotient) q.push_back(to_polynomial(e, P));
  job.ring = make_ring(P, std::move(q));
  std::vector<Polynomial> gens;
  for (const PolyExpr& e : spec.ideal) gens.push_back(to_polynomial(e, P));
  job.ideal = RingIdeal(job.ring, std::move(gens));
  if (!is_m_primary(job.ideal))
    throw Error(ErrorKind::NotMPrimary, "the ideal " + job.ideal.to_string() + " is not m-primary");
  job.filtration = spec.filtration == FiltrationKind::Adic ? Filtration::adic(job.ideal)
                                                           : Filtration::newton_closure(job.ideal);
  if (spec.reduction) {
    std::vector<Polynomial> red;
    for (const PolyExpr& e : *spec.reduction) red.push_back(to_polynomial(e, P));
    job.reduction = std::move(red);
  }
  return job;
}

Context make_context(const LoadedJob& job, std::optional<std::uint64_t> seed, std::optional<unsigned> max_n) {
  const unsigned N = max_n.value_or(job.spec.max_n);
  const std::uint64_t s = seed.value_or(job.spec.seed.value_or(1));
  std::optional<std::vector<Polynomial>> red = job.reduction;
  if (!red && job.spec.filtration == FiltrationKind::NewtonClosure) red = pure_power_pair(job.ideal);
  return Context(job.filtration, N, red, s);
}

ChernReport chern_report(const JobSpec& job) { return chern_report(make_context(load_job(job))); }

TheoremReport verify_by_id(const std::string& id, const LoadedJob& job, std::optional<std::uint64_t> seed,
                           std::optional<unsigned> max_n) {
  const unsigned N = max_n.value_or(job.spec.max_n);
  if (id == "rees") {
    if (!job.reduction) throw Error(ErrorKind::Usage, "rees needs a candidate J in the job's 'reduction'");
    return verify_rees(job.filtration, *job.reduction, N);
  }
  if (id == "closure-dim2") return verify_closure_dim2(job.ideal, N);
  if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
    throw Error(ErrorKind::Usage, "unknown theorem id '" + id + "'");
  Context c = make_context(job, seed, max_n);
  if (id == "lipman") return verify_lipman(c);
  if (id == "huneke-dim1") return verify_huneke_dim1(c);
  if (id == "sally") return verify_sally(c);
  if (id == "fundamental-lemma") return verify_fundamental_lemma(c);
  return verify_modified_koszul(c);
}

}  // namespace chern
