#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chern/expr_parse.hpp"
#include "chern/hilbert.hpp"
#include "chern/reduction.hpp"

namespace chern {

using Cell = std::optional<std::int64_t>;

struct TermTable {
  std::vector<std::string> columns;  // first column is n
  std::vector<std::vector<Cell>> rows;
};

struct RouteResult {
  std::string name;
  bool available = false;
  std::int64_t value = 0;
  TermTable terms;
  std::vector<std::string> notes;
  std::string unavailable_reason;
};

struct IdentityCheck {
  std::string name;
  std::int64_t n = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

enum class CheckStatus { Verified, Failed, NotChecked };
enum class Verdict { Verified, HypothesisNotMet, Violation };

std::string_view to_string(CheckStatus s);
std::string_view to_string(Verdict v);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::NotChecked;
  std::string detail;
};

struct TheoremReport {
  std::string id;
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  TermTable table;
  Verdict verdict = Verdict::HypothesisNotMet;
  std::vector<std::string> notes;
};

/// Everything the routes and verifiers share for one filtration.
class Context {
 public:
  /// Fits the Hilbert polynomial and fixes J: the supplied generators (checked
  /// with is_reduction, result kept in reduction_at) or a random minimal
  /// reduction drawn from `seed`.
  Context(FiltrationPtr f, unsigned max_n, std::optional<std::vector<Polynomial>> reduction, std::uint64_t seed);

  const FiltrationPtr& filtration() const { return f_; }
  const PresentedRingPtr& ring() const { return f_->ring(); }
  unsigned dim() const { return static_cast<unsigned>(ring()->dim()); }
  const HilbertTable& table() const { return fit_.table; }
  const HilbertCoefficients& coeffs() const { return fit_.coeffs; }
  std::int64_t e(unsigned i) const { return fit_.coeffs.e.at(i); }
  const std::vector<Polynomial>& reduction() const { return reduction_; }
  const std::optional<unsigned>& reduction_at() const { return reduction_at_; }
  unsigned reduction_attempts() const { return attempts_; }
  bool reduction_supplied() const { return supplied_; }
  /// Last n of every per-n sum: two rows past the index where terms must vanish.
  unsigned sum_bound() const { return sum_bound_; }
  /// Range used by the theorem verifiers.
  unsigned check_bound() const { return check_bound_; }

  RingIdeal term(int n) const { return f_->term(n); }
  RingIdeal j_ideal() const { return RingIdeal(ring(), reduction_); }
  /// lambda(I_n / J I_{n-1}), cached.
  std::int64_t h0_length(int n) const;
  /// Regularity evidence for the ordered pair (x, y) = (reduction[i], ...).
  const RegularityReport& regularity(std::size_t which) const;
  bool reduction_is_regular_sequence() const;

 private:
  FiltrationPtr f_;
  HilbertFit fit_;
  std::vector<Polynomial> reduction_;
  std::optional<unsigned> reduction_at_;
  unsigned attempts_ = 0;
  bool supplied_ = false;
  unsigned sum_bound_ = 0;
  unsigned check_bound_ = 0;
  mutable std::map<int, std::int64_t> h0_;
  mutable std::map<std::size_t, RegularityReport> regularity_;
  mutable std::optional<bool> regular_sequence_;
};

struct EulerChar {
  std::int64_t value = 0;                 // Delta^d [P - H](n)
  std::optional<std::int64_t> homology;   // sum (-1)^i lambda(H_i)
  std::vector<std::int64_t> lengths;      // lambda(H_0), lambda(H_1), ...
  std::string unavailable_reason;
};

/// chi(K^(n)) as the d-th difference of P - H, recomputed from homology
/// lengths when d <= 2 and the route hypotheses hold.
EulerChar euler_char_K(const Context& c, int n);

RouteResult e1_via_euler_differences(const Context& c);
/// Dimension 1: sum of lambda(I_n / x I_{n-1}) - lambda((0:x) meet I_{n-1}).
RouteResult e1_dim1(const Context& c);
/// Dimension 2 with the ordered pair (x, y) = reduction[first], reduction[1-first]:
/// sum of lambda(I_n / J I_{n-1}) - lambda(((x):y meet I_{n-1}) / x I_{n-2}).
/// Throws HypothesisUnverified when the graded regularity check of x fails.
RouteResult e1_dim2(const Context& c, std::size_t first = 0);

struct FundamentalLemmaResult {
  RouteResult route;
  std::vector<IdentityCheck> identities;
};

/// e_0 - lambda(R/I_1) + sum_{n>=2} [lambda(I_n / J I_{n-1}) - lambda((I_{n-1}:J)/I_{n-2})]
/// with the per-n identity against Delta^2 [P - H]. Throws NotRegularSequence.
FundamentalLemmaResult fundamental_lemma(const Context& c);

/// Delta^2 H(n) = lambda(R/(I_n+J)) - lambda((J meet I_n)/(J I_{n-1})) + lambda((I_{n-1}:J)/I_{n-2})
/// for 1 <= n <= up_to.
std::vector<IdentityCheck> modified_koszul_identities(const Context& c, unsigned up_to, TermTable* table = nullptr);

TheoremReport verify_modified_koszul(const Context& c);
TheoremReport verify_fundamental_lemma(const Context& c);
/// Rees: for a parameter ideal J inside I_1 with e_0(J) = e_0(I), J is a reduction.
TheoremReport verify_rees(const FiltrationPtr& f, const std::vector<Polynomial>& j, unsigned max_n);
TheoremReport verify_lipman(const Context& c);
TheoremReport verify_huneke_dim1(const Context& c);
TheoremReport verify_sally(const Context& c);
/// Integral closure filtration of J = (x^a, y^b) in k[x,y].
TheoremReport verify_closure_dim2(const RingIdeal& j, unsigned max_n);

struct ChernReport {
  HilbertCoefficients fit;
  HilbertTable table;
  std::vector<Polynomial> reduction;
  unsigned reduction_at = 0;
  bool reduction_supplied = false;
  unsigned reduction_attempts = 0;
  std::vector<RouteResult> routes;
  std::vector<IdentityCheck> identities;
  std::vector<std::string> notes;
  unsigned sum_bound = 0;
  unsigned check_bound = 0;
  bool consistent = false;  // every available route equals the fitted e_1 and every identity holds
};

ChernReport chern_report(const Context& c);

/// Ring, seed ideal and filtration of a job.
struct LoadedJob {
  JobSpec spec;
  PresentedRingPtr ring;
  RingIdeal ideal;
  FiltrationPtr filtration;
  std::optional<std::vector<Polynomial>> reduction;
};

LoadedJob load_job(const JobSpec& spec);
/// Context for a job, honoring its reduction, seed and max_n (overrides win).
Context make_context(const LoadedJob& job, std::optional<std::uint64_t> seed = {},
                     std::optional<unsigned> max_n = {});
ChernReport chern_report(const JobSpec& job);

/// Verifier by id: rees, lipman, huneke-dim1, sally, fundamental-lemma,
/// modified-koszul, closure-dim2. Throws Usage for an unknown id.
TheoremReport verify_by_id(const std::string& id, const LoadedJob& job, std::optional<std::uint64_t> seed = {},
                           std::optional<unsigned> max_n = {});

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"rees", "lipman", "huneke-dim1", "sally",
                                            "fundamental-lemma", "modified-koszul", "closure-dim2"};
  return ids;
}

}  // namespace chern
