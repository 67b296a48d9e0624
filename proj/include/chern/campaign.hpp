#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chern/chern.hpp"

namespace chern {

enum class FuzzFamily {
  Monomial,  // m-primary monomial ideals: k[x,y] (dim 2) or k[x,y]/(y^k) (dim 1)
  Curves,    // m-adic filtration of a monomial curve k[t^a, t^b, t^c], J = (t^a)
};

struct FuzzOptions {
  unsigned dim = 2;
  unsigned count = 50;
  std::uint64_t seed = 1;
  unsigned max_deg = 6;
  unsigned max_n = 30;
  unsigned threads = 1;
  FuzzFamily family = FuzzFamily::Monomial;
};

struct FuzzCase {
  unsigned index = 0;
  std::uint64_t seed = 0;  // replays the case on its own
  JobSpec job;
  std::vector<int> semigroup;  // curve family only
  bool ok = false;
  std::string failure;
  std::vector<std::int64_t> e;
  std::vector<std::pair<std::string, std::int64_t>> routes;  // available routes only
  std::size_t identities = 0;
  std::optional<TheoremReport> lipman;
  std::optional<ChernReport> report;  // kept only when requested
};

struct Campaign {
  FuzzOptions options;
  std::vector<FuzzCase> cases;
  std::size_t failures() const;
};

/// Random m-primary monomial job for a case seed.
JobSpec fuzz_monomial_job(unsigned dim, std::uint64_t case_seed, unsigned max_deg);
/// Random numerical semigroup <a, b, c> (minimally generated, gcd 1) for a case seed.
std::vector<int> fuzz_semigroup(std::uint64_t case_seed, int max_gen = 9);
/// k[t^a, t^b, ...] presented by eliminating t; I = m, J = (first generator).
JobSpec monomial_curve_job(const std::vector<int>& gens);

/// Runs one case: route agreement, per-n identities, and in dimension 1
/// nonnegativity of the terms and the Lipman check.
FuzzCase run_fuzz_case(const FuzzOptions& options, unsigned index, std::uint64_t case_seed, bool keep_report = false);
/// Case seeds are drawn in order from one generator seeded with options.seed;
/// results are ordered by index whatever the thread count.
Campaign run_campaign(const FuzzOptions& options, bool keep_reports = false);

}  // namespace chern
