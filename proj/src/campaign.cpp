#include "chern/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

namespace chern {

std::size_t Campaign::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const FuzzCase& c) { return !c.ok; }));
}

namespace {

std::string monomial_text(const std::string& x, int i, const std::string& y, int j) {
  std::string s;
  auto factor = [&](const std::string& v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  };
  factor(x, i);
  factor(y, j);
  return s.empty() ? "1" : s;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

PolyExpr expr(const std::string& text, const std::vector<std::string>& vars) { return parse_polynomial(text, vars); }

bool in_semigroup(const std::vector<int>& gens, int s) {
  std::vector<bool> reach(static_cast<std::size_t>(s) + 1, false);
  reach[0] = true;
  for (int v = 1; v <= s; ++v)
    for (int g : gens)
      if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = true;
        break;
      }
  return reach[static_cast<std::size_t>(s)];
}

}  // namespace

JobSpec fuzz_monomial_job(unsigned dim, std::uint64_t case_seed, unsigned max_deg) {
  if (dim != 1 && dim != 2) throw Error(ErrorKind::Usage, "monomial fuzzing supports dim 1 or 2");
  if (max_deg < 1) throw Error(ErrorKind::Usage, "max-deg must be at least 1");
  std::mt19937_64 rng(case_seed);
  const int D = static_cast<int>(max_deg);
  JobSpec job;
  job.vars = {"x", "y"};
  job.seed = case_seed;
  std::vector<std::string> gens;
  int ymax = D;
  if (dim == 1) {
    const int k = uniform(rng, 1, 3);
    job.quotient.push_back(expr(monomial_text("x", 0, "y", k), job.vars));
    ymax = k - 1;
    gens.push_back(monomial_text("x", uniform(rng, 1, D), "y", 0));
  } else {
    gens.push_back(monomial_text("x", uniform(rng, 1, D), "y", 0));
    gens.push_back(monomial_text("x", 0, "y", uniform(rng, 1, D)));
  }
  const int extra = uniform(rng, 0, 3);
  for (int t = 0; t < extra; ++t) {
    int j = uniform(rng, 0, std::min(ymax, D - 1));
    int i = uniform(rng, j == 0 ? 1 : 0, D - j);
    if (i + j == 0) continue;
    gens.push_back(monomial_text("x", i, "y", j));
  }
  for (const std::string& g : gens) job.ideal.push_back(expr(g, job.vars));
  return job;
}

std::vector<int> fuzz_semigroup(std::uint64_t case_seed, int max_gen) {
  std::mt19937_64 rng(case_seed);
  for (;;) {
    std::vector<int> g{uniform(rng, 3, max_gen), uniform(rng, 3, max_gen), uniform(rng, 3, max_gen)};
    std::sort(g.begin(), g.end());
    if (g[0] == g[1] || g[1] == g[2]) continue;
    if (std::gcd(std::gcd(g[0], g[1]), g[2]) != 1) continue;
    if (in_semigroup({g[0]}, g[1]) || in_semigroup({g[0], g[1]}, g[2])) continue;
    return g;
  }
}

JobSpec monomial_curve_job(const std::vector<int>& gens) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::string> with_t{"t"};
  with_t.insert(with_t.end(), names.begin(), names.end());
  RingPtr P = PolyRing::make(with_t);
  std::vector<Polynomial> param;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    param.push_back(parse_in(names[i] + " - t^" + std::to_string(gens[i]), P));
    keep.push_back(i + 1);
  }
  std::vector<Polynomial> kernel = eliminate(param, keep);
  JobSpec job;
  job.vars = names;
  for (const Polynomial& f : kernel) job.quotient.push_back(expr(f.to_string(), names));
  for (const std::string& v : names) job.ideal.push_back(expr(v, names));
  job.reduction = std::vector<PolyExpr>{expr(names[0], names)};
  return job;
}

FuzzCase run_fuzz_case(const FuzzOptions& options, unsigned index, std::uint64_t case_seed, bool keep_report) {
  FuzzCase out;
  out.index = index;
  out.seed = case_seed;
  try {
    if (options.family == FuzzFamily::Curves) {
      out.semigroup = fuzz_semigroup(case_seed);
      out.job = monomial_curve_job(out.semigroup);
    } else {
      out.job = fuzz_monomial_job(options.dim, case_seed, options.max_deg);
    }
    out.job.max_n = options.max_n;
    LoadedJob job = load_job(out.job);
    Context c = make_context(job);
    ChernReport r = chern_report(c);
    out.e = r.fit.e;
    out.identities = r.identities.size();
    std::vector<std::string> problems;
    for (const RouteResult& route : r.routes) {
      if (!route.available) continue;
      out.routes.emplace_back(route.name, route.value);
      if (route.value != r.fit.e.at(1))
        problems.push_back("route " + route.name + " gives " + std::to_string(route.value) + ", fit gives " +
                           std::to_string(r.fit.e.at(1)));
    }
    for (const IdentityCheck& id : r.identities)
      if (!id.holds())
        problems.push_back(id.name + " fails at n = " + std::to_string(id.n) + ": " + std::to_string(id.lhs) +
                           " != " + std::to_string(id.rhs));
    if (c.dim() == 1) {
      // Cohen-Macaulay ambient: each term and e1 are nonnegative.
      if (r.fit.e.at(1) < 0) problems.push_back("e1 < 0 in a Cohen-Macaulay ring");
      for (const RouteResult& route : r.routes)
        if (route.name == "dim1" && route.available)
          for (const auto& row : route.terms.rows)
            if (*row[3] < 0) problems.push_back("negative dim1 term at n = " + std::to_string(*row[0]));
      out.lipman = verify_lipman(c);
      if (out.lipman->verdict != Verdict::Verified)
        problems.push_back("lipman check: " + std::string(to_string(out.lipman->verdict)));
    }
    if (keep_report) out.report = std::move(r);
    out.ok = problems.empty();
    for (std::size_t i = 0; i < problems.size(); ++i) out.failure += (i ? "; " : "") + problems[i];
  } catch (const Error& e) {
    out.ok = false;
    out.failure = e.what();
  }
  return out;
}

Campaign run_campaign(const FuzzOptions& options, bool keep_reports) {
  Campaign out;
  out.options = options;
  std::mt19937_64 master(options.seed);
  std::vector<std::uint64_t> seeds(options.count);
  for (auto& s : seeds) s = master();
  out.cases.resize(options.count);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned i = next++; i < options.count; i = next++)
      out.cases[i] = run_fuzz_case(options, i, seeds[i], keep_reports);
  };
  const unsigned threads = std::max(1u, std::min(options.threads, options.count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace chern
