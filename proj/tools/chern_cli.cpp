#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chern/campaign.hpp"
#include "chern/corpus.hpp"
#include "chern/report.hpp"

#ifndef CHERN_CORPUS_DIR
#define CHERN_CORPUS_DIR "corpus"
#endif

using namespace chern;
using report::Json;

namespace {

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> max_n;
  std::optional<std::uint32_t> field_char;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Job file with the global overrides applied; re-parsing revalidates them.
JobSpec load_spec(const std::string& path, const Globals& g) {
  JobSpec spec = parse_job(read_document(path));
  if (g.field_char) spec.field_char = *g.field_char;
  if (g.max_n) spec.max_n = *g.max_n;
  if (g.seed) spec.seed = *g.seed;
  return parse_job(serialize_job(spec));
}

std::uint64_t seed_of(const JobSpec& spec) { return spec.seed.value_or(1); }

void emit(const Globals& g, const std::string& command, const JobSpec* job, std::uint64_t seed, Json result,
          const std::string& text, const Timer& t) {
  if (g.json)
    std::cout << report::envelope(command, job, seed, std::move(result), t.ms()).dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_hilbert(const Globals& g, const std::string& path) {
  Timer t;
  JobSpec spec = load_spec(path, g);
  LoadedJob job = load_job(spec);
  HilbertFit fit = hilbert_fit(job.filtration, spec.max_n);
  emit(g, "hilbert", &spec, seed_of(spec), report::hilbert_json(fit.table, fit.coeffs),
       report::render_hilbert(fit.table, fit.coeffs), t);
  return 0;
}

int cmd_chern(const Globals& g, const std::string& path) {
  Timer t;
  JobSpec spec = load_spec(path, g);
  ChernReport r = chern_report(make_context(load_job(spec)));
  emit(g, "chern", &spec, seed_of(spec), report::chern_json(r), report::render_chern(r), t);
  return r.consistent ? 0 : 1;
}

int cmd_verify(const Globals& g, const std::string& id, const std::string& path) {
  Timer t;
  JobSpec spec = load_spec(path, g);
  TheoremReport r = verify_by_id(id, load_job(spec));
  emit(g, "verify " + id, &spec, seed_of(spec), report::theorem_json(r), report::render_theorem(r), t);
  return r.verdict == Verdict::Violation ? 1 : 0;
}

int cmd_closure(const Globals& g, const std::string& path, unsigned upto) {
  Timer t;
  JobSpec spec = load_spec(path, g);
  spec.filtration = FiltrationKind::NewtonClosure;
  spec = parse_job(serialize_job(spec));
  LoadedJob job = load_job(spec);
  Json terms = Json::array();
  std::string text;
  for (unsigned n = 1; n <= upto; ++n) {
    RingIdeal In = job.filtration->term(static_cast<int>(n));
    Json gens = Json::array();
    for (const Polynomial& p : In.gens()) gens.push_back(p.to_string());
    terms.push_back(Json{{"n", report::num(n)}, {"gens", std::move(gens)},
                         {"colength", report::num(static_cast<std::int64_t>(*length_of_quotient(In)))}});
    text += "closure of I^" + std::to_string(n) + " = " + In.to_string() + ", colength " +
            std::to_string(*length_of_quotient(In)) + "\n";
  }
  HilbertFit fit = hilbert_fit(job.filtration, spec.max_n);
  Json result{{"terms", std::move(terms)}, {"hilbert", report::hilbert_json(fit.table, fit.coeffs)}};
  text += report::render_hilbert(fit.table, fit.coeffs);
  int code = 0;
  try {
    TheoremReport r = verify_closure_dim2(job.ideal, spec.max_n);
    result["closure_dim2"] = report::theorem_json(r);
    text += "\n" + report::render_theorem(r);
    if (r.verdict == Verdict::Violation) code = 1;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ClosureUnsupported) throw;
    result["closure_dim2"] = nullptr;
    text += "\nclosure-dim2 formula not applicable: " + std::string(e.what()) + "\n";
  }
  emit(g, "closure", &spec, seed_of(spec), std::move(result), text, t);
  return code;
}

int cmd_reduction(const Globals& g, const std::string& path) {
  Timer t;
  JobSpec spec = load_spec(path, g);
  LoadedJob job = load_job(spec);
  const unsigned search = std::min(spec.max_n, 10u);
  Reduction r = job.reduction ? verify_reduction(job.filtration, *job.reduction, search)
                              : find_minimal_reduction(job.filtration, seed_of(spec), search);
  Json gens = Json::array();
  std::string list;
  for (const Polynomial& p : r.gens) {
    gens.push_back(p.to_string());
    list += (list.empty() ? "" : ", ") + p.to_string();
  }
  Json result{{"gens", std::move(gens)},
              {"verified_at", report::num(r.verified_at)},
              {"window", report::num(r.window)},
              {"supplied", job.reduction.has_value()},
              {"attempts", report::num(r.attempts)}};
  std::string text = "J = (" + list + ")\nJ I_n = I_{n+1} for n0 = " + std::to_string(r.verified_at) + " <= n <= " +
                     std::to_string(r.verified_at + r.window) + "\n" +
                     (job.reduction ? "supplied\n" : "random draws used: " + std::to_string(r.attempts) + "\n");
  emit(g, "reduction", &spec, seed_of(spec), std::move(result), text, t);
  return 0;
}

std::string ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

int cmd_fuzz(const Globals& g, FuzzOptions o, std::optional<std::uint64_t> case_seed) {
  Timer t;
  if (g.seed) o.seed = *g.seed;
  if (g.max_n) o.max_n = *g.max_n;
  Campaign c;
  c.options = o;
  if (case_seed)
    c.cases.push_back(run_fuzz_case(o, 0, *case_seed));
  else
    c = run_campaign(o);
  Json cases = Json::array();
  std::string text;
  for (const FuzzCase& fc : c.cases) {
    Json routes = Json::object();
    std::string rtext;
    for (const auto& [name, v] : fc.routes) {
      routes[name] = report::num(v);
      rtext += " " + name + "=" + std::to_string(v);
    }
    Json jc{{"index", report::num(fc.index)}, {"seed", std::to_string(fc.seed)}, {"ok", fc.ok}};
    Json e = Json::array();
    for (auto x : fc.e) e.push_back(report::num(x));
    jc["e"] = std::move(e);
    jc["routes"] = std::move(routes);
    jc["identities"] = report::num(static_cast<std::int64_t>(fc.identities));
    if (fc.lipman) jc["lipman"] = std::string(to_string(fc.lipman->verdict));
    if (!fc.ok) {
      jc["failure"] = fc.failure;
      jc["job"] = report::job_json(fc.job);
    }
    cases.push_back(std::move(jc));
    text += "case " + std::to_string(fc.index) + " seed " + std::to_string(fc.seed) + ": " +
            (fc.ok ? "ok" : "FAIL") + " e = (" + ints(fc.e) + ")" + rtext + ", " + std::to_string(fc.identities) +
            " identities\n";
    if (!fc.ok) text += "  " + fc.failure + "\n  job: " + report::job_json(fc.job).dump() + "\n";
  }
  const std::size_t bad = c.failures();
  text += std::to_string(c.cases.size() - bad) + "/" + std::to_string(c.cases.size()) + " consistent\n";
  Json result{{"family", o.family == FuzzFamily::Curves ? "curves" : "monomial"},
              {"dim", report::num(o.dim)},
              {"count", report::num(static_cast<std::int64_t>(c.cases.size()))},
              {"max_deg", report::num(o.max_deg)},
              {"consistent", report::num(static_cast<std::int64_t>(c.cases.size() - bad))},
              {"cases", std::move(cases)}};
  emit(g, "fuzz", nullptr, o.seed, std::move(result), text, t);
  return bad == 0 ? 0 : 1;
}

int cmd_corpus(const Globals& g, const std::string& dir, bool bless) {
  Timer t;
  auto outcomes = check_corpus(dir, bless);
  Json list = Json::array();
  std::string text;
  std::size_t bad = 0;
  for (const CorpusOutcome& o : outcomes) {
    bad += o.matched ? 0 : 1;
    list.push_back(Json{{"name", o.name}, {"matched", o.matched}, {"blessed", o.blessed}, {"detail", o.detail}});
    text += std::string(o.blessed ? "blessed " : o.matched ? "ok      " : "FAIL    ") + o.name +
            (o.detail.empty() ? "" : "  " + o.detail) + "\n";
  }
  emit(g, "corpus", nullptr, 0, Json{{"entries", std::move(list)}}, text, t);
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients and Chern number routes for filtrations of local rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "print the JSON report instead of text");
  app.add_option("--seed", g.seed, "seed for random reductions and fuzzing");
  app.add_option("--max-n", g.max_n, "length of the Hilbert table");
  app.add_option("--char", g.field_char, "field characteristic (prime)");

  std::string job, id, dir = CHERN_CORPUS_DIR;
  unsigned upto = 4;
  bool bless = false;
  FuzzOptions fo;
  std::string family = "monomial";
  std::optional<std::uint64_t> case_seed;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, differences and fitted coefficients");
  hilbert->add_option("job", job, "job file (- for stdin)")->required();
  auto* chern = app.add_subcommand("chern", "every applicable e1 route with per-n tables");
  chern->add_option("job", job, "job file (- for stdin)")->required();
  auto* verify = app.add_subcommand("verify", "machine-check a theorem's hypotheses and conclusions");
  verify->add_option("id", id, "rees | lipman | huneke-dim1 | sally | fundamental-lemma | modified-koszul | closure-dim2")
      ->required();
  verify->add_option("job", job, "job file (- for stdin)")->required();
  auto* closure = app.add_subcommand("closure", "integral closure filtration of a monomial ideal of k[x,y]");
  closure->add_option("job", job, "job file (- for stdin)")->required();
  closure->add_option("--upto", upto, "print generators for n <= upto")->check(CLI::Range(1u, 50u));
  auto* reduction = app.add_subcommand("reduction", "find or check a minimal reduction");
  reduction->add_option("job", job, "job file (- for stdin)")->required();
  auto* fuzz = app.add_subcommand("fuzz", "random campaign checking route agreement and identities");
  fuzz->add_option("--dim", fo.dim, "1 or 2")->check(CLI::Range(1u, 2u));
  fuzz->add_option("--count", fo.count, "number of cases");
  fuzz->add_option("--max-deg", fo.max_deg, "degree bound for random monomials")->check(CLI::Range(1u, 40u));
  fuzz->add_option("--threads", fo.threads, "worker threads")->check(CLI::Range(1u, 256u));
  fuzz->add_option("--family", family, "monomial | curves")->check(CLI::IsMember({"monomial", "curves"}));
  fuzz->add_option("--case-seed", case_seed, "replay a single case");
  auto* corpus = app.add_subcommand("corpus", "check the golden corpus against its sidecars");
  corpus->add_option("--dir", dir, "corpus directory");
  corpus->add_flag("--bless", bless, "rewrite the sidecars from the current engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*hilbert) return cmd_hilbert(g, job);
    if (*chern) return cmd_chern(g, job);
    if (*verify) return cmd_verify(g, id, job);
    if (*closure) return cmd_closure(g, job, upto);
    if (*reduction) return cmd_reduction(g, job);
    if (*fuzz) {
      fo.family = family == "curves" ? FuzzFamily::Curves : FuzzFamily::Monomial;
      if (fo.family == FuzzFamily::Curves) fo.dim = 1;
      return cmd_fuzz(g, fo, case_seed);
    }
    if (*corpus) return cmd_corpus(g, dir, bless);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() || e.kind() == ErrorKind::ResourceCap ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
