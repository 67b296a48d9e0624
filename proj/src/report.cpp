#include "chern/report.hpp"

#include <algorithm>
#include <sstream>

namespace chern::report {

Json num(std::int64_t v) { return std::to_string(v); }

Json cell(const Cell& c) { return c ? num(*c) : Json(nullptr); }

Json job_json(const JobSpec& job) { return Json::parse(serialize_job(job)); }

Json table_json(const TermTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const Cell& c : row) r.push_back(cell(c));
    rows.push_back(std::move(r));
  }
  return Json{{"columns", t.columns}, {"rows", std::move(rows)}};
}

namespace {

Json nums(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (std::int64_t x : v) out.push_back(num(x));
  return out;
}

std::vector<std::int64_t> differences(const HilbertTable& t, unsigned k) {
  std::vector<std::int64_t> out;
  for (unsigned n = 1; n <= t.max_n; ++n) out.push_back(delta_h(t, k, n));
  return out;
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const Check& c : checks)
    out.push_back(Json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  return out;
}

std::string polys_text(const std::vector<Polynomial>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + ")";
}

std::string ints_text(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Json hilbert_json(const HilbertTable& table, const HilbertCoefficients& coeffs) {
  Json h = Json::array();
  for (unsigned n = 1; n <= table.max_n; ++n) h.push_back(num(table.at(n)));
  Json diffs = Json::array();
  for (unsigned k = 1; k <= table.dim; ++k) diffs.push_back(nums(differences(table, k)));
  return Json{{"dim", num(table.dim)},
              {"max_n", num(table.max_n)},
              {"H", std::move(h)},
              {"differences", std::move(diffs)},
              {"e", nums(coeffs.e)},
              {"postulation", num(coeffs.postulation)}};
}

Json route_json(const RouteResult& r) {
  Json out{{"name", r.name}, {"available", r.available}};
  if (r.available) {
    out["value"] = num(r.value);
    out["terms"] = table_json(r.terms);
  } else {
    out["unavailable_reason"] = r.unavailable_reason;
  }
  out["notes"] = r.notes;
  return out;
}

Json chern_json(const ChernReport& r) {
  Json gens = Json::array();
  for (const Polynomial& g : r.reduction) gens.push_back(g.to_string());
  Json routes = Json::array();
  for (const RouteResult& x : r.routes) routes.push_back(route_json(x));
  Json ids = Json::array();
  for (const IdentityCheck& id : r.identities)
    ids.push_back(Json{{"name", id.name}, {"n", num(id.n)}, {"lhs", num(id.lhs)}, {"rhs", num(id.rhs)},
                       {"holds", id.holds()}});
  return Json{{"hilbert", hilbert_json(r.table, r.fit)},
              {"e1", num(r.fit.e.at(1))},
              {"reduction",
               {{"gens", std::move(gens)},
                {"verified_at", num(r.reduction_at)},
                {"window", "3"},
                {"supplied", r.reduction_supplied},
                {"attempts", num(r.reduction_attempts)}}},
              {"sum_bound", num(r.sum_bound)},
              {"check_bound", num(r.check_bound)},
              {"routes", std::move(routes)},
              {"identities", std::move(ids)},
              {"consistent", r.consistent},
              {"notes", r.notes}};
}

Json theorem_json(const TheoremReport& r) {
  return Json{{"id", r.id},
              {"verdict", std::string(to_string(r.verdict))},
              {"hypotheses", checks_json(r.hypotheses)},
              {"conclusions", checks_json(r.conclusions)},
              {"table", table_json(r.table)},
              {"notes", r.notes}};
}

Json envelope(const std::string& command, const JobSpec* job, std::uint64_t seed, Json result, double elapsed_ms) {
  Json out{{"schema", num(kSchemaVersion)}, {"engine", kEngineVersion}, {"command", command}, {"seed", num(static_cast<std::int64_t>(seed))}};
  out["job"] = job ? job_json(*job) : Json(nullptr);
  out["result"] = std::move(result);
  out["timings"] = Json{{"elapsed_ms", std::to_string(static_cast<std::int64_t>(elapsed_ms))}};
  return out;
}

// ---------------------------------------------------------------------------

std::string render_table(const TermTable& t) {
  std::vector<std::vector<std::string>> grid{t.columns};
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (const Cell& c : row) r.push_back(c ? std::to_string(*c) : "-");
    grid.push_back(std::move(r));
  }
  std::vector<std::size_t> width;
  for (const auto& r : grid)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : grid) {
    os << " ";
    for (std::size_t i = 0; i < r.size(); ++i) os << " " << std::string(width[i] - r[i].size(), ' ') << r[i];
    os << "\n";
  }
  return os.str();
}

std::string render_hilbert(const HilbertTable& table, const HilbertCoefficients& coeffs) {
  TermTable t;
  t.columns = {"n", "H(n)"};
  for (unsigned k = 1; k <= table.dim; ++k) t.columns.push_back("D^" + std::to_string(k) + "H");
  t.columns.push_back("P(n)");
  for (unsigned n = 1; n <= table.max_n; ++n) {
    std::vector<Cell> row{static_cast<std::int64_t>(n), table.at(n)};
    for (unsigned k = 1; k <= table.dim; ++k) row.push_back(delta_h(table, k, n));
    row.push_back(hilbert_poly_eval(coeffs, n));
    t.rows.push_back(std::move(row));
  }
  std::ostringstream os;
  os << "dim " << table.dim << ", e = (" << ints_text(coeffs.e) << "), postulation index " << coeffs.postulation
     << "\n"
     << render_table(t);
  return os.str();
}

std::string render_chern(const ChernReport& r) {
  std::ostringstream os;
  os << "fitted e = (" << ints_text(r.fit.e) << "), postulation index " << r.fit.postulation << "\n";
  os << "J = " << polys_text(r.reduction) << (r.reduction_supplied ? " (supplied)" : " (random)")
     << ", reduction from n0 = " << r.reduction_at << "\n";
  os << "per-n sums run to n = " << r.sum_bound << "\n";
  for (const RouteResult& x : r.routes) {
    os << "\nroute " << x.name << ": ";
    if (!x.available) {
      os << "unavailable (" << x.unavailable_reason << ")\n";
      continue;
    }
    os << "e1 = " << x.value << (x.value == r.fit.e.at(1) ? "" : "  MISMATCH") << "\n" << render_table(x.terms);
    for (const std::string& n : x.notes) os << "  note: " << n << "\n";
  }
  std::size_t failed = 0;
  for (const IdentityCheck& id : r.identities)
    if (!id.holds()) {
      ++failed;
      os << "identity failed: " << id.name << " at n = " << id.n << ": " << id.lhs << " != " << id.rhs << "\n";
    }
  os << "\n" << r.identities.size() - failed << "/" << r.identities.size() << " per-n identities hold\n";
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  os << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
  return os.str();
}

std::string render_theorem(const TheoremReport& r) {
  std::ostringstream os;
  os << r.id << ": " << to_string(r.verdict) << "\n";
  auto list = [&](const char* title, const std::vector<Check>& checks) {
    os << title << "\n";
    for (const Check& c : checks) {
      os << "  [" << to_string(c.status) << "] " << c.name;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << "\n";
    }
  };
  list("hypotheses", r.hypotheses);
  list("conclusions", r.conclusions);
  if (!r.table.rows.empty()) os << render_table(r.table);
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace chern::report
