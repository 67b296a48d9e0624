#include "chern/corpus.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace chern {

std::string read_document(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedDocument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& dir) {
  const std::string text = read_document((dir / "manifest.json").string());
  report::Json doc;
  try {
    doc = report::Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::MalformedDocument, std::string("manifest: ") + e.what());
  }
  std::vector<CorpusEntry> out;
  try {
    for (const auto& item : doc.at("entries")) {
      CorpusEntry e;
      e.name = item.at("name").get<std::string>();
      e.job = item.at("job").get<std::string>();
      e.command = item.at("command").get<std::string>();
      if (item.contains("theorem")) e.theorem = item.at("theorem").get<std::string>();
      e.expected = item.at("expected").get<std::string>();
      out.push_back(std::move(e));
    }
  } catch (const report::Json::exception& e) {
    throw Error(ErrorKind::MalformedDocument, std::string("manifest: ") + e.what());
  }
  return out;
}

report::Json corpus_result(const std::filesystem::path& dir, const CorpusEntry& e) {
  JobSpec spec = parse_job(read_document((dir / e.job).string()));
  LoadedJob job = load_job(spec);
  report::Json result;
  if (e.command == "hilbert") {
    HilbertFit fit = hilbert_fit(job.filtration, spec.max_n);
    result = report::hilbert_json(fit.table, fit.coeffs);
  } else if (e.command == "chern") {
    result = report::chern_json(chern_report(make_context(job)));
  } else if (e.command == "verify") {
    result = report::theorem_json(verify_by_id(e.theorem, job));
  } else {
    throw Error(ErrorKind::MalformedDocument, "unknown corpus command '" + e.command + "'");
  }
  return report::Json{{"name", e.name}, {"command", e.command}, {"theorem", e.theorem},
                      {"job", report::job_json(spec)}, {"result", std::move(result)}};
}

std::vector<CorpusOutcome> check_corpus(const std::filesystem::path& dir, bool bless) {
  std::vector<CorpusOutcome> out;
  for (const CorpusEntry& e : load_manifest(dir)) {
    CorpusOutcome o;
    o.name = e.name;
    try {
      report::Json got = corpus_result(dir, e);
      const std::filesystem::path sidecar = dir / e.expected;
      if (bless) {
        std::filesystem::create_directories(sidecar.parent_path());
        std::ofstream(sidecar, std::ios::binary) << got.dump(2) << "\n";
        o.matched = o.blessed = true;
      } else {
        report::Json want = report::Json::parse(read_document(sidecar.string()));
        o.matched = got == want;
        if (!o.matched) {
          report::Json patch = report::Json::diff(want, got);
          o.detail = patch.empty() ? "differs" : patch.front().dump();
        }
      }
    } catch (const std::exception& ex) {
      o.detail = ex.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace chern
