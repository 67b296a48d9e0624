#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chern/report.hpp"

namespace chern {

/// Reads a job document from a file ("-" for stdin). Throws MalformedDocument
/// when the file cannot be read.
std::string read_document(const std::string& path);

struct CorpusEntry {
  std::string name;
  std::string job;       // relative to the corpus directory
  std::string command;   // hilbert | chern | verify
  std::string theorem;   // verify only
  std::string expected;  // sidecar, relative to the corpus directory
};

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& dir);

/// The deterministic result payload of one entry (no timings).
report::Json corpus_result(const std::filesystem::path& dir, const CorpusEntry& e);

struct CorpusOutcome {
  std::string name;
  bool matched = false;
  bool blessed = false;
  std::string detail;  // first difference, or the error
};

/// Compares every entry with its sidecar, or rewrites the sidecars when
/// `bless` is set.
std::vector<CorpusOutcome> check_corpus(const std::filesystem::path& dir, bool bless);

}  // namespace chern
