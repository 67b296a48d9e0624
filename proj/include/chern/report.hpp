#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "chern/chern.hpp"

namespace chern::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Integers travel as decimal strings.
Json num(std::int64_t v);
Json cell(const Cell& c);

Json job_json(const JobSpec& job);
Json table_json(const TermTable& t);
/// H(n), the differences Delta^k H for k = 1..d, the fitted e_i and the postulation index.
Json hilbert_json(const HilbertTable& table, const HilbertCoefficients& coeffs);
Json route_json(const RouteResult& r);
Json chern_json(const ChernReport& r);
Json theorem_json(const TheoremReport& r);

/// {schema, engine, command, seed, job, result, timings}. Everything but
/// `timings` is a function of the inputs.
Json envelope(const std::string& command, const JobSpec* job, std::uint64_t seed, Json result, double elapsed_ms);

std::string render_table(const TermTable& t);
std::string render_hilbert(const HilbertTable& table, const HilbertCoefficients& coeffs);
std::string render_chern(const ChernReport& r);
std::string render_theorem(const TheoremReport& r);

}  // namespace chern::report
