#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gruc/cycle.hpp"
#include "gruc/orbits.hpp"
#include "gruc/search.hpp"
#include "gruc/verify.hpp"

namespace gruc::io {

using json = nlohmann::json;

// ---- parsing ----

std::vector<int> parse_int_csv(const std::string& text);
std::vector<std::uint32_t> parse_u32_csv(const std::string& text);

/// "a^13" / "a13" exponent form, or an ascending coefficient list "1,0,1,0,0".
Field::Elem parse_element(const Field& field, const std::string& text);

// ---- formatting ----

std::string format_int_csv(const std::vector<int>& v);
std::string format_u32_csv(const std::vector<std::uint32_t>& v);
/// Ascending polynomial display, e.g. "1 + x^2 + x^5" or "1 + 2x + x^5".
std::string poly_pretty(const std::vector<int>& poly);
std::string exponent_string(std::uint32_t e);  // "a^13"

// ---- JSON pieces (keys sorted by nlohmann; all values integral or string,
// so identical inputs serialize byte-identically) ----

json subspace_json(const Subspace& s);
json noncollapsing_json(const NonCollapsingVerdict& v);
json partition_json(const OrbitPartition& partition);
json spec_json(const CycleSpec& spec);
json spec_verdict_json(const SpecVerdict& v);
json verification_json(const VerificationReport& report);
json periodicity_json(const PeriodicityReport& report);
json line_uniformity_json(const LineUniformityReport& report);
json search_json(const SearchResult& result);

// ---- text rendering ----

std::string partition_text(const OrbitPartition& partition);
std::string verification_text(const VerificationReport& report, std::size_t list_limit = 20);
std::string line_uniformity_text(const LineUniformityReport& report);
std::string search_text(const SearchResult& result);

// ---- cycle files ----
// One vector per line, comma-separated digits ascending by degree.
// '#' starts a comment; "# key=value ..." headers carry the context:
//   # q=2 n=5 poly=1,0,1,0,0,1 reps=3,4,8,16,1

struct CycleFile {
    int q = 0;
    int n = 0;
    std::vector<int> poly;
    std::vector<std::uint32_t> reps;
    std::vector<std::vector<int>> vectors;

    bool has_context() const noexcept { return q > 0 && n > 0 && !poly.empty(); }
};

std::string cycle_file_text(const Field& field, const UniversalCycle& cycle);
CycleFile read_cycle_file(std::istream& in);
CycleFile read_cycle_file(const std::filesystem::path& path);

/// CSV of per-ordering pass/fail flags from a record_all search.
std::string search_records_csv(const SearchResult& result);

/// Write via a temp file + rename so readers never observe partial output.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace gruc::io
