#include "gruc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gruc::io {

namespace {

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long long parse_ll(const std::string& token) {
    const std::string t = trimmed(token);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        fail(errc::bad_input, "not an integer: '" + token + "'");
    }
    return v;
}

std::vector<long long> split_ll(const std::string& text) {
    std::vector<long long> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(parse_ll(token));
    if (out.empty()) fail(errc::bad_input, "empty list: '" + text + "'");
    return out;
}

} // namespace

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> out;
    for (const long long v : split_ll(text)) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<std::uint32_t> parse_u32_csv(const std::string& text) {
    std::vector<std::uint32_t> out;
    for (const long long v : split_ll(text)) {
        if (v < 0) fail(errc::bad_input, "negative value in list: " + std::to_string(v));
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

Field::Elem parse_element(const Field& field, const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) fail(errc::bad_input, "empty field element");
    if (t[0] == 'a' || t[0] == 'A') {
        std::size_t pos = 1;
        if (pos < t.size() && t[pos] == '^') ++pos;
        const long long e = parse_ll(t.substr(pos));
        return field.exp(e);
    }
    const std::vector<int> c = parse_int_csv(t);
    return field.from_coeffs(c);
}

std::string format_int_csv(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string format_u32_csv(const std::vector<std::uint32_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string poly_pretty(const std::vector<int>& poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const int c = poly[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string exponent_string(std::uint32_t e) {
    return "a^" + std::to_string(e);
}

json subspace_json(const Subspace& s) {
    json rows = json::array();
    for (const auto& row : s.rows()) rows.push_back(row);
    return rows;
}

json noncollapsing_json(const NonCollapsingVerdict& v) {
    json out;
    out["gcd"] = v.gcd_value;
    out["gcd_pass"] = v.gcd_pass;
    out["exhaustive_checked"] = v.exhaustive_checked;
    if (v.exhaustive_checked) {
        out["exhaustive_pass"] = v.exhaustive_pass;
        if (!v.exhaustive_pass) {
            out["counterexample_exponent"] = *v.counterexample_exponent;
            out["counterexample_degree"] = v.counterexample_degree;
        }
    }
    out["pass"] = v.pass();
    return out;
}

json partition_json(const OrbitPartition& partition) {
    json out;
    out["r"] = partition.class_count();
    out["m"] = partition.group_count();
    json classes = json::array();
    for (const auto& cls : partition.classes()) classes.push_back(cls.orbit_exponents);
    out["classes"] = classes;
    json groups = json::array();
    for (const auto& group : partition.galois_groups()) {
        json g = json::array();
        for (const std::size_t ci : group) g.push_back(partition.classes()[ci].orbit_exponents);
        groups.push_back(g);
    }
    out["groups"] = groups;
    return out;
}

json spec_json(const CycleSpec& spec) {
    json out;
    out["q"] = spec.q;
    out["n"] = spec.n;
    out["poly"] = spec.modulus_poly;
    out["reps"] = spec.rep_exponents;
    out["source"] = spec.source;
    return out;
}

json spec_verdict_json(const SpecVerdict& v) {
    json out;
    out["ok"] = v.ok();
    out["coverage_ok"] = v.coverage_ok;
    out["product_ok"] = v.product_ok;
    out["product_exponent"] = v.product_exponent;
    out["uncovered_classes"] = v.uncovered_classes;
    out["multiply_covered_classes"] = v.multiply_covered_classes;
    out["invalid_exponents"] = v.invalid_exponents;
    return out;
}

json verification_json(const VerificationReport& report) {
    json out;
    out["k"] = report.k;
    out["universe_size"] = report.universe_size;
    out["window_count"] = report.window_count;
    json hist = json::object();
    for (const auto& [count, subspaces] : report.multiplicity_histogram) {
        hist[std::to_string(count)] = subspaces;
    }
    out["multiplicity_histogram"] = hist;
    json missing = json::array();
    for (const auto& s : report.missing) missing.push_back(subspace_json(s));
    out["missing"] = missing;
    json dup = json::array();
    for (const auto& [s, positions] : report.duplicated) {
        json d;
        d["subspace"] = subspace_json(s);
        d["positions"] = positions;
        dup.push_back(d);
    }
    out["duplicated"] = dup;
    out["rank_defects"] = report.rank_defects;
    out["verdict"] = verdict_name(report.verdict);
    return out;
}

json periodicity_json(const PeriodicityReport& report) {
    json out;
    out["ok"] = report.ok;
    out["period"] = report.period;
    if (!report.ok) out["first_failure"] = report.first_failure;
    return out;
}

json line_uniformity_json(const LineUniformityReport& report) {
    json out;
    out["line_count"] = report.line_count;
    out["expected"] = report.expected;
    out["uniform"] = report.uniform;
    json hist = json::object();
    for (const auto& [occ, lines] : report.occurrence_histogram) hist[std::to_string(occ)] = lines;
    out["occurrence_histogram"] = hist;
    json lines = json::array();
    for (const auto& [line, count] : report.line_counts) {
        json entry;
        entry["line"] = subspace_json(line);
        entry["count"] = count;
        lines.push_back(entry);
    }
    out["lines"] = lines;
    return out;
}

json search_json(const SearchResult& result) {
    json out;
    out["ks"] = result.ks;
    out["search_space_size"] = result.search_space_size;
    json multisets = json::array();
    for (const auto& ms : result.multisets_searched) multisets.push_back(ms);
    out["multisets_searched"] = multisets;
    json hits = json::array();
    for (const auto& hit : result.hits) {
        json h;
        h["ordering"] = hit.ordering;
        json reports = json::object();
        for (const auto& [k, report] : hit.reports) reports[std::to_string(k)] = verification_json(report);
        h["verification"] = reports;
        hits.push_back(h);
    }
    out["hits"] = hits;
    out["hit_count"] = result.hits.size();
    return out;
}

std::string partition_text(const OrbitPartition& partition) {
    std::ostringstream out;
    out << "r = " << partition.class_count() << " ratio classes in m = " << partition.group_count()
        << " Galois group(s)\n";
    for (const auto& cls : partition.classes()) {
        out << "  {";
        for (std::size_t i = 0; i < cls.orbit_exponents.size(); ++i) {
            if (i) out << ", ";
            out << exponent_string(cls.orbit_exponents[i]);
        }
        out << "}\n";
    }
    out << "Frobenius chains:\n";
    for (std::size_t gi = 0; gi < partition.group_count(); ++gi) {
        out << "  group " << gi + 1 << ":";
        for (const std::size_t ci : partition.galois_groups()[gi]) {
            out << " class(" << exponent_string(partition.classes()[ci].representative_exponent) << ")";
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::string subspace_text(const Subspace& s) {
    std::string out = "[";
    for (std::size_t r = 0; r < s.rows().size(); ++r) {
        if (r) out += "; ";
        out += format_int_csv(s.rows()[r]);
    }
    return out + "]";
}

} // namespace

std::string verification_text(const VerificationReport& report, std::size_t list_limit) {
    std::ostringstream out;
    out << "k = " << report.k << ": " << verdict_name(report.verdict) << " (" << report.window_count << " windows, "
        << report.universe_size << " subspaces";
    out << ", histogram {";
    bool first = true;
    for (const auto& [count, subspaces] : report.multiplicity_histogram) {
        if (!first) out << ", ";
        first = false;
        out << count << "x: " << subspaces;
    }
    out << "})\n";
    if (!report.rank_defects.empty()) {
        out << "  rank defects at " << report.rank_defects.size() << " position(s)\n";
    }
    if (!report.missing.empty()) {
        out << "  missing " << report.missing.size() << " subspace(s):\n";
        for (std::size_t i = 0; i < std::min(list_limit, report.missing.size()); ++i) {
            out << "    " << subspace_text(report.missing[i]) << "\n";
        }
        if (report.missing.size() > list_limit) {
            out << "    ... (" << report.missing.size() - list_limit << " more in JSON output)\n";
        }
    }
    if (!report.duplicated.empty()) {
        out << "  duplicated " << report.duplicated.size() << " subspace(s):\n";
        for (std::size_t i = 0; i < std::min(list_limit, report.duplicated.size()); ++i) {
            out << "    " << subspace_text(report.duplicated[i].first) << " at positions";
            for (const std::size_t p : report.duplicated[i].second) out << " " << p;
            out << "\n";
        }
        if (report.duplicated.size() > list_limit) {
            out << "    ... (" << report.duplicated.size() - list_limit << " more in JSON output)\n";
        }
    }
    return out.str();
}

std::string line_uniformity_text(const LineUniformityReport& report) {
    std::ostringstream out;
    out << "line uniformity: " << (report.uniform ? "uniform" : "non-uniform") << " (" << report.line_count
        << " lines, expected " << report.expected << " each; histogram {";
    bool first = true;
    for (const auto& [occ, lines] : report.occurrence_histogram) {
        if (!first) out << ", ";
        first = false;
        out << occ << "x: " << lines;
    }
    out << "})\n";
    return out.str();
}

std::string search_text(const SearchResult& result) {
    std::ostringstream out;
    out << "searched " << result.search_space_size << " rotation-inequivalent ordering(s) over "
        << result.multisets_searched.size() << " multiset(s), window sizes {";
    for (std::size_t i = 0; i < result.ks.size(); ++i) {
        if (i) out << ", ";
        out << result.ks[i];
    }
    out << "}\n";
    out << result.hits.size() << " hit(s):\n";
    for (const auto& hit : result.hits) {
        out << "  (" << format_u32_csv(hit.ordering) << ")\n";
    }
    return out.str();
}

std::string cycle_file_text(const Field& field, const UniversalCycle& cycle) {
    std::ostringstream out;
    out << "# universal cycle over F_" << field.q() << "^" << field.n() << "\n";
    out << "# q=" << field.q() << " n=" << field.n() << " poly=" << format_int_csv(field.modulus_poly()) << "\n";
    out << "# reps=" << format_u32_csv(cycle.spec.rep_exponents) << "\n";
    for (const std::uint32_t e : cycle.beta_exponents) {
        out << format_int_csv(field.coeffs(field.exp(e))) << "\n";
    }
    return out.str();
}

CycleFile read_cycle_file(std::istream& in) {
    CycleFile out;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trimmed(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::istringstream header(t.substr(1));
            std::string token;
            while (header >> token) {
                const auto eq = token.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = token.substr(0, eq);
                const std::string value = token.substr(eq + 1);
                try {
                    if (key == "q") out.q = static_cast<int>(parse_ll(value));
                    else if (key == "n") out.n = static_cast<int>(parse_ll(value));
                    else if (key == "poly") out.poly = parse_int_csv(value);
                    else if (key == "reps") out.reps = parse_u32_csv(value);
                } catch (const Error&) {
                    // free-form comment that happens to contain '='
                }
            }
            continue;
        }
        out.vectors.push_back(parse_int_csv(t));
    }
    return out;
}

CycleFile read_cycle_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open '" + path.string() + "'");
    return read_cycle_file(in);
}

std::string search_records_csv(const SearchResult& result) {
    std::ostringstream out;
    out << "ordering";
    for (const int k : result.ks) out << ",k=" << k;
    out << "\n";
    for (const auto& rec : result.all_records) {
        for (std::size_t i = 0; i < rec.ordering.size(); ++i) {
            if (i) out << " ";
            out << rec.ordering[i];
        }
        for (const bool pass : rec.passed) out << "," << (pass ? "pass" : "fail");
        out << "\n";
    }
    return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    const std::filesystem::path parent = path.has_parent_path() ? path.parent_path() : ".";
    if (!std::filesystem::exists(parent, ec)) {
        fail(errc::io_error, "parent directory '" + parent.string() + "' does not exist");
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io_error, "cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.flush()) fail(errc::io_error, "write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) fail(errc::io_error, "rename to '" + path.string() + "' failed: " + ec.message());
}

} // namespace gruc::io
