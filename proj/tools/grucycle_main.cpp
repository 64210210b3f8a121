// Command-line front end: field setup, orbit reports, cycle construction,
// verification of internal or external cycles, and the dual-universality
// search. All commands are deterministic; identical configurations produce
// byte-identical artifacts.
//
// Exit codes: 0 pass, 1 verified failure (non-universal cycle, failing
// check, empty search), 2 usage/config/IO error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gruc/cycle.hpp"
#include "gruc/field.hpp"
#include "gruc/io.hpp"
#include "gruc/orbits.hpp"
#include "gruc/search.hpp"
#include "gruc/verify.hpp"

namespace {

using gruc::Field;
using json = nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct ContextArgs {
    int q = 0;
    int n = 0;
    std::string poly_csv;
};

void add_context_options(CLI::App* cmd, ContextArgs& args, bool required) {
    auto* q = cmd->add_option("--q", args.q, "prime base field size");
    auto* n = cmd->add_option("--n", args.n, "extension degree");
    auto* p = cmd->add_option("--poly", args.poly_csv,
                              "primitive modulus polynomial, ascending coefficients (e.g. 1,0,1,0,0,1)");
    if (required) {
        q->required();
        n->required();
        p->required();
    }
}

Field make_field_from(const ContextArgs& args) {
    return Field(args.q, args.n, gruc::io::parse_int_csv(args.poly_csv));
}

json context_json(const Field& field) {
    json out;
    out["q"] = field.q();
    out["n"] = field.n();
    out["poly"] = field.modulus_poly();
    return out;
}

void emit(const std::string& format, const json& report, const std::string& text) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

void maybe_write_report(const std::string& path, const json& report) {
    if (!path.empty()) gruc::io::write_file_atomic(path, report.dump(2) + "\n");
}

std::vector<int> default_ks(const Field& field, const std::vector<int>& given) {
    if (!given.empty()) return given;
    return {2, field.n() - 2};
}

int cmd_field_info(const ContextArgs& ctx, const std::string& format, const std::string& report_path) {
    const Field field = make_field_from(ctx);
    const gruc::NonCollapsingVerdict verdict = gruc::check_noncollapsing(field);

    json report = context_json(field);
    report["schema"] = 1;
    report["command"] = "field-info";
    report["poly_pretty"] = gruc::io::poly_pretty(field.modulus_poly());
    report["field_size"] = field.field_size();
    report["group_order"] = field.group_order();
    report["gamma_order"] = field.gamma_order();
    report["fstar_exponents"] = field.fstar_exponents();
    report["noncollapsing"] = gruc::io::noncollapsing_json(verdict);

    std::string text;
    text += "F_" + std::to_string(field.q()) + "^" + std::to_string(field.n()) + " with modulus " +
            gruc::io::poly_pretty(field.modulus_poly()) + " (primitive)\n";
    text += "|E^*| = " + std::to_string(field.group_order()) +
            ", |Gamma| = " + std::to_string(field.gamma_order()) + "\n";
    text += "non-collapsing: " + verdict.describe() + "\n";
    emit(format, report, text);
    maybe_write_report(report_path, report);
    return verdict.pass() ? exit_pass : exit_fail;
}

int cmd_orbits(const ContextArgs& ctx, const std::string& format, const std::string& report_path) {
    const Field field = make_field_from(ctx);
    const gruc::OrbitPartition partition = gruc::orbit_partition(field);

    json report = context_json(field);
    report["schema"] = 1;
    report["command"] = "orbits";
    report.update(gruc::io::partition_json(partition));

    emit(format, report, gruc::io::partition_text(partition));
    maybe_write_report(report_path, report);
    return exit_pass;
}

int cmd_build(const ContextArgs& ctx, const std::string& reps_csv, std::vector<int> ks, const std::string& format,
              const std::string& output_path, const std::string& report_path, bool emit_windows) {
    const Field field = make_field_from(ctx);
    const gruc::OrbitPartition partition = gruc::orbit_partition(field);

    gruc::CycleSpec spec;
    if (reps_csv.empty()) {
        spec = gruc::default_representatives(field, partition);
    } else {
        spec = gruc::make_spec(field, gruc::io::parse_u32_csv(reps_csv), "user-supplied");
    }
    if (ks.empty()) ks = {2};

    const gruc::SpecVerdict verdict = gruc::validate_spec(field, partition, spec);
    json report = context_json(field);
    report["schema"] = 1;
    report["command"] = "build";
    report["spec"] = gruc::io::spec_json(spec);
    report["spec_verdict"] = gruc::io::spec_verdict_json(verdict);
    if (!verdict.ok()) {
        emit(format, report, "spec rejected: " + verdict.describe() + "\n");
        maybe_write_report(report_path, report);
        return exit_fail;
    }

    const gruc::UniversalCycle cycle = gruc::build_beta_sequence(field, partition, spec);
    report["length"] = cycle.length();
    report["product_exponent"] = verdict.product_exponent;
    report["beta_exponents"] = cycle.beta_exponents;

    std::string text;
    text += "representatives (" + spec.source + "): " + gruc::io::format_u32_csv(spec.rep_exponents) + "\n";
    text += "product = a^" + std::to_string(verdict.product_exponent) + " (in alpha*F^*)\n";
    text += "cycle length L = " + std::to_string(cycle.length()) + "\n";

    bool all_pass = true;
    json verifications = json::object();
    json windows = json::object();
    for (const int k : ks) {
        const gruc::VerificationReport vr = gruc::verify_universal(field, cycle, k);
        verifications[std::to_string(k)] = gruc::io::verification_json(vr);
        text += gruc::io::verification_text(vr);
        all_pass = all_pass && vr.universal();
        if (emit_windows) {
            json ws = json::array();
            for (const auto& w : gruc::build_windows(field, cycle, k)) ws.push_back(gruc::io::subspace_json(w));
            windows[std::to_string(k)] = ws;
        }
    }
    report["verification"] = verifications;
    if (emit_windows) report["windows"] = windows;

    const gruc::PeriodicityReport pr = gruc::verify_periodicity(field, cycle);
    report["periodicity"] = gruc::io::periodicity_json(pr);
    text += std::string("periodicity W_{i+r} = alpha*W_i: ") + (pr.ok ? "pass" : "FAIL") + "\n";
    all_pass = all_pass && pr.ok;

    const gruc::LineUniformityReport lr = gruc::verify_line_uniformity(field, cycle);
    report["line_uniformity"] = gruc::io::line_uniformity_json(lr);
    text += gruc::io::line_uniformity_text(lr);
    all_pass = all_pass && lr.uniform;

    emit(format, report, text);
    if (!output_path.empty()) {
        gruc::io::write_file_atomic(output_path, gruc::io::cycle_file_text(field, cycle));
    }
    maybe_write_report(report_path, report);
    return all_pass ? exit_pass : exit_fail;
}

int cmd_verify(ContextArgs ctx, const std::string& input_path, const std::vector<int>& ks_given,
               const std::string& format, const std::string& report_path) {
    const gruc::io::CycleFile file = gruc::io::read_cycle_file(input_path);
    if (file.vectors.empty()) gruc::fail(gruc::errc::bad_input, "no vectors in '" + input_path + "'");

    // flags take precedence; otherwise the file header supplies the context
    if (ctx.q == 0) ctx.q = file.q;
    if (ctx.n == 0) ctx.n = file.n;
    if (ctx.poly_csv.empty() && !file.poly.empty()) ctx.poly_csv = gruc::io::format_int_csv(file.poly);
    if (ctx.q == 0 || ctx.n == 0) {
        gruc::fail(gruc::errc::bad_input, "q and n must come from --q/--n or the file header");
    }

    std::vector<int> ks = ks_given;
    if (ks.empty()) ks = {2};

    json report;
    report["schema"] = 1;
    report["command"] = "verify";
    report["q"] = ctx.q;
    report["n"] = ctx.n;
    report["input"] = input_path;
    report["length"] = file.vectors.size();

    std::string text;
    bool all_pass = true;
    json verifications = json::object();
    for (const int k : ks) {
        const gruc::VerificationReport vr = gruc::verify_universal(ctx.q, ctx.n, file.vectors, k);
        verifications[std::to_string(k)] = gruc::io::verification_json(vr);
        text += gruc::io::verification_text(vr);
        all_pass = all_pass && vr.universal();
    }
    report["verification"] = verifications;

    const gruc::LineUniformityReport lr = gruc::verify_line_uniformity(ctx.q, ctx.n, file.vectors);
    report["line_uniformity"] = gruc::io::line_uniformity_json(lr);
    text += gruc::io::line_uniformity_text(lr);

    // periodicity is defined for spec-built cycles: needs the field and r
    if (!ctx.poly_csv.empty() && !file.reps.empty()) {
        const Field field = make_field_from(ctx);
        std::vector<Field::Elem> seq;
        seq.reserve(file.vectors.size());
        for (const auto& v : file.vectors) seq.push_back(field.from_coeffs(v));
        const gruc::PeriodicityReport pr = gruc::verify_periodicity(field, seq, file.reps.size());
        report["periodicity"] = gruc::io::periodicity_json(pr);
        text += std::string("periodicity W_{i+r} = alpha*W_i: ") + (pr.ok ? "pass" : "FAIL") + "\n";
    }

    emit(format, report, text);
    maybe_write_report(report_path, report);
    return all_pass ? exit_pass : exit_fail;
}

int cmd_search(const ContextArgs& ctx, const std::string& reps_csv, const std::vector<int>& ks_given,
               const std::string& mode_name, std::uint64_t cap, const std::string& format,
               const std::string& report_path, const std::string& csv_path) {
    const Field field = make_field_from(ctx);
    const gruc::OrbitPartition partition = gruc::orbit_partition(field);

    gruc::SearchTask task;
    if (reps_csv.empty()) {
        task.rep_multiset = gruc::default_representatives(field, partition).rep_exponents;
    } else {
        task.rep_multiset = gruc::io::parse_u32_csv(reps_csv);
    }
    task.ks = default_ks(field, ks_given);
    task.cap = cap;
    task.record_all = !csv_path.empty();
    if (mode_name == "twists") {
        task.mode = gruc::SearchTask::Mode::orderings_plus_twists;
    } else if (mode_name != "orderings") {
        gruc::fail(gruc::errc::bad_input, "--mode must be 'orderings' or 'twists'");
    }

    const gruc::SearchResult result = gruc::search_dual(field, partition, task);
    std::cerr << "search took " << result.elapsed_seconds << " s\n";

    json report = context_json(field);
    report["schema"] = 1;
    report["command"] = "search-dual";
    report.update(gruc::io::search_json(result));

    emit(format, report, gruc::io::search_text(result));
    maybe_write_report(report_path, report);
    if (!csv_path.empty()) {
        gruc::io::write_file_atomic(csv_path, gruc::io::search_records_csv(result));
    }
    return result.hits.empty() ? exit_fail : exit_pass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal cycles on the Grassmannian G_q(2,n) via the projective-ratio construction"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string report_path;

    ContextArgs ctx;
    std::string reps_csv;
    std::vector<int> ks;
    std::string input_path;
    std::string output_path;
    std::string csv_path;
    std::string mode_name = "orderings";
    std::uint64_t cap = 10'000'000;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--report", report_path, "write the JSON report to this file");
    };

    auto* info = app.add_subcommand("field-info", "field parameters and the non-collapsing check");
    add_context_options(info, ctx, true);
    add_common(info);

    auto* orbits = app.add_subcommand("orbits", "Mobius orbit partition of E^* \\ F^* with Galois grouping");
    add_context_options(orbits, ctx, true);
    add_common(orbits);

    bool emit_windows = false;
    auto* build = app.add_subcommand("build", "construct a universal cycle and certify it");
    add_context_options(build, ctx, true);
    build->add_option("--reps", reps_csv, "explicit representative exponents in order (default: constructed)");
    build->add_option("--k", ks, "window sizes to certify (default: 2)")->delimiter(',');
    build->add_option("--output", output_path, "write the cycle file here");
    build->add_flag("--windows", emit_windows, "include the canonical window subspaces in the JSON report");
    add_common(build);

    auto* verify = app.add_subcommand("verify", "certify a cycle file against the enumerated Grassmannian");
    add_context_options(verify, ctx, false);
    verify->add_option("--input", input_path, "cycle file (vectors as comma-separated digits)")->required();
    verify->add_option("--k", ks, "window sizes to certify (default: 2)")->delimiter(',');
    add_common(verify);

    auto* search = app.add_subcommand("search-dual", "exhaustive ordering search for simultaneous universality");
    add_context_options(search, ctx, true);
    search->add_option("--reps", reps_csv, "representative multiset (default: constructed)");
    search->add_option("--k", ks, "window sizes, all must pass (default: 2,n-2)")->delimiter(',');
    search->add_option("--mode", mode_name, "orderings | twists (also vary the alpha-twist placement)");
    search->add_option("--cap", cap, "maximum number of orderings to enumerate");
    search->add_option("--csv", csv_path, "write per-ordering pass/fail flags as CSV");
    add_common(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(info)) return cmd_field_info(ctx, format, report_path);
        if (app.got_subcommand(orbits)) return cmd_orbits(ctx, format, report_path);
        if (app.got_subcommand(build)) return cmd_build(ctx, reps_csv, ks, format, output_path, report_path, emit_windows);
        if (app.got_subcommand(verify)) return cmd_verify(ctx, input_path, ks, format, report_path);
        if (app.got_subcommand(search)) return cmd_search(ctx, reps_csv, ks, mode_name, cap, format, report_path, csv_path);
    } catch (const gruc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // a collapsing instance is a verified negative result, not misuse
        return e.code() == gruc::errc::collapsing_action ? exit_fail : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
