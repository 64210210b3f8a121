#include "gruc/verify.hpp"

#include <algorithm>

namespace gruc {

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::universal: return "universal";
        case Verdict::almost_universal: return "almost_universal";
        case Verdict::fail: return "fail";
    }
    return "unknown";
}

namespace {

std::size_t universe_index(const std::vector<Subspace>& universe, const Subspace& s) {
    const auto it = std::lower_bound(universe.begin(), universe.end(), s);
    if (it == universe.end() || !(*it == s)) {
        fail(errc::bad_input, "subspace missing from the enumerated universe");
    }
    return static_cast<std::size_t>(it - universe.begin());
}

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int d) { return d == 0; });
}

std::vector<std::vector<int>> to_digit_vectors(const Field& field, std::span<const Field::Elem> sequence) {
    std::vector<std::vector<int>> out;
    out.reserve(sequence.size());
    for (const Field::Elem e : sequence) out.push_back(field.coeffs(e));
    return out;
}

} // namespace

std::vector<Field::Elem> beta_vectors(const Field& field, const UniversalCycle& cycle) {
    std::vector<Field::Elem> out;
    out.reserve(cycle.length());
    for (const std::uint32_t e : cycle.beta_exponents) out.push_back(field.exp(e));
    return out;
}

VerificationReport verify_universal(int q, int n, const std::vector<std::vector<int>>& sequence, int k) {
    if (sequence.empty()) fail(errc::bad_input, "empty vector sequence");
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i].size() != static_cast<std::size_t>(n)) {
            fail(errc::bad_input, "vector at position " + std::to_string(i) + " has wrong length");
        }
        if (all_zero(sequence[i])) {
            fail(errc::zero_vector_in_sequence, "zero vector at position " + std::to_string(i));
        }
    }
    if (k < 1 || k > n) {
        fail(errc::dimension_out_of_range, "window size outside [1, n]");
    }

    VerificationReport report;
    report.k = k;
    report.window_count = sequence.size();

    const std::vector<Subspace> universe = enumerate_grassmannian(q, n, k);
    report.universe_size = universe.size();

    std::vector<std::vector<std::size_t>> positions(universe.size());
    const std::size_t length = sequence.size();
    std::vector<std::vector<int>> vecs(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
            // (i - j) mod length; j may exceed length for short external input
            vecs[j] = sequence[(i + length - j % length) % length];
        }
        const Subspace w = span(q, vecs);
        if (w.k() < k) {
            report.rank_defects.push_back(i);
            continue;
        }
        positions[universe_index(universe, w)].push_back(i);
    }

    for (std::size_t id = 0; id < universe.size(); ++id) {
        const std::size_t count = positions[id].size();
        if (count == 0) {
            report.missing.push_back(universe[id]);
        } else {
            ++report.multiplicity_histogram[count];
            if (count > 1) report.duplicated.emplace_back(universe[id], positions[id]);
        }
    }

    if (report.missing.empty() && report.rank_defects.empty()) {
        const bool exactly_once = report.multiplicity_histogram.size() == 1 &&
                                  report.multiplicity_histogram.begin()->first == 1 &&
                                  report.multiplicity_histogram.begin()->second == report.universe_size;
        report.verdict = exactly_once ? Verdict::universal : Verdict::almost_universal;
    } else {
        report.verdict = Verdict::fail;
    }
    return report;
}

VerificationReport verify_universal(const Field& field, std::span<const Field::Elem> sequence, int k) {
    return verify_universal(field.q(), field.n(), to_digit_vectors(field, sequence), k);
}

VerificationReport verify_universal(const Field& field, const UniversalCycle& cycle, int k) {
    const std::vector<Field::Elem> seq = beta_vectors(field, cycle);
    return verify_universal(field, seq, k);
}

PeriodicityReport verify_periodicity(const Field& field, std::span<const Field::Elem> sequence, std::size_t period) {
    if (sequence.empty()) fail(errc::bad_input, "empty vector sequence");
    if (period == 0 || period > sequence.size()) fail(errc::bad_input, "period outside [1, L]");
    PeriodicityReport report;
    report.period = period;
    const std::size_t length = sequence.size();
    const Field::Elem a = field.alpha();

    report.ok = true;
    for (std::size_t i = 0; i < length; ++i) {
        const Subspace shifted = span(field, std::vector<Field::Elem>{
                                                 sequence[(i + period) % length],
                                                 sequence[(i + period + length - 1) % length]});
        const Subspace scaled = span(field, std::vector<Field::Elem>{
                                                field.mul(a, sequence[i]),
                                                field.mul(a, sequence[(i + length - 1) % length])});
        if (!(shifted == scaled)) {
            report.ok = false;
            report.first_failure = i;
            break;
        }
    }
    return report;
}

PeriodicityReport verify_periodicity(const Field& field, const UniversalCycle& cycle) {
    const std::vector<Field::Elem> seq = beta_vectors(field, cycle);
    return verify_periodicity(field, seq, cycle.r());
}

LineUniformityReport verify_line_uniformity(int q, int n, const std::vector<std::vector<int>>& sequence) {
    if (sequence.empty()) fail(errc::bad_input, "empty vector sequence");
    LineUniformityReport report;
    const std::vector<Subspace> lines = enumerate_grassmannian(q, n, 1);
    report.line_count = lines.size();

    std::vector<std::uint64_t> counts(lines.size(), 0);
    for (const auto& v : sequence) {
        if (v.size() != static_cast<std::size_t>(n)) fail(errc::bad_input, "vector has wrong length");
        if (all_zero(v)) fail(errc::zero_vector_in_sequence, "zero vector in sequence");
        ++counts[universe_index(lines, span(q, {v}))];
    }

    report.expected = sequence.size() % lines.size() == 0
                          ? static_cast<std::uint64_t>(sequence.size() / lines.size())
                          : 0;
    report.uniform = report.expected > 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        report.line_counts.emplace_back(lines[i], counts[i]);
        ++report.occurrence_histogram[counts[i]];
        if (counts[i] != report.expected) report.uniform = false;
    }
    return report;
}

LineUniformityReport verify_line_uniformity(const Field& field, std::span<const Field::Elem> sequence) {
    return verify_line_uniformity(field.q(), field.n(), to_digit_vectors(field, sequence));
}

LineUniformityReport verify_line_uniformity(const Field& field, const UniversalCycle& cycle) {
    const std::vector<Field::Elem> seq = beta_vectors(field, cycle);
    return verify_line_uniformity(field, seq);
}

} // namespace gruc
