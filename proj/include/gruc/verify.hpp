#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gruc/cycle.hpp"
#include "gruc/grassmann.hpp"

namespace gruc {

enum class Verdict { universal, almost_universal, fail };

const char* verdict_name(Verdict v) noexcept;

/// Result of comparing a vector sequence's k-windows against the
/// independently enumerated G_q(k,n). The builder's bookkeeping is never
/// consulted: windows are re-spanned from the raw vectors and matched
/// against the enumeration.
struct VerificationReport {
    int k = 0;
    std::uint64_t universe_size = 0;
    std::size_t window_count = 0;
    /// multiplicity -> number of subspaces seen that many times (counts >= 1)
    std::map<std::uint64_t, std::uint64_t> multiplicity_histogram;
    std::vector<Subspace> missing;  // canonical order
    std::vector<std::pair<Subspace, std::vector<std::size_t>>> duplicated;
    std::vector<std::size_t> rank_defects;  // window positions with rank < k
    Verdict verdict = Verdict::fail;

    bool universal() const noexcept { return verdict == Verdict::universal; }
};

/// Cyclic window i = span{v_i, v_{i-1}, ..., v_{i-k+1}}, i = 0..L-1.
/// Works on raw digit vectors so external cycles need no field context.
/// Throws zero_vector_in_sequence, dimension_out_of_range.
VerificationReport verify_universal(int q, int n, const std::vector<std::vector<int>>& sequence, int k);
VerificationReport verify_universal(const Field& field, std::span<const Field::Elem> sequence, int k);
VerificationReport verify_universal(const Field& field, const UniversalCycle& cycle, int k);

/// Checks W_{i+r} = alpha * W_i (as subspaces, k = 2 windows) at every
/// position. Needs the field: alpha-scaling is extension-field
/// multiplication.
struct PeriodicityReport {
    bool ok = false;
    std::size_t period = 0;  // r
    std::size_t first_failure = static_cast<std::size_t>(-1);
};

PeriodicityReport verify_periodicity(const Field& field, std::span<const Field::Elem> sequence, std::size_t period);
PeriodicityReport verify_periodicity(const Field& field, const UniversalCycle& cycle);

/// Occurrences of each line [v_i] among the independently enumerated
/// 1-subspaces. Uniform when every line is hit exactly L / |G_q(1,n)| times.
struct LineUniformityReport {
    std::size_t line_count = 0;
    std::uint64_t expected = 0;  // L / line_count when divisible, else 0
    bool uniform = false;
    std::vector<std::pair<Subspace, std::uint64_t>> line_counts;  // canonical order
    std::map<std::uint64_t, std::uint64_t> occurrence_histogram;  // occurrences -> #lines
};

LineUniformityReport verify_line_uniformity(int q, int n, const std::vector<std::vector<int>>& sequence);
LineUniformityReport verify_line_uniformity(const Field& field, std::span<const Field::Elem> sequence);
LineUniformityReport verify_line_uniformity(const Field& field, const UniversalCycle& cycle);

/// The cycle's beta values as field elements.
std::vector<Field::Elem> beta_vectors(const Field& field, const UniversalCycle& cycle);

} // namespace gruc
