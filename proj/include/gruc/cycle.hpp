#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gruc/grassmann.hpp"
#include "gruc/orbits.hpp"

namespace gruc {

/// An ordered representative system (c_1, ..., c_r) as discrete logs, one
/// per ratio class, whose product lies in alpha * F^*. Carries the field
/// parameters so it is self-describing in files and reports.
struct CycleSpec {
    int q = 0;
    int n = 0;
    std::vector<int> modulus_poly;
    std::vector<std::uint32_t> rep_exponents;
    std::string source;  // "default(...)", "user", "search"

    // The generator of Gamma used throughout is alpha itself.
    static constexpr std::uint32_t alpha_exponent = 1;

    std::size_t r() const noexcept { return rep_exponents.size(); }
};

CycleSpec make_spec(const Field& field, std::vector<std::uint32_t> rep_exponents, std::string source);

/// Default representative system: scan exponents upward for the first g_1
/// with alpha*g_1 in the Mobius orbit of g_1, put its twisted Frobenius
/// orbit {alpha*g_1, g_1^q, g_1^(q^2), ...} first, and give every other
/// Galois group the plain Frobenius orbit of its minimum-exponent member.
/// Candidates failing the product condition are skipped (this is how the
/// twist can land in a different group when needed). Throws
/// no_twistable_representative / product_condition_failed.
CycleSpec default_representatives(const Field& field, const OrbitPartition& partition);

/// Structural validation of a representative system: (a) the classes of the
/// c_i cover every ratio class exactly once, (b) the exponent sum e has
/// alpha^e in alpha * F^*. Violations are verdict content, not errors.
struct SpecVerdict {
    bool coverage_ok = false;
    bool product_ok = false;
    std::uint64_t product_exponent = 0;  // sum of reps mod q^n - 1
    std::vector<std::size_t> uncovered_classes;
    std::vector<std::size_t> multiply_covered_classes;
    std::vector<std::uint32_t> invalid_exponents;  // reps landing in F^* or out of range

    bool ok() const noexcept { return coverage_ok && product_ok && invalid_exponents.empty(); }
    std::string describe() const;
};

SpecVerdict validate_spec(const Field& field, const OrbitPartition& partition, const CycleSpec& spec);

/// beta_0 = 1, beta_i = beta_{i-1} * c_{((i-1) mod r) + 1}, as discrete
/// logs, for i = 0 .. L-1 with L = r * |Gamma|.
struct UniversalCycle {
    CycleSpec spec;
    std::vector<std::uint32_t> beta_exponents;

    std::size_t r() const noexcept { return spec.rep_exponents.size(); }
    std::size_t length() const noexcept { return beta_exponents.size(); }
};

/// Validates the spec first; throws spec_invalid with the verdict text.
UniversalCycle build_beta_sequence(const Field& field, const OrbitPartition& partition, const CycleSpec& spec);

/// W_i = span{beta_i, beta_{i-1}, ..., beta_{i-k+1}} with cyclic indices,
/// one window per position. Windows of rank below k are returned as their
/// actual span; only the k = 2 case is guaranteed full rank. Throws
/// window_size_out_of_range unless 2 <= k <= n.
std::vector<Subspace> build_windows(const Field& field, const UniversalCycle& cycle, int k);

} // namespace gruc
