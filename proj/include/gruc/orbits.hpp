#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gruc/field.hpp"

namespace gruc {

/// An element of PGL_2(F_q): z -> (az+b)/(cz+d) with ad-bc != 0, stored with
/// the first nonzero entry of (a,b,c,d) scaled to 1, which is unique per
/// projective class.
struct MobiusTransform {
    int a = 1, b = 0, c = 0, d = 1;

    bool is_identity() const noexcept { return a == 1 && b == 0 && c == 0 && d == 1; }
    auto operator<=>(const MobiusTransform&) const = default;
};

/// All q(q-1)(q+1) canonical transforms, sorted, identity included.
std::vector<MobiusTransform> enumerate_pgl2(int q);

/// (az+b)/(cz+d) for z in E \ F. The denominator cannot vanish there, and
/// the image stays in E \ F. Throws input_in_base_field.
Field::Elem mobius_apply(const Field& field, const MobiusTransform& t, Field::Elem z);

/// One PGL_2(F_q)-orbit inside E^* \ F^*, as a sorted set of discrete logs.
/// The representative is the minimum exponent of the orbit.
struct RatioClass {
    std::uint32_t representative_exponent = 0;
    std::vector<std::uint32_t> orbit_exponents;

    bool contains(std::uint32_t e) const;
    bool operator==(const RatioClass&) const = default;
};

/// Full Mobius orbit of z in E \ F. Throws input_in_base_field.
RatioClass pgl_orbit(const Field& field, Field::Elem z);

/// The class of v/w, defined when span{v,w} is a plane. Throws
/// ratio_in_base_field when v, w fail to span one.
RatioClass projective_ratio(const Field& field, Field::Elem v, Field::Elem w);

/// {z, z^q, ..., z^(q^(n-1))} as sorted exponents; {0} for z in F^*.
std::vector<std::uint32_t> galois_orbit(const Field& field, Field::Elem z);

/// m_z = |PGL_2(F)*z  intersect  <sigma>*z|, at least 1.
std::size_t collapse_degree(const Field& field, Field::Elem z);

struct NonCollapsingVerdict {
    std::uint64_t gcd_value = 0;  // gcd(n, q(q^2-1))
    bool gcd_pass = false;
    bool exhaustive_checked = false;
    bool exhaustive_pass = false;
    std::optional<std::uint32_t> counterexample_exponent;  // smallest z with m_z > 1
    std::size_t counterexample_degree = 0;

    bool pass() const noexcept { return exhaustive_checked ? exhaustive_pass : gcd_pass; }
    std::string describe() const;
};

/// The gcd(n, q(q^2-1)) = 1 sufficient condition alone...
NonCollapsingVerdict check_noncollapsing(int q, int n);
/// ...and with a context: also the exhaustive m_z = 1 confirmation over all
/// of E \ F, reporting the first counterexample. The gcd test is advisory;
/// the exhaustive result decides.
NonCollapsingVerdict check_noncollapsing(const Field& field);

/// The decomposition of E^* \ F^* into PGL_2(F_q)-orbits, grouped into
/// Galois groups. classes are sorted by representative exponent;
/// galois_groups chains class indices in Frobenius-application order
/// starting from each group's smallest representative, groups sorted by
/// that representative.
class OrbitPartition {
public:
    const std::vector<RatioClass>& classes() const noexcept { return classes_; }
    const std::vector<std::vector<std::size_t>>& galois_groups() const noexcept { return groups_; }
    std::size_t class_count() const noexcept { return classes_.size(); }  // r
    std::size_t group_count() const noexcept { return groups_.size(); }   // m

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    /// Class index of alpha^e, npos for exponents in F^*.
    std::size_t class_of(std::uint64_t exponent) const;
    std::size_t group_of_class(std::size_t class_index) const;

private:
    friend OrbitPartition orbit_partition(const Field& field);

    std::vector<RatioClass> classes_;
    std::vector<std::vector<std::size_t>> groups_;
    std::vector<std::uint32_t> class_of_;  // exponent -> class index, npos32 for F^*
    std::vector<std::size_t> group_of_;    // class index -> group index
};

/// Builds the full partition; throws collapsing_action when the exhaustive
/// m_z check fails (the gcd condition is never trusted on its own).
OrbitPartition orbit_partition(const Field& field);

} // namespace gruc
