#include "gruc/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gruc {

namespace {

constexpr std::uint32_t npos32 = static_cast<std::uint32_t>(-1);

int small_inverse(int a, int q) {
    for (int b = 1; b < q; ++b) {
        if (a * b % q == 1) return b;
    }
    return 0;
}

} // namespace

std::vector<MobiusTransform> enumerate_pgl2(int q) {
    if (!is_prime(static_cast<std::uint64_t>(q))) {
        fail(errc::non_prime_modulus, "q = " + std::to_string(q) + " is not prime");
    }
    std::set<std::array<int, 4>> seen;
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            for (int c = 0; c < q; ++c) {
                for (int d = 0; d < q; ++d) {
                    if ((a * d - b * c) % q == 0) continue;
                    int s = 1;
                    for (const int v : {a, b, c, d}) {
                        if (v != 0) {
                            s = small_inverse(v, q);
                            break;
                        }
                    }
                    seen.insert({a * s % q, b * s % q, c * s % q, d * s % q});
                }
            }
        }
    }
    std::vector<MobiusTransform> out;
    out.reserve(seen.size());
    for (const auto& m : seen) out.push_back(MobiusTransform{m[0], m[1], m[2], m[3]});
    return out;
}

Field::Elem mobius_apply(const Field& field, const MobiusTransform& t, Field::Elem z) {
    if (field.in_base_field(z)) {
        fail(errc::input_in_base_field, "Mobius action is taken on E \\ F only");
    }
    const Field::Elem num = field.add(field.mul(field.scalar(t.a), z), field.scalar(t.b));
    const Field::Elem den = field.add(field.mul(field.scalar(t.c), z), field.scalar(t.d));
    // den = 0 would force z = -d/c in F, excluded above
    return field.div(num, den);
}

bool RatioClass::contains(std::uint32_t e) const {
    return std::binary_search(orbit_exponents.begin(), orbit_exponents.end(), e);
}

RatioClass pgl_orbit(const Field& field, Field::Elem z) {
    if (field.in_base_field(z)) {
        fail(errc::input_in_base_field, "orbit is defined on E \\ F only");
    }
    // The transform list is the whole group, so one sweep is already closed.
    std::set<std::uint32_t> exps;
    for (const auto& t : enumerate_pgl2(field.q())) {
        exps.insert(field.discrete_log(mobius_apply(field, t, z)));
    }
    RatioClass out;
    out.orbit_exponents.assign(exps.begin(), exps.end());
    out.representative_exponent = out.orbit_exponents.front();
    return out;
}

RatioClass projective_ratio(const Field& field, Field::Elem v, Field::Elem w) {
    if (v == 0 || w == 0) {
        fail(errc::ratio_in_base_field, "inputs span a line or a point, not a plane");
    }
    const Field::Elem ratio = field.div(v, w);
    if (field.in_base_field(ratio)) {
        fail(errc::ratio_in_base_field, "inputs span a line, not a plane");
    }
    return pgl_orbit(field, ratio);
}

std::vector<std::uint32_t> galois_orbit(const Field& field, Field::Elem z) {
    if (z == 0) return {};
    const std::uint64_t order = field.group_order();
    std::set<std::uint32_t> exps;
    std::uint64_t e = field.discrete_log(z);
    while (!exps.contains(static_cast<std::uint32_t>(e))) {
        exps.insert(static_cast<std::uint32_t>(e));
        e = e * static_cast<std::uint64_t>(field.q()) % order;
    }
    return {exps.begin(), exps.end()};
}

std::size_t collapse_degree(const Field& field, Field::Elem z) {
    const RatioClass mobius = pgl_orbit(field, z);
    const std::vector<std::uint32_t> galois = galois_orbit(field, z);
    std::size_t count = 0;
    for (const std::uint32_t e : galois) {
        if (mobius.contains(e)) ++count;
    }
    return count;
}

std::string NonCollapsingVerdict::describe() const {
    std::string out = "gcd(n, q(q^2-1)) = " + std::to_string(gcd_value) + " -> " + (gcd_pass ? "pass" : "fail");
    if (exhaustive_checked) {
        if (exhaustive_pass) {
            out += "; exhaustive m_z = 1 confirmed on all of E \\ F";
        } else {
            out += "; collapse at alpha^" + std::to_string(*counterexample_exponent) +
                   " with m_z = " + std::to_string(counterexample_degree);
        }
    }
    return out;
}

NonCollapsingVerdict check_noncollapsing(int q, int n) {
    NonCollapsingVerdict v;
    v.gcd_value = std::gcd(static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q * q - 1));
    v.gcd_pass = v.gcd_value == 1;
    return v;
}

NonCollapsingVerdict check_noncollapsing(const Field& field) {
    NonCollapsingVerdict v = check_noncollapsing(field.q(), field.n());
    v.exhaustive_checked = true;
    v.exhaustive_pass = true;
    for (std::uint64_t e = 1; e < field.group_order(); ++e) {
        if (field.exponent_in_fstar(e)) continue;
        const std::size_t m = collapse_degree(field, field.exp(static_cast<std::int64_t>(e)));
        if (m != 1) {
            v.exhaustive_pass = false;
            v.counterexample_exponent = static_cast<std::uint32_t>(e);
            v.counterexample_degree = m;
            break;
        }
    }
    return v;
}

std::size_t OrbitPartition::class_of(std::uint64_t exponent) const {
    const std::uint32_t c = class_of_.at(exponent % class_of_.size());
    return c == npos32 ? npos : static_cast<std::size_t>(c);
}

std::size_t OrbitPartition::group_of_class(std::size_t class_index) const {
    return group_of_.at(class_index);
}

OrbitPartition orbit_partition(const Field& field) {
    const std::uint64_t order = field.group_order();
    const int q = field.q();
    const auto transforms = enumerate_pgl2(q);

    OrbitPartition p;
    p.class_of_.assign(order, npos32);

    // Ascending sweep: the first unvisited exponent of an orbit is its
    // minimum, so classes come out sorted by representative.
    std::vector<bool> visited(order, false);
    for (const std::uint32_t e : field.fstar_exponents()) visited[e] = true;
    for (std::uint64_t e = 0; e < order; ++e) {
        if (visited[e]) continue;
        const Field::Elem z = field.exp(static_cast<std::int64_t>(e));
        std::set<std::uint32_t> exps;
        for (const auto& t : transforms) {
            exps.insert(field.discrete_log(mobius_apply(field, t, z)));
        }
        RatioClass cls;
        cls.orbit_exponents.assign(exps.begin(), exps.end());
        cls.representative_exponent = cls.orbit_exponents.front();
        const auto idx = static_cast<std::uint32_t>(p.classes_.size());
        for (const std::uint32_t x : cls.orbit_exponents) {
            visited[x] = true;
            p.class_of_[x] = idx;
        }
        p.classes_.push_back(std::move(cls));
    }

    // Exhaustive non-collapsing check: walk each element's Galois orbit and
    // count how many conjugates stay in its own Mobius class.
    for (std::uint64_t e = 1; e < order; ++e) {
        if (field.exponent_in_fstar(e)) continue;
        const std::uint32_t cls = p.class_of_[e];
        std::size_t m = 0;
        std::uint64_t x = e;
        do {
            if (p.class_of_[x] == cls) ++m;
            x = x * static_cast<std::uint64_t>(q) % order;
        } while (x != e);
        if (m != 1) {
            fail(errc::collapsing_action,
                 "m_z = " + std::to_string(m) + " at z = alpha^" + std::to_string(e) +
                     "; the Mobius and Galois orbits are not transversal");
        }
    }

    // Galois grouping: Frobenius sends class to class (the actions commute),
    // so follow representative -> representative^q chains.
    const std::size_t r = p.classes_.size();
    std::vector<std::size_t> next(r);
    for (std::size_t i = 0; i < r; ++i) {
        const std::uint64_t fe =
            static_cast<std::uint64_t>(p.classes_[i].representative_exponent) * static_cast<std::uint64_t>(q) % order;
        next[i] = p.class_of_[fe];
    }
    p.group_of_.assign(r, 0);
    std::vector<bool> grouped(r, false);
    for (std::size_t i = 0; i < r; ++i) {
        if (grouped[i]) continue;
        std::vector<std::size_t> chain;
        std::size_t j = i;
        while (!grouped[j]) {
            grouped[j] = true;
            p.group_of_[j] = p.groups_.size();
            chain.push_back(j);
            j = next[j];
        }
        p.groups_.push_back(std::move(chain));
    }
    return p;
}

} // namespace gruc
