#include <doctest.h>

#include <algorithm>
#include <map>

#include "contexts.hpp"
#include "gruc/grassmann.hpp"
#include "gruc/orbits.hpp"

using gruc::Error;
using gruc::errc;
using gruc::Field;
using gruc::MobiusTransform;
using gruc::OrbitPartition;

namespace {

// the five Mobius orbits of G_2(2,5), frozen
const std::vector<std::vector<std::uint32_t>> orbits25 = {
    {1, 13, 14, 17, 18, 30},
    {2, 3, 5, 26, 28, 29},
    {4, 6, 10, 21, 25, 27},
    {7, 9, 15, 16, 22, 24},
    {8, 11, 12, 19, 20, 23},
};

} // namespace

TEST_CASE("PGL2 enumeration sizes") {
    const auto g2 = gruc::enumerate_pgl2(2);
    CHECK(g2.size() == 6);  // PGL_2(F_2) = S_3
    const auto g3 = gruc::enumerate_pgl2(3);
    CHECK(g3.size() == 24);
    CHECK(gruc::enumerate_pgl2(5).size() == 120);
    const auto is_id = [](const MobiusTransform& t) { return t.is_identity(); };
    CHECK(std::any_of(g2.begin(), g2.end(), is_id));
    CHECK(std::any_of(g3.begin(), g3.end(), is_id));
}

TEST_CASE("mobius_apply basics") {
    const Field& f = f25();
    const MobiusTransform id;
    CHECK(gruc::mobius_apply(f, id, f.exp(7)) == f.exp(7));

    // (1 1; 0 1) sends z = 1/(alpha-1) to alpha*z; here z = a^13 since a^18 = a+1
    const MobiusTransform shear{1, 1, 0, 1};
    CHECK(f.discrete_log(f.add(f.alpha(), f.one())) == 18);
    CHECK(gruc::mobius_apply(f, shear, f.exp(13)) == f.exp(14));

    const MobiusTransform inversion{0, 1, 1, 0};
    CHECK(gruc::mobius_apply(f, inversion, f.alpha()) == f.exp(30));

    CHECK_THROWS_AS(gruc::mobius_apply(f, id, f.one()), Error);
    try {
        gruc::mobius_apply(f, shear, f.scalar(1));
    } catch (const Error& e) {
        CHECK(e.code() == errc::input_in_base_field);
    }
}

TEST_CASE("pgl_orbit matches the worked example") {
    const Field& f = f25();
    CHECK(gruc::pgl_orbit(f, f.alpha()).orbit_exponents == orbits25[0]);
    CHECK(gruc::pgl_orbit(f, f.exp(8)).orbit_exponents == orbits25[4]);
    for (const auto& orbit : orbits25) {
        for (const auto e : orbit) {
            CHECK(gruc::pgl_orbit(f, f.exp(e)).orbit_exponents == orbit);  // well-defined on members
        }
    }
}

TEST_CASE("projective ratio classes") {
    const Field& f = f25();
    CHECK(gruc::projective_ratio(f, f.exp(3), f.one()).orbit_exponents == orbits25[1]);
    CHECK(gruc::projective_ratio(f, f.exp(13), f.one()) == gruc::projective_ratio(f, f.alpha(), f.one()));

    // scalar rescaling of either argument is itself a Mobius map
    const Field& g = f35();
    const auto base = gruc::projective_ratio(g, g.exp(7), g.exp(3));
    for (int lam = 1; lam < 3; ++lam) {
        for (int mu = 1; mu < 3; ++mu) {
            const auto v = g.mul(g.scalar(lam), g.exp(7));
            const auto w = g.mul(g.scalar(mu), g.exp(3));
            CHECK(gruc::projective_ratio(g, v, w) == base);
        }
    }

    CHECK_THROWS_AS(gruc::projective_ratio(f, f.alpha(), f.alpha()), Error);
    CHECK_THROWS_AS(gruc::projective_ratio(f, f.zero(), f.one()), Error);
    try {
        gruc::projective_ratio(f, f.exp(5), f.exp(5));
    } catch (const Error& e) {
        CHECK(e.code() == errc::ratio_in_base_field);
    }
}

TEST_CASE("galois orbits") {
    const Field& g = f35();
    CHECK(gruc::galois_orbit(g, g.alpha()) == std::vector<std::uint32_t>{1, 3, 9, 27, 81});
    CHECK(gruc::galois_orbit(g, g.exp(2)) == std::vector<std::uint32_t>{2, 6, 18, 54, 162});
    CHECK(gruc::galois_orbit(g, g.one()) == std::vector<std::uint32_t>{0});
}

TEST_CASE("collapse degree") {
    CHECK(gruc::collapse_degree(f25(), f25().alpha()) == 1);
    CHECK(gruc::collapse_degree(f35(), f35().alpha()) == 1);
    CHECK(gruc::collapse_degree(f29(), f29().exp(35)) == 3);  // (2,9) collapses
}

TEST_CASE("noncollapsing verdicts") {
    const auto v25 = gruc::check_noncollapsing(2, 5);
    CHECK(v25.gcd_value == 1);
    CHECK(v25.gcd_pass);
    CHECK(gruc::check_noncollapsing(3, 5).gcd_pass);
    CHECK(gruc::check_noncollapsing(2, 7).gcd_pass);

    const auto v29 = gruc::check_noncollapsing(2, 9);
    CHECK(v29.gcd_value == 3);
    CHECK_FALSE(v29.gcd_pass);

    const auto full29 = gruc::check_noncollapsing(f29());
    CHECK(full29.exhaustive_checked);
    CHECK_FALSE(full29.exhaustive_pass);
    CHECK(full29.counterexample_exponent == 35);
    CHECK(full29.counterexample_degree == 3);
    CHECK_FALSE(full29.pass());

    const auto full25 = gruc::check_noncollapsing(f25());
    CHECK(full25.exhaustive_pass);
    CHECK(full25.pass());
}

TEST_CASE("orbit partition (2,5) equals the worked example") {
    const OrbitPartition p = gruc::orbit_partition(f25());
    CHECK(p.class_count() == 5);
    CHECK(p.group_count() == 1);
    REQUIRE(p.classes().size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(p.classes()[i].orbit_exponents == orbits25[i]);
        CHECK(p.classes()[i].representative_exponent == orbits25[i].front());
    }
    // Frobenius chain: class(a^1) -> class(a^2) -> class(a^4) -> class(a^8) -> class(a^7)
    CHECK(p.galois_groups() == std::vector<std::vector<std::size_t>>{{0, 1, 2, 4, 3}});
    CHECK(p.class_of(13) == 0);
    CHECK(p.class_of(0) == OrbitPartition::npos);
}

TEST_CASE("orbit partition (3,5)") {
    const OrbitPartition p = gruc::orbit_partition(f35());
    CHECK(p.class_count() == 10);
    CHECK(p.group_count() == 2);
    std::vector<std::uint32_t> reps;
    for (const auto& cls : p.classes()) {
        reps.push_back(cls.representative_exponent);
        CHECK(cls.orbit_exponents.size() == 24);  // trivial stabilizers
    }
    CHECK(reps == std::vector<std::uint32_t>{1, 2, 3, 6, 7, 8, 10, 13, 19, 24});
    CHECK(p.galois_groups() == std::vector<std::vector<std::size_t>>{{0, 2, 4, 7, 8}, {1, 3, 6, 5, 9}});
    CHECK(p.class_of(81) == p.class_of(82));  // 81 and 82 share a class, so the twist can land there
}

TEST_CASE("fiber-size identity r * gamma = |G_q(2,n)|") {
    for (const Field* f : {&f25(), &f35(), &f27()}) {
        const OrbitPartition p = gruc::orbit_partition(*f);
        CHECK(p.class_count() * f->gamma_order() == gruc::gaussian_binomial(f->n(), 2, f->q()));
    }
}

TEST_CASE("collapsing instance is refused") {
    CHECK_THROWS_AS(gruc::orbit_partition(f29()), Error);
    try {
        gruc::orbit_partition(f29());
    } catch (const Error& e) {
        CHECK(e.code() == errc::collapsing_action);
    }
}

TEST_CASE("classes partition E^* \\ F^* and respect the quotient") {
    for (const Field* f : {&f25(), &f35()}) {
        const OrbitPartition p = gruc::orbit_partition(*f);
        std::size_t total = 0;
        for (const auto& cls : p.classes()) {
            total += cls.orbit_exponents.size();
            for (const auto e : cls.orbit_exponents) {
                CHECK_FALSE(f->exponent_in_fstar(e));
                CHECK(p.class_of(e) == p.class_of(cls.representative_exponent));
            }
        }
        CHECK(total == f->group_order() - (static_cast<std::size_t>(f->q()) - 1));
    }
}

TEST_CASE("Frobenius maps each class onto a class of the same group") {
    for (const Field* f : {&f25(), &f35(), &f27()}) {
        const OrbitPartition p = gruc::orbit_partition(*f);
        for (std::size_t i = 0; i < p.class_count(); ++i) {
            const std::uint64_t fe = static_cast<std::uint64_t>(p.classes()[i].representative_exponent) *
                                     static_cast<std::uint64_t>(f->q()) % f->group_order();
            const std::size_t j = p.class_of(fe);
            REQUIRE(j != OrbitPartition::npos);
            CHECK(p.group_of_class(j) == p.group_of_class(i));
        }
        // each group is a single Frobenius cycle over its classes
        for (const auto& group : p.galois_groups()) {
            for (std::size_t s = 0; s < group.size(); ++s) {
                const auto rep = p.classes()[group[s]].representative_exponent;
                const std::uint64_t fe =
                    static_cast<std::uint64_t>(rep) * static_cast<std::uint64_t>(f->q()) % f->group_order();
                CHECK(p.class_of(fe) == group[(s + 1) % group.size()]);
            }
        }
    }
}

TEST_CASE("Frobenius and Mobius actions commute (exhaustive, q=2 n=5)") {
    const Field& f = f25();
    const auto transforms = gruc::enumerate_pgl2(2);
    for (std::uint64_t e = 1; e < f.group_order(); ++e) {
        const auto z = f.exp(static_cast<std::int64_t>(e));
        if (f.in_base_field(z)) continue;
        for (const auto& t : transforms) {
            CHECK(f.frobenius(gruc::mobius_apply(f, t, z)) == gruc::mobius_apply(f, t, f.frobenius(z)));
        }
    }
}

TEST_CASE("orbit closure under the full transform set") {
    const Field& f = f25();
    const auto transforms = gruc::enumerate_pgl2(2);
    const OrbitPartition p = gruc::orbit_partition(f);
    for (const auto& cls : p.classes()) {
        for (const auto e : cls.orbit_exponents) {
            for (const auto& t : transforms) {
                const auto image = gruc::mobius_apply(f, t, f.exp(e));
                CHECK_FALSE(f.in_base_field(image));
                CHECK(cls.contains(f.discrete_log(image)));
            }
        }
    }
}

TEST_CASE("Phi is well-defined on every basis of every plane (2,5)") {
    const Field& f = f25();
    const auto planes = gruc::enumerate_grassmannian(f, 2);
    REQUIRE(planes.size() == 155);
    for (const auto& plane : planes) {
        // all nonzero vectors of the plane
        std::vector<Field::Elem> pts;
        const auto r0 = f.from_coeffs(plane.rows()[0]);
        const auto r1 = f.from_coeffs(plane.rows()[1]);
        pts.push_back(r0);
        pts.push_back(r1);
        pts.push_back(f.add(r0, r1));
        const auto cls = gruc::projective_ratio(f, pts[0], pts[1]);
        for (const auto v : pts) {
            for (const auto w : pts) {
                if (v == w) continue;
                CHECK(gruc::projective_ratio(f, v, w) == cls);
            }
        }
    }
}

TEST_CASE("fibers of Phi are uniform of size gamma") {
    for (const Field* f : {&f25(), &f35()}) {
        const OrbitPartition p = gruc::orbit_partition(*f);
        std::map<std::size_t, std::size_t> fiber;
        for (const auto& plane : gruc::enumerate_grassmannian(*f, 2)) {
            const auto v = f->from_coeffs(plane.rows()[0]);
            const auto w = f->from_coeffs(plane.rows()[1]);
            const auto ratio = f->div(v, w);
            ++fiber[p.class_of(f->discrete_log(ratio))];
        }
        REQUIRE(fiber.size() == p.class_count());
        for (const auto& [cls, count] : fiber) {
            CHECK(count == f->gamma_order());
        }
    }
}

TEST_CASE("m_z = 1 exhaustively on non-collapsing instances") {
    for (const Field* f : {&f25(), &f35()}) {
        for (std::uint64_t e = 1; e < f->group_order(); ++e) {
            if (f->exponent_in_fstar(e)) continue;
            CHECK(gruc::collapse_degree(*f, f->exp(static_cast<std::int64_t>(e))) == 1);
        }
    }
}
