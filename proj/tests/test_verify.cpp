#include <doctest.h>

#include <algorithm>

#include "contexts.hpp"
#include "gruc/verify.hpp"

using gruc::Error;
using gruc::errc;
using gruc::Field;
using gruc::UniversalCycle;
using gruc::Verdict;

namespace {

UniversalCycle cycle25() {
    static const gruc::OrbitPartition p = gruc::orbit_partition(f25());
    return gruc::build_beta_sequence(f25(), p, gruc::default_representatives(f25(), p));
}

UniversalCycle cycle35_dual() {
    static const gruc::OrbitPartition p = gruc::orbit_partition(f35());
    return gruc::build_beta_sequence(f35(), p,
                                     gruc::make_spec(f35(), {1, 54, 82, 18, 2, 3, 9, 162, 6, 27}, "user"));
}

} // namespace

TEST_CASE("the (2,5) default cycle is universal at k = 2") {
    const auto report = gruc::verify_universal(f25(), cycle25(), 2);
    CHECK(report.verdict == Verdict::universal);
    CHECK(report.universe_size == 155);
    CHECK(report.window_count == 155);
    CHECK(report.multiplicity_histogram == std::map<std::uint64_t, std::uint64_t>{{1, 155}});
    CHECK(report.missing.empty());
    CHECK(report.duplicated.empty());
    CHECK(report.rank_defects.empty());
}

TEST_CASE("the (3,5) dual cycle is universal at both k = 2 and k = 3") {
    const UniversalCycle cycle = cycle35_dual();
    for (const int k : {2, 3}) {
        const auto report = gruc::verify_universal(f35(), cycle, k);
        CHECK(report.verdict == Verdict::universal);
        CHECK(report.universe_size == 1210);
        CHECK(report.multiplicity_histogram == std::map<std::uint64_t, std::uint64_t>{{1, 1210}});
    }
}

TEST_CASE("a mutilated cycle fails with exact accounting") {
    const UniversalCycle cycle = cycle25();
    std::vector<Field::Elem> seq = gruc::beta_vectors(f25(), cycle);
    seq.erase(seq.begin() + 10);

    const auto report = gruc::verify_universal(f25(), seq, 2);
    CHECK(report.verdict == Verdict::fail);
    CHECK(report.window_count == 154);
    // deleting one vector destroys the two windows through it and welds
    // their neighbours into one duplicate of an existing window
    CHECK(report.missing.size() == 2);
    REQUIRE(report.duplicated.size() == 1);
    CHECK(report.duplicated.front().second.size() == 2);
    CHECK(report.rank_defects.empty());

    // conservation: windows = sum over histogram + rank defects
    std::uint64_t covered = 0;
    for (const auto& [count, subspaces] : report.multiplicity_histogram) covered += count * subspaces;
    CHECK(covered + report.rank_defects.size() == report.window_count);
}

TEST_CASE("doubling the cycle yields the almost_universal profile") {
    const UniversalCycle cycle = cycle25();
    std::vector<Field::Elem> seq = gruc::beta_vectors(f25(), cycle);
    std::vector<Field::Elem> doubled = seq;
    doubled.insert(doubled.end(), seq.begin(), seq.end());

    const auto report = gruc::verify_universal(f25(), doubled, 2);
    CHECK(report.verdict == Verdict::almost_universal);
    CHECK(report.multiplicity_histogram == std::map<std::uint64_t, std::uint64_t>{{2, 155}});
    CHECK(report.missing.empty());
}

TEST_CASE("zero vectors are rejected") {
    std::vector<std::vector<int>> seq{{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
    CHECK_THROWS_AS(gruc::verify_universal(2, 5, seq, 2), Error);
    try {
        gruc::verify_universal(2, 5, seq, 2);
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_vector_in_sequence);
    }
}

TEST_CASE("field-free verification path agrees with the field path") {
    const UniversalCycle cycle = cycle25();
    std::vector<std::vector<int>> raw;
    for (const auto e : cycle.beta_exponents) raw.push_back(f25().coeffs(f25().exp(e)));
    const auto report = gruc::verify_universal(2, 5, raw, 2);
    CHECK(report.verdict == Verdict::universal);
}

TEST_CASE("periodicity holds at every position") {
    const auto r25 = gruc::verify_periodicity(f25(), cycle25());
    CHECK(r25.ok);
    CHECK(r25.period == 5);

    const auto r35 = gruc::verify_periodicity(f35(), cycle35_dual());
    CHECK(r35.ok);
    CHECK(r35.period == 10);
}

TEST_CASE("a disordered cycle fails periodicity") {
    const UniversalCycle cycle = cycle25();
    std::vector<Field::Elem> seq = gruc::beta_vectors(f25(), cycle);
    std::swap(seq[3], seq[40]);
    const auto report = gruc::verify_periodicity(f25(), seq, 5);
    CHECK_FALSE(report.ok);
    CHECK(report.first_failure != static_cast<std::size_t>(-1));
}

TEST_CASE("line uniformity: every line appears r times") {
    const auto r25 = gruc::verify_line_uniformity(f25(), cycle25());
    CHECK(r25.uniform);
    CHECK(r25.line_count == 31);
    CHECK(r25.expected == 5);
    CHECK(r25.occurrence_histogram == std::map<std::uint64_t, std::uint64_t>{{5, 31}});

    const auto r35 = gruc::verify_line_uniformity(f35(), cycle35_dual());
    CHECK(r35.uniform);
    CHECK(r35.line_count == 121);
    CHECK(r35.expected == 10);
}

TEST_CASE("degenerate single-vector input is judged on its length") {
    const std::vector<std::vector<int>> seq{{1, 0, 0, 0, 0}};
    const auto report = gruc::verify_line_uniformity(2, 5, seq);
    CHECK_FALSE(report.uniform);  // 1 vector cannot cover 31 lines evenly
    CHECK(report.line_count == 31);
    CHECK(report.occurrence_histogram.at(0) == 30);
    CHECK(report.occurrence_histogram.at(1) == 1);
}

TEST_CASE("sequences shorter than the window wrap correctly") {
    // 3 vectors, k = 5: every window reuses entries cyclically
    const std::vector<std::vector<int>> seq{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}};
    const auto report = gruc::verify_universal(2, 5, seq, 5);
    CHECK(report.verdict == Verdict::fail);
    CHECK(report.window_count == 3);
    // each window spans the same 3 distinct vectors, so rank is 3 < 5
    CHECK(report.rank_defects.size() == 3);
}

TEST_CASE("missing and duplicated lists are canonically sorted") {
    const UniversalCycle cycle = cycle25();
    std::vector<Field::Elem> seq = gruc::beta_vectors(f25(), cycle);
    seq.erase(seq.begin() + 60);
    seq.erase(seq.begin() + 20);
    const auto report = gruc::verify_universal(f25(), seq, 2);
    CHECK(report.verdict == Verdict::fail);
    CHECK(std::is_sorted(report.missing.begin(), report.missing.end()));
}
