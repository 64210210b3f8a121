#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gruc/verify.hpp"

namespace gruc {

/// Exhaustive search over representative orderings for cycles that are
/// universal at every window size in `ks` simultaneously. Orderings are
/// deduplicated up to cyclic rotation by fixing the smallest exponent
/// first; reflections are kept distinct.
struct SearchTask {
    enum class Mode { orderings_only, orderings_plus_twists };

    std::vector<std::uint32_t> rep_multiset;  // the template's exponents, order ignored
    std::vector<int> ks;                      // empty -> {2, n-2}
    Mode mode = Mode::orderings_only;
    std::uint64_t cap = 10'000'000;           // max orderings before search_space_too_large
    bool record_all = false;                  // keep per-ordering pass/fail flags (CSV export)
};

struct SearchHit {
    std::vector<std::uint32_t> ordering;
    std::map<int, VerificationReport> reports;  // per window size, from the verifier
};

struct OrderingRecord {
    std::vector<std::uint32_t> ordering;
    std::vector<bool> passed;  // aligned with SearchResult::ks
};

struct SearchResult {
    std::vector<int> ks;
    std::vector<SearchHit> hits;  // lexicographic by ordering
    std::uint64_t search_space_size = 0;
    std::vector<std::vector<std::uint32_t>> multisets_searched;
    std::vector<OrderingRecord> all_records;  // only when record_all
    double elapsed_seconds = 0.0;
};

/// Candidate multisets obtained from `base` by replacing one member g whose
/// alpha-multiple stays in g's own Mobius orbit with that multiple; only
/// candidates passing the product condition are kept (the base itself is
/// included when it already passes). Sorted, deduplicated.
std::vector<std::vector<std::uint32_t>> twist_placements(const Field& field, const OrbitPartition& partition,
                                                         const std::vector<std::uint32_t>& base);

/// Runs the search. Every survivor of the fast window scan is re-verified
/// from scratch through verify_universal before it is reported as a hit.
/// Throws search_space_too_large, spec_invalid (template never validates).
SearchResult search_dual(const Field& field, const OrbitPartition& partition, const SearchTask& task);

} // namespace gruc
