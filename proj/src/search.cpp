#include "gruc/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace gruc {

namespace {

constexpr std::uint32_t id_sentinel = static_cast<std::uint32_t>(-1);

std::size_t universe_index(const std::vector<Subspace>& universe, const Subspace& s) {
    const auto it = std::lower_bound(universe.begin(), universe.end(), s);
    if (it == universe.end() || !(*it == s)) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - universe.begin());
}

// Per window size: the enumerated universe plus id tables that turn the
// per-ordering scan into table lookups. A window starting at beta exponent
// t with step exponents d1, d2, ... is span{a^t, a^(t+d1), a^(t+d1+d2), ...},
// so for k = 2 and k = 3 all possible windows are precomputable from the
// multiset's distinct exponents.
class WindowScan {
public:
    WindowScan(const Field& field, int k, const std::vector<std::uint32_t>& distinct)
        : field_(field), k_(k), distinct_(distinct) {
        universe_ = enumerate_grassmannian(field.q(), field.n(), k);
        stamp_.assign(universe_.size(), 0);
        const auto order = static_cast<std::size_t>(field.group_order());
        if (k == 2) {
            table2_.resize(distinct_.size());
            for (std::size_t di = 0; di < distinct_.size(); ++di) {
                table2_[di].resize(order);
                for (std::size_t t = 0; t < order; ++t) {
                    table2_[di][t] = window_id({static_cast<std::uint64_t>(t),
                                                (t + distinct_[di]) % field.group_order()});
                }
            }
        } else if (k == 3) {
            table3_.resize(distinct_.size());
            for (std::size_t di = 0; di < distinct_.size(); ++di) {
                table3_[di].resize(distinct_.size());
                for (std::size_t dj = 0; dj < distinct_.size(); ++dj) {
                    table3_[di][dj].resize(order);
                    for (std::size_t t = 0; t < order; ++t) {
                        const std::uint64_t t1 = (t + distinct_[di]) % field.group_order();
                        const std::uint64_t t2 = (t1 + distinct_[dj]) % field.group_order();
                        table3_[di][dj][t] = window_id({static_cast<std::uint64_t>(t), t1, t2});
                    }
                }
            }
        }
    }

    std::uint64_t universe_size() const { return universe_.size(); }

    /// True iff the L cyclic k-windows of the ordering are pairwise distinct
    /// full-rank subspaces covering the whole universe.
    bool ordering_universal(const std::vector<std::uint32_t>& ordering, std::size_t length) {
        if (length != universe_.size()) return false;  // pigeonhole: cannot be exactly-once
        next_generation();
        const std::size_t r = ordering.size();
        const std::uint64_t order = field_.group_order();
        std::uint64_t t = 0;
        if (k_ == 2) {
            for (std::size_t i = 0; i < length; ++i) {
                const std::uint32_t d = ordering[i % r];
                const std::uint32_t id = table2_[index_of(d)][t];
                if (id == id_sentinel || stamp_[id] == gen_) return false;
                stamp_[id] = gen_;
                t = (t + d) % order;
            }
            return true;
        }
        if (k_ == 3) {
            for (std::size_t i = 0; i < length; ++i) {
                const std::uint32_t d1 = ordering[i % r];
                const std::uint32_t d2 = ordering[(i + 1) % r];
                const std::uint32_t id = table3_[index_of(d1)][index_of(d2)][t];
                if (id == id_sentinel || stamp_[id] == gen_) return false;
                stamp_[id] = gen_;
                t = (t + d1) % order;
            }
            return true;
        }
        // generic path: span each window directly
        std::vector<Field::Elem> vecs(static_cast<std::size_t>(k_));
        for (std::size_t i = 0; i < length; ++i) {
            std::uint64_t e = t;
            vecs[0] = field_.exp(static_cast<std::int64_t>(e));
            for (int j = 1; j < k_; ++j) {
                e = (e + ordering[(i + static_cast<std::size_t>(j) - 1) % r]) % order;
                vecs[static_cast<std::size_t>(j)] = field_.exp(static_cast<std::int64_t>(e));
            }
            const Subspace w = span(field_, vecs);
            if (w.k() < k_) return false;
            const std::size_t id = universe_index(universe_, w);
            if (stamp_[id] == gen_) return false;
            stamp_[id] = gen_;
            t = (t + ordering[i % r]) % order;
        }
        return true;
    }

private:
    std::uint32_t window_id(const std::vector<std::uint64_t>& exponents) {
        std::vector<Field::Elem> vecs;
        vecs.reserve(exponents.size());
        for (const std::uint64_t e : exponents) vecs.push_back(field_.exp(static_cast<std::int64_t>(e)));
        const Subspace w = span(field_, vecs);
        if (w.k() < static_cast<int>(exponents.size())) return id_sentinel;
        return static_cast<std::uint32_t>(universe_index(universe_, w));
    }

    std::size_t index_of(std::uint32_t d) const {
        return static_cast<std::size_t>(
            std::lower_bound(distinct_.begin(), distinct_.end(), d) - distinct_.begin());
    }

    void next_generation() {
        if (++gen_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            gen_ = 1;
        }
    }

    const Field& field_;
    int k_;
    std::vector<std::uint32_t> distinct_;
    std::vector<Subspace> universe_;
    std::vector<std::vector<std::uint32_t>> table2_;
    std::vector<std::vector<std::vector<std::uint32_t>>> table3_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t gen_ = 0;
};

std::uint64_t factorial_capped(std::size_t v, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::size_t i = 2; i <= v; ++i) {
        if (out > cap) return out;  // saturate once past the cap
        out *= i;
    }
    return out;
}

} // namespace

std::vector<std::vector<std::uint32_t>> twist_placements(const Field& field, const OrbitPartition& partition,
                                                         const std::vector<std::uint32_t>& base) {
    const std::uint64_t order = field.group_order();
    std::set<std::vector<std::uint32_t>> out;

    const auto product_passes = [&](const std::vector<std::uint32_t>& ms) {
        std::uint64_t sum = 0;
        for (const std::uint32_t e : ms) sum = (sum + e) % order;
        return (sum + order - 1) % field.gamma_order() == 0;
    };

    std::vector<std::uint32_t> sorted_base = base;
    std::sort(sorted_base.begin(), sorted_base.end());
    if (product_passes(sorted_base)) out.insert(sorted_base);

    for (std::size_t i = 0; i < base.size(); ++i) {
        const std::uint32_t e = base[i];
        if (e >= order || field.exponent_in_fstar(e)) continue;
        const auto twisted = static_cast<std::uint32_t>((e + 1) % order);
        if (field.exponent_in_fstar(twisted)) continue;
        if (partition.class_of(twisted) != partition.class_of(e)) continue;
        std::vector<std::uint32_t> candidate = base;
        candidate[i] = twisted;
        std::sort(candidate.begin(), candidate.end());
        if (product_passes(candidate)) out.insert(std::move(candidate));
    }
    return {out.begin(), out.end()};
}

SearchResult search_dual(const Field& field, const OrbitPartition& partition, const SearchTask& task) {
    const auto t_start = std::chrono::steady_clock::now();

    SearchResult result;
    result.ks = task.ks;
    if (result.ks.empty()) result.ks = {2, field.n() - 2};
    for (const int k : result.ks) {
        if (k < 1 || k > field.n()) {
            fail(errc::window_size_out_of_range, "window size " + std::to_string(k) + " outside [1, n]");
        }
    }

    if (task.rep_multiset.empty()) fail(errc::bad_input, "empty representative multiset");
    std::vector<std::uint32_t> base = task.rep_multiset;
    std::sort(base.begin(), base.end());

    if (task.mode == SearchTask::Mode::orderings_plus_twists) {
        result.multisets_searched = twist_placements(field, partition, base);
    } else {
        const SpecVerdict verdict = validate_spec(field, partition, make_spec(field, base, "search-template"));
        if (!verdict.ok()) {
            fail(errc::spec_invalid, "search template: " + verdict.describe());
        }
        result.multisets_searched = {base};
    }

    const std::size_t r = base.size();
    const std::uint64_t per_multiset = factorial_capped(r - 1, task.cap);
    const auto multiset_count = static_cast<std::uint64_t>(result.multisets_searched.size());
    if (multiset_count > 0 && per_multiset > task.cap / multiset_count) {
        fail(errc::search_space_too_large,
             std::to_string(multiset_count) + " x (r-1)! orderings exceed the cap of " +
                 std::to_string(task.cap) + "; raise --cap or reduce the multiset");
    }
    result.search_space_size = per_multiset * multiset_count;

    const std::size_t length = r * static_cast<std::size_t>(field.gamma_order());

    for (const auto& multiset : result.multisets_searched) {
        // For twist mode, quietly skip candidates that do not form a valid
        // representative system (possible only for hand-built bases).
        const SpecVerdict verdict = validate_spec(field, partition, make_spec(field, multiset, "search-template"));
        if (!verdict.ok()) continue;

        std::vector<std::uint32_t> distinct = multiset;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<WindowScan> scans;
        scans.reserve(result.ks.size());
        for (const int k : result.ks) scans.emplace_back(field, k, distinct);

        // rotation dedup: smallest exponent first, permute the rest
        std::vector<std::uint32_t> ordering = multiset;
        std::vector<std::uint32_t> rest(ordering.begin() + 1, ordering.end());
        do {
            std::copy(rest.begin(), rest.end(), ordering.begin() + 1);
            bool all_pass = true;
            std::vector<bool> flags;
            if (task.record_all) flags.resize(result.ks.size(), false);
            for (std::size_t ki = 0; ki < scans.size(); ++ki) {
                const bool pass = scans[ki].ordering_universal(ordering, length);
                if (task.record_all) flags[ki] = pass;
                if (!pass) {
                    all_pass = false;
                    if (!task.record_all) break;
                }
            }
            if (task.record_all) result.all_records.push_back({ordering, std::move(flags)});
            if (all_pass) {
                // survivors are certified from scratch through the verifier
                SearchHit hit;
                hit.ordering = ordering;
                const UniversalCycle cycle =
                    build_beta_sequence(field, partition, make_spec(field, ordering, "search"));
                for (const int k : result.ks) {
                    VerificationReport report = verify_universal(field, cycle, k);
                    if (!report.universal()) {
                        fail(errc::bad_input,
                             "internal inconsistency: fast window scan accepted an ordering the verifier rejects");
                    }
                    hit.reports.emplace(k, std::move(report));
                }
                result.hits.push_back(std::move(hit));
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    std::sort(result.hits.begin(), result.hits.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.ordering < b.ordering; });

    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

} // namespace gruc
