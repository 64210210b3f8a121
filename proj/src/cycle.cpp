#include "gruc/cycle.hpp"

#include <algorithm>

namespace gruc {

CycleSpec make_spec(const Field& field, std::vector<std::uint32_t> rep_exponents, std::string source) {
    CycleSpec spec;
    spec.q = field.q();
    spec.n = field.n();
    spec.modulus_poly = field.modulus_poly();
    spec.rep_exponents = std::move(rep_exponents);
    spec.source = std::move(source);
    return spec;
}

namespace {

void require_same_context(const Field& field, const CycleSpec& spec) {
    if (spec.q != field.q() || spec.n != field.n() || spec.modulus_poly != field.modulus_poly()) {
        fail(errc::bad_input, "cycle spec was built for a different field context");
    }
}

bool product_in_alpha_fstar(const Field& field, std::uint64_t exponent_sum) {
    // alpha*F^* is the exponent class 1 mod gamma_order.
    return (exponent_sum + field.group_order() - 1) % field.gamma_order() == 0;
}

} // namespace

CycleSpec default_representatives(const Field& field, const OrbitPartition& partition) {
    const std::uint64_t order = field.group_order();
    const auto q = static_cast<std::uint64_t>(field.q());

    bool any_twistable = false;
    for (std::uint64_t g1 = 1; g1 < order; ++g1) {
        if (field.exponent_in_fstar(g1)) continue;
        const std::uint64_t twisted = (g1 + 1) % order;
        if (field.exponent_in_fstar(twisted)) continue;
        const std::size_t cls = partition.class_of(g1);
        if (partition.class_of(twisted) != cls) continue;  // alpha*g_1 not Mobius-equivalent to g_1
        any_twistable = true;

        const std::size_t twisted_group = partition.group_of_class(cls);
        std::vector<std::uint32_t> reps;
        reps.reserve(partition.class_count());

        reps.push_back(static_cast<std::uint32_t>(twisted));
        std::uint64_t e = g1;
        for (std::size_t j = 1; j < partition.galois_groups()[twisted_group].size(); ++j) {
            e = e * q % order;
            reps.push_back(static_cast<std::uint32_t>(e));
        }
        for (std::size_t gi = 0; gi < partition.group_count(); ++gi) {
            if (gi == twisted_group) continue;
            const auto& group = partition.galois_groups()[gi];
            // chains start at the group's smallest representative
            std::uint64_t m = partition.classes()[group.front()].representative_exponent;
            for (std::size_t j = 0; j < group.size(); ++j) {
                reps.push_back(static_cast<std::uint32_t>(m));
                m = m * q % order;
            }
        }

        CycleSpec spec = make_spec(field, std::move(reps),
                                   "default(g1=a^" + std::to_string(g1) + ",twist=a^" + std::to_string(twisted) + ")");
        if (validate_spec(field, partition, spec).ok()) return spec;
    }

    if (!any_twistable) {
        fail(errc::no_twistable_representative,
             "no element g of E \\ F has alpha*g in its own Mobius orbit");
    }
    fail(errc::product_condition_failed,
         "no single-twist representative system has product in alpha*F^*");
}

std::string SpecVerdict::describe() const {
    std::string out;
    if (!invalid_exponents.empty()) {
        out += "invalid representative exponents (in F^* or out of range):";
        for (const auto e : invalid_exponents) out += " " + std::to_string(e);
        out += "; ";
    }
    if (!coverage_ok) {
        out += "class coverage violated;";
        if (!uncovered_classes.empty()) {
            out += " uncovered:";
            for (const auto c : uncovered_classes) out += " " + std::to_string(c);
        }
        if (!multiply_covered_classes.empty()) {
            out += " multiply covered:";
            for (const auto c : multiply_covered_classes) out += " " + std::to_string(c);
        }
        out += "; ";
    }
    if (!product_ok) {
        out += "product condition violated: exponent sum = " + std::to_string(product_exponent) +
               ", alpha^sum not in alpha*F^*; ";
    }
    if (out.empty()) out = "ok";
    return out;
}

SpecVerdict validate_spec(const Field& field, const OrbitPartition& partition, const CycleSpec& spec) {
    require_same_context(field, spec);
    SpecVerdict v;

    std::vector<std::size_t> cover(partition.class_count(), 0);
    std::uint64_t sum = 0;
    for (const std::uint32_t e : spec.rep_exponents) {
        if (e >= field.group_order() || field.exponent_in_fstar(e)) {
            v.invalid_exponents.push_back(e);
            continue;
        }
        sum += e;
        ++cover[partition.class_of(e)];
    }
    for (std::size_t c = 0; c < cover.size(); ++c) {
        if (cover[c] == 0) v.uncovered_classes.push_back(c);
        if (cover[c] > 1) v.multiply_covered_classes.push_back(c);
    }
    v.coverage_ok = v.uncovered_classes.empty() && v.multiply_covered_classes.empty();
    v.product_exponent = sum % field.group_order();
    v.product_ok = product_in_alpha_fstar(field, v.product_exponent);
    return v;
}

UniversalCycle build_beta_sequence(const Field& field, const OrbitPartition& partition, const CycleSpec& spec) {
    const SpecVerdict verdict = validate_spec(field, partition, spec);
    if (!verdict.ok()) {
        fail(errc::spec_invalid, verdict.describe());
    }
    const std::size_t r = spec.r();
    const std::uint64_t order = field.group_order();
    const std::size_t length = r * static_cast<std::size_t>(field.gamma_order());

    UniversalCycle cycle;
    cycle.spec = spec;
    cycle.beta_exponents.resize(length);
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < length; ++i) {
        cycle.beta_exponents[i] = static_cast<std::uint32_t>(b);
        b = (b + spec.rep_exponents[i % r]) % order;
    }
    // closing the cycle must land back in F^* * beta_0
    if (!field.exponent_in_fstar(b)) {
        fail(errc::spec_invalid, "beta_L is not an F^*-multiple of beta_0");
    }
    return cycle;
}

std::vector<Subspace> build_windows(const Field& field, const UniversalCycle& cycle, int k) {
    require_same_context(field, cycle.spec);
    if (k < 2 || k > field.n()) {
        fail(errc::window_size_out_of_range,
             "window size " + std::to_string(k) + " outside [2, " + std::to_string(field.n()) + "]");
    }
    const std::size_t length = cycle.length();
    std::vector<Subspace> windows;
    windows.reserve(length);
    std::vector<Field::Elem> vecs(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
            vecs[j] = field.exp(cycle.beta_exponents[(i + length - j % length) % length]);
        }
        windows.push_back(span(field, vecs));
    }
    return windows;
}

} // namespace gruc
