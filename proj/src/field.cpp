#include "gruc/field.hpp"

#include <algorithm>
#include <string>

namespace gruc {

namespace {

int mod_inverse(int a, int q) {
    // q prime, a in [1, q)
    int r = 1;
    int base = a % q;
    int e = q - 2;
    while (e > 0) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return r;
}

// Dense polynomials over F_q, ascending coefficients, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int q) {
    // m monic
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int factor = a.back();
        for (int i = 0; i <= dm; ++i) {
            a[i + shift] = ((a[i + shift] - factor * m[i]) % q + q) % q;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int q) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % q;
        }
    }
    return poly_mod(std::move(out), m, q);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, int q) {
    Poly result{1};
    base = poly_mod(std::move(base), m, q);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, m, q);
        base = poly_mulmod(base, base, m, q);
        e >>= 1;
    }
    return result;
}

bool divides(const Poly& divisor, const Poly& p, int q) {
    return poly_mod(p, divisor, q).empty();
}

// Trial division by every monic polynomial of degree 1..deg(p)/2.
bool is_irreducible(const Poly& p, int q) {
    const int d = static_cast<int>(p.size()) - 1;
    if (d <= 1) return d == 1;
    if (p[0] == 0) return false;  // divisible by x
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= static_cast<std::uint64_t>(q);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly cand(dd + 1, 0);
            cand[dd] = 1;
            std::uint64_t rest = idx;
            for (int i = 0; i < dd; ++i) {
                cand[i] = static_cast<int>(rest % q);
                rest /= q;
            }
            if (divides(cand, p, q)) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

Field::Field(int q, int n, std::vector<int> modulus_poly) : q_(q), n_(n) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
        // A prime power is a deliberate, distinct rejection: tower fields
        // are unsupported, not merely invalid input.
        if (q >= 4) {
            const auto factors = prime_factors(static_cast<std::uint64_t>(q));
            if (factors.size() == 1) {
                fail(errc::non_prime_modulus,
                     "q = " + std::to_string(q) + " is a prime power; only prime base fields are supported");
            }
        }
        fail(errc::non_prime_modulus, "q = " + std::to_string(q) + " is not prime");
    }
    if (n < 2) {
        fail(errc::wrong_degree, "extension degree must be at least 2, got " + std::to_string(n));
    }
    if (modulus_poly.size() != static_cast<std::size_t>(n) + 1) {
        fail(errc::wrong_degree,
             "modulus polynomial must have " + std::to_string(n + 1) + " coefficients (degree " +
                 std::to_string(n) + "), got " + std::to_string(modulus_poly.size()));
    }
    poly_ = std::move(modulus_poly);
    for (int& c : poly_) c = ((c % q) + q) % q;
    if (poly_.back() == 0) {
        fail(errc::wrong_degree, "leading coefficient vanishes mod q; polynomial has degree < n");
    }
    if (poly_.back() != 1) {
        const int s = mod_inverse(poly_.back(), q);
        for (int& c : poly_) c = c * s % q;
    }

    size_ = 1;
    for (int i = 0; i < n; ++i) {
        size_ *= static_cast<std::uint64_t>(q);
        if (size_ > max_field_size) {
            fail(errc::scale_too_large, "q^n exceeds the supported table size of 2^22");
        }
    }
    group_order_ = size_ - 1;
    gamma_order_ = group_order_ / static_cast<std::uint64_t>(q - 1);

    if (poly_[0] == 0) {
        fail(errc::not_irreducible, "constant term is zero: polynomial is divisible by x");
    }
    if (!is_irreducible(poly_, q)) {
        fail(errc::not_irreducible, "modulus polynomial factors over F_q");
    }
    // Primitivity: ord(x) = q^n - 1 iff x^((q^n-1)/p) != 1 for every prime p | q^n - 1.
    for (const std::uint64_t p : prime_factors(group_order_)) {
        const Poly r = poly_powmod(Poly{0, 1}, group_order_ / p, poly_, q);
        if (r == Poly{1}) {
            fail(errc::not_primitive,
                 "root has order dividing (q^n-1)/" + std::to_string(p) + "; polynomial is irreducible but not primitive");
        }
    }

    // x^n = -(lower part of modulus), used to reduce the shift-by-x step.
    std::vector<int> reduction(n);
    for (int i = 0; i < n; ++i) reduction[i] = (q - poly_[i]) % q;

    exp_table_.assign(group_order_, 0);
    log_table_.assign(size_, 0);
    std::vector<int> digits(n, 0);
    digits[0] = 1;
    for (std::uint64_t e = 0; e < group_order_; ++e) {
        Elem code = 0;
        for (int i = n - 1; i >= 0; --i) code = code * static_cast<Elem>(q) + static_cast<Elem>(digits[i]);
        exp_table_[e] = code;
        log_table_[code] = static_cast<std::uint32_t>(e);
        // multiply by x
        const int top = digits[n - 1];
        for (int i = n - 1; i > 0; --i) digits[i] = digits[i - 1];
        digits[0] = 0;
        if (top != 0) {
            for (int i = 0; i < n; ++i) digits[i] = (digits[i] + top * reduction[i]) % q;
        }
    }

    fstar_exponents_.reserve(static_cast<std::size_t>(q - 1));
    for (int j = 0; j < q - 1; ++j) {
        fstar_exponents_.push_back(static_cast<std::uint32_t>(j * gamma_order_));
    }
}

Field::Elem Field::scalar(int c) const {
    c = ((c % q_) + q_) % q_;
    return static_cast<Elem>(c);
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (q_ == 2) return a ^ b;
    Elem out = 0;
    Elem place = 1;
    for (int i = 0; i < n_; ++i) {
        const Elem da = a % static_cast<Elem>(q_);
        const Elem db = b % static_cast<Elem>(q_);
        out += (da + db) % static_cast<Elem>(q_) * place;
        a /= static_cast<Elem>(q_);
        b /= static_cast<Elem>(q_);
        place *= static_cast<Elem>(q_);
    }
    return out;
}

Field::Elem Field::neg(Elem a) const {
    if (q_ == 2) return a;
    Elem out = 0;
    Elem place = 1;
    for (int i = 0; i < n_; ++i) {
        const Elem d = a % static_cast<Elem>(q_);
        out += (static_cast<Elem>(q_) - d) % static_cast<Elem>(q_) * place;
        a /= static_cast<Elem>(q_);
        place *= static_cast<Elem>(q_);
    }
    return out;
}

Field::Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t e = log_table_[a] + static_cast<std::uint64_t>(log_table_[b]);
    return exp_table_[e % group_order_];
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    const std::uint64_t e = group_order_ - log_table_[a];
    return exp_table_[e % group_order_];
}

Field::Elem Field::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) fail(errc::division_by_zero, "negative power of zero");
        return 0;
    }
    const auto mod = static_cast<std::int64_t>(group_order_);
    std::int64_t r = static_cast<std::int64_t>(log_table_[a]) * (e % mod) % mod;
    if (r < 0) r += mod;
    return exp_table_[static_cast<std::size_t>(r)];
}

Field::Elem Field::frobenius(Elem a) const {
    if (a == 0) return 0;
    const std::uint64_t e = static_cast<std::uint64_t>(log_table_[a]) * static_cast<std::uint64_t>(q_);
    return exp_table_[e % group_order_];
}

std::uint32_t Field::discrete_log(Elem a) const {
    if (a == 0) fail(errc::log_of_zero, "discrete log of zero");
    return log_table_[a];
}

Field::Elem Field::exp(std::int64_t e) const {
    const auto mod = static_cast<std::int64_t>(group_order_);
    return exp_table_[static_cast<std::size_t>(((e % mod) + mod) % mod)];
}

std::vector<int> Field::coeffs(Elem a) const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<Elem>(q_));
        a /= static_cast<Elem>(q_);
    }
    return out;
}

Field::Elem Field::from_coeffs(std::span<const int> c) const {
    if (c.size() != static_cast<std::size_t>(n_)) {
        fail(errc::bad_input, "coefficient vector must have length " + std::to_string(n_));
    }
    Elem out = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        const int d = ((c[static_cast<std::size_t>(i)] % q_) + q_) % q_;
        out = out * static_cast<Elem>(q_) + static_cast<Elem>(d);
    }
    return out;
}

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_prime_modulus: return "NonPrimeModulus";
        case errc::wrong_degree: return "WrongDegree";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_primitive: return "NotPrimitive";
        case errc::scale_too_large: return "ScaleTooLarge";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::log_of_zero: return "LogOfZero";
        case errc::zero_span: return "ZeroSpan";
        case errc::dimension_out_of_range: return "DimensionOutOfRange";
        case errc::input_in_base_field: return "InputInBaseField";
        case errc::ratio_in_base_field: return "RatioInBaseField";
        case errc::collapsing_action: return "CollapsingAction";
        case errc::no_twistable_representative: return "NoTwistableRepresentative";
        case errc::product_condition_failed: return "ProductConditionFailed";
        case errc::spec_invalid: return "SpecInvalid";
        case errc::window_size_out_of_range: return "WindowSizeOutOfRange";
        case errc::zero_vector_in_sequence: return "ZeroVectorInSequence";
        case errc::search_space_too_large: return "SearchSpaceTooLarge";
        case errc::bad_input: return "BadInput";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace gruc
