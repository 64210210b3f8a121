#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gruc/errors.hpp"

namespace gruc {

/// The extension field E = F_{q^n} presented as F_q[x]/(f) for a primitive
/// polynomial f, q prime. An element is its coefficient vector packed in
/// base q: code = sum coeffs[i] * q^i. Code 0 is the additive zero and
/// codes 1..q-1 are the base-field scalars, so base-field membership is a
/// range check.
///
/// Construction verifies primality of q, irreducibility and primitivity of
/// f, and builds full exp/log tables for the root alpha, so multiplicative
/// operations are exponent arithmetic mod q^n - 1. Immutable once built;
/// safe to share across threads.
class Field {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint64_t max_field_size = std::uint64_t(1) << 22;

    /// modulus_poly is ascending (constant term first), length n+1.
    /// Coefficients are reduced mod q; a non-monic polynomial is normalized.
    Field(int q, int n, std::vector<int> modulus_poly);

    int q() const noexcept { return q_; }
    int n() const noexcept { return n_; }
    const std::vector<int>& modulus_poly() const noexcept { return poly_; }

    std::uint64_t field_size() const noexcept { return size_; }          // q^n
    std::uint64_t group_order() const noexcept { return group_order_; }  // q^n - 1
    std::uint64_t gamma_order() const noexcept { return gamma_order_; }  // (q^n-1)/(q-1)

    /// Exponents e with alpha^e in F^*: the q-1 multiples of gamma_order.
    const std::vector<std::uint32_t>& fstar_exponents() const noexcept { return fstar_exponents_; }
    bool exponent_in_fstar(std::uint64_t e) const noexcept { return e % gamma_order_ == 0; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem alpha() const noexcept { return static_cast<Elem>(q_); }  // the class of x
    Elem scalar(int c) const;

    bool is_zero(Elem a) const noexcept { return a == 0; }
    bool in_base_field(Elem a) const noexcept { return a < static_cast<Elem>(q_); }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws division_by_zero on inv(0)
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;
    Elem frobenius(Elem a) const;  // a^q

    /// Discrete log base alpha, in [0, q^n-2]. Throws log_of_zero.
    std::uint32_t discrete_log(Elem a) const;
    /// alpha^e for any integer e (reduced mod q^n-1).
    Elem exp(std::int64_t e) const;

    std::vector<int> coeffs(Elem a) const;  // ascending, length n
    Elem from_coeffs(std::span<const int> c) const;

private:
    int q_ = 0, n_ = 0;
    std::vector<int> poly_;
    std::uint64_t size_ = 0, group_order_ = 0, gamma_order_ = 0;
    std::vector<Elem> exp_table_;           // exponent -> element code
    std::vector<std::uint32_t> log_table_;  // element code -> exponent
    std::vector<std::uint32_t> fstar_exponents_;
};

bool is_prime(std::uint64_t v) noexcept;

/// Distinct prime factors by trial division (desk scale).
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

} // namespace gruc
