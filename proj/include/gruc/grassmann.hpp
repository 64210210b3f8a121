#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gruc/field.hpp"

namespace gruc {

/// A k-dimensional subspace of F_q^n in reduced row-echelon form: pivot
/// columns strictly increasing, pivot entries 1, zeros above and below each
/// pivot, no zero rows. The RREF matrix is unique per subspace, so equality
/// of Subspace values is equality of points in G_q(k,n).
///
/// Coordinates are indexed by polynomial degree: column i holds the
/// coefficient of x^i, matching the field's coefficient vectors.
class Subspace {
public:
    Subspace() = default;  // the zero-dimensional subspace

    int q() const noexcept { return q_; }
    int n() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// Rows packed base q, one code per row (same encoding as Field::Elem).
    std::vector<std::uint32_t> packed_rows() const;

    bool operator==(const Subspace& other) const = default;
    std::strong_ordering operator<=>(const Subspace& other) const;

private:
    friend Subspace span(int q, const std::vector<std::vector<int>>& vectors);
    friend std::vector<Subspace> enumerate_grassmannian(int q, int n, int k);

    Subspace(int q, int n, std::vector<std::vector<int>> rref_rows)
        : q_(q), n_(n), rows_(std::move(rref_rows)) {}

    int q_ = 0, n_ = 0;
    std::vector<std::vector<int>> rows_;  // RREF, digits in [0, q)
};

/// Canonical span of the given vectors (digits ascending by degree, reduced
/// mod q). The result's dimension is the rank of the input. Throws zero_span
/// when every input vector is zero, bad_input on ragged/empty input.
Subspace span(int q, const std::vector<std::vector<int>>& vectors);

/// Span of field elements viewed as coefficient vectors.
Subspace span(const Field& field, std::span<const Field::Elem> elems);

/// All k-subspaces of F_q^n, each exactly once, sorted by the canonical
/// row-major order of their RREF matrices. Throws dimension_out_of_range.
std::vector<Subspace> enumerate_grassmannian(int q, int n, int k);
std::vector<Subspace> enumerate_grassmannian(const Field& field, int k);

/// |G_q(k,n)| as an exact integer (q-Pascal recurrence).
std::uint64_t gaussian_binomial(int n, int k, int q);

} // namespace gruc
