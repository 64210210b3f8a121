#include "gruc/grassmann.hpp"

#include <algorithm>
#include <string>

namespace gruc {

namespace {

int small_inverse(int a, int q) {
    for (int b = 1; b < q; ++b) {
        if (a * b % q == 1) return b;
    }
    return 0;  // unreachable for a in [1,q), q prime
}

// In-place reduced row echelon form; returns the rank.
int rref(std::vector<std::vector<int>>& m, int q) {
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(pivot_row)]);
        auto& prow = m[static_cast<std::size_t>(pivot_row)];
        const int ipiv = small_inverse(prow[static_cast<std::size_t>(col)], q);
        if (ipiv != 1) {
            for (int c = col; c < cols; ++c) prow[static_cast<std::size_t>(c)] = prow[static_cast<std::size_t>(c)] * ipiv % q;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const int f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            for (int c = col; c < cols; ++c) {
                row[static_cast<std::size_t>(c)] = ((row[static_cast<std::size_t>(c)] - f * prow[static_cast<std::size_t>(c)]) % q + q) % q;
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

std::vector<std::uint32_t> Subspace::packed_rows() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        std::uint32_t code = 0;
        for (int i = n_ - 1; i >= 0; --i) {
            code = code * static_cast<std::uint32_t>(q_) + static_cast<std::uint32_t>(row[static_cast<std::size_t>(i)]);
        }
        out.push_back(code);
    }
    return out;
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
    if (auto c = k() <=> other.k(); c != 0) return c;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (auto c = rows_[r] <=> other.rows_[r]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Subspace span(int q, const std::vector<std::vector<int>>& vectors) {
    if (vectors.empty()) fail(errc::bad_input, "span of an empty vector list");
    const std::size_t n = vectors.front().size();
    if (n == 0) fail(errc::bad_input, "span of zero-length vectors");
    std::vector<std::vector<int>> m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != n) fail(errc::bad_input, "span input vectors have mixed lengths");
        auto& row = m.emplace_back(v);
        for (int& d : row) d = ((d % q) + q) % q;
    }
    const int rank = rref(m, q);
    if (rank == 0) fail(errc::zero_span, "all input vectors are zero");
    m.resize(static_cast<std::size_t>(rank));
    return Subspace(q, static_cast<int>(n), std::move(m));
}

Subspace span(const Field& field, std::span<const Field::Elem> elems) {
    std::vector<std::vector<int>> vectors;
    vectors.reserve(elems.size());
    for (const Field::Elem e : elems) vectors.push_back(field.coeffs(e));
    return span(field.q(), vectors);
}

std::vector<Subspace> enumerate_grassmannian(int q, int n, int k) {
    if (k < 0 || k > n) {
        fail(errc::dimension_out_of_range,
             "k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    }
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace(q, n, {}));
        return out;
    }

    // Walk every strictly increasing pivot-column pattern; the free entries
    // of the RREF shape (right of the row's pivot, not above another pivot)
    // take all digit assignments. Each subspace is produced exactly once.
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<std::pair<int, int>> free_cells;
        for (int r = 0; r < k; ++r) {
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
                if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cells.emplace_back(r, c);
            }
        }
        std::vector<int> assign(free_cells.size(), 0);
        while (true) {
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
            for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
            for (std::size_t i = 0; i < free_cells.size(); ++i) {
                rows[static_cast<std::size_t>(free_cells[i].first)][static_cast<std::size_t>(free_cells[i].second)] = assign[i];
            }
            out.push_back(Subspace(q, n, std::move(rows)));
            // odometer over digit assignments
            std::size_t pos = 0;
            while (pos < assign.size() && assign[pos] == q - 1) assign[pos++] = 0;
            if (pos == assign.size()) break;
            ++assign[pos];
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_grassmannian(const Field& field, int k) {
    return enumerate_grassmannian(field.q(), field.n(), k);
}

std::uint64_t gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) {
        fail(errc::dimension_out_of_range,
             "k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    }
    // gb(n,k) = gb(n-1,k-1) + q^k * gb(n-1,k)
    std::vector<unsigned __int128> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            unsigned __int128 qpow = 1;
            for (int t = 0; t < j; ++t) qpow *= static_cast<unsigned __int128>(q);
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + qpow * row[static_cast<std::size_t>(j)];
        }
    }
    const unsigned __int128 v = row[static_cast<std::size_t>(k)];
    if (v > static_cast<unsigned __int128>(~std::uint64_t{0})) {
        fail(errc::scale_too_large, "Gaussian binomial exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace gruc
