#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace agr {

// A subspace of K^n kept as reduced row echelon rows, one per pivot column.
template <class K>
class RowSpace {
public:
    explicit RowSpace(size_t dim, K one) : dim_(dim), one_(std::move(one)) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }

    // Reduces v against the stored rows; the result has zeros at all pivots.
    std::vector<K> reduce(std::vector<K> v) const {
        for (const auto& [p, row] : rows_) {
            K c = v[p];
            if (c.is_zero()) continue;
            for (size_t j = p; j < dim_; ++j) v[j] -= c * row[j];
        }
        return v;
    }

    bool member(const std::vector<K>& v) const {
        std::vector<K> r = reduce(v);
        for (const K& c : r)
            if (!c.is_zero()) return false;
        return true;
    }

    // Inserts v; returns false when v was already in the span.
    bool insert(std::vector<K> v) {
        v = reduce(std::move(v));
        size_t p = 0;
        while (p < dim_ && v[p].is_zero()) ++p;
        if (p == dim_) return false;
        K inv = one_ / v[p];
        for (size_t j = p; j < dim_; ++j) v[j] *= inv;
        for (auto& [q, row] : rows_) {
            K c = row[p];
            if (c.is_zero()) continue;
            for (size_t j = p; j < dim_; ++j) row[j] -= c * v[j];
        }
        rows_.emplace(p, std::move(v));
        return true;
    }

    const std::map<size_t, std::vector<K>>& rows() const { return rows_; }
    bool has_pivot(size_t p) const { return rows_.count(p) > 0; }

private:
    size_t dim_;
    K one_;
    std::map<size_t, std::vector<K>> rows_;  // pivot column -> row
};

// Basis of { x : m x = 0 } for a dense row-major matrix, via reduced row
// echelon form; one canonical vector per free column.
template <class K>
std::vector<std::vector<K>> nullspace(std::vector<std::vector<K>> m, size_t ncols, const K& one) {
    const size_t nrows = m.size();
    std::vector<long> pivot_of_col(ncols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < nrows; ++c) {
        size_t p = rank;
        while (p < nrows && m[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(m[rank], m[p]);
        K inv = one / m[rank][c];
        for (size_t j = 0; j < ncols; ++j) m[rank][j] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            K f = m[r][c];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < ncols; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_of_col[c] = static_cast<long>(rank);
        ++rank;
    }
    K zero = one - one;
    std::vector<std::vector<K>> basis;
    for (size_t c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<K> v(ncols, zero);
        v[c] = one;
        for (size_t cc = 0; cc < ncols; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = -m[static_cast<size_t>(pivot_of_col[cc])][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace agr
