// Exact integer linear algebra for full-rank lattices: row-style Hermite
// normal form and determinants.  Row vectors are lattice generators in a
// fixed ambient basis; the HNF is upper triangular with positive pivots
// and reduced entries above each pivot.
#pragma once

#include "nfreg/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace nfreg {

using IntMatrix = std::vector<std::vector<Int>>;

// In-place Hermite normal form of the row span; returns the d x d upper
// triangular basis.  Input must have full column rank d.
inline IntMatrix hermite_normal_form(IntMatrix rows) {
    if (rows.empty()) throw std::invalid_argument("hnf: empty generator list");
    const size_t d = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != d) throw std::invalid_argument("hnf: ragged rows");

    size_t pivot_row = 0;
    for (size_t col = 0; col < d && pivot_row < rows.size(); ++col) {
        // gcd-reduce column entries below the pivot into one nonzero entry
        while (true) {
            size_t best = rows.size();
            for (size_t i = pivot_row; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;  // all zero: next column (rank deficiency caught later)
            std::swap(rows[pivot_row], rows[best]);
            bool clean = true;
            const Int p = rows[pivot_row][col];
            for (size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / p;  // truncated division is fine: loop until clean
                if (q != 0)
                    for (size_t j = col; j < d; ++j) rows[i][j] -= q * rows[pivot_row][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (size_t j = col; j < d; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
        ++pivot_row;
    }
    if (pivot_row != d) throw std::invalid_argument("hnf: generators do not have full rank");

    rows.resize(d);
    // reduce entries above each pivot into [0, pivot)
    for (size_t k = 0; k < d; ++k) {
        const Int& p = rows[k][k];
        for (size_t i = 0; i < k; ++i) {
            Int q = rows[i][k] / p;
            if (rows[i][k] - q * p < 0) q -= 1;  // floor division
            if (q != 0)
                for (size_t j = k; j < d; ++j) rows[i][j] -= q * rows[k][j];
        }
    }
    return rows;
}

// Determinant of the HNF basis: the lattice covolume in the ambient basis.
inline Int hnf_det(const IntMatrix& hnf) {
    Int out = 1;
    for (size_t i = 0; i < hnf.size(); ++i) out *= hnf[i][i];
    return out;
}

// Fraction-free Bareiss determinant of a square integer matrix.
inline Int int_det(IntMatrix a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Rank of an integer matrix (fraction-free elimination).
inline size_t int_rank(IntMatrix a) {
    if (a.empty()) return 0;
    const size_t cols = a[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < a.size(); ++col) {
        size_t p = rank;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[rank], a[p]);
        for (size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            Int g = gcd(a[rank][col], a[i][col]);
            Int m1 = a[rank][col] / g, m2 = a[i][col] / g;
            for (size_t j = col; j < cols; ++j) a[i][j] = a[i][j] * m1 - a[rank][j] * m2;
        }
        ++rank;
    }
    return rank;
}

}  // namespace nfreg
