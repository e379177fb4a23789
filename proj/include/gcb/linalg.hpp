#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcb/rational.hpp"

namespace gcb {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>; // list of row vectors

namespace linalg {

inline std::size_t cols(const Mat& m) { return m.empty() ? 0 : m.front().size(); }

/// In-place reduced row echelon form; returns the rank.
inline std::size_t rref(Mat& m) {
    const std::size_t rows = m.size(), nc = cols(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r); // keep the nonzero rows only
    return r;
}

inline std::size_t rank(Mat m) { return rref(m); }

/// Canonical basis of the row space.
inline Mat row_basis(Mat m) {
    rref(m);
    return m;
}

inline bool in_span(const Mat& basis, const Vec& v) {
    bool nonzero = false;
    for (const auto& x : v)
        if (x != 0) nonzero = true;
    if (!nonzero) return true;
    Mat with = basis;
    with.push_back(v);
    return rank(std::move(with)) == rank(basis);
}

inline bool span_subset(const Mat& a, const Mat& b) {
    Mat bb = row_basis(b);
    for (const auto& v : a)
        if (!in_span(bb, v)) return false;
    return true;
}

inline bool span_equal(const Mat& a, const Mat& b) { return span_subset(a, b) && span_subset(b, a); }

/// Basis of { y : m y = 0 }.
inline Mat nullspace(Mat m, std::size_t nc) {
    if (m.empty()) {
        Mat id(nc, Vec(nc, Rational(0)));
        for (std::size_t i = 0; i < nc; ++i) id[i][i] = 1;
        return id;
    }
    rref(m);
    std::vector<std::ptrdiff_t> pivot_of_col(nc, -1);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (m[r][c] != 0) {
                pivot_of_col[c] = static_cast<std::ptrdiff_t>(r);
                break;
            }
    Mat basis;
    for (std::size_t c = 0; c < nc; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(nc, Rational(0));
        v[c] = 1;
        for (std::size_t cc = 0; cc < nc; ++cc) {
            const auto pr = pivot_of_col[cc];
            if (pr >= 0) v[cc] = -m[static_cast<std::size_t>(pr)][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Annihilator of a row span under the standard pairing.
inline Mat annihilator(const Mat& span, std::size_t nc) { return nullspace(span, nc); }

/// Intersection of two row spans, via the double annihilator.
inline Mat intersect(const Mat& a, const Mat& b, std::size_t nc) {
    Mat ann = annihilator(a, nc);
    Mat ann_b = annihilator(b, nc);
    ann.insert(ann.end(), ann_b.begin(), ann_b.end());
    return nullspace(std::move(ann), nc);
}

/// One solution x of x A = b (x a row vector over the rows of A), if any.
inline std::optional<Vec> solve_left(const Mat& a, const Vec& b) {
    const std::size_t rows = a.size(), nc = cols(a);
    // transpose to solve A^T x^T = b^T by elimination on the augmented matrix
    Mat aug(nc, Vec(rows + 1, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < nc; ++j) aug[j][i] = a[i][j];
    for (std::size_t j = 0; j < nc; ++j) aug[j][rows] = b[j];
    rref(aug);
    Vec x(rows, Rational(0));
    for (const auto& row : aug) {
        std::size_t lead = rows + 1;
        for (std::size_t c = 0; c <= rows; ++c)
            if (row[c] != 0) {
                lead = c;
                break;
            }
        if (lead == rows + 1) continue;
        if (lead == rows) return std::nullopt; // inconsistent
        x[lead] = row[rows];
    }
    return x;
}

} // namespace linalg
} // namespace gcb
