#pragma once

// Classical exterior algebra over a rank-n module, in coordinates: a q-vector
// (or q-form) is a coefficient list over the lexicographically sorted
// q-subsets of {0..n-1}. Contraction uses the left-derivative convention
// matching the graded polynomial algebra: i_j removes index j at position p
// within the sorted word with sign (-1)^p.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gcb/poly.hpp"

namespace gcb::ext {

inline std::vector<std::vector<int>> subsets(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(q));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == q) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return out;
}

inline std::size_t dim(int n, int q) {
    if (q < 0 || q > n) return 0;
    // n choose q
    long long r = 1;
    for (int i = 0; i < q; ++i) r = r * (n - i) / (i + 1);
    return static_cast<std::size_t>(r);
}

inline std::size_t index_of(int n, const std::vector<int>& sorted) {
    // position in the lex enumeration produced by subsets()
    std::size_t idx = 0;
    int prev = -1;
    int q = static_cast<int>(sorted.size());
    for (int pos = 0; pos < q; ++pos) {
        for (int v = prev + 1; v < sorted[static_cast<std::size_t>(pos)]; ++v)
            idx += dim(n - v - 1, q - pos - 1);
        prev = sorted[static_cast<std::size_t>(pos)];
    }
    return idx;
}

/// Sorts a word of indices; returns {0,...} sign 0 on repeats, else the
/// permutation sign and the sorted word.
inline std::pair<int, std::vector<int>> sort_word(std::vector<int> w) {
    int sign = 1;
    for (std::size_t pass = 0; pass + 1 < w.size(); ++pass)
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return {0, {}};
    return {sign, std::move(w)};
}

/// Coefficient lists with entries of any ring type (Rational or GradedPoly).
template <class T>
using Coeffs = std::vector<T>;

template <class T>
Coeffs<T> zero_coeffs(int n, int q, const T& zero) {
    return Coeffs<T>(dim(n, q), zero);
}

inline bool is_zero_entry(const Rational& r) { return r == 0; }
inline bool is_zero_entry(const GradedPoly& p) { return p.is_zero(); }

template <class T>
bool all_zero(const Coeffs<T>& c) {
    for (const auto& x : c)
        if (!is_zero_entry(x)) return false;
    return true;
}

template <class T>
Coeffs<T> wedge(int n, int qa, const Coeffs<T>& a, int qb, const Coeffs<T>& b, const T& zero) {
    Coeffs<T> out = zero_coeffs(n, qa + qb, zero);
    if (out.empty()) return out;
    const auto sa = subsets(n, qa), sb = subsets(n, qb);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (is_zero_entry(a[i])) continue;
        for (std::size_t j = 0; j < sb.size(); ++j) {
            if (is_zero_entry(b[j])) continue;
            std::vector<int> w = sa[i];
            w.insert(w.end(), sb[j].begin(), sb[j].end());
            auto [sign, sorted] = sort_word(std::move(w));
            if (!sign) continue;
            T prod = a[i] * b[j];
            if (sign < 0) prod = -prod;
            out[index_of(n, sorted)] += prod;
        }
    }
    return out;
}

/// i_j: removes index j with the left-derivative sign.
template <class T>
Coeffs<T> contract_index(int n, int q, const Coeffs<T>& w, int j, const T& zero) {
    Coeffs<T> out = zero_coeffs(n, q - 1, zero);
    const auto sq = subsets(n, q);
    for (std::size_t i = 0; i < sq.size(); ++i) {
        if (is_zero_entry(w[i])) continue;
        const auto& s = sq[i];
        auto it = std::find(s.begin(), s.end(), j);
        if (it == s.end()) continue;
        const int pos = static_cast<int>(it - s.begin());
        std::vector<int> rest;
        for (int v : s)
            if (v != j) rest.push_back(v);
        T val = w[i];
        if (pos % 2) val = -val;
        out[index_of(n, rest)] += val;
    }
    return out;
}

/// Contraction by a sorted word, first letter first: i_{w} = i_{w_q} ... i_{w_1}.
template <class T>
Coeffs<T> contract_word(int n, int q, Coeffs<T> w, const std::vector<int>& word, const T& zero) {
    int cur = q;
    for (int j : word) {
        w = contract_index(n, cur, w, j, zero);
        --cur;
    }
    return w;
}

/// Contraction of a q-object by a vector with scalar-type S coefficients.
template <class T>
Coeffs<T> contract_vector(int n, int q, const Coeffs<T>& w, const Coeffs<T>& v, const T& zero) {
    Coeffs<T> out = zero_coeffs(n, q - 1, zero);
    for (int j = 0; j < n; ++j) {
        if (is_zero_entry(v[static_cast<std::size_t>(j)])) continue;
        auto part = contract_index(n, q, w, j, zero);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[static_cast<std::size_t>(j)] * part[i];
    }
    return out;
}

/// Full pairing of two degree-q coefficient lists (<al^S, e_S> = 1).
template <class T>
T pair_full(const Coeffs<T>& a, const Coeffs<T>& b, const T& zero) {
    T r = zero;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

} // namespace gcb::ext
