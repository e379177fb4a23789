#pragma once

// Independent brute-force oracles used to pin expected values. These stay
// deliberately naive and separate from the library code paths they check.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gcb/algebroid.hpp"
#include "gcb/poly.hpp"

namespace gcb::test {

// Normal form of a generator word by adjacent transpositions, multiplying by
// -1 whenever two odd generators swap. Returns nullopt when an odd generator
// repeats (the word is zero).
inline std::optional<std::pair<Monomial, int>> sort_word(std::vector<std::size_t> word,
                                                         const GeneratorTable& t) {
    int sign = 1;
    for (std::size_t pass = 0; pass + 1 < word.size() || pass == 0; ++pass) {
        bool swapped = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                if (t.odd(word[i]) && t.odd(word[i + 1])) sign = -sign;
                std::swap(word[i], word[i + 1]);
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    Monomial m(t.size());
    for (auto i : word) {
        if (t.odd(i) && m.exponent(i) >= 1) return std::nullopt;
        m.set_exponent(i, m.exponent(i) + 1);
    }
    return std::make_pair(m, sign);
}

inline std::vector<std::size_t> word_of(const Monomial& m) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::uint32_t e = 0; e < m.exponent(i); ++e) w.push_back(i);
    return w;
}

// Product of two polynomials through the word-sorting oracle.
inline GradedPoly oracle_mul(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r(a.table());
    const auto& t = *a.table();
    for (const auto& [mu, cu] : a.terms()) {
        for (const auto& [mv, cv] : b.terms()) {
            auto w = word_of(mu);
            auto wv = word_of(mv);
            w.insert(w.end(), wv.begin(), wv.end());
            auto sorted = sort_word(std::move(w), t);
            if (!sorted) continue;
            Rational coeff = cu * cv;
            if (sorted->second < 0) coeff = -coeff;
            r += GradedPoly::term(a.table(), sorted->first, coeff);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Brute-force algebroid oracles computed straight from the coefficient
// tables, independent of the symplectic route.

// rho(e_a) applied to a base function.
inline GradedPoly naive_anchor_apply(const gcb::LieAlgebroidData& alg, int a, const GradedPoly& f) {
    GradedPoly r(f.table());
    for (int i = 0; i < alg.base_dim(); ++i)
        r += alg.anchor(a, i).imported_into(f.table()) * left_derivative(f, static_cast<std::size_t>(i));
    return r;
}

// Jacobiator component J(a,b,c)^d = sum_cyc [ c^e_{ab} c^d_{ec} - rho(e_c)(c^d_{ab}) ].
inline GradedPoly naive_jacobiator(const gcb::LieAlgebroidData& alg, int a, int b, int c, int d) {
    GradedPoly r(alg.base());
    const int tri[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
    for (const auto& t : tri) {
        for (int e = 0; e < alg.rank(); ++e) r += alg.structure(t[0], t[1], e) * alg.structure(e, t[2], d);
        r -= naive_anchor_apply(alg, t[2], alg.structure(t[0], t[1], d));
    }
    return r;
}

inline bool naive_jacobi_holds(const gcb::LieAlgebroidData& alg) {
    for (int a = 0; a < alg.rank(); ++a)
        for (int b = a + 1; b < alg.rank(); ++b)
            for (int c = b + 1; c < alg.rank(); ++c)
                for (int d = 0; d < alg.rank(); ++d)
                    if (!naive_jacobiator(alg, a, b, c, d).is_zero()) return false;
    return true;
}

inline bool naive_anchor_compatible(const gcb::LieAlgebroidData& alg) {
    for (int a = 0; a < alg.rank(); ++a)
        for (int b = a + 1; b < alg.rank(); ++b)
            for (int i = 0; i < alg.base_dim(); ++i) {
                GradedPoly d(alg.base());
                for (int e = 0; e < alg.rank(); ++e) d += alg.structure(a, b, e) * alg.anchor(e, i);
                d -= naive_anchor_apply(alg, a, alg.anchor(b, i));
                d += naive_anchor_apply(alg, b, alg.anchor(a, i));
                if (!d.is_zero()) return false;
            }
    return true;
}

// Evaluation of a fibre word against a tuple of basis sections, by sorting
// the tuple and reading off the coefficient.
inline GradedPoly eval_form(const gcb::LieAlgebroidData& alg, const GradedPoly& w,
                            const std::vector<int>& tuple) {
    const auto& table = w.table();
    int sign = 1;
    std::vector<int> s = tuple;
    for (std::size_t pass = 0; pass + 1 < s.size(); ++pass)
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] > s[i + 1]) {
                std::swap(s[i], s[i + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return GradedPoly::zero(table);
    GradedPoly r = w;
    for (std::size_t t = 0; t < s.size(); ++t)
        r = left_derivative(r, static_cast<std::size_t>(alg.base_dim() + s[t]));
    // strip any remaining fibre dependence: nonzero only for a q-form paired
    // against a length-q tuple
    for (int j = 0; j < alg.rank(); ++j)
        if (r.depends_on(static_cast<std::size_t>(alg.base_dim() + j))) return GradedPoly::zero(table);
    if (sign < 0) r = -r;
    return r;
}

// Chevalley-Eilenberg value of d_A w on a tuple of basis sections.
inline GradedPoly naive_dA_eval(const gcb::LieAlgebroidData& alg, const GradedPoly& w,
                                const std::vector<int>& tuple) {
    GradedPoly r(w.table());
    const int q = static_cast<int>(tuple.size());
    for (int i = 0; i < q; ++i) {
        std::vector<int> rest;
        for (int j = 0; j < q; ++j)
            if (j != i) rest.push_back(tuple[j]);
        GradedPoly inner = eval_form(alg, w, rest);
        GradedPoly term = naive_anchor_apply(alg, tuple[i], inner);
        if (i % 2) term = -term;
        r += term;
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            for (int e = 0; e < alg.rank(); ++e) {
                const GradedPoly& cf = alg.structure(tuple[i], tuple[j], e);
                if (cf.is_zero()) continue;
                std::vector<int> args{e};
                for (int l = 0; l < q; ++l)
                    if (l != i && l != j) args.push_back(tuple[l]);
                GradedPoly term = cf.imported_into(w.table()) * eval_form(alg, w, args);
                if ((i + j) % 2) term = -term; // (-1)^{i+j} with 0-based slots
                r += term;
            }
        }
    return r;
}

inline bool naive_dA_zero(const gcb::LieAlgebroidData& alg, const GradedPoly& w, int q_plus_1) {
    std::vector<int> tuple(static_cast<std::size_t>(q_plus_1), 0);
    const int n = alg.rank();
    // iterate strictly increasing tuples
    std::function<bool(int, int)> rec = [&](int pos, int start) {
        if (pos == q_plus_1) return naive_dA_eval(alg, w, tuple).is_zero();
        for (int v = start; v < n; ++v) {
            tuple[static_cast<std::size_t>(pos)] = v;
            if (!rec(pos + 1, v + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

} // namespace gcb::test
