#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gcb/chart.hpp"
#include "gcb/derivation.hpp"
#include "gcb/poly.hpp"

namespace gcb {

namespace detail {

/// Bracket of two single generators in the Darboux chart:
///   {p_i, x^j} = delta,  {a_j, al^l} = delta,
/// reversed-order values forced by graded skew symmetry, everything else zero.
inline Rational generator_bracket(const CotangentChart& chart, std::size_t u, std::size_t v) {
    const int k = chart.k();
    if (chart.is_p(u) && chart.is_x(v)) {
        std::size_t i = u - static_cast<std::size_t>(chart.base_dim() + 2 * chart.rank());
        return v == static_cast<std::size_t>(i) ? Rational(1) : Rational(0);
    }
    if (chart.is_x(u) && chart.is_p(v)) {
        std::size_t i = v - static_cast<std::size_t>(chart.base_dim() + 2 * chart.rank());
        return u == static_cast<std::size_t>(i) ? Rational(-1) : Rational(0);
    }
    if (chart.is_a(u) && chart.is_alpha(v)) {
        std::size_t j = u - static_cast<std::size_t>(chart.base_dim() + chart.rank());
        std::size_t l = v - static_cast<std::size_t>(chart.base_dim());
        return j == l ? Rational(1) : Rational(0);
    }
    if (chart.is_alpha(u) && chart.is_a(v)) {
        std::size_t l = u - static_cast<std::size_t>(chart.base_dim());
        std::size_t j = v - static_cast<std::size_t>(chart.base_dim() + chart.rank());
        if (j != l) return Rational(0);
        return (k % 2) ? Rational(-1) : Rational(1);
    }
    return Rational(0);
}

struct MonoSplit {
    std::size_t head;
    Monomial tail;
    int tail_degree;
};

inline std::optional<MonoSplit> split_head(const Monomial& m, const GeneratorTable& t) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.exponent(i)) {
            Monomial tail = m;
            tail.set_exponent(i, m.exponent(i) - 1);
            return MonoSplit{i, tail, tail.degree(t)};
        }
    }
    return std::nullopt;
}

inline GradedPoly poisson_mono(const CotangentChart& chart, const Monomial& u, const Monomial& v);

inline GradedPoly poisson_gen_mono(const CotangentChart& chart, std::size_t g, const Monomial& v) {
    const TablePtr& table = chart.table();
    const auto& t = *table;
    auto split = split_head(v, t);
    if (!split) return GradedPoly::zero(table); // constants are central
    const std::size_t h = split->head;
    // {g, h w} = {g,h} w + (-1)^{(|g|+k)|h|} h {g,w}
    GradedPoly result(table);
    const Rational base = generator_bracket(chart, g, h);
    if (base != 0) result += base * GradedPoly::term(table, split->tail, Rational(1));
    GradedPoly rest = poisson_gen_mono(chart, g, split->tail);
    if (!rest.is_zero()) {
        const int sgn = ((t.degree(g) + chart.k()) % 2) && (t.degree(h) % 2) ? -1 : 1;
        result += Rational(sgn) * (GradedPoly::generator(table, h) * rest);
    }
    return result;
}

inline GradedPoly poisson_mono(const CotangentChart& chart, const Monomial& u, const Monomial& v) {
    const TablePtr& table = chart.table();
    const auto& t = *table;
    auto split = split_head(u, t);
    if (!split) return GradedPoly::zero(table);
    const std::size_t g = split->head;
    if (split->tail.is_constant()) return poisson_gen_mono(chart, g, v);
    // {g t, v} = g {t, v} + (-1)^{|t| (|v|+k)} {g, v} t
    GradedPoly result = GradedPoly::generator(table, g) * poisson_mono(chart, split->tail, v);
    GradedPoly left = poisson_gen_mono(chart, g, v);
    if (!left.is_zero()) {
        const int sgn = (split->tail_degree % 2) && ((v.degree(t) + chart.k()) % 2) ? -1 : 1;
        result += Rational(sgn) * (left * GradedPoly::term(table, split->tail, Rational(1)));
    }
    return result;
}

} // namespace detail

/// Degree -k Poisson bracket of the shifted cotangent chart.
inline GradedPoly poisson(const GradedPoly& f, const GradedPoly& g, const CotangentChart& chart) {
    if (!same_table(f.table(), chart.table()) || !same_table(g.table(), chart.table()))
        throw std::invalid_argument("generator table mismatch");
    GradedPoly result = chart.zero();
    for (const auto& [mu, cu] : f.terms()) {
        for (const auto& [mv, cv] : g.terms()) {
            GradedPoly piece = detail::poisson_mono(chart, mu, mv);
            if (!piece.is_zero()) result += (cu * cv) * piece;
        }
    }
    return result;
}

/// Hamiltonian vector field of a homogeneous function: f -> {theta, f}.
inline Derivation hamiltonian_vf(const GradedPoly& theta, const CotangentChart& chart) {
    if (!theta.is_homogeneous()) throw std::invalid_argument("hamiltonian of non-homogeneous function");
    const auto deg = theta.homogeneous_degree();
    Derivation d(chart.table(), deg ? *deg - chart.k() : 0);
    for (std::size_t i = 0; i < chart.table()->size(); ++i)
        d.set_value(i, poisson(theta, chart.gen(i), chart));
    return d;
}

/// Degree-k cochain built from base and fibre generators only; the parameter
/// of the gauge automorphisms below.
class TwistCochain {
public:
    TwistCochain(GradedPoly b, const CotangentChart& chart) : b_(std::move(b)) {
        if (!same_table(b_.table(), chart.table())) throw std::invalid_argument("generator table mismatch");
        if (!b_.is_homogeneous(chart.k()))
            throw std::invalid_argument("twist cochain must be homogeneous of degree k");
        if (!chart.pure_form(b_))
            throw std::invalid_argument("twist cochain must not involve a or p generators");
    }
    const GradedPoly& poly() const { return b_; }

private:
    GradedPoly b_;
};

/// Substitution homomorphism: each generator is replaced by its image and the
/// result multiplied out in the graded algebra.
inline GradedPoly substitute(const GradedPoly& f, const std::vector<GradedPoly>& images) {
    const TablePtr& table = f.table();
    if (images.size() != table->size()) throw std::invalid_argument("one image per generator required");
    GradedPoly result(table);
    for (const auto& [m, c] : f.terms()) {
        GradedPoly term = GradedPoly::constant(table, c);
        for (std::size_t i = 0; i < table->size(); ++i)
            for (std::uint32_t e = 0; e < m.exponent(i); ++e) term = term * images[i];
        result += term;
    }
    return result;
}

/// Gauge automorphism tau_B: identity on x and al generators, g - {B, g} on a
/// and p generators, extended multiplicatively.
inline GradedPoly twist(const TwistCochain& b, const GradedPoly& f, const CotangentChart& chart) {
    if (!same_table(f.table(), chart.table())) throw std::invalid_argument("generator table mismatch");
    std::vector<GradedPoly> images;
    images.reserve(chart.table()->size());
    for (std::size_t i = 0; i < chart.table()->size(); ++i) {
        GradedPoly g = chart.gen(i);
        if (chart.is_a(i) || chart.is_p(i)) g -= poisson(b.poly(), g, chart);
        images.push_back(std::move(g));
    }
    return substitute(f, images);
}

/// Decomposition of a degree-(k-1) function into its a-linear part (a section
/// of the fibre bundle, coefficients in the base variables) and its pure form
/// part.
struct SectionSplit {
    std::vector<GradedPoly> a_part; // length n, base-coefficient polynomials
    GradedPoly form;                // pure x/al polynomial of degree k-1
};

inline SectionSplit decompose_section(const GradedPoly& e, const CotangentChart& chart) {
    if (!same_table(e.table(), chart.table())) throw std::invalid_argument("generator table mismatch");
    if (!e.is_homogeneous(chart.k() - 1))
        throw std::invalid_argument("section must be homogeneous of degree k-1");
    SectionSplit split;
    split.a_part.assign(static_cast<std::size_t>(chart.rank()), chart.zero());
    split.form = chart.zero();
    const TablePtr& table = chart.table();
    for (const auto& [m, c] : e.terms()) {
        if (chart.p_count(m)) throw std::invalid_argument("section contains momentum generators");
        const int ac = chart.a_count(m);
        if (ac > 1) throw std::invalid_argument("section has fibre-degree >= 2 terms");
        if (ac == 1) {
            Monomial rest = m;
            int j = -1;
            for (int jj = 0; jj < chart.rank(); ++jj) {
                if (m.exponent(chart.a(jj))) {
                    j = jj;
                    rest.set_exponent(chart.a(jj), 0);
                    break;
                }
            }
            // degree bookkeeping forces the cofactor to be of degree 0
            split.a_part[static_cast<std::size_t>(j)] += GradedPoly::term(table, rest, c);
        } else {
            split.form += GradedPoly::term(table, m, c);
        }
    }
    return split;
}

/// Inverse of decompose_section.
inline GradedPoly section_poly(const SectionSplit& s, const CotangentChart& chart) {
    GradedPoly e = s.form;
    for (int j = 0; j < chart.rank(); ++j)
        e += s.a_part[static_cast<std::size_t>(j)] * chart.gen(chart.a(j));
    return e;
}

} // namespace gcb
