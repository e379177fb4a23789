#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gcb/poly.hpp"

namespace gcb {

/// Table of base coordinates only: x1..xm of degree 0.
inline TablePtr base_table(int m) {
    std::vector<Generator> gens;
    for (int i = 0; i < m; ++i) gens.push_back({"x" + std::to_string(i + 1), 0});
    return make_table(std::move(gens));
}

/// Table of base plus odd fibre coordinates: x1..xm, al1..aln. Polynomials in
/// these generators model forms with function coefficients.
inline TablePtr form_table(int m, int n) {
    std::vector<Generator> gens;
    for (int i = 0; i < m; ++i) gens.push_back({"x" + std::to_string(i + 1), 0});
    for (int j = 0; j < n; ++j) gens.push_back({"al" + std::to_string(j + 1), 1});
    return make_table(std::move(gens));
}

/// Darboux chart of the shifted cotangent bundle at shift k >= 3 over an
/// m-dimensional base with fibre rank n. Generators, in canonical order:
///   x1..xm   degree 0
///   al1..aln degree 1
///   a1..an   degree k-1
///   p1..pm   degree k
class CotangentChart {
public:
    CotangentChart(int k, int m, int n) : k_(k), m_(m), n_(n) {
        if (k < 3) throw std::invalid_argument("chart shift must be >= 3");
        if (m < 0 || n < 0) throw std::invalid_argument("negative dimensions");
        std::vector<Generator> gens;
        for (int i = 0; i < m; ++i) gens.push_back({"x" + std::to_string(i + 1), 0});
        for (int j = 0; j < n; ++j) gens.push_back({"al" + std::to_string(j + 1), 1});
        for (int j = 0; j < n; ++j) gens.push_back({"a" + std::to_string(j + 1), k - 1});
        for (int i = 0; i < m; ++i) gens.push_back({"p" + std::to_string(i + 1), k});
        table_ = make_table(std::move(gens));
    }

    int k() const { return k_; }
    int base_dim() const { return m_; }
    int rank() const { return n_; }
    const TablePtr& table() const { return table_; }

    std::size_t x(int i) const { return check(i, m_), static_cast<std::size_t>(i); }
    std::size_t alpha(int j) const { return check(j, n_), static_cast<std::size_t>(m_ + j); }
    std::size_t a(int j) const { return check(j, n_), static_cast<std::size_t>(m_ + n_ + j); }
    std::size_t p(int i) const { return check(i, m_), static_cast<std::size_t>(m_ + 2 * n_ + i); }

    bool is_x(std::size_t g) const { return g < static_cast<std::size_t>(m_); }
    bool is_alpha(std::size_t g) const {
        return g >= static_cast<std::size_t>(m_) && g < static_cast<std::size_t>(m_ + n_);
    }
    bool is_a(std::size_t g) const {
        return g >= static_cast<std::size_t>(m_ + n_) && g < static_cast<std::size_t>(m_ + 2 * n_);
    }
    bool is_p(std::size_t g) const { return g >= static_cast<std::size_t>(m_ + 2 * n_); }

    GradedPoly gen(std::size_t i) const { return GradedPoly::generator(table_, i); }
    GradedPoly zero() const { return GradedPoly::zero(table_); }
    GradedPoly constant(const Rational& c) const { return GradedPoly::constant(table_, c); }

    /// a-degree and p-degree of a monomial (word counts in those blocks).
    int a_count(const Monomial& mono) const {
        int c = 0;
        for (int j = 0; j < n_; ++j) c += static_cast<int>(mono.exponent(a(j)));
        return c;
    }
    int p_count(const Monomial& mono) const {
        int c = 0;
        for (int i = 0; i < m_; ++i) c += static_cast<int>(mono.exponent(p(i)));
        return c;
    }

    bool pure_form(const GradedPoly& f) const {
        for (const auto& [mono, c] : f.terms())
            if (a_count(mono) || p_count(mono)) return false;
        return true;
    }

private:
    static void check(int i, int bound) {
        if (i < 0 || i >= bound) throw std::out_of_range("chart generator index");
    }

    int k_, m_, n_;
    TablePtr table_;
};

} // namespace gcb
