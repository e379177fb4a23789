#pragma once

#include <map>
#include <stdexcept>

#include "gcb/poly.hpp"

namespace gcb {

/// Degree-d derivation of a graded polynomial algebra, stored by its images
/// on generators and extended by the graded Leibniz rule
///   X(fg) = X(f) g + (-1)^{|f| d} f X(g).
class Derivation {
public:
    Derivation(TablePtr table, int degree) : table_(std::move(table)), degree_(degree) {}

    Derivation(TablePtr table, int degree, std::map<std::size_t, GradedPoly> values)
        : table_(std::move(table)), degree_(degree) {
        for (auto& [i, p] : values) set_value(i, p);
    }

    const TablePtr& table() const { return table_; }
    int degree() const { return degree_; }
    int parity() const { return ((degree_ % 2) + 2) % 2; }

    void set_value(std::size_t gen, const GradedPoly& image) {
        if (!same_table(table_, image.table())) throw std::invalid_argument("generator table mismatch");
        if (!image.is_homogeneous(table_->degree(gen) + degree_))
            throw std::invalid_argument("derivation image of " + table_->name(gen) +
                                        " is not homogeneous of degree |g| + d");
        values_.insert_or_assign(gen, image);
    }

    bool has_value(std::size_t gen) const { return values_.count(gen) != 0; }

    const GradedPoly& value(std::size_t gen) const {
        auto it = values_.find(gen);
        if (it == values_.end())
            throw std::invalid_argument("derivation has no image for generator " + table_->name(gen));
        return it->second;
    }

    /// Graded Leibniz extension to arbitrary polynomials.
    GradedPoly operator()(const GradedPoly& p) const {
        if (!same_table(table_, p.table())) throw std::invalid_argument("generator table mismatch");
        GradedPoly result(table_);
        const auto& t = *table_;
        const std::size_t n = t.size();
        for (const auto& [m, c] : p.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t e = m.exponent(i);
                if (!e) continue;
                const GradedPoly& img = value(i);
                if (img.is_zero()) continue;
                Monomial prefix(n), suffix(n);
                int prefix_deg = 0;
                for (std::size_t j = 0; j < i; ++j) {
                    prefix.set_exponent(j, m.exponent(j));
                    prefix_deg += static_cast<int>(m.exponent(j)) * t.degree(j);
                }
                prefix.set_exponent(i, e - 1);
                prefix_deg += static_cast<int>(e - 1) * t.degree(i);
                for (std::size_t j = i + 1; j < n; ++j) suffix.set_exponent(j, m.exponent(j));
                const int sign = (parity() && (prefix_deg % 2)) ? -1 : 1;
                Rational coeff = c * Rational(e);
                if (sign < 0) coeff = -coeff;
                GradedPoly piece = GradedPoly::term(table_, prefix, coeff) * img *
                                   GradedPoly::term(table_, suffix, Rational(1));
                result += piece;
            }
        }
        return result;
    }

private:
    TablePtr table_;
    int degree_;
    std::map<std::size_t, GradedPoly> values_;
};

/// Graded commutator [X,Y] = X Y - (-1)^{|X||Y|} Y X, again a derivation.
inline Derivation commutator(const Derivation& x, const Derivation& y) {
    if (!same_table(x.table(), y.table())) throw std::invalid_argument("generator table mismatch");
    const TablePtr& table = x.table();
    const int sign = (x.parity() && y.parity()) ? -1 : 1;
    Derivation r(table, x.degree() + y.degree());
    for (std::size_t i = 0; i < table->size(); ++i) {
        GradedPoly g = GradedPoly::generator(table, i);
        GradedPoly img = x(y(g)) - Rational(sign) * y(x(g));
        r.set_value(i, img);
    }
    return r;
}

} // namespace gcb
