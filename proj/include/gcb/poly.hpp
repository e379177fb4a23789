#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gcb/generator_table.hpp"
#include "gcb/rational.hpp"

namespace gcb {

/// Exponent vector in canonical generator order. Odd generators carry
/// exponent 0 or 1 only.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n_generators) : exp_(n_generators, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exp_(std::move(exps)) {}

    std::size_t size() const { return exp_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exp_[i]; }
    void set_exponent(std::size_t i, std::uint32_t e) { exp_[i] = e; }
    const std::vector<std::uint32_t>& exponents() const { return exp_; }

    bool is_constant() const {
        for (auto e : exp_)
            if (e) return false;
        return true;
    }

    int degree(const GeneratorTable& t) const {
        int d = 0;
        for (std::size_t i = 0; i < exp_.size(); ++i) d += static_cast<int>(exp_[i]) * t.degree(i);
        return d;
    }

    bool operator<(const Monomial& o) const { return exp_ < o.exp_; }
    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

private:
    std::vector<std::uint32_t> exp_;
};

namespace detail {

/// Koszul sign of concatenating canonical words u, v and re-sorting: each odd
/// factor of v hops over every odd factor of u with larger table index.
inline int koszul_sign(const Monomial& u, const Monomial& v, const GeneratorTable& t) {
    int swaps = 0;
    std::size_t n = t.size();
    std::vector<int> odd_u_suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        odd_u_suffix[i] = odd_u_suffix[i + 1] + ((t.odd(i) && u.exponent(i)) ? 1 : 0);
    for (std::size_t j = 0; j < n; ++j)
        if (t.odd(j) && v.exponent(j)) swaps += odd_u_suffix[j + 1];
    return (swaps % 2) ? -1 : 1;
}

} // namespace detail

/// Element of the graded commutative polynomial algebra on a generator
/// table, with exact rational coefficients. Values are immutable in spirit:
/// all operations return new polynomials.
class GradedPoly {
public:
    GradedPoly() = default;
    explicit GradedPoly(TablePtr table) : table_(std::move(table)) {}

    static GradedPoly zero(TablePtr table) { return GradedPoly(std::move(table)); }

    static GradedPoly constant(TablePtr table, const Rational& c) {
        GradedPoly p(std::move(table));
        if (c != 0) p.terms_.emplace(Monomial(p.table_->size()), c);
        return p;
    }

    static GradedPoly generator(TablePtr table, std::size_t i) {
        GradedPoly p(table);
        Monomial m(table->size());
        m.set_exponent(i, 1);
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static GradedPoly term(TablePtr table, Monomial m, const Rational& c) {
        GradedPoly p(std::move(table));
        if (c != 0) {
            for (std::size_t i = 0; i < p.table_->size(); ++i)
                if (p.table_->odd(i) && m.exponent(i) > 1)
                    throw std::invalid_argument("odd generator with exponent > 1: " + p.table_->name(i));
            p.terms_.emplace(std::move(m), c);
        }
        return p;
    }

    const TablePtr& table() const { return table_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const GradedPoly& o) const {
        require_same_table(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    GradedPoly operator-() const {
        GradedPoly r(table_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        require_same_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o) {
        require_same_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        a.require_same_table(b);
        GradedPoly r(a.table_);
        const auto& t = *a.table_;
        const std::size_t n = t.size();
        for (const auto& [mu, cu] : a.terms_) {
            for (const auto& [mv, cv] : b.terms_) {
                bool dead = false;
                Monomial prod(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::uint32_t e = mu.exponent(i) + mv.exponent(i);
                    if (e > 1 && t.odd(i)) {
                        dead = true; // odd generators square to zero
                        break;
                    }
                    prod.set_exponent(i, e);
                }
                if (dead) continue;
                const int sign = detail::koszul_sign(mu, mv, t);
                Rational coeff = cu * cv;
                if (sign < 0) coeff = -coeff;
                r.add_term(std::move(prod), std::move(coeff));
            }
        }
        return r;
    }

    friend GradedPoly operator*(const Rational& c, GradedPoly p) {
        if (c == 0) return GradedPoly(p.table_);
        for (auto& [m, v] : p.terms_) v *= c;
        return p;
    }
    friend GradedPoly operator*(GradedPoly p, const Rational& c) { return c * std::move(p); }

    /// Splits into homogeneous pieces keyed by total degree (zero absent).
    std::map<int, GradedPoly> degree_components() const {
        std::map<int, GradedPoly> parts;
        for (const auto& [m, c] : terms_) {
            const int d = m.degree(*table_);
            auto it = parts.find(d);
            if (it == parts.end()) it = parts.emplace(d, GradedPoly(table_)).first;
            it->second.terms_.emplace(m, c);
        }
        return parts;
    }

    /// The zero polynomial is homogeneous of every degree.
    bool is_homogeneous(int degree) const {
        for (const auto& [m, c] : terms_)
            if (m.degree(*table_) != degree) return false;
        return true;
    }
    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            const int md = m.degree(*table_);
            if (d && *d != md) return false;
            d = md;
        }
        return true;
    }
    /// Degree of a nonzero homogeneous polynomial.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return terms_.begin()->first.degree(*table_);
    }

    /// Parity of a nonzero homogeneous polynomial (degree mod 2).
    int parity() const {
        auto d = homogeneous_degree();
        if (!d) throw std::logic_error("parity of non-homogeneous polynomial");
        return ((*d % 2) + 2) % 2;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest exponent of generator i over all terms.
    std::uint32_t max_exponent(std::size_t i) const {
        std::uint32_t e = 0;
        for (const auto& [m, c] : terms_) e = std::max(e, m.exponent(i));
        return e;
    }
    bool depends_on(std::size_t i) const { return max_exponent(i) > 0; }

    /// Re-expresses the polynomial over a larger table having this one's
    /// generators as a prefix.
    GradedPoly imported_into(const TablePtr& larger) const {
        if (same_table(table_, larger)) return *this;
        if (!table_->prefix_of(*larger))
            throw std::invalid_argument("generator table is not a prefix of the target table");
        GradedPoly r(larger);
        for (const auto& [m, c] : terms_) {
            std::vector<std::uint32_t> e = m.exponents();
            e.resize(larger->size(), 0);
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

    /// Re-expresses over a prefix table; the polynomial must not involve the
    /// dropped generators.
    GradedPoly restricted_to(const TablePtr& smaller) const {
        if (same_table(table_, smaller)) return *this;
        if (!smaller->prefix_of(*table_))
            throw std::invalid_argument("target table is not a prefix of the generator table");
        GradedPoly r(smaller);
        for (const auto& [m, c] : terms_) {
            for (std::size_t g = smaller->size(); g < table_->size(); ++g)
                if (m.exponent(g))
                    throw std::invalid_argument("polynomial involves generators outside the target table");
            std::vector<std::uint32_t> e(m.exponents().begin(),
                                         m.exponents().begin() + static_cast<std::ptrdiff_t>(smaller->size()));
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

    /// Substitutes rational values for the listed generators (all of degree 0);
    /// remaining generators stay symbolic.
    GradedPoly evaluated(const std::map<std::size_t, Rational>& values) const {
        for (const auto& [i, v] : values)
            if (table_->degree(i) != 0)
                throw std::invalid_argument("can only evaluate degree-0 generators");
        GradedPoly r(table_);
        for (const auto& [m, c] : terms_) {
            Rational coeff = c;
            Monomial rest(table_->size());
            for (std::size_t i = 0; i < table_->size(); ++i) {
                const auto e = m.exponent(i);
                if (!e) continue;
                auto it = values.find(i);
                if (it == values.end()) {
                    rest.set_exponent(i, e);
                } else {
                    for (std::uint32_t j = 0; j < e; ++j) coeff *= it->second;
                }
            }
            r.add_term(std::move(rest), coeff);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool printed = false;
            if (a != 1 || m.is_constant()) {
                out << to_string(a);
                printed = true;
            }
            for (std::size_t i = 0; i < table_->size(); ++i) {
                if (!m.exponent(i)) continue;
                if (printed) out << "*";
                out << table_->name(i);
                if (m.exponent(i) > 1) out << "^" << m.exponent(i);
                printed = true;
            }
        }
        return out.str();
    }

    void require_same_table(const GradedPoly& o) const {
        if (!same_table(table_, o.table_)) throw std::invalid_argument("generator table mismatch");
    }

private:
    void add_term(Monomial m, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TablePtr table_;
    std::map<Monomial, Rational> terms_;
};

inline GradedPoly scale(const Rational& c, const GradedPoly& p) { return c * p; }

/// Left derivative with respect to generator i: on a canonical word the
/// factor g_i is moved to the front, one Koszul flip per odd factor it
/// crosses, and then stripped.
inline GradedPoly left_derivative(const GradedPoly& p, std::size_t i) {
    const TablePtr& table = p.table();
    const auto& t = *table;
    GradedPoly r(table);
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = m.exponent(i);
        if (!e) continue;
        int sign = 1;
        if (t.odd(i)) {
            int odd_before = 0;
            for (std::size_t j = 0; j < i; ++j)
                if (t.odd(j) && m.exponent(j)) ++odd_before;
            sign = (odd_before % 2) ? -1 : 1;
        }
        Monomial stripped = m;
        stripped.set_exponent(i, e - 1);
        Rational coeff = c * Rational(e);
        if (sign < 0) coeff = -coeff;
        r += GradedPoly::term(table, stripped, coeff);
    }
    return r;
}

} // namespace gcb
