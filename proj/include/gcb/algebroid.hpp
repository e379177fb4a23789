#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gcb/chart.hpp"
#include "gcb/derivation.hpp"
#include "gcb/poisson.hpp"
#include "gcb/poly.hpp"

namespace gcb {

/// Anchor and structure functions of a candidate Lie algebroid of rank n over
/// an m-dimensional polynomial base. Antisymmetry of the structure functions
/// is enforced; the Jacobi identity is not assumed (verifying it is the job
/// of the master-equation checks).
class LieAlgebroidData {
public:
    LieAlgebroidData(int m, int n)
        : m_(checked_dim(m)),
          n_(checked_dim(n)),
          base_(base_table(m)),
          anchor_(static_cast<std::size_t>(n),
                  std::vector<GradedPoly>(static_cast<std::size_t>(m), GradedPoly::zero(base_table(m)))),
          c_(static_cast<std::size_t>(n),
             std::vector<std::vector<GradedPoly>>(
                 static_cast<std::size_t>(n),
                 std::vector<GradedPoly>(static_cast<std::size_t>(n), GradedPoly::zero(base_table(m))))) {
        // share one base table instance
        for (auto& row : anchor_)
            for (auto& f : row) f = GradedPoly::zero(base_);
        for (auto& plane : c_)
            for (auto& row : plane)
                for (auto& f : row) f = GradedPoly::zero(base_);
    }

    int base_dim() const { return m_; }
    int rank() const { return n_; }
    const TablePtr& base() const { return base_; }

    /// rho^i_a, the TM-component i of the anchor on basis section a.
    const GradedPoly& anchor(int a, int i) const {
        return anchor_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(i));
    }
    void set_anchor(int a, int i, const GradedPoly& f) {
        require_base(f);
        anchor_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(i)) = f;
    }

    /// c^cc_{ab}; setting (a,b) also fixes (b,a) = -value.
    const GradedPoly& structure(int a, int b, int cc) const {
        return c_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)).at(static_cast<std::size_t>(cc));
    }
    void set_structure(int a, int b, int cc, const GradedPoly& f) {
        require_base(f);
        if (a == b && !f.is_zero())
            throw std::invalid_argument("structure function with repeated lower index must vanish");
        c_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)).at(static_cast<std::size_t>(cc)) = f;
        c_.at(static_cast<std::size_t>(b)).at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(cc)) = -f;
    }

private:
    static int checked_dim(int d) {
        if (d < 0) throw std::invalid_argument("negative dimensions");
        return d;
    }

    void require_base(const GradedPoly& f) const {
        if (!same_table(f.table(), base_)) throw std::invalid_argument("coefficient not over the base table");
    }

    int m_, n_;
    TablePtr base_;
    std::vector<std::vector<GradedPoly>> anchor_;
    std::vector<std::vector<std::vector<GradedPoly>>> c_;
};

/// Twisting form of degree k+1 in base and fibre generators.
class TwistH {
public:
    TwistH(GradedPoly h, const LieAlgebroidData& alg, int k) : h_(std::move(h)) {
        const TablePtr ft = form_table(alg.base_dim(), alg.rank());
        if (!same_table(h_.table(), ft)) {
            if (h_.table()->size() < ft->size() || !ft->prefix_of(*h_.table()))
                throw std::invalid_argument("twist form must live on the form table");
            // restrict: ensure no generators beyond the form prefix are used
            for (std::size_t g = ft->size(); g < h_.table()->size(); ++g)
                if (h_.depends_on(g)) throw std::invalid_argument("twist form uses non-form generators");
        }
        if (!h_.is_homogeneous(k + 1))
            throw std::invalid_argument("twist form must be homogeneous of degree k+1");
    }

    const GradedPoly& poly() const { return h_; }

private:
    GradedPoly h_;
};

/// Symmetric fibre pairing, stored as a symmetric matrix of base functions
/// (used only at shift k = 3).
class PairingData {
public:
    explicit PairingData(std::vector<std::vector<GradedPoly>> pi) : pi_(std::move(pi)) {
        const std::size_t n = pi_.size();
        for (const auto& row : pi_)
            if (row.size() != n) throw std::invalid_argument("pairing matrix must be square");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (!(pi_[a][b] == pi_[b][a])) throw std::invalid_argument("pairing matrix must be symmetric");
    }

    static PairingData zero(const LieAlgebroidData& alg) {
        std::size_t n = static_cast<std::size_t>(alg.rank());
        return PairingData(std::vector<std::vector<GradedPoly>>(
            n, std::vector<GradedPoly>(n, GradedPoly::zero(alg.base()))));
    }

    int rank() const { return static_cast<int>(pi_.size()); }
    const GradedPoly& at(int a, int b) const {
        return pi_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
    }
    void set(int a, int b, const GradedPoly& f) {
        pi_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)) = f;
        pi_.at(static_cast<std::size_t>(b)).at(static_cast<std::size_t>(a)) = f;
    }

private:
    std::vector<std::vector<GradedPoly>> pi_;
};

// ---------------------------------------------------------------------------
// Section calculus over a working table whose generators start with
// x1..xm, al1..aln.

/// Coefficients of a section of the fibre bundle (one polynomial per basis
/// section, depending on base variables only).
using Section = std::vector<GradedPoly>;

inline void require_working_table(const LieAlgebroidData& alg, const TablePtr& table) {
    if (!form_table(alg.base_dim(), alg.rank())->prefix_of(*table))
        throw std::invalid_argument("working table must extend the form table of the algebroid");
}

inline Section basis_section(const LieAlgebroidData& alg, const TablePtr& table, int a) {
    Section s(static_cast<std::size_t>(alg.rank()), GradedPoly::zero(table));
    s.at(static_cast<std::size_t>(a)) = GradedPoly::constant(table, Rational(1));
    return s;
}

/// rho(u) applied to a function of the base variables.
inline GradedPoly anchor_apply(const LieAlgebroidData& alg, const Section& u, const GradedPoly& f) {
    const TablePtr& table = f.table();
    GradedPoly r(table);
    for (int a = 0; a < alg.rank(); ++a) {
        if (u[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int i = 0; i < alg.base_dim(); ++i) {
            const GradedPoly& rho = alg.anchor(a, i);
            if (rho.is_zero()) continue;
            GradedPoly df = left_derivative(f, static_cast<std::size_t>(i));
            if (df.is_zero()) continue;
            r += u[static_cast<std::size_t>(a)] * rho.imported_into(table) * df;
        }
    }
    return r;
}

/// Bracket of two sections: structure functions plus anchor derivatives of
/// the coefficients.
inline Section bracket_sections(const LieAlgebroidData& alg, const Section& u, const Section& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("empty section");
    const TablePtr& table = u.front().table();
    require_working_table(alg, table);
    Section r(static_cast<std::size_t>(alg.rank()), GradedPoly::zero(table));
    for (int cc = 0; cc < alg.rank(); ++cc) {
        GradedPoly acc(table);
        for (int a = 0; a < alg.rank(); ++a) {
            for (int b = 0; b < alg.rank(); ++b) {
                const GradedPoly& cf = alg.structure(a, b, cc);
                if (cf.is_zero()) continue;
                acc += u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)] *
                       cf.imported_into(table);
            }
        }
        acc += anchor_apply(alg, u, v[static_cast<std::size_t>(cc)]);
        acc -= anchor_apply(alg, v, u[static_cast<std::size_t>(cc)]);
        r[static_cast<std::size_t>(cc)] = acc;
    }
    return r;
}

/// Interior product i_u of a section into a form on the working table.
inline GradedPoly interior_product(const LieAlgebroidData& alg, const Section& u, const GradedPoly& w) {
    const TablePtr& table = w.table();
    GradedPoly r(table);
    for (int a = 0; a < alg.rank(); ++a) {
        if (u[static_cast<std::size_t>(a)].is_zero()) continue;
        GradedPoly dw = left_derivative(w, static_cast<std::size_t>(alg.base_dim() + a));
        if (dw.is_zero()) continue;
        r += u[static_cast<std::size_t>(a)] * dw;
    }
    return r;
}

/// The differential of the algebroid as a degree +1 derivation on a working
/// table; images are defined on the x and al generators only.
inline Derivation lie_differential(const LieAlgebroidData& alg, const TablePtr& table) {
    require_working_table(alg, table);
    Derivation d(table, 1);
    for (int i = 0; i < alg.base_dim(); ++i) {
        GradedPoly img(table);
        for (int a = 0; a < alg.rank(); ++a) {
            const GradedPoly& rho = alg.anchor(a, i);
            if (rho.is_zero()) continue;
            img += rho.imported_into(table) *
                   GradedPoly::generator(table, static_cast<std::size_t>(alg.base_dim() + a));
        }
        d.set_value(static_cast<std::size_t>(i), img);
    }
    const Rational half(1, 2);
    for (int cc = 0; cc < alg.rank(); ++cc) {
        GradedPoly img(table);
        for (int a = 0; a < alg.rank(); ++a) {
            for (int b = 0; b < alg.rank(); ++b) {
                const GradedPoly& cf = alg.structure(a, b, cc);
                if (cf.is_zero()) continue;
                img -= half * cf.imported_into(table) *
                       GradedPoly::generator(table, static_cast<std::size_t>(alg.base_dim() + a)) *
                       GradedPoly::generator(table, static_cast<std::size_t>(alg.base_dim() + b));
            }
        }
        d.set_value(static_cast<std::size_t>(alg.base_dim() + cc), img);
    }
    return d;
}

/// d_A on a pure form (base and fibre generators only).
inline GradedPoly d_A(const LieAlgebroidData& alg, const GradedPoly& w) {
    const TablePtr& table = w.table();
    require_working_table(alg, table);
    for (std::size_t g = static_cast<std::size_t>(alg.base_dim() + alg.rank()); g < table->size(); ++g)
        if (w.depends_on(g))
            throw std::invalid_argument("d_A input must involve base and fibre generators only");
    return lie_differential(alg, table)(w);
}

/// Cartan Lie derivative on forms: L_u = i_u d_A + d_A i_u.
inline GradedPoly lie_derivative_form(const LieAlgebroidData& alg, const Section& u, const GradedPoly& w) {
    return interior_product(alg, u, d_A(alg, w)) + d_A(alg, interior_product(alg, u, w));
}

// ---------------------------------------------------------------------------
// Hamiltonian data on the chart.

/// Degree k+1 hamiltonian assembled from the algebroid data, the optional
/// pairing (shift 3 only) and the optional twisting form.
inline GradedPoly build_theta(const LieAlgebroidData& alg, const TwistH* h, const PairingData* pi,
                              const CotangentChart& chart) {
    if (chart.rank() != alg.rank() || chart.base_dim() != alg.base_dim())
        throw std::invalid_argument("chart dimensions do not match the algebroid");
    if (pi && chart.k() != 3)
        throw std::invalid_argument("fibre pairing term only exists at shift k = 3");
    if (pi && pi->rank() != alg.rank()) throw std::invalid_argument("pairing rank mismatch");

    const TablePtr& table = chart.table();
    GradedPoly theta(table);
    for (int a = 0; a < alg.rank(); ++a)
        for (int i = 0; i < alg.base_dim(); ++i) {
            const GradedPoly& rho = alg.anchor(a, i);
            if (rho.is_zero()) continue;
            theta += rho.imported_into(table) * chart.gen(chart.alpha(a)) * chart.gen(chart.p(i));
        }
    const Rational half(1, 2);
    for (int a = 0; a < alg.rank(); ++a)
        for (int b = 0; b < alg.rank(); ++b)
            for (int cc = 0; cc < alg.rank(); ++cc) {
                const GradedPoly& cf = alg.structure(a, b, cc);
                if (cf.is_zero()) continue;
                theta -= half * cf.imported_into(table) * chart.gen(chart.alpha(a)) *
                         chart.gen(chart.alpha(b)) * chart.gen(chart.a(cc));
            }
    if (pi) {
        for (int a = 0; a < alg.rank(); ++a)
            for (int b = 0; b < alg.rank(); ++b) {
                const GradedPoly& pf = pi->at(a, b);
                if (pf.is_zero()) continue;
                theta += half * pf.imported_into(table) * chart.gen(chart.a(a)) * chart.gen(chart.a(b));
            }
    }
    if (h) theta += h->poly().imported_into(table);
    if (!theta.is_homogeneous(chart.k() + 1))
        throw std::invalid_argument("assembled hamiltonian is not homogeneous of degree k+1");
    return theta;
}

} // namespace gcb
