#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcb/algebroid.hpp"
#include "gcb/exterior.hpp"
#include "gcb/master.hpp"
#include "gcb/poisson.hpp"
#include "gcb/report.hpp"

namespace gcb {

/// Linear connection on the bundle over the base:
/// nabla_{d/dx^i} e_a = sum_b gamma[i][a][b] e_b.
struct ConnectionData {
    std::vector<std::vector<std::vector<GradedPoly>>> gamma; // [m][n][n]

    static ConnectionData zero(const LieAlgebroidData& alg) {
        ConnectionData c;
        c.gamma.assign(static_cast<std::size_t>(alg.base_dim()),
                       std::vector<std::vector<GradedPoly>>(
                           static_cast<std::size_t>(alg.rank()),
                           std::vector<GradedPoly>(static_cast<std::size_t>(alg.rank()),
                                                   GradedPoly::zero(alg.base()))));
        return c;
    }
};

/// Coefficient tables of a 2-term representation up to homotopy:
///   del:   E0 -> E1, (del xi)_j = sum_i del[j][i] xi_i
///   conn0: (nabla^0_{e_a} xi)_j = sum_i conn0[a][i][j] xi_i + rho(e_a)(xi_j)
///   conn1: likewise on E1
///   kform: K(e_a,e_b): E1 -> E0, (K(a,b) eps)_j = sum_i kform[a][b][i][j] eps_i
struct RepUTHData {
    int r0 = 0, r1 = 0;
    TablePtr base;
    std::vector<std::vector<GradedPoly>> del;                             // [r1][r0]
    std::vector<std::vector<std::vector<GradedPoly>>> conn0;              // [n][r0][r0]
    std::vector<std::vector<std::vector<GradedPoly>>> conn1;              // [n][r1][r1]
    std::vector<std::vector<std::vector<std::vector<GradedPoly>>>> kform; // [n][n][r1][r0]

    static RepUTHData zero(const LieAlgebroidData& alg, int r0, int r1) {
        RepUTHData r;
        r.r0 = r0;
        r.r1 = r1;
        r.base = alg.base();
        const GradedPoly z = GradedPoly::zero(alg.base());
        r.del.assign(static_cast<std::size_t>(r1),
                     std::vector<GradedPoly>(static_cast<std::size_t>(r0), z));
        r.conn0.assign(static_cast<std::size_t>(alg.rank()),
                       std::vector<std::vector<GradedPoly>>(
                           static_cast<std::size_t>(r0),
                           std::vector<GradedPoly>(static_cast<std::size_t>(r0), z)));
        r.conn1.assign(static_cast<std::size_t>(alg.rank()),
                       std::vector<std::vector<GradedPoly>>(
                           static_cast<std::size_t>(r1),
                           std::vector<GradedPoly>(static_cast<std::size_t>(r1), z)));
        r.kform.assign(
            static_cast<std::size_t>(alg.rank()),
            std::vector<std::vector<std::vector<GradedPoly>>>(
                static_cast<std::size_t>(alg.rank()),
                std::vector<std::vector<GradedPoly>>(
                    static_cast<std::size_t>(r1),
                    std::vector<GradedPoly>(static_cast<std::size_t>(r0), z))));
        return r;
    }
};

namespace ruth_detail {

using Coeffs = std::vector<GradedPoly>;
using ConnTable = std::vector<std::vector<std::vector<GradedPoly>>>;

/// rho(e_a) applied to a base function.
inline GradedPoly rho_apply(const LieAlgebroidData& alg, int a, const GradedPoly& f) {
    GradedPoly r(f.table());
    for (int i = 0; i < alg.base_dim(); ++i) {
        const GradedPoly& rho = alg.anchor(a, i);
        if (rho.is_zero()) continue;
        r += rho * left_derivative(f, static_cast<std::size_t>(i));
    }
    return r;
}

/// Covariant application of a connection table along a basis section.
inline Coeffs conn_apply(const ConnTable& conn, const LieAlgebroidData& alg, int a, const Coeffs& s) {
    const std::size_t rank = conn.at(static_cast<std::size_t>(a)).size();
    Coeffs out(rank, GradedPoly::zero(alg.base()));
    for (std::size_t j = 0; j < rank; ++j) {
        GradedPoly acc(alg.base());
        for (std::size_t i = 0; i < rank; ++i) {
            const GradedPoly& g = conn[static_cast<std::size_t>(a)][i][j];
            if (!g.is_zero() && !s[i].is_zero()) acc += g * s[i];
        }
        acc += rho_apply(alg, a, s[j]);
        out[j] = acc;
    }
    return out;
}

/// Curvature F(a,b) s = conn_a conn_b s - conn_b conn_a s - conn_{[a,b]} s.
inline Coeffs curvature(const ConnTable& conn, const LieAlgebroidData& alg, int a, int b,
                        const Coeffs& s) {
    Coeffs out = conn_apply(conn, alg, a, conn_apply(conn, alg, b, s));
    const Coeffs ba = conn_apply(conn, alg, b, conn_apply(conn, alg, a, s));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= ba[j];
    for (int e = 0; e < alg.rank(); ++e) {
        const GradedPoly& cf = alg.structure(a, b, e);
        if (cf.is_zero()) continue;
        const Coeffs ce = conn_apply(conn, alg, e, s);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= cf * ce[j];
    }
    return out;
}

inline Coeffs basis(const TablePtr& base, std::size_t rank, std::size_t i) {
    Coeffs s(rank, GradedPoly::zero(base));
    s[i] = GradedPoly::constant(base, Rational(1));
    return s;
}

inline Coeffs matrix_apply(const std::vector<std::vector<GradedPoly>>& mat, const Coeffs& s,
                           const TablePtr& base) {
    Coeffs out(mat.size(), GradedPoly::zero(base));
    for (std::size_t j = 0; j < mat.size(); ++j)
        for (std::size_t i = 0; i < mat[j].size(); ++i)
            if (!mat[j][i].is_zero() && !s[i].is_zero()) out[j] += mat[j][i] * s[i];
    return out;
}

/// K(e_a, e_b) applied to an E1 coefficient vector.
inline Coeffs k_apply(const RepUTHData& rep, int a, int b, const Coeffs& eps) {
    Coeffs out(static_cast<std::size_t>(rep.r0), GradedPoly::zero(rep.base));
    for (std::size_t i = 0; i < static_cast<std::size_t>(rep.r1); ++i) {
        if (eps[i].is_zero()) continue;
        for (std::size_t j = 0; j < static_cast<std::size_t>(rep.r0); ++j) {
            const GradedPoly& g = rep.kform[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][i][j];
            if (!g.is_zero()) out[j] += g * eps[i];
        }
    }
    return out;
}

inline bool all_zero(const Coeffs& s) {
    for (const auto& f : s)
        if (!f.is_zero()) return false;
    return true;
}

} // namespace ruth_detail

/// The four identities of a 2-term representation up to homotopy, on basis
/// sections with the anchor-derivative corrections included.
inline CheckReport check_ruth(const RepUTHData& rep, const LieAlgebroidData& alg) {
    using namespace ruth_detail;
    CheckReport out("rep-up-to-homotopy");
    const int n = alg.rank();

    // K antisymmetric in its algebroid slots
    bool anti_ok = true;
    for (int a = 0; a < n && anti_ok; ++a)
        for (int b = 0; b < n && anti_ok; ++b)
            for (int i = 0; i < rep.r1 && anti_ok; ++i)
                for (int j = 0; j < rep.r0; ++j) {
                    GradedPoly d = rep.kform[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                            [static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                                   rep.kform[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]
                                            [static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (!d.is_zero()) {
                        anti_ok = false;
                        break;
                    }
                }
    out.add("K-antisymmetric", anti_ok, "");

    // del conn0 = conn1 del
    bool chain_ok = true;
    std::string chain_detail;
    for (int a = 0; a < n && chain_ok; ++a)
        for (int i = 0; i < rep.r0; ++i) {
            const Coeffs xi = basis(rep.base, static_cast<std::size_t>(rep.r0), static_cast<std::size_t>(i));
            Coeffs lhs = matrix_apply(rep.del, conn_apply(rep.conn0, alg, a, xi), rep.base);
            Coeffs rhs = conn_apply(rep.conn1, alg, a, matrix_apply(rep.del, xi, rep.base));
            for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= rhs[j];
            if (!all_zero(lhs)) {
                chain_ok = false;
                chain_detail = "fails on section " + std::to_string(a + 1) + ", basis " + std::to_string(i + 1);
                break;
            }
        }
    out.add("chain-map", chain_ok, chain_detail);

    // F0 = K del and F1 = del K
    bool f0_ok = true, f1_ok = true;
    std::string f0_detail, f1_detail;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            for (int i = 0; i < rep.r0 && f0_ok; ++i) {
                const Coeffs xi = basis(rep.base, static_cast<std::size_t>(rep.r0), static_cast<std::size_t>(i));
                Coeffs lhs = curvature(rep.conn0, alg, a, b, xi);
                Coeffs rhs = k_apply(rep, a, b, matrix_apply(rep.del, xi, rep.base));
                for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= rhs[j];
                if (!all_zero(lhs)) {
                    f0_ok = false;
                    f0_detail = "fails at sections (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
                }
            }
            for (int i = 0; i < rep.r1 && f1_ok; ++i) {
                const Coeffs eps = basis(rep.base, static_cast<std::size_t>(rep.r1), static_cast<std::size_t>(i));
                Coeffs lhs = curvature(rep.conn1, alg, a, b, eps);
                Coeffs rhs = matrix_apply(rep.del, k_apply(rep, a, b, eps), rep.base);
                for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= rhs[j];
                if (!all_zero(lhs)) {
                    f1_ok = false;
                    f1_detail = "fails at sections (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
                }
            }
        }
    out.add("curvature-0", f0_ok, f0_detail);
    out.add("curvature-1", f1_ok, f1_detail);

    // d^nabla K = 0 on basis triples:
    // sum_cyc [ conn0_a (K(b,c) eps) - K(b,c)(conn1_a eps) - K([a,b],c) eps ] = 0
    bool dk_ok = true;
    std::string dk_detail;
    for (int a = 0; a < n && dk_ok; ++a)
        for (int b = a + 1; b < n && dk_ok; ++b)
            for (int c = b + 1; c < n && dk_ok; ++c)
                for (int i = 0; i < rep.r1; ++i) {
                    const Coeffs eps =
                        basis(rep.base, static_cast<std::size_t>(rep.r1), static_cast<std::size_t>(i));
                    Coeffs acc(static_cast<std::size_t>(rep.r0), GradedPoly::zero(rep.base));
                    const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                    for (const auto& t : cyc) {
                        Coeffs term = conn_apply(rep.conn0, alg, t[0], k_apply(rep, t[1], t[2], eps));
                        Coeffs mid = k_apply(rep, t[1], t[2], conn_apply(rep.conn1, alg, t[0], eps));
                        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += term[j] - mid[j];
                        for (int e = 0; e < n; ++e) {
                            const GradedPoly& cf = alg.structure(t[0], t[1], e);
                            if (cf.is_zero()) continue;
                            Coeffs br = k_apply(rep, e, t[2], eps);
                            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= cf * br[j];
                        }
                    }
                    if (!all_zero(acc)) {
                        dk_ok = false;
                        dk_detail = "fails at sections (" + std::to_string(a + 1) + "," +
                                    std::to_string(b + 1) + "," + std::to_string(c + 1) + ")";
                        break;
                    }
                }
    out.add("d-nabla-K", dk_ok, dk_detail);
    return out;
}

/// Adjoint representation up to homotopy attached to an auxiliary connection:
/// E0 = A, E1 = TM, del = rho.
inline RepUTHData adjoint_rep(const LieAlgebroidData& alg, const ConnectionData& conn) {
    if (!check_structure_direct(alg, nullptr).passed())
        throw std::invalid_argument("adjoint representation requires an honest Lie algebroid");
    const int n = alg.rank(), m = alg.base_dim();
    RepUTHData rep = RepUTHData::zero(alg, n, m);
    const auto& gm = conn.gamma;

    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) rep.del[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = alg.anchor(a, i);

    // conn0: nabla^0_a e_b = [e_a, e_b] + nabla_{rho(e_b)} e_a
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                GradedPoly v = alg.structure(a, b, c);
                for (int i = 0; i < m; ++i)
                    v += alg.anchor(b, i) * gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]
                                              [static_cast<std::size_t>(c)];
                rep.conn0[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = v;
            }

    // conn1: nabla^1_a d/dx^i = [rho(e_a), d/dx^i] + rho(nabla_{d/dx^i} e_a)
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                GradedPoly v = -left_derivative(alg.anchor(a, j), static_cast<std::size_t>(i));
                for (int b = 0; b < n; ++b)
                    v += gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                         alg.anchor(b, j);
                rep.conn1[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }

    // K(a,b)(d/dx^i) = nabla_X [a,b] - [nabla_X a, b] - [a, nabla_X b]
    //                  + nabla_{nabla^1_a X} b - nabla_{nabla^1_b X} a,  X = d/dx^i
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < m; ++i)
                for (int c = 0; c < n; ++c) {
                    GradedPoly v = left_derivative(alg.structure(a, b, c), static_cast<std::size_t>(i));
                    for (int e = 0; e < n; ++e)
                        v += alg.structure(a, b, e) *
                             gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)][static_cast<std::size_t>(c)];
                    // -[nabla_X e_a, e_b]
                    for (int e = 0; e < n; ++e)
                        v -= gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] *
                             alg.structure(e, b, c);
                    v += ruth_detail::rho_apply(alg, b,
                                                gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]
                                                  [static_cast<std::size_t>(c)]);
                    // -[e_a, nabla_X e_b]
                    for (int e = 0; e < n; ++e)
                        v -= gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)][static_cast<std::size_t>(e)] *
                             alg.structure(a, e, c);
                    v -= ruth_detail::rho_apply(alg, a,
                                                gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]
                                                  [static_cast<std::size_t>(c)]);
                    // + nabla_{nabla^1_a X} e_b - nabla_{nabla^1_b X} e_a
                    for (int j = 0; j < m; ++j) {
                        v += rep.conn1[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)] *
                             gm[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
                        v -= rep.conn1[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)] *
                             gm[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
                    }
                    // the basic-curvature expression equals minus the
                    // curvature of the assembled connections, so the stored
                    // form is its negative
                    rep.kform[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(c)] = -v;
                }
    return rep;
}

/// Coadjoint representation: the dual tables, E0 = T*M, E1 = A*, del = rho^*.
inline RepUTHData coadjoint_rep(const LieAlgebroidData& alg, const ConnectionData& conn) {
    const RepUTHData adj = adjoint_rep(alg, conn);
    const int n = alg.rank(), m = alg.base_dim();
    RepUTHData rep = RepUTHData::zero(alg, m, n);

    for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i) rep.del[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = alg.anchor(a, i);

    // <nabla^1_a beta, b> = rho(a)<beta,b> - <beta, nabla^{0,adj}_a b>
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < n; ++b)
                rep.conn1[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] =
                    -adj.conn0[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];

    // <nabla^0_a tau, X> = rho(a)<tau,X> - <tau, nabla^{1,adj}_a X>
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                rep.conn0[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    -adj.conn1[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];

    // K^*(a,b): A* -> T*M; dualizing flips the curvature sign, so the dual
    // form is minus the transpose
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int i = 0; i < m; ++i)
                    rep.kform[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]
                             [static_cast<std::size_t>(i)] =
                        -adj.kform[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                  [static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    return rep;
}

// ---------------------------------------------------------------------------
// L_k-algebroids concentrated in three degrees

/// Bracket tables of a 3-degree L_k-algebroid: A_0 of rank n0 with anchor and
/// binary bracket, A_{-k+2} of rank r_mid, A_{-k+1} of rank r_low, with
///   del:        A_{-k+1} -> A_{-k+2}
///   phi, psi:   A_0-connections on A_{-k+2} and A_{-k+1}
///   l3:         A_0 x A_0 x A_{-k+2} -> A_{-k+1}
///   lk:         wedge^k A_0 -> A_{-k+2}     (values on sorted k-subsets)
///   lk1:        wedge^{k+1} A_0 -> A_{-k+1} (values on sorted (k+1)-subsets)
struct LkAlgebroidData {
    int k = 4, m = 0, n0 = 0, r_mid = 0, r_low = 0;
    TablePtr base;
    std::vector<std::vector<GradedPoly>> anchor;                      // [n0][m]
    std::vector<std::vector<std::vector<GradedPoly>>> c;              // [n0][n0][n0]
    std::vector<std::vector<GradedPoly>> del;                         // [r_mid][r_low]
    ruth_detail::ConnTable phi;                                       // [n0][r_mid][r_mid]
    ruth_detail::ConnTable psi;                                       // [n0][r_low][r_low]
    std::vector<std::vector<std::vector<std::vector<GradedPoly>>>> l3; // [n0][n0][r_mid][r_low]
    std::vector<std::vector<GradedPoly>> lk;                          // [C(n0,k)][r_mid]
    std::vector<std::vector<GradedPoly>> lk1;                         // [C(n0,k+1)][r_low]

    static LkAlgebroidData zero(int k, int m, int n0, int r_mid, int r_low) {
        if (k <= 3) throw std::invalid_argument("three-degree layout requires k > 3");
        LkAlgebroidData d;
        d.k = k;
        d.m = m;
        d.n0 = n0;
        d.r_mid = r_mid;
        d.r_low = r_low;
        d.base = base_table(m);
        const GradedPoly z = GradedPoly::zero(d.base);
        d.anchor.assign(static_cast<std::size_t>(n0),
                        std::vector<GradedPoly>(static_cast<std::size_t>(m), z));
        d.c.assign(static_cast<std::size_t>(n0),
                   std::vector<std::vector<GradedPoly>>(
                       static_cast<std::size_t>(n0),
                       std::vector<GradedPoly>(static_cast<std::size_t>(n0), z)));
        d.del.assign(static_cast<std::size_t>(r_mid),
                     std::vector<GradedPoly>(static_cast<std::size_t>(r_low), z));
        d.phi.assign(static_cast<std::size_t>(n0),
                     std::vector<std::vector<GradedPoly>>(
                         static_cast<std::size_t>(r_mid),
                         std::vector<GradedPoly>(static_cast<std::size_t>(r_mid), z)));
        d.psi.assign(static_cast<std::size_t>(n0),
                     std::vector<std::vector<GradedPoly>>(
                         static_cast<std::size_t>(r_low),
                         std::vector<GradedPoly>(static_cast<std::size_t>(r_low), z)));
        d.l3.assign(static_cast<std::size_t>(n0),
                    std::vector<std::vector<std::vector<GradedPoly>>>(
                        static_cast<std::size_t>(n0),
                        std::vector<std::vector<GradedPoly>>(
                            static_cast<std::size_t>(r_mid),
                            std::vector<GradedPoly>(static_cast<std::size_t>(r_low), z))));
        d.lk.assign(ext::dim(n0, k), std::vector<GradedPoly>(static_cast<std::size_t>(r_mid), z));
        d.lk1.assign(ext::dim(n0, k + 1), std::vector<GradedPoly>(static_cast<std::size_t>(r_low), z));
        return d;
    }

    /// The degree-0 part as algebroid data (for the shared section calculus).
    LieAlgebroidData top() const {
        LieAlgebroidData alg(m, n0);
        for (int a = 0; a < n0; ++a)
            for (int i = 0; i < m; ++i) alg.set_anchor(a, i, anchor[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
        for (int a = 0; a < n0; ++a)
            for (int b = a + 1; b < n0; ++b)
                for (int cc = 0; cc < n0; ++cc)
                    alg.set_structure(a, b, cc, c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(cc)]);
        return alg;
    }

    /// lk on an arbitrary index word (antisymmetric extension).
    ruth_detail::Coeffs lk_at(const std::vector<int>& word) const {
        auto [sign, sorted] = ext::sort_word(std::vector<int>(word));
        ruth_detail::Coeffs out(static_cast<std::size_t>(r_mid), GradedPoly::zero(base));
        if (!sign) return out;
        const auto& row = lk[ext::index_of(n0, sorted)];
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = sign > 0 ? row[j] : -row[j];
        return out;
    }
    ruth_detail::Coeffs lk1_at(const std::vector<int>& word) const {
        auto [sign, sorted] = ext::sort_word(std::vector<int>(word));
        ruth_detail::Coeffs out(static_cast<std::size_t>(r_low), GradedPoly::zero(base));
        if (!sign) return out;
        const auto& row = lk1[ext::index_of(n0, sorted)];
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = sign > 0 ? row[j] : -row[j];
        return out;
    }
};

namespace ruth_detail {

inline Coeffs l3_apply(const LkAlgebroidData& d, int a, int b, const Coeffs& xi_mid) {
    Coeffs out(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
    for (std::size_t i = 0; i < xi_mid.size(); ++i) {
        if (xi_mid[i].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j) {
            const GradedPoly& g = d.l3[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][i][j];
            if (!g.is_zero()) out[j] += g * xi_mid[i];
        }
    }
    return out;
}

} // namespace ruth_detail

namespace lk_signs {
/// Relative signs in the two top Jacobi-like identities and in the twisted
/// bracket construction. All alternate with the shift parity; they are fixed
/// by requiring the twisted coadjoint product to satisfy the identities
/// exactly when the twisting form is closed, and to fail otherwise.
inline constexpr int del_lk1(int k) { return (k % 2) ? 1 : -1; }
inline constexpr int l3_lk(int k) { return (k % 2) ? -1 : 1; }
inline constexpr int d_term(int k) { return (k % 2) ? -1 : 1; }
/// Sign of the k-bracket term in the induced homological vector field
/// (contracting the word past the front slot alternates with k).
inline constexpr int q_lk(int k) { return (k % 2) ? -1 : 1; }
} // namespace lk_signs

/// The seven Jacobi-like identities of the 3-degree layout, on basis tuples.
inline CheckReport check_lk_jacobi(const LkAlgebroidData& d) {
    using namespace ruth_detail;
    CheckReport out("lk-jacobi");
    const LieAlgebroidData alg = d.top();
    const TablePtr ft = form_table(d.m, d.n0);

    // (1) binary Jacobi (with the anchor defect of the section-level identity)
    {
        bool ok = true;
        std::string detail;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int i = 0; i < d.m; ++i)
                    if (!gcb::detail::anchor_defect(alg, a, b, i).is_zero()) {
                        ok = false;
                        detail = "anchor defect";
                        break;
                    }
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int cc = b + 1; cc < d.n0 && ok; ++cc) {
                    Section j = gcb::detail::jacobiator(alg, ft, a, b, cc);
                    for (const auto& f : j)
                        if (!f.is_zero()) {
                            ok = false;
                            detail = "jacobiator at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                     "," + std::to_string(cc + 1) + ")";
                            break;
                        }
                }
        out.add("l2-jacobi", ok, detail);
    }

    // (2) del intertwines the two connections
    {
        bool ok = true;
        std::string detail;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int x = 0; x < d.r_low; ++x) {
                const Coeffs xb = basis(d.base, static_cast<std::size_t>(d.r_low), static_cast<std::size_t>(x));
                Coeffs lhs = conn_apply(d.phi, alg, a, matrix_apply(d.del, xb, d.base));
                Coeffs rhs = matrix_apply(d.del, conn_apply(d.psi, alg, a, xb), d.base);
                for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= rhs[j];
                if (!all_zero(lhs)) {
                    ok = false;
                    detail = "fails at section " + std::to_string(a + 1);
                    break;
                }
            }
        out.add("chain-connections", ok, detail);
    }

    // (3) l3 against del reproduces the psi-curvature
    {
        bool ok = true;
        std::string detail;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int x = 0; x < d.r_low; ++x) {
                    const Coeffs xb = basis(d.base, static_cast<std::size_t>(d.r_low), static_cast<std::size_t>(x));
                    Coeffs lhs = l3_apply(d, a, b, matrix_apply(d.del, xb, d.base));
                    Coeffs rhs = curvature(d.psi, alg, a, b, xb);
                    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= rhs[j];
                    if (!all_zero(lhs)) {
                        ok = false;
                        detail = "fails at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
                        break;
                    }
                }
        out.add("l3-psi-curvature", ok, detail);
    }

    // (4) del of l3 reproduces the phi-curvature
    {
        bool ok = true;
        std::string detail;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int xi = 0; xi < d.r_mid; ++xi) {
                    const Coeffs xb = basis(d.base, static_cast<std::size_t>(d.r_mid), static_cast<std::size_t>(xi));
                    Coeffs lhs = matrix_apply(d.del, l3_apply(d, a, b, xb), d.base);
                    Coeffs rhs = curvature(d.phi, alg, a, b, xb);
                    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= rhs[j];
                    if (!all_zero(lhs)) {
                        ok = false;
                        detail = "fails at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
                        break;
                    }
                }
        out.add("l3-phi-curvature", ok, detail);
    }

    // (5) cocycle condition on l3
    {
        bool ok = true;
        std::string detail;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int cc = b + 1; cc < d.n0 && ok; ++cc)
                    for (int xi = 0; xi < d.r_mid; ++xi) {
                        const Coeffs xb =
                            basis(d.base, static_cast<std::size_t>(d.r_mid), static_cast<std::size_t>(xi));
                        Coeffs acc(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
                        const int cyc[3][3] = {{a, b, cc}, {b, cc, a}, {cc, a, b}};
                        for (const auto& t : cyc) {
                            Coeffs t1 = conn_apply(d.psi, alg, t[0], l3_apply(d, t[1], t[2], xb));
                            Coeffs t2 = l3_apply(d, t[1], t[2], conn_apply(d.phi, alg, t[0], xb));
                            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += t1[j] - t2[j];
                            for (int e = 0; e < d.n0; ++e) {
                                const GradedPoly& cf = alg.structure(t[0], t[1], e);
                                if (cf.is_zero()) continue;
                                Coeffs t3 = l3_apply(d, e, t[2], xb);
                                for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= cf * t3[j];
                            }
                        }
                        if (!all_zero(acc)) {
                            ok = false;
                            detail = "fails at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                     std::to_string(cc + 1) + ")";
                        }
                    }
        out.add("l3-cocycle", ok, detail);
    }

    // (6) closure of the k-bracket: d^phi(lk) + del(lk1) = 0
    {
        bool ok = true;
        std::string detail;
        for (const auto& tuple : ext::subsets(d.n0, d.k + 1)) {
            Coeffs acc(static_cast<std::size_t>(d.r_mid), GradedPoly::zero(d.base));
            const int len = d.k + 1;
            for (int i = 0; i < len; ++i) {
                std::vector<int> rest;
                for (int l = 0; l < len; ++l)
                    if (l != i) rest.push_back(tuple[static_cast<std::size_t>(l)]);
                Coeffs term = conn_apply(d.phi, alg, tuple[static_cast<std::size_t>(i)], d.lk_at(rest));
                for (std::size_t j = 0; j < acc.size(); ++j)
                    acc[j] += (i % 2) ? -term[j] : term[j];
            }
            for (int i = 0; i < len; ++i)
                for (int j = i + 1; j < len; ++j)
                    for (int e = 0; e < d.n0; ++e) {
                        const GradedPoly& cf = alg.structure(tuple[static_cast<std::size_t>(i)],
                                                             tuple[static_cast<std::size_t>(j)], e);
                        if (cf.is_zero()) continue;
                        std::vector<int> word{e};
                        for (int l = 0; l < len; ++l)
                            if (l != i && l != j) word.push_back(tuple[static_cast<std::size_t>(l)]);
                        Coeffs val = d.lk_at(word);
                        for (std::size_t t = 0; t < acc.size(); ++t) {
                            GradedPoly add = cf * val[t];
                            acc[t] += ((i + j) % 2) ? -add : add;
                        }
                    }
            Coeffs dl = ruth_detail::matrix_apply(d.del, d.lk1_at(tuple), d.base);
            for (std::size_t j = 0; j < acc.size(); ++j)
                acc[j] += Rational(lk_signs::del_lk1(d.k)) * dl[j];
            if (!all_zero(acc)) {
                ok = false;
                detail = "fails on a (k+1)-tuple";
                break;
            }
        }
        out.add("lk-closure", ok, detail);
    }

    // (7) closure of the (k+1)-bracket: d^psi(lk1) + l3-against-lk = 0
    {
        bool ok = true;
        std::string detail;
        for (const auto& tuple : ext::subsets(d.n0, d.k + 2)) {
            Coeffs acc(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
            const int len = d.k + 2;
            for (int i = 0; i < len; ++i) {
                std::vector<int> rest;
                for (int l = 0; l < len; ++l)
                    if (l != i) rest.push_back(tuple[static_cast<std::size_t>(l)]);
                Coeffs term = conn_apply(d.psi, alg, tuple[static_cast<std::size_t>(i)], d.lk1_at(rest));
                for (std::size_t j = 0; j < acc.size(); ++j)
                    acc[j] += (i % 2) ? -term[j] : term[j];
            }
            for (int i = 0; i < len; ++i)
                for (int j = i + 1; j < len; ++j) {
                    std::vector<int> rest;
                    for (int l = 0; l < len; ++l)
                        if (l != i && l != j) rest.push_back(tuple[static_cast<std::size_t>(l)]);
                    for (int e = 0; e < d.n0; ++e) {
                        const GradedPoly& cf = alg.structure(tuple[static_cast<std::size_t>(i)],
                                                             tuple[static_cast<std::size_t>(j)], e);
                        if (cf.is_zero()) continue;
                        std::vector<int> word{e};
                        word.insert(word.end(), rest.begin(), rest.end());
                        Coeffs val = d.lk1_at(word);
                        for (std::size_t t = 0; t < acc.size(); ++t) {
                            GradedPoly add = cf * val[t];
                            acc[t] += ((i + j) % 2) ? -add : add;
                        }
                    }
                    Coeffs l3term = l3_apply(d, tuple[static_cast<std::size_t>(i)],
                                             tuple[static_cast<std::size_t>(j)], d.lk_at(rest));
                    for (std::size_t t = 0; t < acc.size(); ++t) {
                        GradedPoly add = Rational(lk_signs::l3_lk(d.k)) * l3term[t];
                        acc[t] += ((i + j) % 2) ? -add : add;
                    }
                }
            if (!all_zero(acc)) {
                ok = false;
                detail = "fails on a (k+2)-tuple";
                break;
            }
        }
        out.add("lk1-closure", ok, detail);
    }
    return out;
}

/// Semidirect product of the algebroid with a 2-term representation, in the
/// 3-degree layout A_0 = A, A_{-k+2} = E1, A_{-k+1} = E0, with zero top
/// brackets.
inline LkAlgebroidData semidirect(const LieAlgebroidData& alg, const RepUTHData& rep, int k) {
    if (k <= 3) throw std::invalid_argument("three-degree layout requires k > 3");
    LkAlgebroidData d = LkAlgebroidData::zero(k, alg.base_dim(), alg.rank(), rep.r1, rep.r0);
    for (int a = 0; a < alg.rank(); ++a)
        for (int i = 0; i < alg.base_dim(); ++i)
            d.anchor[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = alg.anchor(a, i);
    for (int a = 0; a < alg.rank(); ++a)
        for (int b = 0; b < alg.rank(); ++b)
            for (int cc = 0; cc < alg.rank(); ++cc)
                d.c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(cc)] =
                    alg.structure(a, b, cc);
    d.del = rep.del;
    d.phi = rep.conn1;
    d.psi = rep.conn0;
    d.l3 = rep.kform;
    return d;
}

/// Coadjoint semidirect product with the extra k- and (k+1)-brackets read off
/// a twisting form:
///   lk(a_1..a_k)    = i_{a_k} ... i_{a_1} H
///   lk1(a_1..a_k+1) = d(i_{a_{k+1}} ... i_{a_1} H)
///                     - sum_i (-1)^{i+1} <D(a_i), i...hat{i}...H>
inline LkAlgebroidData twisted_coadjoint_semidirect(const LieAlgebroidData& alg,
                                                    const ConnectionData& conn, const TwistH* h,
                                                    int k) {
    LkAlgebroidData d = semidirect(alg, coadjoint_rep(alg, conn), k);
    if (!h) return d;

    const int n = alg.rank(), m = alg.base_dim();
    const TablePtr ft = form_table(m, n);
    const GradedPoly hform = h->poly().imported_into(ft);
    auto contract_by = [&](const GradedPoly& w, const std::vector<int>& word) {
        GradedPoly r = w;
        for (int j : word) r = left_derivative(r, static_cast<std::size_t>(m + j));
        return r;
    };

    const auto ksubs = ext::subsets(n, k);
    for (std::size_t si = 0; si < ksubs.size(); ++si) {
        GradedPoly phi1 = contract_by(hform, ksubs[si]); // a one-form
        for (int c = 0; c < n; ++c)
            d.lk[si][static_cast<std::size_t>(c)] =
                left_derivative(phi1, static_cast<std::size_t>(m + c)).restricted_to(d.base);
    }

    const auto k1subs = ext::subsets(n, k + 1);
    for (std::size_t si = 0; si < k1subs.size(); ++si) {
        const auto& tuple = k1subs[si];
        GradedPoly g = contract_by(hform, tuple).restricted_to(d.base); // a function
        for (int j = 0; j < m; ++j)
            d.lk1[si][static_cast<std::size_t>(j)] = left_derivative(g, static_cast<std::size_t>(j));
        for (int i = 0; i < k + 1; ++i) {
            std::vector<int> rest;
            for (int l = 0; l < k + 1; ++l)
                if (l != i) rest.push_back(tuple[static_cast<std::size_t>(l)]);
            GradedPoly phi1 = contract_by(hform, rest);
            for (int j = 0; j < m; ++j) {
                GradedPoly term(d.base);
                for (int b = 0; b < n; ++b) {
                    const GradedPoly& gm =
                        conn.gamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(
                            tuple[static_cast<std::size_t>(i)])][static_cast<std::size_t>(b)];
                    if (gm.is_zero()) continue;
                    term += gm * left_derivative(phi1, static_cast<std::size_t>(m + b)).restricted_to(d.base);
                }
                term = Rational(lk_signs::d_term(k)) * term;
                if (i % 2 == 0) // (-1)^{i+1} with 1-based slots
                    d.lk1[si][static_cast<std::size_t>(j)] -= term;
                else
                    d.lk1[si][static_cast<std::size_t>(j)] += term;
            }
        }
    }
    return d;
}

/// Homological vector field of a point-base 3-degree L_k-algebroid on the
/// matching Darboux chart (the correspondence route).
inline Derivation q_from_lk(const LkAlgebroidData& d, const CotangentChart& chart) {
    if (d.m != 0 || d.r_low != 0)
        throw std::invalid_argument("chart correspondence requires a point base");
    if (chart.k() != d.k || chart.rank() != d.n0 || chart.base_dim() != 0 || d.r_mid != d.n0)
        throw std::invalid_argument("chart does not match the bracket data");

    const TablePtr& table = chart.table();
    Derivation q(table, 1);
    const Rational half(1, 2);
    for (int cc = 0; cc < d.n0; ++cc) {
        GradedPoly img(table);
        for (int a = 0; a < d.n0; ++a)
            for (int b = 0; b < d.n0; ++b) {
                const GradedPoly& cf = d.c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                          [static_cast<std::size_t>(cc)];
                if (cf.is_zero()) continue;
                img -= half * cf.imported_into(table) * chart.gen(chart.alpha(a)) * chart.gen(chart.alpha(b));
            }
        q.set_value(chart.alpha(cc), img);
    }
    const auto ksubs = ext::subsets(d.n0, d.k);
    for (int j = 0; j < d.n0; ++j) {
        GradedPoly img(table);
        // dual of the phi-connection
        for (int b = 0; b < d.n0; ++b)
            for (int e = 0; e < d.n0; ++e) {
                const GradedPoly& g = d.phi[static_cast<std::size_t>(b)][static_cast<std::size_t>(e)]
                                           [static_cast<std::size_t>(j)];
                if (g.is_zero()) continue;
                img -= g.imported_into(table) * chart.gen(chart.alpha(b)) * chart.gen(chart.a(e));
            }
        // dual of the k-bracket
        for (std::size_t si = 0; si < ksubs.size(); ++si) {
            const GradedPoly& g = d.lk[si][static_cast<std::size_t>(j)];
            if (g.is_zero()) continue;
            GradedPoly word = GradedPoly::constant(table, Rational(1));
            for (int b : ksubs[si]) word = word * chart.gen(chart.alpha(b));
            img += Rational(lk_signs::q_lk(d.k)) * g.imported_into(table) * word;
        }
        q.set_value(chart.a(j), img);
    }
    return q;
}

// ---------------------------------------------------------------------------
// The 2-term layout (shift by one): A_0 = A + E1, A_{-1} = E0

struct L2AlgebroidData {
    int m = 0, n0 = 0, r_low = 0;
    TablePtr base;
    std::vector<std::vector<GradedPoly>> anchor;          // [n0][m]
    std::vector<std::vector<std::vector<GradedPoly>>> c;  // [n0][n0][n0]
    std::vector<std::vector<GradedPoly>> l1;              // [n0][r_low]: A_{-1} -> A_0
    ruth_detail::ConnTable l2mix;                         // [n0][r_low][r_low]
    std::vector<std::vector<std::vector<std::vector<GradedPoly>>>> l3; // [n0][n0][n0][r_low]

    static L2AlgebroidData zero(int m, int n0, int r_low) {
        L2AlgebroidData d;
        d.m = m;
        d.n0 = n0;
        d.r_low = r_low;
        d.base = base_table(m);
        const GradedPoly z = GradedPoly::zero(d.base);
        d.anchor.assign(static_cast<std::size_t>(n0),
                        std::vector<GradedPoly>(static_cast<std::size_t>(m), z));
        d.c.assign(static_cast<std::size_t>(n0),
                   std::vector<std::vector<GradedPoly>>(
                       static_cast<std::size_t>(n0),
                       std::vector<GradedPoly>(static_cast<std::size_t>(n0), z)));
        d.l1.assign(static_cast<std::size_t>(n0),
                    std::vector<GradedPoly>(static_cast<std::size_t>(r_low), z));
        d.l2mix.assign(static_cast<std::size_t>(n0),
                       std::vector<std::vector<GradedPoly>>(
                           static_cast<std::size_t>(r_low),
                           std::vector<GradedPoly>(static_cast<std::size_t>(r_low), z)));
        d.l3.assign(static_cast<std::size_t>(n0),
                    std::vector<std::vector<std::vector<GradedPoly>>>(
                        static_cast<std::size_t>(n0),
                        std::vector<std::vector<GradedPoly>>(
                            static_cast<std::size_t>(n0),
                            std::vector<GradedPoly>(static_cast<std::size_t>(r_low), z))));
        return d;
    }

    LieAlgebroidData top() const {
        LieAlgebroidData alg(m, n0);
        for (int a = 0; a < n0; ++a)
            for (int i = 0; i < m; ++i) alg.set_anchor(a, i, anchor[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
        for (int a = 0; a < n0; ++a)
            for (int b = a + 1; b < n0; ++b)
                for (int cc = 0; cc < n0; ++cc)
                    alg.set_structure(a, b, cc, c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(cc)]);
        return alg;
    }
};

/// Semidirect product in the 2-term layout.
inline L2AlgebroidData semidirect_l2(const LieAlgebroidData& alg, const RepUTHData& rep) {
    const int n = alg.rank();
    const int n0 = n + rep.r1;
    L2AlgebroidData d = L2AlgebroidData::zero(alg.base_dim(), n0, rep.r0);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < alg.base_dim(); ++i)
            d.anchor[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = alg.anchor(a, i);
    // bracket block [a, b] on A
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                d.c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(cc)] =
                    alg.structure(a, b, cc);
    // mixed block: l2(e_a, eps_j) = nabla^1_a eps_j
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < rep.r1; ++j)
            for (int l = 0; l < rep.r1; ++l) {
                const GradedPoly& g = rep.conn1[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)]
                                               [static_cast<std::size_t>(l)];
                d.c[static_cast<std::size_t>(a)][static_cast<std::size_t>(n + j)][static_cast<std::size_t>(n + l)] = g;
                d.c[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(a)][static_cast<std::size_t>(n + l)] = -g;
            }
    for (int j = 0; j < rep.r1; ++j)
        for (int i = 0; i < rep.r0; ++i)
            d.l1[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(i)] =
                rep.del[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (int a = 0; a < n; ++a) d.l2mix[static_cast<std::size_t>(a)] = rep.conn0[static_cast<std::size_t>(a)];
    // l3(e_a, e_b, eps_j) = -K(a,b) eps_j, extended antisymmetrically
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int j = 0; j < rep.r1; ++j)
                for (int i = 0; i < rep.r0; ++i) {
                    const GradedPoly v = -rep.kform[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                                   [static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    if (v.is_zero()) continue;
                    const int ej = n + j;
                    d.l3[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(ej)]
                        [static_cast<std::size_t>(i)] = v;
                    d.l3[static_cast<std::size_t>(b)][static_cast<std::size_t>(ej)][static_cast<std::size_t>(a)]
                        [static_cast<std::size_t>(i)] = v;
                    d.l3[static_cast<std::size_t>(ej)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                        [static_cast<std::size_t>(i)] = v;
                    d.l3[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)][static_cast<std::size_t>(ej)]
                        [static_cast<std::size_t>(i)] = -v;
                    d.l3[static_cast<std::size_t>(a)][static_cast<std::size_t>(ej)][static_cast<std::size_t>(b)]
                        [static_cast<std::size_t>(i)] = -v;
                    d.l3[static_cast<std::size_t>(ej)][static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]
                        [static_cast<std::size_t>(i)] = -v;
                }
    return d;
}

/// Jacobi identities of the 2-term layout on basis tuples.
inline CheckReport check_l2_jacobi(const L2AlgebroidData& d) {
    using namespace ruth_detail;
    CheckReport out("l2-jacobi");
    const LieAlgebroidData alg = d.top();
    const TablePtr ft = form_table(d.m, d.n0);

    auto l1_vec = [&](const Coeffs& xi) {
        Coeffs v(static_cast<std::size_t>(d.n0), GradedPoly::zero(d.base));
        for (int g = 0; g < d.n0; ++g)
            for (int i = 0; i < d.r_low; ++i) {
                const GradedPoly& f = d.l1[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
                if (!f.is_zero() && !xi[static_cast<std::size_t>(i)].is_zero())
                    v[static_cast<std::size_t>(g)] += f * xi[static_cast<std::size_t>(i)];
            }
        return v;
    };
    auto l2mix_vec = [&](const Coeffs& u /*A0 coefficients*/, const Coeffs& xi) {
        // tensorial in the first slot
        Coeffs v(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
        for (int g = 0; g < d.n0; ++g) {
            if (u[static_cast<std::size_t>(g)].is_zero()) continue;
            Coeffs part = conn_apply(d.l2mix, alg, g, xi);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += u[static_cast<std::size_t>(g)] * part[j];
        }
        return v;
    };
    auto l3_vec = [&](int a, int b, const Coeffs& w) {
        Coeffs v(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
        for (int g = 0; g < d.n0; ++g) {
            if (w[static_cast<std::size_t>(g)].is_zero()) continue;
            for (int i = 0; i < d.r_low; ++i) {
                const GradedPoly& f = d.l3[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                          [static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
                if (!f.is_zero()) v[static_cast<std::size_t>(i)] += f * w[static_cast<std::size_t>(g)];
            }
        }
        return v;
    };

    // (1) jacobiator = l1 of l3, plus the anchor defect
    {
        bool ok = true;
        std::string detail;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int i = 0; i < d.m; ++i)
                    if (!gcb::detail::anchor_defect(alg, a, b, i).is_zero()) {
                        ok = false;
                        detail = "anchor defect";
                        break;
                    }
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int cc = b + 1; cc < d.n0 && ok; ++cc) {
                    Section j = gcb::detail::jacobiator(alg, ft, a, b, cc);
                    Coeffs l3v(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
                    for (int i = 0; i < d.r_low; ++i)
                        l3v[static_cast<std::size_t>(i)] = d.l3[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                                               [static_cast<std::size_t>(cc)][static_cast<std::size_t>(i)];
                    Coeffs rhs = l1_vec(l3v);
                    for (int g = 0; g < d.n0; ++g) {
                        GradedPoly defect =
                            j[static_cast<std::size_t>(g)].restricted_to(d.base) - rhs[static_cast<std::size_t>(g)];
                        if (!defect.is_zero()) {
                            ok = false;
                            detail = "jacobiator differs from l1 l3 at (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + "," + std::to_string(cc + 1) + ")";
                            break;
                        }
                    }
                }
        out.add("jacobi-l1l3", ok, detail);
    }

    // (2) l2(l1 xi, eta) + l2(l1 eta, xi) = 0
    {
        bool ok = true;
        for (int x = 0; x < d.r_low && ok; ++x)
            for (int y = 0; y < d.r_low; ++y) {
                const Coeffs xb = basis(d.base, static_cast<std::size_t>(d.r_low), static_cast<std::size_t>(x));
                const Coeffs yb = basis(d.base, static_cast<std::size_t>(d.r_low), static_cast<std::size_t>(y));
                Coeffs lhs = l2mix_vec(l1_vec(xb), yb);
                Coeffs rhs = l2mix_vec(l1_vec(yb), xb);
                for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] += rhs[j];
                if (!all_zero(lhs)) {
                    ok = false;
                    break;
                }
            }
        out.add("alternator", ok, "");
    }

    // (3) l1 intertwines: l1(l2(a, xi)) = [a, l1 xi]
    {
        bool ok = true;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int x = 0; x < d.r_low; ++x) {
                const Coeffs xb = basis(d.base, static_cast<std::size_t>(d.r_low), static_cast<std::size_t>(x));
                Coeffs lhs = l1_vec(conn_apply(d.l2mix, alg, a, xb));
                Section ea(static_cast<std::size_t>(d.n0), GradedPoly::zero(ft));
                ea[static_cast<std::size_t>(a)] = GradedPoly::constant(ft, Rational(1));
                Section lx(static_cast<std::size_t>(d.n0), GradedPoly::zero(ft));
                const Coeffs l1x = l1_vec(xb);
                for (int g = 0; g < d.n0; ++g) lx[static_cast<std::size_t>(g)] = l1x[static_cast<std::size_t>(g)].imported_into(ft);
                Section rhs = bracket_sections(alg, ea, lx);
                for (int g = 0; g < d.n0; ++g) {
                    GradedPoly defect = lhs[static_cast<std::size_t>(g)].imported_into(ft) - rhs[static_cast<std::size_t>(g)];
                    if (!defect.is_zero()) {
                        ok = false;
                        break;
                    }
                }
            }
        out.add("chain-map", ok, "");
    }

    // (4) mixed jacobi: F^{l2mix}(a,b) xi + l3(a, b, l1 xi) = 0
    {
        bool ok = true;
        for (int a = 0; a < d.n0 && ok; ++a)
            for (int b = a + 1; b < d.n0 && ok; ++b)
                for (int x = 0; x < d.r_low; ++x) {
                    const Coeffs xb = basis(d.base, static_cast<std::size_t>(d.r_low), static_cast<std::size_t>(x));
                    Coeffs lhs = curvature(d.l2mix, alg, a, b, xb);
                    Coeffs rhs = l3_vec(a, b, l1_vec(xb));
                    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] += rhs[j];
                    if (!all_zero(lhs)) {
                        ok = false;
                        break;
                    }
                }
        out.add("mixed-jacobi", ok, "");
    }

    // (5) coherence of l3 on quadruples of A_0 basis sections
    {
        bool ok = true;
        for (const auto& tuple : ext::subsets(d.n0, 4)) {
            Coeffs acc(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
            for (int i = 0; i < 4; ++i) {
                std::vector<int> rest;
                for (int l = 0; l < 4; ++l)
                    if (l != i) rest.push_back(tuple[static_cast<std::size_t>(l)]);
                Coeffs l3v(static_cast<std::size_t>(d.r_low), GradedPoly::zero(d.base));
                for (int t = 0; t < d.r_low; ++t)
                    l3v[static_cast<std::size_t>(t)] =
                        d.l3[static_cast<std::size_t>(rest[0])][static_cast<std::size_t>(rest[1])]
                            [static_cast<std::size_t>(rest[2])][static_cast<std::size_t>(t)];
                Coeffs term = conn_apply(d.l2mix, alg, tuple[static_cast<std::size_t>(i)], l3v);
                for (std::size_t j = 0; j < acc.size(); ++j)
                    acc[j] += (i % 2) ? -term[j] : term[j];
            }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    std::vector<int> rest;
                    for (int l = 0; l < 4; ++l)
                        if (l != i && l != j) rest.push_back(tuple[static_cast<std::size_t>(l)]);
                    for (int e = 0; e < d.n0; ++e) {
                        const GradedPoly& cf = alg.structure(tuple[static_cast<std::size_t>(i)],
                                                             tuple[static_cast<std::size_t>(j)], e);
                        if (cf.is_zero()) continue;
                        std::vector<int> word{e, rest[0], rest[1]};
                        auto [sign, sorted] = ext::sort_word(std::move(word));
                        if (!sign) continue;
                        for (int t = 0; t < d.r_low; ++t) {
                            GradedPoly add = cf * d.l3[static_cast<std::size_t>(sorted[0])]
                                                      [static_cast<std::size_t>(sorted[1])]
                                                      [static_cast<std::size_t>(sorted[2])]
                                                      [static_cast<std::size_t>(t)];
                            if (sign < 0) add = -add;
                            acc[static_cast<std::size_t>(t)] += ((i + j) % 2) ? -add : add;
                        }
                    }
                }
            if (!all_zero(acc)) {
                ok = false;
                break;
            }
        }
        out.add("l3-coherence", ok, "");
    }
    return out;
}

} // namespace gcb
