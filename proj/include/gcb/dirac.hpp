#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcb/brackets.hpp"
#include "gcb/exterior.hpp"
#include "gcb/linalg.hpp"
#include "gcb/master.hpp"
#include "gcb/random.hpp"
#include "gcb/report.hpp"

namespace gcb {

// ---------------------------------------------------------------------------
// Presentations

/// One spanning vector of L inside A + wedge^{k-1} A*: fibre coefficients and
/// form coefficients (over the lex-sorted (k-1)-subsets), polynomial in the
/// base variables.
struct DiracVector {
    std::vector<GradedPoly> a; // length n
    std::vector<GradedPoly> w; // length C(n, k-1)
};

/// K-datum vector inside the Atiyah part + wedge^k A*: an endomorphism block
/// (row-major, T(e_l) = sum_i endo[i*n+l] e_i), a tangent block and a top
/// form block.
struct KVector {
    std::vector<GradedPoly> endo; // n*n
    std::vector<GradedPoly> tm;   // m
    std::vector<GradedPoly> top;  // C(n, k)
};

/// Spanning-vector presentation of a subbundle candidate with its evaluation
/// points. In the point regime the base is 0-dimensional and all entries are
/// constants; in the sampled regime every check runs pointwise over `points`.
struct SubbundleSpec {
    enum class Regime { point, sampled };

    Regime regime = Regime::point;
    int k = 3, m = 0, n = 0;
    TablePtr base;
    std::vector<DiracVector> span;
    Mat points;                                              // rows of length m
    std::optional<std::vector<std::vector<GradedPoly>>> d_span; // vectors in A*
    std::optional<std::vector<KVector>> k_span;

    static SubbundleSpec make(Regime regime, int k, int m, int n) {
        if (k < 3) throw std::invalid_argument("shift must be >= 3");
        SubbundleSpec s;
        s.regime = regime;
        s.k = k;
        s.m = m;
        s.n = n;
        s.base = base_table(m);
        if (regime == Regime::point && m != 0)
            throw std::invalid_argument("point regime requires a 0-dimensional base");
        return s;
    }

    std::size_t wdim() const { return ext::dim(n, k - 1); }

    DiracVector zero_vector() const {
        DiracVector v;
        v.a.assign(static_cast<std::size_t>(n), GradedPoly::zero(base));
        v.w.assign(wdim(), GradedPoly::zero(base));
        return v;
    }

    Mat eval_points() const {
        if (regime == Regime::point) return {Vec{}};
        if (points.empty()) throw std::invalid_argument("sampled regime requires evaluation points");
        return points;
    }
};

/// Pair presentation of a lagrangian: a subspace E (independent rows) and an
/// alternating k-array on it, stored over the sorted k-subsets of E-basis
/// indices.
struct PairSpec {
    int n = 0, k = 3;
    Mat e_basis;
    std::vector<Rational> omega; // length C(r, k), r = e_basis.size()
};

// ---------------------------------------------------------------------------
// Evaluation helpers

inline Rational eval_at(const GradedPoly& f, const Vec& point) {
    std::map<std::size_t, Rational> values;
    for (std::size_t i = 0; i < point.size(); ++i) values.emplace(i, point[i]);
    GradedPoly v = f.evaluated(values);
    if (v.is_zero()) return Rational(0);
    if (!v.is_homogeneous(0) || v.term_count() != 1)
        throw std::invalid_argument("evaluation left symbolic generators behind");
    return v.terms().begin()->second;
}

inline Vec eval_vec(const std::vector<GradedPoly>& v, const Vec& point) {
    Vec out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(eval_at(f, point));
    return out;
}

namespace detail {

inline Mat transpose(const Mat& m, std::size_t nc) {
    Mat t(nc, Vec(m.size(), Rational(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < nc; ++j) t[j][i] = m[i][j];
    return t;
}

struct EvaluatedL {
    Mat rows;    // n + C(n,k-1) columns
    Mat a_part;  // n columns
    Mat w_part;  // C(n,k-1) columns
};

inline EvaluatedL evaluate_span(const SubbundleSpec& s, const Vec& pt) {
    EvaluatedL e;
    for (const auto& v : s.span) {
        Vec a = eval_vec(v.a, pt), w = eval_vec(v.w, pt);
        Vec row = a;
        row.insert(row.end(), w.begin(), w.end());
        e.rows.push_back(std::move(row));
        e.a_part.push_back(std::move(a));
        e.w_part.push_back(std::move(w));
    }
    return e;
}

/// Span of { delta ^ (basis of wedge^q A*) : delta in ann_basis }.
inline Mat wedge_span(const Mat& ann_basis, int n, int q) {
    Mat out;
    if (q < 0) return out;
    const auto basis = ext::subsets(n, q);
    for (const auto& delta : ann_basis) {
        ext::Coeffs<Rational> d1(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i) d1[static_cast<std::size_t>(i)] = delta[static_cast<std::size_t>(i)];
        for (std::size_t u = 0; u < basis.size(); ++u) {
            ext::Coeffs<Rational> unit(ext::dim(n, q), Rational(0));
            unit[u] = 1;
            out.push_back(ext::wedge(n, 1, d1, q, unit, Rational(0)));
        }
    }
    return out;
}

/// L cap wedge^{k-1} A*: the form parts of combinations whose fibre part
/// vanishes.
inline Mat form_intersection(const EvaluatedL& e, int n) {
    Mat combos = linalg::nullspace(transpose(e.a_part, static_cast<std::size_t>(n)), e.a_part.size());
    Mat out;
    for (const auto& c : combos) {
        Vec w(e.w_part.empty() ? 0 : e.w_part.front().size(), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += c[i] * e.w_part[i][j];
        out.push_back(std::move(w));
    }
    return out;
}

/// Pairing <v_i, v_j> = i_{a_i} w_j + i_{a_j} w_i as wedge^{k-2} coordinates.
inline Vec pair_vectors(const EvaluatedL& e, std::size_t i, std::size_t j, int n, int k) {
    ext::Coeffs<Rational> ai(e.a_part[i].begin(), e.a_part[i].end());
    ext::Coeffs<Rational> aj(e.a_part[j].begin(), e.a_part[j].end());
    ext::Coeffs<Rational> wi(e.w_part[i].begin(), e.w_part[i].end());
    ext::Coeffs<Rational> wj(e.w_part[j].begin(), e.w_part[j].end());
    auto p = ext::contract_vector(n, k - 1, wj, ai, Rational(0));
    auto q = ext::contract_vector(n, k - 1, wi, aj, Rational(0));
    for (std::size_t t = 0; t < p.size(); ++t) p[t] += q[t];
    return p;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Lagrangian / weak lagrangian

enum class LagrangianStatus { lagrangian, weak_lagrangian, fail };

struct LagrangianReport {
    LagrangianStatus status = LagrangianStatus::fail;
    CheckReport report{"lagrangian"};
    bool isotropy_pass() const {
        return status == LagrangianStatus::lagrangian || status == LagrangianStatus::weak_lagrangian;
    }
};

/// Constant rank of the fibre projection, the form-part equality and the
/// isotropy inclusion, pointwise over the evaluation points.
inline LagrangianReport check_lagrangian(const SubbundleSpec& s) {
    LagrangianReport out;
    const int n = s.n, k = s.k;
    const Mat pts = s.eval_points();

    bool l2_ok = true, l1_ok = true, rank_ok = true;
    std::string l2_detail, l1_detail, rank_detail;
    std::optional<std::size_t> p1_rank, l_rank;
    bool l0_ok = true;
    std::string l0_detail;

    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        const auto e = detail::evaluate_span(s, pts[pi]);
        const std::size_t lr = linalg::rank(e.rows);
        if (!l_rank) l_rank = lr;
        if (lr != *l_rank && rank_ok) {
            rank_ok = false;
            rank_detail = "span rank varies across evaluation points";
        }

        const Mat p1 = linalg::row_basis(e.a_part);
        if (!p1_rank) p1_rank = p1.size();
        if (p1.size() != *p1_rank && l0_ok) {
            l0_ok = false;
            l0_detail = "fibre projection rank drops at evaluation point " + std::to_string(pi);
        }

        const Mat ann = linalg::annihilator(p1, static_cast<std::size_t>(n));
        const Mat lcap = detail::form_intersection(e, n);
        const Mat rhs2 = detail::wedge_span(ann, n, k - 2);
        if (!linalg::span_equal(lcap, rhs2) && l2_ok) {
            l2_ok = false;
            l2_detail = "form-part mismatch at evaluation point " + std::to_string(pi);
        }

        const Mat rhs1 = detail::wedge_span(ann, n, k - 3);
        const Mat rhs1_basis = linalg::row_basis(rhs1);
        for (std::size_t i = 0; i < e.rows.size() && l1_ok; ++i)
            for (std::size_t j = i; j < e.rows.size(); ++j) {
                Vec p = detail::pair_vectors(e, i, j, n, k);
                if (!linalg::in_span(rhs1_basis, p)) {
                    l1_ok = false;
                    l1_detail = "pairing of vectors " + std::to_string(i) + "," + std::to_string(j) +
                                " escapes at evaluation point " + std::to_string(pi);
                    break;
                }
            }
    }

    out.report.add("span-constant-rank", rank_ok, rank_detail);
    out.report.add("L0-projection-subbundle", l0_ok, l0_detail);
    out.report.add("L2-form-part", l2_ok, l2_detail);
    out.report.add("L1-isotropy", l1_ok, l1_detail);

    if (l2_ok && l1_ok && rank_ok)
        out.status = l0_ok ? LagrangianStatus::lagrangian : LagrangianStatus::weak_lagrangian;
    else
        out.status = LagrangianStatus::fail;
    return out;
}

// ---------------------------------------------------------------------------
// Pair presentation

/// Extracts (E, Omega) from a lagrangian in the point regime; the E-basis is
/// the canonical (reduced) basis of the fibre projection.
inline PairSpec to_pair(const SubbundleSpec& s) {
    if (s.regime != SubbundleSpec::Regime::point)
        throw std::invalid_argument("pair extraction works in the point regime");
    if (check_lagrangian(s).status != LagrangianStatus::lagrangian)
        throw std::invalid_argument("pair extraction requires a lagrangian input");

    const int n = s.n, k = s.k;
    const auto e = detail::evaluate_span(s, Vec{});
    PairSpec p;
    p.n = n;
    p.k = k;
    p.e_basis = linalg::row_basis(e.a_part);
    const std::size_t r = p.e_basis.size();

    std::vector<Vec> lifts;
    for (std::size_t i = 0; i < r; ++i) {
        auto combo = linalg::solve_left(e.a_part, p.e_basis[i]);
        if (!combo) throw std::logic_error("projection basis must lift");
        Vec w(s.wdim(), Rational(0));
        for (std::size_t t = 0; t < combo->size(); ++t)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += (*combo)[t] * e.w_part[t][j];
        lifts.push_back(std::move(w));
    }

    const auto ksubs = ext::subsets(static_cast<int>(r), k);
    p.omega.assign(ext::dim(static_cast<int>(r), k), Rational(0));
    for (std::size_t si = 0; si < ksubs.size(); ++si) {
        const auto& sub = ksubs[si];
        ext::Coeffs<Rational> w(lifts[static_cast<std::size_t>(sub[0])].begin(),
                                lifts[static_cast<std::size_t>(sub[0])].end());
        int q = k - 1;
        for (int t = 1; t < k; ++t) {
            ext::Coeffs<Rational> ev(p.e_basis[static_cast<std::size_t>(sub[static_cast<std::size_t>(t)])].begin(),
                                     p.e_basis[static_cast<std::size_t>(sub[static_cast<std::size_t>(t)])].end());
            w = ext::contract_vector(n, q, w, ev, Rational(0));
            --q;
        }
        p.omega[si] = w.empty() ? Rational(0) : w.front();
    }
    return p;
}

/// Builds the lagrangian { e + w : e in E, restriction of w = i_e Omega }.
inline SubbundleSpec from_pair(const PairSpec& p, int ambient_n) {
    const int n = ambient_n, k = p.k;
    const std::size_t r = p.e_basis.size();
    if (linalg::rank(p.e_basis) != r) throw std::invalid_argument("E basis must be independent");
    if (p.omega.size() != ext::dim(static_cast<int>(r), k))
        throw std::invalid_argument("omega has the wrong number of components");

    SubbundleSpec s = SubbundleSpec::make(SubbundleSpec::Regime::point, k, 0, n);

    // evaluation matrix: row per (k-1)-tuple of E-basis vectors, column per
    // ambient basis form
    const auto tuples = ext::subsets(static_cast<int>(r), k - 1);
    const auto forms = ext::subsets(n, k - 1);
    Mat phi(tuples.size(), Vec(forms.size(), Rational(0)));
    for (std::size_t ti = 0; ti < tuples.size(); ++ti)
        for (std::size_t fi = 0; fi < forms.size(); ++fi) {
            ext::Coeffs<Rational> unit(forms.size(), Rational(0));
            unit[fi] = 1;
            ext::Coeffs<Rational> w = unit;
            int q = k - 1;
            for (int t = 0; t < k - 1; ++t) {
                const auto& ev = p.e_basis[static_cast<std::size_t>(tuples[ti][static_cast<std::size_t>(t)])];
                w = ext::contract_vector(n, q, w, ext::Coeffs<Rational>(ev.begin(), ev.end()), Rational(0));
                --q;
            }
            phi[ti][fi] = w.empty() ? Rational(0) : w.front();
        }

    for (std::size_t i = 0; i < r; ++i) {
        Vec rhs(tuples.size(), Rational(0));
        for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
            std::vector<int> word{static_cast<int>(i)};
            word.insert(word.end(), tuples[ti].begin(), tuples[ti].end());
            auto [sign, sorted] = ext::sort_word(std::move(word));
            if (!sign) continue;
            Rational v = p.omega[ext::index_of(static_cast<int>(r), sorted)];
            if (sign < 0) v = -v;
            rhs[ti] = v;
        }
        auto w = linalg::solve_left(detail::transpose(phi, forms.size()), rhs);
        if (!w) throw std::logic_error("interior product equation must be solvable");
        DiracVector v = s.zero_vector();
        for (int j = 0; j < n; ++j)
            v.a[static_cast<std::size_t>(j)] =
                GradedPoly::constant(s.base, p.e_basis[i][static_cast<std::size_t>(j)]);
        for (std::size_t j = 0; j < forms.size(); ++j)
            v.w[j] = GradedPoly::constant(s.base, (*w)[j]);
        s.span.push_back(std::move(v));
    }

    const Mat ann = linalg::annihilator(p.e_basis, static_cast<std::size_t>(n));
    for (const auto& row : detail::wedge_span(ann, n, k - 2)) {
        DiracVector v = s.zero_vector();
        for (std::size_t j = 0; j < row.size(); ++j) v.w[j] = GradedPoly::constant(s.base, row[j]);
        s.span.push_back(std::move(v));
    }
    return s;
}

/// Optional extra condition on a pair presentation: every wedge of k-1
/// contractions i_{Z_1}Omega ^ ... ^ i_{Z_{k-1}}Omega must again be of the
/// form i_e Omega. The quantifier runs over all of wedge^{k-1}E; the check
/// evaluates every tuple of basis wedges (with repetition) plus seeded
/// random rational combinations.
inline CheckReport check_wade_condition(const PairSpec& p, int random_samples = 25,
                                        std::uint64_t seed = 1) {
    CheckReport rep("wade-condition");
    const int r = static_cast<int>(p.e_basis.size());
    const int k = p.k;
    const std::size_t zdim = ext::dim(r, k - 1);
    const std::size_t edim = ext::dim(r, k);

    // i_Z Omega as a linear map wedge^{k-1}E -> E*, and i_e Omega as a map
    // E -> wedge^{k-1}E*, both in E-coordinates
    auto contract_full = [&](const std::vector<Rational>& z) {
        // sum_S z_S i_{e_S} Omega, a 1-form on E
        Vec out(static_cast<std::size_t>(r), Rational(0));
        const auto subs = ext::subsets(r, k - 1);
        for (std::size_t si = 0; si < subs.size(); ++si) {
            if (z[si] == 0) continue;
            ext::Coeffs<Rational> w(p.omega.begin(), p.omega.end());
            auto v = ext::contract_word(r, k, std::move(w), subs[si], Rational(0));
            for (int j = 0; j < r; ++j) out[static_cast<std::size_t>(j)] += z[si] * v[static_cast<std::size_t>(j)];
        }
        return out;
    };
    Mat image_rows; // { i_e Omega : e basis } as wedge^{k-1}E* coordinates
    for (int e = 0; e < r; ++e) {
        ext::Coeffs<Rational> w(p.omega.begin(), p.omega.end());
        image_rows.push_back(ext::contract_index(r, k, w, e, Rational(0)));
    }

    auto tuple_ok = [&](const std::vector<std::vector<Rational>>& zs) {
        ext::Coeffs<Rational> acc{Rational(1)};
        int q = 0;
        for (const auto& z : zs) {
            Vec one_form = contract_full(z);
            acc = ext::wedge(r, q, acc, 1, ext::Coeffs<Rational>(one_form.begin(), one_form.end()),
                             Rational(0));
            ++q;
        }
        // solvable i_e Omega = acc?
        return linalg::solve_left(image_rows, Vec(acc.begin(), acc.end())).has_value();
    };

    bool ok = true;
    std::string detail;
    if (r >= k - 1 && k >= 2) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k - 1), 0);
        while (ok) {
            std::vector<std::vector<Rational>> zs;
            for (auto i : idx) {
                std::vector<Rational> z(zdim, Rational(0));
                z[i] = 1;
                zs.push_back(std::move(z));
            }
            if (!tuple_ok(zs)) {
                ok = false;
                detail = "fails on a tuple of basis wedges";
            }
            // next tuple with repetition
            int pos = k - 2;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == zdim) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        Rng rng(seed);
        for (int s = 0; s < random_samples && ok; ++s) {
            std::vector<std::vector<Rational>> zs;
            for (int t = 0; t < k - 1; ++t) {
                std::vector<Rational> z(zdim, Rational(0));
                for (auto& x : z) x = rng.rational(2, 1);
                zs.push_back(std::move(z));
            }
            if (!tuple_ok(zs)) {
                ok = false;
                detail = "fails on a random combination (seed " + std::to_string(seed) + ")";
            }
        }
    }
    rep.add("wedge-of-contractions-in-image", ok, detail);
    (void)edim;
    return rep;
}

// ---------------------------------------------------------------------------
// Hagiwara-style conditions over the full base

struct HagiwaraReport {
    bool regular = true;
    CheckReport report{"nambu-dirac"};
};

inline HagiwaraReport check_nambu_dirac_hagiwara(const SubbundleSpec& s) {
    HagiwaraReport out;
    const int n = s.n, k = s.k;
    const Mat pts = s.eval_points();

    bool h2_ok = true, h1_ok = true;
    std::string h2_detail, h1_detail;
    std::optional<std::size_t> p1_rank;

    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        const auto e = detail::evaluate_span(s, pts[pi]);
        const Mat p1 = linalg::row_basis(e.a_part);
        if (!p1_rank) p1_rank = p1.size();
        if (p1.size() != *p1_rank) out.regular = false;

        // wedge^{k-1} of the projection
        Mat lhs;
        for (const auto& sub : ext::subsets(static_cast<int>(p1.size()), k - 1)) {
            ext::Coeffs<Rational> acc{Rational(1)};
            int q = 0;
            for (int idx : sub) {
                ext::Coeffs<Rational> v(p1[static_cast<std::size_t>(idx)].begin(),
                                        p1[static_cast<std::size_t>(idx)].end());
                acc = ext::wedge(n, q, acc, 1, v, Rational(0));
                ++q;
            }
            lhs.push_back(Vec(acc.begin(), acc.end()));
        }

        // second projection of the annihilator of L
        const Mat lann = linalg::nullspace(e.rows, static_cast<std::size_t>(n) + s.wdim());
        Mat pr2;
        for (const auto& row : lann) pr2.push_back(Vec(row.begin() + n, row.end()));

        if (!linalg::span_equal(lhs, pr2) && h2_ok) {
            h2_ok = false;
            h2_detail = "wedge of the projection differs from the annihilator projection at point " +
                        std::to_string(pi);
        }

        // (i_a w' + i_{a'} w) restricted to wedge^{k-2} of the projection
        Mat test_vectors;
        for (const auto& sub : ext::subsets(static_cast<int>(p1.size()), k - 2)) {
            ext::Coeffs<Rational> acc{Rational(1)};
            int q = 0;
            for (int idx : sub) {
                ext::Coeffs<Rational> v(p1[static_cast<std::size_t>(idx)].begin(),
                                        p1[static_cast<std::size_t>(idx)].end());
                acc = ext::wedge(n, q, acc, 1, v, Rational(0));
                ++q;
            }
            test_vectors.push_back(Vec(acc.begin(), acc.end()));
        }
        for (std::size_t i = 0; i < e.rows.size() && h1_ok; ++i)
            for (std::size_t j = i; j < e.rows.size() && h1_ok; ++j) {
                Vec pair = detail::pair_vectors(e, i, j, n, k);
                for (const auto& z : test_vectors) {
                    Rational val(0);
                    for (std::size_t t = 0; t < pair.size(); ++t) val += pair[t] * z[t];
                    if (val != 0) {
                        h1_ok = false;
                        h1_detail = "pairing of vectors " + std::to_string(i) + "," + std::to_string(j) +
                                    " is nonzero on the projection at point " + std::to_string(pi);
                        break;
                    }
                }
            }
    }

    out.report.add("H2-annihilator-match", h2_ok, h2_detail);
    out.report.add("H1-restricted-isotropy", h1_ok, h1_detail);
    return out;
}

// ---------------------------------------------------------------------------
// Nambu tensors

/// Element of wedge^k A with polynomial coefficients over the lex-sorted
/// k-subsets.
struct NambuTensor {
    int n = 0, k = 3, m = 0;
    TablePtr base;
    std::vector<GradedPoly> pi; // length C(n,k)

    static NambuTensor make(int k, int m, int n) {
        NambuTensor t;
        t.k = k;
        t.m = m;
        t.n = n;
        t.base = base_table(m);
        t.pi.assign(ext::dim(n, k), GradedPoly::zero(t.base));
        return t;
    }
};

/// Contraction of the tensor by a sorted (k-1)-subset word: a section of A.
inline Section nambu_contract(const NambuTensor& t, const std::vector<int>& word, const TablePtr& table) {
    ext::Coeffs<GradedPoly> coeffs;
    coeffs.reserve(t.pi.size());
    for (const auto& f : t.pi) coeffs.push_back(f.imported_into(table));
    auto v = ext::contract_word(t.n, t.k, std::move(coeffs), word, GradedPoly::zero(table));
    return Section(v.begin(), v.end());
}

/// Contraction by a (k-1)-form given in coordinates.
inline Section nambu_contract_form(const NambuTensor& t, const std::vector<GradedPoly>& xi,
                                   const TablePtr& table) {
    Section out(static_cast<std::size_t>(t.n), GradedPoly::zero(table));
    const auto words = ext::subsets(t.n, t.k - 1);
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (xi[i].is_zero()) continue;
        Section part = nambu_contract(t, words[i], table);
        for (int j = 0; j < t.n; ++j) out[static_cast<std::size_t>(j)] += xi[i] * part[static_cast<std::size_t>(j)];
    }
    return out;
}

struct DecomposabilityReport {
    bool pass = false;
    bool vanishes_somewhere = false; // at some supplied evaluation point
    CheckReport report{"decomposable"};
};

/// Contraction criterion: (i_phi Pi) ^ Pi = 0 for every basis (k-1)-form phi,
/// as exact polynomial identities (hence at every base point at once).
inline DecomposabilityReport is_decomposable(const NambuTensor& t, const Mat& points = {}) {
    DecomposabilityReport out;
    const GradedPoly zero = GradedPoly::zero(t.base);
    bool ok = true;
    std::string detail;
    for (const auto& phi : ext::subsets(t.n, t.k - 1)) {
        ext::Coeffs<GradedPoly> v(t.pi);
        auto vec = ext::contract_word(t.n, t.k, std::move(v), phi, zero);
        auto expr = ext::wedge(t.n, 1, vec, t.k, ext::Coeffs<GradedPoly>(t.pi), zero);
        if (!ext::all_zero(expr)) {
            ok = false;
            detail = "contraction relation fails";
            break;
        }
    }
    out.pass = ok;
    out.report.add("contraction-relations", ok, detail);
    for (const auto& pt : points) {
        bool all0 = true;
        for (const auto& f : t.pi)
            if (eval_at(f, pt) != 0) {
                all0 = false;
                break;
            }
        if (all0) out.vanishes_somewhere = true;
    }
    return out;
}

/// Lie derivative of the tensor along a section, through the Leibniz rule on
/// decomposable words.
inline std::vector<GradedPoly> nambu_lie_derivative(const NambuTensor& t, const LieAlgebroidData& alg,
                                                    const Section& u, const TablePtr& table) {
    std::vector<GradedPoly> out(t.pi.size(), GradedPoly::zero(table));
    const auto words = ext::subsets(t.n, t.k);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const GradedPoly f = t.pi[wi].imported_into(table);
        if (f.is_zero()) continue;
        out[wi] += anchor_apply(alg, u, f);
        const auto& word = words[wi];
        for (std::size_t slot = 0; slot < word.size(); ++slot) {
            Section br = bracket_sections(alg, u, basis_section(alg, table, word[slot]));
            // minus: the slot entry is the second bracket argument
            for (int c = 0; c < t.n; ++c) {
                const GradedPoly& coeff = br[static_cast<std::size_t>(c)];
                if (coeff.is_zero()) continue;
                std::vector<int> repl = word;
                repl[slot] = c;
                auto [sign, sorted] = ext::sort_word(std::move(repl));
                if (!sign) continue;
                GradedPoly val = f * coeff;
                if (sign < 0) val = -val;
                out[ext::index_of(t.n, sorted)] += val;
            }
        }
    }
    return out;
}

/// Extracts form coordinates (over sorted q-subsets) of a pure q-form on a
/// working table; coefficients keep their base dependence.
inline std::vector<GradedPoly> form_to_coeffs(const GradedPoly& w, int m, int n, int q) {
    const TablePtr& table = w.table();
    std::vector<GradedPoly> out(ext::dim(n, q), GradedPoly::zero(table));
    for (const auto& [mono, c] : w.terms()) {
        std::vector<int> sub;
        Monomial rest(table->size());
        for (std::size_t g = 0; g < table->size(); ++g) {
            const auto e = mono.exponent(g);
            if (!e) continue;
            if (g >= static_cast<std::size_t>(m) && g < static_cast<std::size_t>(m + n))
                sub.push_back(static_cast<int>(g) - m);
            else
                rest.set_exponent(g, e);
        }
        if (static_cast<int>(sub.size()) != q)
            throw std::invalid_argument("form has mixed fibre degrees");
        out[ext::index_of(n, sub)] += GradedPoly::term(table, rest, c);
    }
    return out;
}

inline GradedPoly coeffs_to_form(const std::vector<GradedPoly>& coeffs, const TablePtr& table, int m,
                                 int n, int q) {
    GradedPoly w(table);
    const auto subs = ext::subsets(n, q);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        GradedPoly word = GradedPoly::constant(table, Rational(1));
        for (int j : subs[i]) word = word * GradedPoly::generator(table, static_cast<std::size_t>(m + j));
        w += coeffs[i] * word;
    }
    return w;
}

/// The involutivity identity of a decomposable tensor, evaluated on all basis
/// pairs of (k-1)-forms as exact polynomial identities.
inline CheckReport check_twisted_nambu(const NambuTensor& t, const LieAlgebroidData& alg,
                                       const TwistH* h) {
    CheckReport rep("twisted-nambu");
    auto dec = is_decomposable(t);
    rep.add("decomposable", dec.pass, dec.pass ? "" : "contraction relations fail");
    if (!dec.pass) return rep;

    const TablePtr ft = form_table(t.m, t.n);
    const GradedPoly zero = GradedPoly::zero(ft);
    const auto words = ext::subsets(t.n, t.k - 1);

    bool ok = true;
    std::string detail;
    for (std::size_t wi = 0; wi < words.size() && ok; ++wi) {
        const Section u = nambu_contract(t, words[wi], ft); // Pi(w)
        const auto lie_pi = nambu_lie_derivative(t, alg, u, ft);
        // d_A of the basis form w
        GradedPoly wform = coeffs_to_form(
            [&] {
                std::vector<GradedPoly> c(ext::dim(t.n, t.k - 1), zero);
                c[wi] = GradedPoly::constant(ft, Rational(1));
                return c;
            }(),
            ft, t.m, t.n, t.k - 1);
        const auto dw = form_to_coeffs(d_A(alg, wform), t.m, t.n, t.k);

        for (std::size_t wj = 0; wj < words.size() && ok; ++wj) {
            const Section v = nambu_contract(t, words[wj], ft); // Pi(w')
            // left side: (L_{Pi(w)} Pi)(w')
            auto lhs_coeffs = ext::contract_word(t.n, t.k, ext::Coeffs<GradedPoly>(lie_pi), words[wj], zero);
            // right side: -Pi( i_{Pi(w')} d_A w + i_{Pi(w')} i_{Pi(w)} H )
            auto arg = ext::contract_vector(t.n, t.k, ext::Coeffs<GradedPoly>(dw),
                                            ext::Coeffs<GradedPoly>(v.begin(), v.end()), zero);
            if (h) {
                auto hc = form_to_coeffs(h->poly().imported_into(ft), t.m, t.n, t.k + 1);
                auto ih = ext::contract_vector(t.n, t.k + 1, ext::Coeffs<GradedPoly>(hc),
                                               ext::Coeffs<GradedPoly>(u.begin(), u.end()), zero);
                auto ihh = ext::contract_vector(t.n, t.k, ih,
                                                ext::Coeffs<GradedPoly>(v.begin(), v.end()), zero);
                for (std::size_t i = 0; i < arg.size(); ++i) arg[i] += ihh[i];
            }
            Section rhs = nambu_contract_form(t, std::vector<GradedPoly>(arg.begin(), arg.end()), ft);
            for (int c = 0; c < t.n && ok; ++c) {
                GradedPoly defect = lhs_coeffs[static_cast<std::size_t>(c)] + rhs[static_cast<std::size_t>(c)];
                if (!defect.is_zero()) {
                    ok = false;
                    detail = "identity fails on basis pair (" + std::to_string(wi) + "," +
                             std::to_string(wj) + "), component " + std::to_string(c + 1);
                }
            }
        }
    }
    rep.add("involutivity-identity", ok, detail);
    return rep;
}

// ---------------------------------------------------------------------------
// Constructors

/// L = B + ann(B) ^ wedge^{k-2} A* from a constant subbundle B of A.
inline SubbundleSpec conormal(const Mat& b_basis, int k, int n, int m = 0,
                              Mat points = {}) {
    SubbundleSpec s = SubbundleSpec::make(m == 0 ? SubbundleSpec::Regime::point
                                                 : SubbundleSpec::Regime::sampled,
                                          k, m, n);
    s.points = std::move(points);
    for (const auto& b : b_basis) {
        DiracVector v = s.zero_vector();
        for (int j = 0; j < n; ++j) v.a[static_cast<std::size_t>(j)] =
            GradedPoly::constant(s.base, b[static_cast<std::size_t>(j)]);
        s.span.push_back(std::move(v));
    }
    Mat ann = linalg::annihilator(b_basis, static_cast<std::size_t>(n));
    for (const auto& row : detail::wedge_span(ann, n, k - 2)) {
        DiracVector v = s.zero_vector();
        for (std::size_t j = 0; j < row.size(); ++j) v.w[j] = GradedPoly::constant(s.base, row[j]);
        s.span.push_back(std::move(v));
    }
    return s;
}

/// Graph of a k-form: spanning vectors e_j + i_{e_j} omega (coefficients may
/// be polynomial in the base).
inline SubbundleSpec graph_of_form(const std::vector<GradedPoly>& omega, int k, int n, int m = 0,
                                   Mat points = {}) {
    SubbundleSpec s = SubbundleSpec::make(m == 0 ? SubbundleSpec::Regime::point
                                                 : SubbundleSpec::Regime::sampled,
                                          k, m, n);
    s.points = std::move(points);
    const GradedPoly zero = GradedPoly::zero(s.base);
    std::vector<GradedPoly> om;
    for (const auto& f : omega)
        om.push_back(f.table()->size() <= s.base->size() ? f.imported_into(s.base)
                                                         : f.restricted_to(s.base));
    for (int j = 0; j < n; ++j) {
        DiracVector v = s.zero_vector();
        v.a[static_cast<std::size_t>(j)] = GradedPoly::constant(s.base, Rational(1));
        auto iw = ext::contract_index(n, k, ext::Coeffs<GradedPoly>(om), j, zero);
        for (std::size_t t = 0; t < iw.size(); ++t) v.w[t] = iw[t];
        s.span.push_back(std::move(v));
    }
    return s;
}

/// Graph of a k-vector: spanning vectors Pi(w_J) + w_J over the basis forms.
inline SubbundleSpec graph_of_nambu(const NambuTensor& t, Mat points = {}) {
    SubbundleSpec s = SubbundleSpec::make(t.m == 0 ? SubbundleSpec::Regime::point
                                                   : SubbundleSpec::Regime::sampled,
                                          t.k, t.m, t.n);
    s.points = std::move(points);
    const auto words = ext::subsets(t.n, t.k - 1);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        DiracVector v = s.zero_vector();
        Section a = nambu_contract(t, words[wi], s.base);
        for (int j = 0; j < t.n; ++j) v.a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)];
        v.w[wi] = GradedPoly::constant(s.base, Rational(1));
        s.span.push_back(std::move(v));
    }
    return s;
}

/// Closure of the graph of a decomposable tensor under the twisted bracket,
/// as the exact identity "fibre part = Pi(form part)" on spanning pairs.
inline CheckReport check_nambu_graph_closure(const NambuTensor& t, const LieAlgebroidData& alg,
                                             const TwistH* h) {
    CheckReport rep("nambu-graph-closure");
    CotangentChart chart(t.k, t.m, t.n);
    const TablePtr& table = chart.table();
    const auto words = ext::subsets(t.n, t.k - 1);

    auto section_of = [&](std::size_t wi) {
        Section a = nambu_contract(t, words[wi], table);
        GradedPoly e = chart.zero();
        for (int j = 0; j < t.n; ++j) e += a[static_cast<std::size_t>(j)] * chart.gen(chart.a(j));
        std::vector<GradedPoly> c(ext::dim(t.n, t.k - 1), GradedPoly::zero(table));
        c[wi] = GradedPoly::constant(table, Rational(1));
        return e + coeffs_to_form(c, table, t.m, t.n, t.k - 1);
    };

    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < words.size() && ok; ++i)
        for (std::size_t j = 0; j < words.size() && ok; ++j) {
            GradedPoly br = cartan_bracket(section_of(i), section_of(j), alg, h, chart);
            SectionSplit sp = decompose_section(br, chart);
            auto eta = form_to_coeffs(sp.form, t.m, t.n, t.k - 1);
            Section expected = nambu_contract_form(t, eta, table);
            for (int c = 0; c < t.n && ok; ++c) {
                GradedPoly defect = sp.a_part[static_cast<std::size_t>(c)] - expected[static_cast<std::size_t>(c)];
                if (!defect.is_zero()) {
                    ok = false;
                    detail = "bracket of spanning sections " + std::to_string(i) + "," + std::to_string(j) +
                             " leaves the graph";
                }
            }
        }
    rep.add("graph-closure", ok, detail);
    return rep;
}

// ---------------------------------------------------------------------------
// Quadruples and coisotropy

inline CheckReport check_quadruple(const SubbundleSpec& s) {
    if (!s.d_span || !s.k_span)
        throw std::invalid_argument("quadruple check requires D and K spans");
    CheckReport rep("quadruple");
    const int n = s.n, k = s.k, m = s.m;
    const Mat pts = s.eval_points();

    bool sub1_ok = true, sub2_ok = true;
    std::string d1, d2;
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        const auto& pt = pts[pi];
        const auto e = detail::evaluate_span(s, pt);
        Mat d_rows;
        for (const auto& dv : *s.d_span) d_rows.push_back(eval_vec(dv, pt));

        // Sub1: L cap wedge^{k-1} = D ^ wedge^{k-2}
        const Mat lcap = detail::form_intersection(e, n);
        const Mat rhs = detail::wedge_span(d_rows, n, k - 2);
        if (!linalg::span_equal(lcap, rhs) && sub1_ok) {
            sub1_ok = false;
            d1 = "mismatch at evaluation point " + std::to_string(pi);
        }

        // Sub2: K cap (End + wedge^k) = D tensor A + L ^ A*
        const std::size_t endo_dim = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        const std::size_t top_dim = ext::dim(n, k);
        Mat k_rows, k_tm;
        for (const auto& kv : *s.k_span) {
            Vec endo = eval_vec(kv.endo, pt), tm = eval_vec(kv.tm, pt), top = eval_vec(kv.top, pt);
            Vec row = endo;
            row.insert(row.end(), top.begin(), top.end());
            k_rows.push_back(std::move(row));
            k_tm.push_back(std::move(tm));
        }
        Mat kcap;
        if (m == 0) {
            kcap = k_rows;
        } else {
            Mat combos = linalg::nullspace(detail::transpose(k_tm, static_cast<std::size_t>(m)), k_tm.size());
            for (const auto& c : combos) {
                Vec row(endo_dim + top_dim, Rational(0));
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = 0; j < row.size(); ++j) row[j] += c[i] * k_rows[i][j];
                kcap.push_back(std::move(row));
            }
        }
        Mat rhs2;
        for (const auto& delta : d_rows)
            for (int j = 0; j < n; ++j) { // delta tensor e_j: row j of the matrix is delta
                Vec row(endo_dim + top_dim, Rational(0));
                for (int l = 0; l < n; ++l)
                    row[static_cast<std::size_t>(j * n + l)] = delta[static_cast<std::size_t>(l)];
                rhs2.push_back(std::move(row));
            }
        for (std::size_t vi = 0; vi < e.rows.size(); ++vi)
            for (int r = 0; r < n; ++r) { // (a + w) ^ al^r = al^r tensor a + al^r ^ w
                Vec row(endo_dim + top_dim, Rational(0));
                for (int i = 0; i < n; ++i)
                    row[static_cast<std::size_t>(i * n + r)] = e.a_part[vi][static_cast<std::size_t>(i)];
                ext::Coeffs<Rational> alr(static_cast<std::size_t>(n), Rational(0));
                alr[static_cast<std::size_t>(r)] = 1;
                auto wed = ext::wedge(n, 1, alr, k - 1,
                                      ext::Coeffs<Rational>(e.w_part[vi].begin(), e.w_part[vi].end()),
                                      Rational(0));
                for (std::size_t j = 0; j < top_dim; ++j) row[endo_dim + j] = wed[j];
                rhs2.push_back(std::move(row));
            }
        if (!linalg::span_equal(kcap, rhs2) && sub2_ok) {
            sub2_ok = false;
            d2 = "mismatch at evaluation point " + std::to_string(pi);
        }
    }
    rep.add("Sub1-form-part", sub1_ok, d1);
    rep.add("Sub2-top-part", sub2_ok, d2);

    // informational: total dimension over a point (the tangent block of K
    // and the body dimension both vanish there)
    if (s.regime == SubbundleSpec::Regime::point) {
        const auto e = detail::evaluate_span(s, Vec{});
        Mat d_rows;
        for (const auto& dv : *s.d_span) d_rows.push_back(eval_vec(dv, Vec{}));
        const std::size_t rk_d = linalg::rank(d_rows);
        const std::size_t rk_p1 = linalg::rank(e.a_part);
        const std::size_t total = 2 * static_cast<std::size_t>(n) - rk_d - rk_p1;
        rep.add("totdim", true,
                std::to_string(total) + " of ambient " + std::to_string(2 * n) +
                    (total == static_cast<std::size_t>(n) ? " (half-dimensional)" : ""));
    }
    return rep;
}

inline CheckReport check_coisotropic(const SubbundleSpec& s) {
    if (!s.d_span) throw std::invalid_argument("coisotropy check requires a D span");
    CheckReport rep("coisotropic");
    const int n = s.n, k = s.k;
    const Mat pts = s.eval_points();

    bool sub1_ok = true, dann_ok = true, pair_ok = true;
    std::string d1, d2, d3;
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        const auto& pt = pts[pi];
        const auto e = detail::evaluate_span(s, pt);
        Mat d_rows;
        for (const auto& dv : *s.d_span) d_rows.push_back(eval_vec(dv, pt));

        const Mat lcap = detail::form_intersection(e, n);
        if (!linalg::span_equal(lcap, detail::wedge_span(d_rows, n, k - 2)) && sub1_ok) {
            sub1_ok = false;
            d1 = "submanifold condition fails at point " + std::to_string(pi);
        }

        const Mat p1 = linalg::row_basis(e.a_part);
        for (const auto& delta : d_rows) {
            for (const auto& a : p1) {
                Rational v(0);
                for (int i = 0; i < n; ++i) v += delta[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
                if (v != 0 && dann_ok) {
                    dann_ok = false;
                    d2 = "D is not in the annihilator of the projection at point " + std::to_string(pi);
                }
            }
        }

        const Mat rhs = linalg::row_basis(detail::wedge_span(d_rows, n, k - 3));
        for (std::size_t i = 0; i < e.rows.size() && pair_ok; ++i)
            for (std::size_t j = i; j < e.rows.size(); ++j) {
                Vec p = detail::pair_vectors(e, i, j, n, k);
                if (!linalg::in_span(rhs, p)) {
                    pair_ok = false;
                    d3 = "pairing escapes D at point " + std::to_string(pi);
                    break;
                }
            }
    }
    rep.add("Sub1-form-part", sub1_ok, d1);
    rep.add("D-in-projection-annihilator", dann_ok, d2);
    rep.add("pairing-into-D", pair_ok, d3);
    return rep;
}

// ---------------------------------------------------------------------------
// Higher Dirac structures over a point

namespace detail {

inline GradedPoly vector_to_section(const DiracVector& v, const CotangentChart& chart) {
    GradedPoly e = chart.zero();
    for (int j = 0; j < chart.rank(); ++j)
        e += v.a[static_cast<std::size_t>(j)].imported_into(chart.table()) * chart.gen(chart.a(j));
    std::vector<GradedPoly> w;
    for (const auto& f : v.w) w.push_back(f.imported_into(chart.table()));
    return e + coeffs_to_form(w, chart.table(), chart.base_dim(), chart.rank(), chart.k() - 1);
}

inline Vec section_to_row(const GradedPoly& e, const CotangentChart& chart) {
    const SectionSplit sp = decompose_section(e, chart);
    Vec row;
    for (const auto& f : sp.a_part) row.push_back(eval_at(f, {}));
    auto wc = form_to_coeffs(sp.form, chart.base_dim(), chart.rank(), chart.k() - 1);
    for (const auto& f : wc) row.push_back(eval_at(f, {}));
    return row;
}

} // namespace detail

/// Anchor tangency plus closure of the spanning sections under the twisted
/// bracket; point regime only.
inline CheckReport check_higher_dirac(const SubbundleSpec& s, const LieAlgebroidData& alg,
                                      const TwistH* h) {
    if (s.regime != SubbundleSpec::Regime::point)
        throw std::invalid_argument("bracket closure over a sampled base is not supported");
    if (alg.base_dim() != 0 || alg.rank() != s.n)
        throw std::invalid_argument("ambient algebroid must match the point-regime spec");

    CheckReport rep("higher-dirac");
    const auto lag = check_lagrangian(s);
    rep.add("lagrangian", lag.isotropy_pass(),
            lag.status == LagrangianStatus::fail ? "isotropy conditions fail" : "");
    rep.add("anchor-tangency", true, "body is a point");
    if (lag.status == LagrangianStatus::fail) {
        rep.add("bracket-closure", false, "skipped: not a lagrangian");
        return rep;
    }

    CotangentChart chart(s.k, 0, s.n);
    const auto e = detail::evaluate_span(s, Vec{});
    const Mat basis = linalg::row_basis(e.rows);

    bool ok = true;
    std::string detail_str;
    for (std::size_t i = 0; i < s.span.size() && ok; ++i)
        for (std::size_t j = 0; j < s.span.size(); ++j) {
            GradedPoly br = cartan_bracket(detail::vector_to_section(s.span[i], chart),
                                           detail::vector_to_section(s.span[j], chart), alg, h, chart);
            if (br.is_zero()) continue;
            if (!linalg::in_span(basis, detail::section_to_row(br, chart))) {
                ok = false;
                detail_str = "bracket of spanning sections " + std::to_string(i) + "," + std::to_string(j) +
                             " leaves the subbundle";
                break;
            }
        }
    rep.add("bracket-closure", ok, detail_str);
    return rep;
}

/// Membership of a polynomial in the linear span of the given polynomials
/// (coefficientwise exact linear algebra).
inline bool poly_in_span(const GradedPoly& p, const std::vector<GradedPoly>& gens) {
    std::map<Monomial, std::size_t> cols;
    auto note = [&](const GradedPoly& f) {
        for (const auto& [m, c] : f.terms())
            if (!cols.count(m)) cols.emplace(m, cols.size());
    };
    note(p);
    for (const auto& g : gens) note(g);
    auto to_vec = [&](const GradedPoly& f) {
        Vec v(cols.size(), Rational(0));
        for (const auto& [m, c] : f.terms()) v[cols.at(m)] = c;
        return v;
    };
    Mat rows;
    for (const auto& g : gens) rows.push_back(to_vec(g));
    return linalg::in_span(linalg::row_basis(rows), to_vec(p));
}

/// The independent route to Q-invariance: the submanifold ideal of a
/// lagrangian over a point is generated by the annihilator of the projection
/// (degree 1) and the spanning sections (degree k-1); the hamiltonian vector
/// field must preserve it degreewise.
inline CheckReport check_qlag_ideal_preservation(const SubbundleSpec& s, const LieAlgebroidData& alg,
                                                 const TwistH* h) {
    if (s.regime != SubbundleSpec::Regime::point)
        throw std::invalid_argument("ideal preservation over a sampled base is not supported");
    CheckReport rep("qlag-ideal-preservation");
    const auto lag = check_lagrangian(s);
    rep.add("lagrangian", lag.isotropy_pass(), "");
    if (!lag.isotropy_pass()) {
        rep.add("ideal-preserved", false, "skipped: not a lagrangian");
        return rep;
    }

    CotangentChart chart(s.k, 0, s.n);
    GradedPoly theta = build_theta(alg, h, nullptr, chart);

    const auto e = detail::evaluate_span(s, Vec{});
    const Mat p1 = linalg::row_basis(e.a_part);
    const Mat dball = linalg::annihilator(p1, static_cast<std::size_t>(s.n));

    std::vector<GradedPoly> deg1_gens, degk1_gens;
    for (const auto& delta : dball) {
        GradedPoly d = chart.zero();
        for (int j = 0; j < s.n; ++j)
            d += GradedPoly::constant(chart.table(), delta[static_cast<std::size_t>(j)]) *
                 chart.gen(chart.alpha(j));
        deg1_gens.push_back(std::move(d));
    }
    for (const auto& v : s.span) degk1_gens.push_back(detail::vector_to_section(v, chart));

    // degree-2 component of the ideal: delta * al
    std::vector<GradedPoly> deg2_span;
    for (const auto& d : deg1_gens)
        for (int l = 0; l < s.n; ++l) deg2_span.push_back(d * chart.gen(chart.alpha(l)));
    // degree-k component: delta * (any degree k-1 monomial) + ell * al
    std::vector<GradedPoly> degk_span;
    for (const auto& d : deg1_gens) {
        for (const auto& sub : ext::subsets(s.n, s.k - 2)) {
            GradedPoly word = GradedPoly::constant(chart.table(), Rational(1));
            for (int j : sub) word = word * chart.gen(chart.alpha(j));
            degk_span.push_back(d * word);
        }
        for (int j = 0; j < s.n; ++j) degk_span.push_back(d * chart.gen(chart.a(j)));
    }
    for (const auto& l : degk1_gens)
        for (int r = 0; r < s.n; ++r) degk_span.push_back(l * chart.gen(chart.alpha(r)));

    bool ok = true;
    std::string detail_str;
    for (std::size_t i = 0; i < deg1_gens.size() && ok; ++i) {
        GradedPoly x = poisson(theta, deg1_gens[i], chart);
        if (!poly_in_span(x, deg2_span)) {
            ok = false;
            detail_str = "image of a degree-1 generator escapes the ideal";
        }
    }
    for (std::size_t i = 0; i < degk1_gens.size() && ok; ++i) {
        GradedPoly x = poisson(theta, degk1_gens[i], chart);
        if (!poly_in_span(x, degk_span)) {
            ok = false;
            detail_str = "image of a degree-(k-1) generator escapes the ideal";
        }
    }
    rep.add("ideal-preserved", ok, detail_str);
    return rep;
}

} // namespace gcb
