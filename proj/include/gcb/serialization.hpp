#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gcb/algebroid.hpp"
#include "gcb/dirac.hpp"
#include "gcb/report.hpp"
#include "gcb/ruth.hpp"

namespace gcb {

using Json = nlohmann::json;

/// Malformed input documents; mapped to the input-error exit code.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace ser {

inline const Json& require(const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError("missing field '" + key + "'");
    return j.at(key);
}

inline int require_int(const Json& j, const std::string& key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer()) throw SchemaError("field '" + key + "' must be an integer");
    return v.get<int>();
}

inline Rational parse_coeff(const Json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("coefficients must be integers or 'p/q' strings");
}

/// Polynomial in the base variables: "p/q" shorthand or a term list
/// [{"c": "p/q", "x": [e1,...]}, ...].
inline GradedPoly parse_base_poly(const Json& j, const TablePtr& base) {
    if (j.is_string() || j.is_number_integer())
        return GradedPoly::constant(base, parse_coeff(j));
    if (!j.is_array()) throw SchemaError("polynomial must be a coefficient string or a term array");
    GradedPoly p(base);
    for (const auto& term : j) {
        if (!term.is_object()) throw SchemaError("polynomial term must be an object");
        Rational c = parse_coeff(require(term, "c"));
        Monomial m(base->size());
        if (term.contains("x")) {
            const Json& xs = term.at("x");
            if (!xs.is_array() || xs.size() > base->size())
                throw SchemaError("'x' must list at most m exponents");
            for (std::size_t i = 0; i < xs.size(); ++i)
                m.set_exponent(i, xs[i].get<std::uint32_t>());
        }
        p += GradedPoly::term(base, m, c);
    }
    return p;
}

/// Form with fibre words: term list [{"c": ..., "x": [...], "al": [1-based
/// ascending indices]}, ...] over the form table of (m, n).
inline GradedPoly parse_form(const Json& j, int m, int n) {
    const TablePtr ft = form_table(m, n);
    if (!j.is_array()) throw SchemaError("form must be a term array");
    GradedPoly p(ft);
    for (const auto& term : j) {
        Rational c = parse_coeff(require(term, "c"));
        Monomial mono(ft->size());
        if (term.contains("x")) {
            const Json& xs = term.at("x");
            if (!xs.is_array() || xs.size() > static_cast<std::size_t>(m))
                throw SchemaError("'x' must list at most m exponents");
            for (std::size_t i = 0; i < xs.size(); ++i) mono.set_exponent(i, xs[i].get<std::uint32_t>());
        }
        if (term.contains("al")) {
            int prev = 0;
            for (const auto& a : term.at("al")) {
                const int idx = a.get<int>();
                if (idx < 1 || idx > n) throw SchemaError("fibre index out of range");
                if (idx <= prev) throw SchemaError("fibre indices must be strictly increasing");
                mono.set_exponent(static_cast<std::size_t>(m + idx - 1), 1);
                prev = idx;
            }
        }
        p += GradedPoly::term(ft, mono, c);
    }
    return p;
}

inline std::vector<GradedPoly> parse_poly_array(const Json& j, const TablePtr& base, std::size_t expect,
                                                const std::string& what) {
    if (!j.is_array() || j.size() != expect)
        throw SchemaError(what + " must be an array of length " + std::to_string(expect));
    std::vector<GradedPoly> out;
    out.reserve(expect);
    for (const auto& e : j) out.push_back(parse_base_poly(e, base));
    return out;
}

/// { "m": int, "n": int, "anchor": n rows of m polynomials,
///   "structure": [{"a":i,"b":j,"c":l,"value":poly}, ...] } with 1-based
/// section indices and a < b.
inline LieAlgebroidData parse_algebroid(const Json& j) {
    const int m = require_int(j, "m"), n = require_int(j, "n");
    if (m < 0 || n < 0) throw SchemaError("dimensions must be non-negative");
    LieAlgebroidData alg(m, n);
    if (j.contains("anchor")) {
        const Json& rows = j.at("anchor");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
            throw SchemaError("'anchor' must have n rows");
        for (int a = 0; a < n; ++a) {
            auto row = parse_poly_array(rows[static_cast<std::size_t>(a)], alg.base(),
                                        static_cast<std::size_t>(m), "anchor row");
            for (int i = 0; i < m; ++i) alg.set_anchor(a, i, row[static_cast<std::size_t>(i)]);
        }
    }
    if (j.contains("structure")) {
        for (const auto& e : j.at("structure")) {
            const int a = require_int(e, "a"), b = require_int(e, "b"), c = require_int(e, "c");
            if (a < 1 || a > n || b < 1 || b > n || c < 1 || c > n)
                throw SchemaError("structure indices out of range");
            if (a >= b) throw SchemaError("structure entries must have a < b");
            alg.set_structure(a - 1, b - 1, c - 1, parse_base_poly(require(e, "value"), alg.base()));
        }
    }
    return alg;
}

inline PairingData parse_pairing(const Json& j, const LieAlgebroidData& alg) {
    const std::size_t n = static_cast<std::size_t>(alg.rank());
    if (!j.is_array() || j.size() != n) throw SchemaError("pairing must be an n x n matrix");
    std::vector<std::vector<GradedPoly>> rows;
    for (const auto& r : j) rows.push_back(parse_poly_array(r, alg.base(), n, "pairing row"));
    try {
        return PairingData(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

inline ConnectionData parse_connection(const Json& j, const LieAlgebroidData& alg) {
    ConnectionData c = ConnectionData::zero(alg);
    const std::size_t m = static_cast<std::size_t>(alg.base_dim());
    const std::size_t n = static_cast<std::size_t>(alg.rank());
    if (!j.is_array() || j.size() != m) throw SchemaError("connection must have m planes");
    for (std::size_t i = 0; i < m; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw SchemaError("connection plane must have n rows");
        for (std::size_t a = 0; a < n; ++a)
            c.gamma[i][a] = parse_poly_array(j[i][a], alg.base(), n, "connection row");
    }
    return c;
}

inline RepUTHData parse_rep(const Json& j, const LieAlgebroidData& alg) {
    const int r0 = require_int(j, "r0"), r1 = require_int(j, "r1");
    RepUTHData rep = RepUTHData::zero(alg, r0, r1);
    const std::size_t n = static_cast<std::size_t>(alg.rank());
    if (j.contains("del")) {
        const Json& rows = j.at("del");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(r1))
            throw SchemaError("'del' must have r1 rows");
        for (std::size_t i = 0; i < static_cast<std::size_t>(r1); ++i)
            rep.del[i] = parse_poly_array(rows[i], alg.base(), static_cast<std::size_t>(r0), "del row");
    }
    auto parse_conn = [&](const char* key, std::size_t rank, ruth_detail::ConnTable& table) {
        if (!j.contains(key)) return;
        const Json& planes = j.at(key);
        if (!planes.is_array() || planes.size() != n) throw SchemaError(std::string(key) + " must have n planes");
        for (std::size_t a = 0; a < n; ++a) {
            if (!planes[a].is_array() || planes[a].size() != rank)
                throw SchemaError(std::string(key) + " plane has the wrong rank");
            for (std::size_t i = 0; i < rank; ++i)
                table[a][i] = parse_poly_array(planes[a][i], alg.base(), rank, key);
        }
    };
    parse_conn("conn0", static_cast<std::size_t>(r0), rep.conn0);
    parse_conn("conn1", static_cast<std::size_t>(r1), rep.conn1);
    if (j.contains("K")) {
        for (const auto& e : j.at("K")) {
            const int a = require_int(e, "a"), b = require_int(e, "b");
            const int i = require_int(e, "e1"), l = require_int(e, "e0");
            if (a < 1 || a > alg.rank() || b < 1 || b > alg.rank() || i < 1 || i > r1 || l < 1 || l > r0)
                throw SchemaError("K indices out of range");
            GradedPoly v = parse_base_poly(require(e, "value"), alg.base());
            rep.kform[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]
                     [static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)] = v;
            rep.kform[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)]
                     [static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)] = -v;
        }
    }
    return rep;
}

inline Mat parse_points(const Json& j, int m) {
    Mat pts;
    if (!j.is_array()) throw SchemaError("'points' must be an array");
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(m))
            throw SchemaError("evaluation point has the wrong dimension");
        Vec p;
        for (const auto& x : row) p.push_back(parse_coeff(x));
        pts.push_back(std::move(p));
    }
    return pts;
}

inline SubbundleSpec parse_subbundle(const Json& j) {
    const int k = require_int(j, "k"), n = require_int(j, "n");
    const int m = j.contains("m") ? require_int(j, "m") : 0;
    SubbundleSpec s = SubbundleSpec::make(
        m == 0 ? SubbundleSpec::Regime::point : SubbundleSpec::Regime::sampled, k, m, n);
    if (j.contains("points")) s.points = parse_points(j.at("points"), m);
    const std::size_t wdim = s.wdim();
    for (const auto& v : require(j, "L")) {
        DiracVector vec = s.zero_vector();
        vec.a = parse_poly_array(require(v, "a"), s.base, static_cast<std::size_t>(n), "'a' block");
        vec.w = parse_poly_array(require(v, "w"), s.base, wdim, "'w' block");
        s.span.push_back(std::move(vec));
    }
    if (j.contains("D")) {
        std::vector<std::vector<GradedPoly>> dspan;
        for (const auto& v : j.at("D"))
            dspan.push_back(parse_poly_array(v, s.base, static_cast<std::size_t>(n), "D vector"));
        s.d_span = std::move(dspan);
    }
    if (j.contains("K")) {
        std::vector<KVector> kspan;
        const std::size_t endo_dim = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        for (const auto& v : j.at("K")) {
            KVector kv;
            kv.endo = parse_poly_array(require(v, "endo"), s.base, endo_dim, "endo block");
            kv.tm = v.contains("tm") ? parse_poly_array(v.at("tm"), s.base, static_cast<std::size_t>(m), "tm block")
                                     : std::vector<GradedPoly>(static_cast<std::size_t>(m), GradedPoly::zero(s.base));
            kv.top = parse_poly_array(require(v, "top"), s.base, ext::dim(n, k), "top block");
            kspan.push_back(std::move(kv));
        }
        s.k_span = std::move(kspan);
    }
    return s;
}

inline NambuTensor parse_nambu(const Json& j, int k, int m, int n) {
    NambuTensor t = NambuTensor::make(k, m, n);
    t.pi = parse_poly_array(require(j, "Pi"), t.base, ext::dim(n, k), "'Pi'");
    return t;
}

// ---------------------------------------------------------------------------

inline Json base_poly_to_json(const GradedPoly& p) {
    if (p.is_zero()) return Json("0");
    if (p.term_count() == 1 && p.terms().begin()->first.is_constant())
        return Json(to_string(p.terms().begin()->second));
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["c"] = to_string(c);
        Json xs = Json::array();
        for (std::size_t i = 0; i < m.size(); ++i) xs.push_back(m.exponent(i));
        while (!xs.empty() && xs.back() == 0) xs.erase(xs.size() - 1);
        if (!xs.empty()) term["x"] = std::move(xs);
        arr.push_back(std::move(term));
    }
    return arr;
}

/// Form over the (m, n) form table as a term list with "al" words.
inline Json form_to_json(const GradedPoly& p, int m, int n) {
    Json arr = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json term;
        term["c"] = to_string(c);
        Json xs = Json::array();
        for (int i = 0; i < m; ++i) xs.push_back(mono.exponent(static_cast<std::size_t>(i)));
        while (!xs.empty() && xs.back() == 0) xs.erase(xs.size() - 1);
        if (!xs.empty()) term["x"] = std::move(xs);
        Json als = Json::array();
        for (int j = 0; j < n; ++j)
            if (mono.exponent(static_cast<std::size_t>(m + j))) als.push_back(j + 1);
        if (!als.empty()) term["al"] = std::move(als);
        arr.push_back(std::move(term));
    }
    return arr;
}

inline Json algebroid_to_json(const LieAlgebroidData& alg) {
    Json j;
    j["m"] = alg.base_dim();
    j["n"] = alg.rank();
    bool any_anchor = false;
    Json anchor = Json::array();
    for (int a = 0; a < alg.rank(); ++a) {
        Json row = Json::array();
        for (int i = 0; i < alg.base_dim(); ++i) {
            row.push_back(base_poly_to_json(alg.anchor(a, i)));
            if (!alg.anchor(a, i).is_zero()) any_anchor = true;
        }
        anchor.push_back(std::move(row));
    }
    if (any_anchor) j["anchor"] = std::move(anchor);
    Json structure = Json::array();
    for (int a = 0; a < alg.rank(); ++a)
        for (int b = a + 1; b < alg.rank(); ++b)
            for (int c = 0; c < alg.rank(); ++c) {
                if (alg.structure(a, b, c).is_zero()) continue;
                Json e;
                e["a"] = a + 1;
                e["b"] = b + 1;
                e["c"] = c + 1;
                e["value"] = base_poly_to_json(alg.structure(a, b, c));
                structure.push_back(std::move(e));
            }
    if (!structure.empty()) j["structure"] = std::move(structure);
    return j;
}

inline Json chart_to_json(const CotangentChart& chart) {
    Json j;
    j["k"] = chart.k();
    j["m"] = chart.base_dim();
    j["n"] = chart.rank();
    Json gens = Json::array();
    for (std::size_t i = 0; i < chart.table()->size(); ++i)
        gens.push_back(Json{{"name", chart.table()->name(i)}, {"degree", chart.table()->degree(i)}});
    j["generators"] = std::move(gens);
    return j;
}

inline Json report_to_json(const CheckReport& r) {
    Json out;
    out["check"] = r.check;
    out["pass"] = r.passed();
    Json clauses = Json::array();
    for (const auto& c : r.clauses) {
        Json cl;
        cl["name"] = c.name;
        cl["pass"] = c.pass;
        if (!c.detail.empty()) cl["detail"] = c.detail;
        clauses.push_back(std::move(cl));
    }
    out["clauses"] = std::move(clauses);
    return out;
}

} // namespace ser
} // namespace gcb
