#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcb/brackets.hpp"
#include "gcb/dirac.hpp"
#include "gcb/master.hpp"
#include "gcb/random.hpp"
#include "gcb/ruth.hpp"
#include "gcb/serialization.hpp"

namespace gcb {

/// Output of one verification document.
struct DocumentResult {
    std::string kind;
    bool pass = false;
    std::vector<CheckReport> reports;
    Json chart; // descriptor of the working chart, when one exists

    Json to_json() const {
        Json out;
        out["kind"] = kind;
        out["pass"] = pass;
        if (!chart.is_null()) out["chart"] = chart;
        Json reps = Json::array();
        for (const auto& r : reports) reps.push_back(ser::report_to_json(r));
        out["reports"] = std::move(reps);
        return out;
    }

    std::string str() const {
        std::string s = kind + ": " + (pass ? "pass" : "FAIL") + "\n";
        for (const auto& r : reports) s += r.str();
        return s;
    }
};

namespace doc {

inline GradedPoly random_form(const TablePtr& ft, int degree, int terms, Rng& rng) {
    // pure fibre-word terms with base coefficients
    GradedPoly out(ft);
    for (int t = 0; t < terms; ++t) {
        auto mono = random_monomial(ft, degree, rng, 1);
        if (!mono) break;
        out += GradedPoly::term(ft, *mono, rng.nonzero_rational());
    }
    return out;
}

inline GradedPoly random_section(const LieAlgebroidData& alg, const CotangentChart& chart, Rng& rng) {
    GradedPoly e = chart.zero();
    for (int j = 0; j < alg.rank(); ++j)
        e += random_homogeneous(chart.table(), 0, 1, rng, 2) * chart.gen(chart.a(j));
    GradedPoly w = random_form(form_table(alg.base_dim(), alg.rank()), chart.k() - 1, 2, rng);
    return e + w.imported_into(chart.table());
}

inline void apply_expectation(DocumentResult& res, const Json& j, bool verdict) {
    bool expected = true;
    if (j.contains("expect")) {
        const std::string e = j.at("expect").get<std::string>();
        if (e == "pass")
            expected = true;
        else if (e == "fail")
            expected = false;
        else
            throw SchemaError("'expect' must be \"pass\" or \"fail\"");
    }
    CheckReport r("expectation");
    r.add(expected ? "verdict-is-pass" : "verdict-is-fail", verdict == expected,
          verdict == expected ? "" : "verdict does not match the document's expectation");
    res.reports.push_back(std::move(r));
    res.pass = (verdict == expected);
    for (const auto& rep : res.reports)
        if (rep.check == "two-path-agreement" && !rep.passed()) res.pass = false;
}

inline std::optional<TwistH> parse_twist(const Json& payload, const LieAlgebroidData& alg, int k) {
    if (!payload.contains("H")) return std::nullopt;
    GradedPoly h = ser::parse_form(payload.at("H"), alg.base_dim(), alg.rank());
    if (h.is_zero()) return std::nullopt;
    try {
        return TwistH(h, alg, k);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

// ---------------------------------------------------------------------------

inline DocumentResult run_master_check(const Json& payload, const Json& root) {
    DocumentResult res;
    res.kind = "master-check";
    const int k = ser::require_int(payload, "k");
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    auto h = parse_twist(payload, alg, k);
    std::optional<PairingData> pi;
    if (payload.contains("pairing")) pi = ser::parse_pairing(payload.at("pairing"), alg);

    CotangentChart chart(k, alg.base_dim(), alg.rank());
    res.chart = ser::chart_to_json(chart);
    GradedPoly theta = build_theta(alg, h ? &*h : nullptr, pi ? &*pi : nullptr, chart);
    MasterReport master = check_master(theta, chart);
    res.reports.push_back(master.report());

    // independent verdict from the structure tables
    const bool direct = (k == 3 || pi)
                            ? check_q3_conditions(alg, pi ? *pi : PairingData::zero(alg), h ? &*h : nullptr)
                                  .passed()
                            : check_structure_direct(alg, h ? &*h : nullptr).passed();
    CheckReport agree("two-path-agreement");
    agree.add("symplectic-vs-tables", master.pass == direct,
              master.pass == direct ? "" : "the two routes disagree");
    res.reports.push_back(std::move(agree));

    apply_expectation(res, root, master.pass);
    return res;
}

inline DocumentResult run_q3_check(const Json& payload, const Json& root) {
    DocumentResult res;
    res.kind = "q3-check";
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    auto h = parse_twist(payload, alg, 3);
    PairingData pi = payload.contains("pairing") ? ser::parse_pairing(payload.at("pairing"), alg)
                                                 : PairingData::zero(alg);
    CheckReport rep = check_q3_conditions(alg, pi, h ? &*h : nullptr);
    res.reports.push_back(rep);

    CotangentChart chart(3, alg.base_dim(), alg.rank());
    MasterReport master = check_master(build_theta(alg, h ? &*h : nullptr, &pi, chart), chart);
    CheckReport agree("two-path-agreement");
    agree.add("conditions-vs-master", rep.passed() == master.pass,
              rep.passed() == master.pass ? "" : "classification conditions disagree with the master equation");
    res.reports.push_back(std::move(agree));

    apply_expectation(res, root, rep.passed());
    return res;
}

inline DocumentResult run_bracket(const Json& payload, const Json& root, std::uint64_t seed_override,
                                  bool has_seed_override) {
    DocumentResult res;
    res.kind = "bracket";
    const int k = ser::require_int(payload, "k");
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    auto h = parse_twist(payload, alg, k);
    const int count = payload.contains("count") ? ser::require_int(payload, "count") : 25;
    std::uint64_t seed = payload.contains("seed") ? payload.at("seed").get<std::uint64_t>() : 1;
    if (has_seed_override) seed = seed_override;

    CotangentChart chart(k, alg.base_dim(), alg.rank());
    res.chart = ser::chart_to_json(chart);
    GradedPoly theta = build_theta(alg, h ? &*h : nullptr, nullptr, chart);
    Rng rng(seed);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < count && ok; ++i) {
        GradedPoly e1 = random_section(alg, chart, rng);
        GradedPoly e2 = random_section(alg, chart, rng);
        if (derived_bracket(e1, e2, theta, chart) != cartan_bracket(e1, e2, alg, h ? &*h : nullptr, chart)) {
            ok = false;
            detail = "mismatch at sample " + std::to_string(i);
        }
    }
    CheckReport rep("derived-vs-cartan");
    rep.add("pairs-agree (" + std::to_string(count) + " samples, seed " + std::to_string(seed) + ")", ok,
            detail);
    res.reports.push_back(std::move(rep));
    apply_expectation(res, root, ok);
    return res;
}

inline DocumentResult run_twist(const Json& payload, const Json& root, std::uint64_t seed_override,
                                bool has_seed_override) {
    DocumentResult res;
    res.kind = "twist";
    const int k = ser::require_int(payload, "k");
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    auto h = parse_twist(payload, alg, k);
    GradedPoly b_form = ser::parse_form(ser::require(payload, "B"), alg.base_dim(), alg.rank());
    const int count = payload.contains("count") ? ser::require_int(payload, "count") : 25;
    std::uint64_t seed = payload.contains("seed") ? payload.at("seed").get<std::uint64_t>() : 1;
    if (has_seed_override) seed = seed_override;

    CotangentChart chart(k, alg.base_dim(), alg.rank());
    GradedPoly theta = build_theta(alg, h ? &*h : nullptr, nullptr, chart);
    TwistCochain b(b_form.imported_into(chart.table()), chart);

    CheckReport rep("twist-gauge");
    const bool gauge = twist(b, theta, chart) == theta + d_A(alg, b_form).imported_into(chart.table());
    rep.add("theta-shifts-by-dB", gauge, "");
    Rng rng(seed);
    bool symp = true;
    for (int i = 0; i < count && symp; ++i) {
        GradedPoly f = random_homogeneous(chart.table(), static_cast<int>(rng.range(0, k + 2)), 2, rng, 1);
        GradedPoly g = random_homogeneous(chart.table(), static_cast<int>(rng.range(0, k + 2)), 2, rng, 1);
        symp = poisson(twist(b, f, chart), twist(b, g, chart), chart) == twist(b, poisson(f, g, chart), chart);
    }
    rep.add("bracket-preserved (" + std::to_string(count) + " samples, seed " + std::to_string(seed) + ")",
            symp, "");
    const bool ok = rep.passed();
    res.reports.push_back(std::move(rep));
    apply_expectation(res, root, ok);
    return res;
}

/// Random pair presentation with a reduced (canonical) basis.
inline PairSpec random_pair_spec(int n, int k, int r, Rng& rng) {
    PairSpec p;
    p.n = n;
    p.k = k;
    while (true) {
        Mat e;
        for (int i = 0; i < r; ++i) {
            Vec row;
            for (int j = 0; j < n; ++j) row.push_back(rng.rational(3, 1));
            e.push_back(std::move(row));
        }
        e = linalg::row_basis(e);
        if (static_cast<int>(e.size()) == r) {
            p.e_basis = std::move(e);
            break;
        }
    }
    p.omega.assign(ext::dim(r, k), Rational(0));
    for (auto& c : p.omega) c = rng.rational(4, 2);
    return p;
}

inline SubbundleSpec random_span_spec(int n, int k, int count, Rng& rng) {
    auto s = SubbundleSpec::make(SubbundleSpec::Regime::point, k, 0, n);
    for (int i = 0; i < count; ++i) {
        DiracVector v = s.zero_vector();
        for (auto& f : v.a) f = GradedPoly::constant(s.base, rng.rational(3, 1));
        for (auto& f : v.w) f = GradedPoly::constant(s.base, rng.rational(3, 1));
        s.span.push_back(std::move(v));
    }
    return s;
}

inline DocumentResult run_dirac_random(const std::string& mode, const Json& payload, const Json& root,
                                       std::uint64_t seed_override, bool has_seed_override) {
    DocumentResult res;
    res.kind = "dirac-check";
    const Json& spec = payload.at("random");
    const int count = ser::require_int(spec, "count");
    std::uint64_t seed = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : 1;
    if (has_seed_override) seed = seed_override;
    Rng rng(seed);
    bool ok = true;
    std::string detail;

    if (mode == "pair-roundtrip") {
        const int n = ser::require_int(spec, "n"), k = ser::require_int(spec, "k");
        for (int i = 0; i < count && ok; ++i) {
            const int r = static_cast<int>(rng.range(0, n));
            PairSpec p = random_pair_spec(n, k, r, rng);
            SubbundleSpec s = from_pair(p, n);
            PairSpec p2 = to_pair(s);
            SubbundleSpec s2 = from_pair(p2, n);
            const auto e1 = detail::evaluate_span(s, Vec{});
            const auto e2 = detail::evaluate_span(s2, Vec{});
            if (!(p2.e_basis == p.e_basis && p2.omega == p.omega &&
                  linalg::span_equal(e1.rows, e2.rows))) {
                ok = false;
                detail = "round trip broke at sample " + std::to_string(i);
            }
        }
        CheckReport rep("pair-roundtrip");
        rep.add("round-trips (" + std::to_string(count) + " samples, seed " + std::to_string(seed) + ")",
                ok, detail);
        res.reports.push_back(std::move(rep));
    } else if (mode == "hagiwara") {
        const int n = ser::require_int(spec, "n"), k = ser::require_int(spec, "k");
        int passing = 0, failing = 0;
        for (int i = 0; i < count && ok; ++i) {
            SubbundleSpec s = (i % 2 == 0)
                                  ? from_pair(random_pair_spec(n, k, static_cast<int>(rng.range(0, n)), rng), n)
                                  : random_span_spec(n, k, static_cast<int>(rng.range(1, 4)), rng);
            auto lag = check_lagrangian(s);
            auto hag = check_nambu_dirac_hagiwara(s);
            if (lag.isotropy_pass() != hag.report.passed()) {
                ok = false;
                detail = "equivalence broke at sample " + std::to_string(i);
            }
            (lag.isotropy_pass() ? passing : failing) += 1;
        }
        CheckReport rep("hagiwara-equivalence");
        rep.add("verdicts-agree (" + std::to_string(count) + " samples, " + std::to_string(passing) +
                    " passing / " + std::to_string(failing) + " failing, seed " + std::to_string(seed) + ")",
                ok, detail);
        rep.add("both-directions-exercised", passing > 0 && failing > 0, "");
        res.reports.push_back(std::move(rep));
    } else if (mode == "higher-dirac") {
        const int k = ser::require_int(payload, "k");
        LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
        if (alg.base_dim() != 0) throw SchemaError("random higher-dirac sampling needs a point base");
        auto h = parse_twist(payload, alg, k);
        int closed_count = 0, open_count = 0;
        for (int i = 0; i < count && ok; ++i) {
            const int r = static_cast<int>(rng.range(0, alg.rank()));
            SubbundleSpec s = from_pair(random_pair_spec(alg.rank(), k, r, rng), alg.rank());
            const bool closure = check_higher_dirac(s, alg, h ? &*h : nullptr).passed();
            const bool ideal = check_qlag_ideal_preservation(s, alg, h ? &*h : nullptr).passed();
            if (closure != ideal) {
                ok = false;
                detail = "routes disagree at sample " + std::to_string(i);
            }
            (closure ? closed_count : open_count) += 1;
        }
        CheckReport rep("higher-dirac-two-path");
        rep.add("closure-vs-ideal (" + std::to_string(count) + " samples, " +
                    std::to_string(closed_count) + " closed / " + std::to_string(open_count) +
                    " open, seed " + std::to_string(seed) + ")",
                ok, detail);
        res.reports.push_back(std::move(rep));
    } else {
        throw SchemaError("random sampling is not supported for dirac check '" + mode + "'");
    }
    apply_expectation(res, root, ok);
    return res;
}

inline DocumentResult run_dirac_check(const Json& payload, const Json& root,
                                      std::uint64_t seed_override, bool has_seed_override) {
    const std::string mode = ser::require(payload, "check").get<std::string>();
    if (payload.contains("random"))
        return run_dirac_random(mode, payload, root, seed_override, has_seed_override);
    DocumentResult res;
    res.kind = "dirac-check";
    SubbundleSpec s = ser::parse_subbundle(payload);
    bool verdict = false;

    if (mode == "lagrangian") {
        auto rep = check_lagrangian(s);
        verdict = rep.status == LagrangianStatus::lagrangian;
        if (payload.contains("allow_weak") && payload.at("allow_weak").get<bool>())
            verdict = rep.isotropy_pass();
        CheckReport status("status");
        status.add(rep.status == LagrangianStatus::lagrangian        ? "lagrangian"
                   : rep.status == LagrangianStatus::weak_lagrangian ? "weak-lagrangian"
                                                                     : "not-lagrangian",
                   true, "");
        res.reports.push_back(rep.report);
        res.reports.push_back(std::move(status));
    } else if (mode == "pair-roundtrip") {
        PairSpec p = to_pair(s);
        SubbundleSpec back = from_pair(p, s.n);
        const auto e1 = detail::evaluate_span(s, Vec{});
        const auto e2 = detail::evaluate_span(back, Vec{});
        PairSpec p2 = to_pair(back);
        CheckReport rep("pair-roundtrip");
        rep.add("span-recovered", linalg::span_equal(e1.rows, e2.rows), "");
        rep.add("pair-recovered", p.e_basis == p2.e_basis && p.omega == p2.omega, "");
        verdict = rep.passed();
        res.reports.push_back(std::move(rep));
    } else if (mode == "hagiwara") {
        auto lag = check_lagrangian(s);
        auto hag = check_nambu_dirac_hagiwara(s);
        res.reports.push_back(lag.report);
        res.reports.push_back(hag.report);
        CheckReport agree("two-path-agreement");
        agree.add("isotropy-vs-hagiwara", lag.isotropy_pass() == hag.report.passed(), "");
        agree.add("regularity-vs-L0",
                  (lag.status == LagrangianStatus::lagrangian) ==
                      (hag.report.passed() && hag.regular && lag.isotropy_pass()),
                  "");
        res.reports.push_back(std::move(agree));
        verdict = hag.report.passed();
    } else if (mode == "higher-dirac") {
        LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
        auto h = parse_twist(payload, alg, s.k);
        auto rep = check_higher_dirac(s, alg, h ? &*h : nullptr);
        auto ideal = check_qlag_ideal_preservation(s, alg, h ? &*h : nullptr);
        res.reports.push_back(rep);
        res.reports.push_back(ideal);
        CheckReport agree("two-path-agreement");
        agree.add("closure-vs-ideal", rep.passed() == ideal.passed(), "");
        res.reports.push_back(std::move(agree));
        verdict = rep.passed();
    } else {
        throw SchemaError("unknown dirac check '" + mode + "'");
    }
    apply_expectation(res, root, verdict);
    return res;
}

/// Random decomposable tensor: a rational blade with an optional scalar
/// polynomial factor (possibly vanishing somewhere).
inline NambuTensor random_blade(int k, int m, int n, Rng& rng, bool with_factor) {
    NambuTensor t = NambuTensor::make(k, m, n);
    ext::Coeffs<Rational> acc{Rational(1)};
    int q = 0;
    for (int v = 0; v < k; ++v) {
        ext::Coeffs<Rational> vec(static_cast<std::size_t>(n), Rational(0));
        for (auto& x : vec) x = rng.rational(2, 1);
        acc = ext::wedge(n, q, acc, 1, vec, Rational(0));
        ++q;
    }
    GradedPoly factor = GradedPoly::constant(t.base, Rational(1));
    if (with_factor && m > 0) factor = random_homogeneous(t.base, 0, 2, rng, 1);
    for (std::size_t i = 0; i < acc.size(); ++i)
        t.pi[i] = GradedPoly::constant(t.base, acc[i]) * factor;
    return t;
}

inline DocumentResult run_nambu_random(const Json& payload, const Json& root,
                                       std::uint64_t seed_override, bool has_seed_override) {
    DocumentResult res;
    res.kind = "nambu-check";
    const Json& spec = payload.at("random");
    const int count = ser::require_int(spec, "count");
    std::uint64_t seed = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : 1;
    if (has_seed_override) seed = seed_override;
    const int k = ser::require_int(payload, "k"), n = ser::require_int(payload, "n");
    const int m = payload.contains("m") ? ser::require_int(payload, "m") : 0;
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    auto h = parse_twist(payload, alg, k);

    Rng rng(seed);
    bool ok = true;
    std::string detail;
    int holding = 0, violating = 0;
    for (int i = 0; i < count && ok; ++i) {
        NambuTensor t = random_blade(k, m, n, rng, i % 2 == 1);
        const bool eq_path = check_twisted_nambu(t, alg, h ? &*h : nullptr).passed();
        const bool closure = check_nambu_graph_closure(t, alg, h ? &*h : nullptr).passed();
        if (eq_path != closure) {
            ok = false;
            detail = "paths disagree at sample " + std::to_string(i);
        }
        (eq_path ? holding : violating) += 1;
    }
    CheckReport rep("twisted-nambu-two-path");
    rep.add("identity-vs-graph-closure (" + std::to_string(count) + " samples, " +
                std::to_string(holding) + " holding / " + std::to_string(violating) +
                " violating, seed " + std::to_string(seed) + ")",
            ok, detail);
    res.reports.push_back(std::move(rep));
    apply_expectation(res, root, ok);
    return res;
}

inline DocumentResult run_nambu_check(const Json& payload, const Json& root,
                                      std::uint64_t seed_override, bool has_seed_override) {
    if (payload.contains("random"))
        return run_nambu_random(payload, root, seed_override, has_seed_override);
    DocumentResult res;
    res.kind = "nambu-check";
    const int k = ser::require_int(payload, "k"), n = ser::require_int(payload, "n");
    const int m = payload.contains("m") ? ser::require_int(payload, "m") : 0;
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    auto h = parse_twist(payload, alg, k);
    NambuTensor t = ser::parse_nambu(payload, k, m, n);

    Mat pts = payload.contains("points") ? ser::parse_points(payload.at("points"), m) : Mat{};
    auto dec = is_decomposable(t, pts);
    res.reports.push_back(dec.report);

    CheckReport eq = check_twisted_nambu(t, alg, h ? &*h : nullptr);
    res.reports.push_back(eq);
    bool verdict = eq.passed();
    if (dec.pass) {
        CheckReport closure = check_nambu_graph_closure(t, alg, h ? &*h : nullptr);
        res.reports.push_back(closure);
        CheckReport agree("two-path-agreement");
        agree.add("identity-vs-graph-closure", eq.passed() == closure.passed(), "");
        res.reports.push_back(std::move(agree));
    }
    apply_expectation(res, root, verdict);
    return res;
}

inline DocumentResult run_quadruple_check(const Json& payload, const Json& root) {
    DocumentResult res;
    res.kind = "quadruple-check";
    SubbundleSpec s = ser::parse_subbundle(payload);
    const std::string mode =
        payload.contains("check") ? payload.at("check").get<std::string>() : std::string("coisotropic");
    bool verdict;
    if (mode == "quadruple") {
        auto rep = check_quadruple(s);
        verdict = rep.passed();
        res.reports.push_back(std::move(rep));
    } else if (mode == "coisotropic") {
        auto rep = check_coisotropic(s);
        verdict = rep.passed();
        res.reports.push_back(std::move(rep));
    } else {
        throw SchemaError("unknown quadruple check '" + mode + "'");
    }
    apply_expectation(res, root, verdict);
    return res;
}

inline DocumentResult run_ruth_check(const Json& payload, const Json& root) {
    DocumentResult res;
    res.kind = "ruth-check";
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    ConnectionData conn = payload.contains("connection")
                              ? ser::parse_connection(payload.at("connection"), alg)
                              : ConnectionData::zero(alg);
    const Json& repspec = ser::require(payload, "rep");
    RepUTHData rep = RepUTHData::zero(alg, 0, 0);
    if (repspec.is_string()) {
        const std::string name = repspec.get<std::string>();
        try {
            if (name == "adjoint")
                rep = adjoint_rep(alg, conn);
            else if (name == "coadjoint")
                rep = coadjoint_rep(alg, conn);
            else
                throw SchemaError("unknown representation '" + name + "'");
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    } else {
        rep = ser::parse_rep(repspec, alg);
    }
    CheckReport r = check_ruth(rep, alg);
    const bool verdict = r.passed();
    res.reports.push_back(std::move(r));
    apply_expectation(res, root, verdict);
    return res;
}

inline DocumentResult run_lk_check(const Json& payload, const Json& root) {
    DocumentResult res;
    res.kind = "lk-check";
    const int k = ser::require_int(payload, "k");
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    ConnectionData conn = payload.contains("connection")
                              ? ser::parse_connection(payload.at("connection"), alg)
                              : ConnectionData::zero(alg);
    const std::string construct = ser::require(payload, "construct").get<std::string>();

    LkAlgebroidData d = LkAlgebroidData::zero(std::max(k, 4), alg.base_dim(), alg.rank(), 0, 0);
    std::optional<bool> closed;
    if (construct == "semidirect") {
        const Json& repspec = ser::require(payload, "rep");
        RepUTHData rep = RepUTHData::zero(alg, 0, 0);
        if (repspec.is_string()) {
            const std::string name = repspec.get<std::string>();
            if (name == "adjoint")
                rep = adjoint_rep(alg, conn);
            else if (name == "coadjoint")
                rep = coadjoint_rep(alg, conn);
            else
                throw SchemaError("unknown representation '" + name + "'");
        } else {
            rep = ser::parse_rep(repspec, alg);
        }
        d = semidirect(alg, rep, k);
    } else if (construct == "twisted-coadjoint") {
        auto h = parse_twist(payload, alg, k);
        d = twisted_coadjoint_semidirect(alg, conn, h ? &*h : nullptr, k);
        closed = h ? d_A(alg, h->poly()).is_zero() : true;
    } else {
        throw SchemaError("unknown construction '" + construct + "'");
    }

    CheckReport rep = check_lk_jacobi(d);
    const bool verdict = rep.passed();
    res.reports.push_back(std::move(rep));
    if (closed) {
        CheckReport agree("two-path-agreement");
        agree.add("jacobi-iff-closed-twist", verdict == *closed, "");
        res.reports.push_back(std::move(agree));
    }
    apply_expectation(res, root, verdict);
    return res;
}

inline DocumentResult run_correspondence_check(const Json& payload, const Json& root) {
    DocumentResult res;
    res.kind = "correspondence-check";
    const int k = ser::require_int(payload, "k");
    LieAlgebroidData alg = ser::parse_algebroid(ser::require(payload, "algebroid"));
    if (alg.base_dim() != 0) throw SchemaError("correspondence checks require a point base");
    auto h = parse_twist(payload, alg, k);

    CotangentChart chart(k, 0, alg.rank());
    res.chart = ser::chart_to_json(chart);
    LkAlgebroidData d =
        twisted_coadjoint_semidirect(alg, ConnectionData::zero(alg), h ? &*h : nullptr, k);
    Derivation q = q_from_lk(d, chart);
    Derivation xh = hamiltonian_vf(build_theta(alg, h ? &*h : nullptr, nullptr, chart), chart);

    bool ok = true;
    std::string detail;
    for (std::size_t g = 0; g < chart.table()->size() && ok; ++g)
        if (!(q.value(g) == xh.value(g))) {
            ok = false;
            detail = "fields differ on generator " + chart.table()->name(g);
        }
    CheckReport rep("bracket-vs-hamiltonian");
    rep.add("generator-images-agree", ok, detail);
    res.reports.push_back(std::move(rep));
    apply_expectation(res, root, ok);
    return res;
}

} // namespace doc

/// Runs one verification document (already parsed to JSON).
inline DocumentResult run_document(const Json& j, std::uint64_t seed_override = 0,
                                   bool has_seed_override = false) {
    if (!j.is_object()) throw SchemaError("document must be a JSON object");
    const std::string schema = ser::require(j, "schema").get<std::string>();
    if (schema != "gcb/1") throw SchemaError("unsupported schema '" + schema + "'");
    const std::string kind = ser::require(j, "kind").get<std::string>();
    const Json& payload = ser::require(j, "payload");
    try {
        if (kind == "master-check") return doc::run_master_check(payload, j);
        if (kind == "q3-check") return doc::run_q3_check(payload, j);
        if (kind == "bracket") return doc::run_bracket(payload, j, seed_override, has_seed_override);
        if (kind == "twist") return doc::run_twist(payload, j, seed_override, has_seed_override);
        if (kind == "dirac-check") return doc::run_dirac_check(payload, j, seed_override, has_seed_override);
        if (kind == "nambu-check") return doc::run_nambu_check(payload, j, seed_override, has_seed_override);
        if (kind == "quadruple-check") return doc::run_quadruple_check(payload, j);
        if (kind == "ruth-check") return doc::run_ruth_check(payload, j);
        if (kind == "lk-check") return doc::run_lk_check(payload, j);
        if (kind == "correspondence-check") return doc::run_correspondence_check(payload, j);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        // contract violations on well-formed JSON are input errors
        throw SchemaError(e.what());
    }
    throw SchemaError("unknown document kind '" + kind + "'");
}

} // namespace gcb
