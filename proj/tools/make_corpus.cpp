// Regenerates the bundled document corpus. Run from the repository root:
//   ./build/tools/gcb-corpusgen corpus
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gcb/documents.hpp"

using namespace gcb;
namespace fs = std::filesystem;

namespace {

fs::path out_dir;
int written = 0;

void emit(const std::string& name, const Json& doc) {
    std::ofstream f(out_dir / name);
    f << doc.dump(2) << "\n";
    ++written;
}

Json doc_skeleton(const std::string& kind, const std::string& expect = "pass") {
    Json j;
    j["schema"] = "gcb/1";
    j["kind"] = kind;
    if (!expect.empty()) j["expect"] = expect;
    j["payload"] = Json::object();
    return j;
}

GradedPoly K(const LieAlgebroidData& alg, long long num, long long den = 1) {
    return GradedPoly::constant(alg.base(), Rational(num, den));
}

LieAlgebroidData so3() {
    LieAlgebroidData alg(0, 3);
    alg.set_structure(0, 1, 2, K(alg, 1));
    alg.set_structure(1, 2, 0, K(alg, 1));
    alg.set_structure(2, 0, 1, K(alg, 1));
    return alg;
}

LieAlgebroidData so3_plus(int extra) {
    LieAlgebroidData alg(0, 3 + extra);
    alg.set_structure(0, 1, 2, K(alg, 1));
    alg.set_structure(1, 2, 0, K(alg, 1));
    alg.set_structure(2, 0, 1, K(alg, 1));
    return alg;
}

LieAlgebroidData heisenberg() {
    LieAlgebroidData alg(0, 3);
    alg.set_structure(0, 1, 2, K(alg, 1));
    return alg;
}

LieAlgebroidData sl2() {
    LieAlgebroidData alg(0, 3);
    alg.set_structure(0, 1, 1, K(alg, 2));
    alg.set_structure(0, 2, 2, K(alg, -2));
    alg.set_structure(1, 2, 0, K(alg, 1));
    return alg;
}

LieAlgebroidData filiform4() {
    LieAlgebroidData alg(0, 4);
    alg.set_structure(0, 1, 2, K(alg, 1));
    alg.set_structure(0, 2, 3, K(alg, 1));
    return alg;
}

LieAlgebroidData tangent(int m) {
    LieAlgebroidData alg(m, m);
    for (int i = 0; i < m; ++i) alg.set_anchor(i, i, K(alg, 1));
    return alg;
}

LieAlgebroidData solvable_line(bool anchor_compatible) {
    // rho(e1) = d/dx, rho(e2) = x d/dx, [e1,e2] = e1 or e2
    LieAlgebroidData alg(1, 2);
    alg.set_anchor(0, 0, K(alg, 1));
    alg.set_anchor(1, 0, GradedPoly::generator(alg.base(), 0));
    alg.set_structure(0, 1, anchor_compatible ? 0 : 1, K(alg, 1));
    return alg;
}

GradedPoly word(const LieAlgebroidData& alg, std::initializer_list<int> js) {
    TablePtr ft = form_table(alg.base_dim(), alg.rank());
    GradedPoly w = GradedPoly::constant(ft, Rational(1));
    for (int j : js) w = w * GradedPoly::generator(ft, static_cast<std::size_t>(alg.base_dim() + j - 1));
    return w;
}

Json form_json(const LieAlgebroidData& alg, const GradedPoly& f) {
    return ser::form_to_json(f, alg.base_dim(), alg.rank());
}

// ---------------------------------------------------------------------------

void master_corpus() {
    struct Entry {
        std::string name;
        LieAlgebroidData alg;
        int k;
        std::optional<GradedPoly> h;
        bool pass;
    };
    std::vector<Entry> entries;
    entries.push_back({"master_so3_k4", so3(), 4, std::nullopt, true});
    entries.push_back({"master_heisenberg_k5", heisenberg(), 5, std::nullopt, true});
    entries.push_back({"master_abelian4_k4", LieAlgebroidData(0, 4), 4, std::nullopt, true});
    entries.push_back({"master_sl2_k4", sl2(), 4, std::nullopt, true});
    entries.push_back({"master_filiform_k5", filiform4(), 5, std::nullopt, true});
    entries.push_back({"master_tangent2_k4", tangent(2), 4, std::nullopt, true});
    entries.push_back({"master_heisenberg_k3", heisenberg(), 3, std::nullopt, true});
    entries.push_back({"master_solvable_line_k4", solvable_line(true), 4, std::nullopt, true});
    entries.push_back({"master_solvable_line_bad_anchor_k4", solvable_line(false), 4, std::nullopt, false});
    {
        auto alg = so3_plus(2);
        entries.push_back({"master_so3r2_k4_twisted", alg, 4, word(alg, {1, 2, 3, 4, 5}), true});
    }
    {
        auto alg = LieAlgebroidData(0, 5);
        entries.push_back({"master_abelian5_k4_twisted", alg, 4, word(alg, {1, 2, 3, 4, 5}), true});
    }
    {
        auto alg = LieAlgebroidData(0, 6);
        entries.push_back({"master_abelian6_k5_twisted", alg, 5, word(alg, {1, 2, 3, 4, 5, 6}), true});
    }
    {
        auto alg = tangent(6);
        TablePtr ft = form_table(6, 6);
        GradedPoly closed = GradedPoly::generator(ft, 1) * word(alg, {2, 3, 4, 5, 6});
        GradedPoly open_form = GradedPoly::generator(ft, 0) * word(alg, {2, 3, 4, 5, 6});
        entries.push_back({"master_tangent6_k4_closed_twist", alg, 4, closed, true});
        entries.push_back({"master_tangent6_k4_nonclosed_twist", alg, 4, open_form, false});
    }
    {
        auto alg = tangent(5);
        TablePtr ft = form_table(5, 5);
        GradedPoly open_form = GradedPoly::generator(ft, 0) * word(alg, {2, 3, 4, 5});
        entries.push_back({"master_tangent5_k3_nonclosed_twist", alg, 3, open_form, false});
    }
    {
        // [e1,e2]=e3, [e1,e3]=e1: jacobiator along e3
        LieAlgebroidData alg(0, 3);
        alg.set_structure(0, 1, 2, K(alg, 1));
        alg.set_structure(0, 2, 0, K(alg, 1));
        entries.push_back({"master_broken_jacobi_rank3_k4", alg, 4, std::nullopt, false});
    }
    {
        // [e1,e2]=e3, [e3,e4]=e1
        LieAlgebroidData alg(0, 4);
        alg.set_structure(0, 1, 2, K(alg, 1));
        alg.set_structure(2, 3, 0, K(alg, 1));
        entries.push_back({"master_broken_jacobi_rank4_k5", alg, 5, std::nullopt, false});
    }
    {
        // [e1,e2]=e3, [e2,e3]=e2
        LieAlgebroidData alg(0, 3);
        alg.set_structure(0, 1, 2, K(alg, 1));
        alg.set_structure(1, 2, 1, K(alg, 1));
        entries.push_back({"master_broken_jacobi_rank3b_k4", alg, 4, std::nullopt, false});
    }
    {
        // [e1,e2]=e3, [e3,e4]=e5, [e1,e5]=e4
        LieAlgebroidData alg(0, 5);
        alg.set_structure(0, 1, 2, K(alg, 1));
        alg.set_structure(2, 3, 4, K(alg, 1));
        alg.set_structure(0, 4, 3, K(alg, 1));
        entries.push_back({"master_broken_jacobi_rank5_k4", alg, 4, std::nullopt, false});
    }
    for (auto& e : entries) {
        Json d = doc_skeleton("master-check", e.pass ? "pass" : "fail");
        d["payload"]["k"] = e.k;
        d["payload"]["algebroid"] = ser::algebroid_to_json(e.alg);
        if (e.h && !e.h->is_zero()) d["payload"]["H"] = form_json(e.alg, *e.h);
        emit(e.name + ".json", d);
    }

    // one TOML document exercising the converter
    std::ofstream toml(out_dir / "master_heisenberg_k4.toml", std::ios::trunc);
    toml << "schema = \"gcb/1\"\n"
            "kind = \"master-check\"\n"
            "expect = \"pass\"\n\n"
            "[payload]\n"
            "k = 4\n\n"
            "[payload.algebroid]\n"
            "m = 0\n"
            "n = 3\n"
            "structure = [{a = 1, b = 2, c = 3, value = \"1\"}]\n";
    ++written;
}

void q3_corpus() {
    auto delta = [&](const LieAlgebroidData& alg, const Rational& s) {
        Json rows = Json::array();
        for (int a = 0; a < alg.rank(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < alg.rank(); ++b) row.push_back(a == b ? to_string(s) : "0");
            rows.push_back(std::move(row));
        }
        return rows;
    };
    struct Entry {
        std::string name;
        LieAlgebroidData alg;
        Json pairing;
        std::optional<GradedPoly> h;
        bool pass;
    };
    std::vector<Entry> entries;
    entries.push_back({"q3_so3_killing", so3(), delta(so3(), Rational(1)), std::nullopt, true});
    entries.push_back({"q3_so3_killing_scaled", so3(), delta(so3(), Rational(1, 2)), std::nullopt, true});
    {
        Json pi = delta(so3(), Rational(1));
        pi[2][2] = "0";
        entries.push_back({"q3_so3_degenerate_pairing", so3(), pi, std::nullopt, false});
    }
    entries.push_back({"q3_heisenberg_delta", heisenberg(), delta(heisenberg(), Rational(1)), std::nullopt,
                       false});
    entries.push_back({"q3_sl2_delta", sl2(), delta(sl2(), Rational(1)), std::nullopt, false});
    {
        // sl2 with the inverse Killing pairing (ad-invariant)
        Json pi = Json::array();
        pi.push_back(Json::array({"1", "0", "0"}));
        pi.push_back(Json::array({"0", "0", "2"}));
        pi.push_back(Json::array({"0", "2", "0"}));
        entries.push_back({"q3_sl2_killing", sl2(), pi, std::nullopt, true});
    }
    {
        auto alg = LieAlgebroidData(0, 4);
        entries.push_back({"q3_abelian4_delta_top_twist", alg, delta(alg, Rational(1)),
                           word(alg, {1, 2, 3, 4}), false});
        Json pi = delta(alg, Rational(0));
        pi[0][1] = "2";
        pi[1][0] = "2";
        entries.push_back({"q3_abelian4_offdiag_top_twist", alg, pi, word(alg, {1, 2, 3, 4}), false});
    }
    {
        auto alg = so3_plus(1);
        Json pi = delta(alg, Rational(0));
        pi[3][3] = "1";
        entries.push_back({"q3_so3r1_center_pairing", alg, pi, std::nullopt, true});
        entries.push_back({"q3_so3r1_center_pairing_top_twist", alg, pi, word(alg, {1, 2, 3, 4}), false});
    }
    {
        auto alg = tangent(2);
        entries.push_back({"q3_tangent2_delta", alg, delta(alg, Rational(1)), std::nullopt, false});
    }
    for (auto& e : entries) {
        Json d = doc_skeleton("q3-check", e.pass ? "pass" : "fail");
        d["payload"]["algebroid"] = ser::algebroid_to_json(e.alg);
        d["payload"]["pairing"] = e.pairing;
        if (e.h && !e.h->is_zero()) d["payload"]["H"] = form_json(e.alg, *e.h);
        emit(e.name + ".json", d);
    }
}

void bracket_corpus() {
    struct Entry {
        std::string name;
        LieAlgebroidData alg;
        int k;
        std::optional<GradedPoly> h;
        int count;
    };
    std::vector<Entry> entries;
    entries.push_back({"bracket_k3_so3", so3(), 3, std::nullopt, 35});
    {
        auto alg = so3_plus(1);
        entries.push_back({"bracket_k3_so3r1_twisted", alg, 3, word(alg, {1, 2, 3, 4}), 35});
    }
    entries.push_back({"bracket_k4_sl2", sl2(), 4, std::nullopt, 35});
    {
        auto alg = so3_plus(2);
        entries.push_back({"bracket_k4_so3r2_twisted", alg, 4, word(alg, {1, 2, 3, 4, 5}), 35});
    }
    entries.push_back({"bracket_k5_tangent2", tangent(2), 5, std::nullopt, 35});
    {
        auto alg = LieAlgebroidData(0, 6);
        entries.push_back({"bracket_k5_abelian6_twisted", alg, 5, word(alg, {1, 2, 3, 4, 5, 6}), 35});
    }
    int seed = 1000;
    for (auto& e : entries) {
        Json d = doc_skeleton("bracket");
        d["payload"]["k"] = e.k;
        d["payload"]["algebroid"] = ser::algebroid_to_json(e.alg);
        if (e.h) d["payload"]["H"] = form_json(e.alg, *e.h);
        d["payload"]["count"] = e.count;
        d["payload"]["seed"] = seed++;
        emit(e.name + ".json", d);
    }
}

void twist_corpus() {
    {
        auto alg = tangent(4);
        Json d = doc_skeleton("twist");
        d["payload"]["k"] = 3;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        GradedPoly b = GradedPoly::generator(form_table(4, 4), 0) * word(alg, {1, 2, 3});
        d["payload"]["B"] = form_json(alg, b);
        d["payload"]["count"] = 50;
        d["payload"]["seed"] = 2001;
        emit("twist_k3_tangent4.json", d);
    }
    {
        auto alg = so3_plus(2);
        Json d = doc_skeleton("twist");
        d["payload"]["k"] = 4;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        d["payload"]["B"] = form_json(alg, word(alg, {1, 2, 4, 5}) + word(alg, {2, 3, 4, 5}));
        d["payload"]["H"] = form_json(alg, word(alg, {1, 2, 3, 4, 5}));
        d["payload"]["count"] = 55;
        d["payload"]["seed"] = 2002;
        emit("twist_k4_so3r2_twisted.json", d);
    }
}

void dirac_corpus() {
    {
        Json d = doc_skeleton("dirac-check");
        d["payload"]["check"] = "pair-roundtrip";
        d["payload"]["random"] = {{"count", 60}, {"seed", 3001}, {"n", 5}, {"k", 4}};
        emit("dirac_roundtrip_rank5_k4.json", d);
    }
    {
        Json d = doc_skeleton("dirac-check");
        d["payload"]["check"] = "pair-roundtrip";
        d["payload"]["random"] = {{"count", 45}, {"seed", 3002}, {"n", 6}, {"k", 4}};
        emit("dirac_roundtrip_rank6_k4.json", d);
    }
    {
        Json d = doc_skeleton("dirac-check");
        d["payload"]["check"] = "hagiwara";
        d["payload"]["random"] = {{"count", 60}, {"seed", 3101}, {"n", 4}, {"k", 3}};
        emit("dirac_hagiwara_rank4_k3.json", d);
    }
    {
        Json d = doc_skeleton("dirac-check");
        d["payload"]["check"] = "hagiwara";
        d["payload"]["random"] = {{"count", 45}, {"seed", 3102}, {"n", 4}, {"k", 4}};
        emit("dirac_hagiwara_rank4_k4.json", d);
    }
    {
        Json d = doc_skeleton("dirac-check");
        d["payload"]["check"] = "higher-dirac";
        d["payload"]["k"] = 3;
        d["payload"]["algebroid"] = ser::algebroid_to_json(sl2());
        d["payload"]["random"] = {{"count", 30}, {"seed", 3201}};
        emit("dirac_higher_sl2_k3.json", d);
    }
    {
        auto alg = so3_plus(1);
        Json d = doc_skeleton("dirac-check");
        d["payload"]["check"] = "higher-dirac";
        d["payload"]["k"] = 3;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        d["payload"]["H"] = form_json(alg, word(alg, {1, 2, 3, 4}));
        d["payload"]["random"] = {{"count", 25}, {"seed", 3202}};
        emit("dirac_higher_so3r1_twisted.json", d);
    }
    {
        // explicit conormal of a subalgebra: closed under the so3 bracket
        auto s = conormal({{Rational(0), Rational(0), Rational(1)}}, 4, 3);
        Json d = doc_skeleton("dirac-check");
        d["payload"]["check"] = "higher-dirac";
        d["payload"]["k"] = 4;
        d["payload"]["n"] = 3;
        d["payload"]["algebroid"] = ser::algebroid_to_json(so3());
        Json span = Json::array();
        for (const auto& v : s.span) {
            Json vec;
            Json a = Json::array(), w = Json::array();
            for (const auto& f : v.a) a.push_back(ser::base_poly_to_json(f));
            for (const auto& f : v.w) w.push_back(ser::base_poly_to_json(f));
            vec["a"] = std::move(a);
            vec["w"] = std::move(w);
            span.push_back(std::move(vec));
        }
        d["payload"]["L"] = std::move(span);
        emit("dirac_higher_so3_conormal_center.json", d);
    }
    {
        // explicit non-subalgebra conormal: bracket closure fails
        auto s = conormal({{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}},
                          4, 3);
        Json d = doc_skeleton("dirac-check", "fail");
        d["payload"]["check"] = "higher-dirac";
        d["payload"]["k"] = 4;
        d["payload"]["n"] = 3;
        d["payload"]["algebroid"] = ser::algebroid_to_json(so3());
        Json span = Json::array();
        for (const auto& v : s.span) {
            Json vec;
            Json a = Json::array(), w = Json::array();
            for (const auto& f : v.a) a.push_back(ser::base_poly_to_json(f));
            for (const auto& f : v.w) w.push_back(ser::base_poly_to_json(f));
            vec["a"] = std::move(a);
            vec["w"] = std::move(w);
            span.push_back(std::move(vec));
        }
        d["payload"]["L"] = std::move(span);
        emit("dirac_higher_so3_nonsubalgebra.json", d);
    }
}

void nambu_corpus() {
    {
        auto alg = LieAlgebroidData(0, 4);
        Json d = doc_skeleton("nambu-check");
        d["payload"]["k"] = 3;
        d["payload"]["n"] = 4;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        d["payload"]["H"] = form_json(alg, word(alg, {1, 2, 3, 4}));
        d["payload"]["random"] = {{"count", 30}, {"seed", 4001}};
        emit("nambu_random_abelian4_twisted.json", d);
    }
    {
        LieAlgebroidData alg(2, 3);
        for (int i = 0; i < 2; ++i) alg.set_anchor(i, i, K(alg, 1));
        Json d = doc_skeleton("nambu-check");
        d["payload"]["k"] = 3;
        d["payload"]["m"] = 2;
        d["payload"]["n"] = 3;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        d["payload"]["random"] = {{"count", 25}, {"seed", 4002}};
        emit("nambu_random_plane_rank3.json", d);
    }
    {
        // explicit vanishing blade over a line: weak but involutive
        LieAlgebroidData alg(1, 4);
        alg.set_anchor(0, 0, K(alg, 1));
        auto t = NambuTensor::make(3, 1, 4);
        t.pi[ext::index_of(4, {0, 1, 2})] = GradedPoly::generator(t.base, 0);
        Json d = doc_skeleton("nambu-check");
        d["payload"]["k"] = 3;
        d["payload"]["m"] = 1;
        d["payload"]["n"] = 4;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        Json pi = Json::array();
        for (const auto& f : t.pi) pi.push_back(ser::base_poly_to_json(f));
        d["payload"]["Pi"] = std::move(pi);
        d["payload"]["points"] = Json::array({Json::array({"0"}), Json::array({"1"})});
        emit("nambu_vanishing_blade_line.json", d);
    }
    {
        // top tensors on nilpotent algebras stay involutive
        Json d = doc_skeleton("nambu-check");
        d["payload"]["k"] = 3;
        d["payload"]["n"] = 3;
        d["payload"]["algebroid"] = ser::algebroid_to_json(heisenberg());
        d["payload"]["Pi"] = Json::array({"1"});
        emit("nambu_heisenberg_top.json", d);
    }
    {
        // blade missing the derived direction: [e1,e2] = e4 escapes the graph
        LieAlgebroidData alg(0, 4);
        alg.set_structure(0, 1, 3, K(alg, 1));
        Json d = doc_skeleton("nambu-check", "fail");
        d["payload"]["k"] = 3;
        d["payload"]["n"] = 4;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        Json pi = Json::array();
        for (std::size_t i = 0; i < ext::dim(4, 3); ++i) pi.push_back("0");
        pi[ext::index_of(4, {0, 1, 2})] = "1";
        d["payload"]["Pi"] = std::move(pi);
        emit("nambu_blade_escapes.json", d);
    }
    {
        // non-decomposable tensor: precondition violation
        Json d = doc_skeleton("nambu-check", "fail");
        d["payload"]["k"] = 3;
        d["payload"]["n"] = 6;
        d["payload"]["algebroid"] = ser::algebroid_to_json(LieAlgebroidData(0, 6));
        Json pi = Json::array();
        for (std::size_t i = 0; i < ext::dim(6, 3); ++i) pi.push_back("0");
        pi[ext::index_of(6, {0, 1, 2})] = "1";
        pi[ext::index_of(6, {3, 4, 5})] = "1";
        d["payload"]["Pi"] = std::move(pi);
        emit("nambu_nondecomposable.json", d);
    }
}

void quadruple_corpus() {
    const int n = 4, k = 4;
    auto b = Mat{{Rational(1), Rational(0), Rational(0), Rational(0)},
                 {Rational(0), Rational(1), Rational(0), Rational(0)}};
    auto s = conormal(b, k, n);
    Mat db = linalg::annihilator(b, n);

    Json span = Json::array();
    for (const auto& v : s.span) {
        Json vec;
        Json a = Json::array(), w = Json::array();
        for (const auto& f : v.a) a.push_back(ser::base_poly_to_json(f));
        for (const auto& f : v.w) w.push_back(ser::base_poly_to_json(f));
        vec["a"] = std::move(a);
        vec["w"] = std::move(w);
        span.push_back(std::move(vec));
    }
    Json dspan = Json::array();
    for (const auto& row : db) {
        Json v = Json::array();
        for (const auto& x : row) v.push_back(to_string(x));
        dspan.push_back(std::move(v));
    }

    {
        Json d = doc_skeleton("quadruple-check");
        d["payload"]["check"] = "coisotropic";
        d["payload"]["k"] = k;
        d["payload"]["n"] = n;
        d["payload"]["L"] = span;
        d["payload"]["D"] = dspan;
        emit("quadruple_conormal_coisotropic.json", d);
    }
    {
        Json d = doc_skeleton("quadruple-check", "fail");
        d["payload"]["check"] = "coisotropic";
        d["payload"]["k"] = k;
        d["payload"]["n"] = n;
        d["payload"]["L"] = span;
        Json bad = dspan;
        bad.push_back(Json::array({"1", "0", "0", "0"})); // pairs with the projection
        d["payload"]["D"] = std::move(bad);
        emit("quadruple_bad_annihilator.json", d);
    }
    {
        // induced K: D tensor A plus L wedge A*
        Json kspan = Json::array();
        const std::size_t endo_dim = static_cast<std::size_t>(n) * n;
        const std::size_t top_dim = ext::dim(n, k);
        auto zero_vec = [](std::size_t len) {
            Json v = Json::array();
            for (std::size_t i = 0; i < len; ++i) v.push_back("0");
            return v;
        };
        for (const auto& row : db)
            for (int j = 0; j < n; ++j) {
                Json kv;
                Json endo = zero_vec(endo_dim);
                for (int l = 0; l < n; ++l)
                    endo[static_cast<std::size_t>(j * n + l)] = to_string(row[static_cast<std::size_t>(l)]);
                kv["endo"] = std::move(endo);
                kv["top"] = zero_vec(top_dim);
                kspan.push_back(std::move(kv));
            }
        const auto e = detail::evaluate_span(s, Vec{});
        for (std::size_t vi = 0; vi < e.rows.size(); ++vi)
            for (int r = 0; r < n; ++r) {
                Json kv;
                Json endo = zero_vec(endo_dim);
                for (int i = 0; i < n; ++i)
                    endo[static_cast<std::size_t>(i * n + r)] =
                        to_string(e.a_part[vi][static_cast<std::size_t>(i)]);
                ext::Coeffs<Rational> alr(static_cast<std::size_t>(n), Rational(0));
                alr[static_cast<std::size_t>(r)] = 1;
                auto wed = ext::wedge(n, 1, alr, k - 1,
                                      ext::Coeffs<Rational>(e.w_part[vi].begin(), e.w_part[vi].end()),
                                      Rational(0));
                Json top = zero_vec(top_dim);
                for (std::size_t j = 0; j < top_dim; ++j) top[j] = to_string(wed[j]);
                kv["endo"] = std::move(endo);
                kv["top"] = std::move(top);
                kspan.push_back(std::move(kv));
            }
        Json d = doc_skeleton("quadruple-check");
        d["payload"]["check"] = "quadruple";
        d["payload"]["k"] = k;
        d["payload"]["n"] = n;
        d["payload"]["L"] = span;
        d["payload"]["D"] = dspan;
        d["payload"]["K"] = std::move(kspan);
        emit("quadruple_induced_K.json", d);
    }
}

void ruth_lk_corpus() {
    struct Entry {
        std::string name;
        LieAlgebroidData alg;
    };
    std::vector<Entry> algevs = {
        {"so3", so3()},           {"heisenberg", heisenberg()}, {"sl2", sl2()},
        {"filiform", filiform4()}, {"abelian3", LieAlgebroidData(0, 3)},
        {"tangent1", tangent(1)}, {"tangent2", tangent(2)},     {"so3r1", so3_plus(1)},
        {"solvable", solvable_line(true)}, {"abelian5", LieAlgebroidData(0, 5)},
    };
    for (const auto& e : algevs) {
        for (const char* rep : {"adjoint", "coadjoint"}) {
            Json d = doc_skeleton("ruth-check");
            d["payload"]["algebroid"] = ser::algebroid_to_json(e.alg);
            d["payload"]["rep"] = rep;
            emit("ruth_" + e.name + "_" + rep + ".json", d);
        }
    }
    {
        // explicit representation with a cocycle-violating K entry
        auto alg = so3_plus(1);
        Json d = doc_skeleton("ruth-check", "fail");
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        Json rep;
        rep["r0"] = 1;
        rep["r1"] = 1;
        rep["K"] = Json::array({Json{{"a", 3}, {"b", 4}, {"e1", 1}, {"e0", 1}, {"value", "1"}}});
        d["payload"]["rep"] = std::move(rep);
        emit("ruth_bad_cocycle.json", d);

        Json lk = doc_skeleton("lk-check", "fail");
        lk["payload"]["k"] = 4;
        lk["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        lk["payload"]["construct"] = "semidirect";
        lk["payload"]["rep"] = d["payload"]["rep"];
        emit("lk_semidirect_bad_rep.json", lk);
    }
    for (const auto& e : {algevs[0], algevs[2], algevs[6]}) {
        Json d = doc_skeleton("lk-check");
        d["payload"]["k"] = 4;
        d["payload"]["algebroid"] = ser::algebroid_to_json(e.alg);
        d["payload"]["construct"] = "semidirect";
        d["payload"]["rep"] = "coadjoint";
        emit("lk_semidirect_" + e.name + "_k4.json", d);
    }
    {
        auto alg = so3_plus(2);
        Json d = doc_skeleton("lk-check");
        d["payload"]["k"] = 4;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        d["payload"]["construct"] = "twisted-coadjoint";
        d["payload"]["H"] = form_json(alg, word(alg, {1, 2, 3, 4, 5}));
        emit("lk_twisted_so3r2_closed.json", d);
    }
    {
        auto alg = tangent(6);
        TablePtr ft = form_table(6, 6);
        Json good = doc_skeleton("lk-check");
        good["payload"]["k"] = 4;
        good["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        good["payload"]["construct"] = "twisted-coadjoint";
        good["payload"]["H"] =
            form_json(alg, GradedPoly::generator(ft, 1) * word(alg, {2, 3, 4, 5, 6}));
        emit("lk_twisted_tangent6_closed.json", good);

        Json bad = doc_skeleton("lk-check", "fail");
        bad["payload"]["k"] = 4;
        bad["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        bad["payload"]["construct"] = "twisted-coadjoint";
        bad["payload"]["H"] = form_json(alg, GradedPoly::generator(ft, 0) * word(alg, {2, 3, 4, 5, 6}));
        emit("lk_twisted_tangent6_nonclosed.json", bad);
    }
    {
        auto alg = LieAlgebroidData(0, 5);
        Json d = doc_skeleton("lk-check");
        d["payload"]["k"] = 4;
        d["payload"]["algebroid"] = ser::algebroid_to_json(alg);
        d["payload"]["construct"] = "twisted-coadjoint";
        d["payload"]["H"] = form_json(alg, word(alg, {1, 2, 3, 4, 5}));
        emit("lk_twisted_abelian5_top.json", d);
    }
}

void correspondence_corpus() {
    struct Entry {
        std::string name;
        LieAlgebroidData alg;
        std::optional<GradedPoly> h;
        int k;
    };
    std::vector<Entry> entries;
    entries.push_back({"abelian3_k4", LieAlgebroidData(0, 3), std::nullopt, 4});
    entries.push_back({"so3_k4", so3(), std::nullopt, 4});
    entries.push_back({"so3_k5", so3(), std::nullopt, 5});
    entries.push_back({"heisenberg_k4", heisenberg(), std::nullopt, 4});
    entries.push_back({"sl2_k4", sl2(), std::nullopt, 4});
    entries.push_back({"filiform_k5", filiform4(), std::nullopt, 5});
    {
        auto alg = LieAlgebroidData(0, 5);
        entries.push_back({"abelian5_k4_twisted", alg, word(alg, {1, 2, 3, 4, 5}), 4});
    }
    {
        auto alg = so3_plus(2);
        entries.push_back({"so3r2_k4_twisted", alg, word(alg, {1, 2, 3, 4, 5}), 4});
    }
    {
        auto alg = LieAlgebroidData(0, 6);
        entries.push_back({"abelian6_k5_twisted", alg, word(alg, {1, 2, 3, 4, 5, 6}), 5});
    }
    {
        auto alg = so3_plus(3);
        entries.push_back({"so3r3_k5_twisted", alg, word(alg, {1, 2, 3, 4, 5, 6}), 5});
    }
    for (auto& e : entries) {
        Json d = doc_skeleton("correspondence-check");
        d["payload"]["k"] = e.k;
        d["payload"]["algebroid"] = ser::algebroid_to_json(e.alg);
        if (e.h) d["payload"]["H"] = form_json(e.alg, *e.h);
        emit("correspondence_" + e.name + ".json", d);
    }
}

} // namespace

int main(int argc, char** argv) {
    out_dir = argc > 1 ? fs::path(argv[1]) : fs::path("corpus");
    fs::create_directories(out_dir);
    master_corpus();
    q3_corpus();
    bracket_corpus();
    twist_corpus();
    dirac_corpus();
    nambu_corpus();
    quadruple_corpus();
    ruth_lk_corpus();
    correspondence_corpus();
    std::cout << "wrote " << written << " documents to " << out_dir.string() << "\n";
    return 0;
}
