#include <catch2/catch_amalgamated.hpp>

#include "gcb/master.hpp"
#include "gcb/random.hpp"
#include "gcb/ruth.hpp"
#include "support/instances.hpp"

using namespace gcb;
using namespace gcb::test;

namespace {

ConnectionData random_connection(const LieAlgebroidData& alg, Rng& rng, int max_exp = 1) {
    ConnectionData c = ConnectionData::zero(alg);
    for (auto& plane : c.gamma)
        for (auto& row : plane)
            for (auto& g : row) g = random_homogeneous(alg.base(), 0, 1, rng, max_exp);
    return c;
}

bool clause(const CheckReport& r, const std::string& name) {
    for (const auto& c : r.clauses)
        if (c.name == name) return c.pass;
    throw std::logic_error("no clause named " + name);
}

} // namespace

TEST_CASE("representation identities") {
    SECTION("the zero representation passes") {
        auto alg = so3();
        auto rep = RepUTHData::zero(alg, 0, 0);
        REQUIRE(check_ruth(rep, alg).passed());
    }
    SECTION("adjoint representation of point-base Lie algebras") {
        for (auto alg : {so3(), heisenberg(), sl2(), filiform4()}) {
            auto rep = adjoint_rep(alg, ConnectionData::zero(alg));
            REQUIRE(rep.r1 == 0); // E1 = TM = 0 over a point
            REQUIRE(check_ruth(rep, alg).passed());
            auto corep = coadjoint_rep(alg, ConnectionData::zero(alg));
            REQUIRE(check_ruth(corep, alg).passed());
        }
    }
    SECTION("tangent algebroid with assorted connections") {
        Rng rng(50);
        auto alg = tangent(2);
        for (int iter = 0; iter < 4; ++iter) {
            auto conn = random_connection(alg, rng);
            REQUIRE(check_ruth(adjoint_rep(alg, conn), alg).passed());
            REQUIRE(check_ruth(coadjoint_rep(alg, conn), alg).passed());
        }
    }
    SECTION("anchored rank-2 bundle over a line") {
        // [e1, e2] = e2, rho(e1) = d/dx, rho(e2) = 0: a solvable algebroid
        LieAlgebroidData alg(1, 2);
        alg.set_anchor(0, 0, GradedPoly::constant(alg.base(), Rational(1)));
        alg.set_structure(0, 1, 1, GradedPoly::constant(alg.base(), Rational(1)));
        REQUIRE(check_structure_direct(alg, nullptr).passed());
        Rng rng(51);
        for (int iter = 0; iter < 3; ++iter) {
            auto conn = random_connection(alg, rng);
            REQUIRE(check_ruth(adjoint_rep(alg, conn), alg).passed());
            REQUIRE(check_ruth(coadjoint_rep(alg, conn), alg).passed());
        }
    }
    SECTION("non-algebroid input is rejected") {
        auto alg = broken_jacobi_a();
        REQUIRE_THROWS_AS(adjoint_rep(alg, ConnectionData::zero(alg)), std::invalid_argument);
    }
    SECTION("coadjoint duality identity on dressed sections") {
        Rng rng(52);
        auto alg = tangent(2);
        auto conn = random_connection(alg, rng);
        auto adj = adjoint_rep(alg, conn);
        auto coadj = coadjoint_rep(alg, conn);
        // <nabla^1_a beta, b> + <beta, nabla^0_a b> = rho(a)<beta, b>
        for (int a = 0; a < alg.rank(); ++a) {
            std::vector<GradedPoly> beta, b;
            for (int i = 0; i < alg.rank(); ++i) {
                beta.push_back(random_homogeneous(alg.base(), 0, 1, rng, 2));
                b.push_back(random_homogeneous(alg.base(), 0, 1, rng, 2));
            }
            auto nb = ruth_detail::conn_apply(coadj.conn1, alg, a, beta);
            auto n0b = ruth_detail::conn_apply(adj.conn0, alg, a, b);
            GradedPoly lhs(alg.base()), pairing(alg.base());
            for (int i = 0; i < alg.rank(); ++i) {
                lhs += nb[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)] +
                       beta[static_cast<std::size_t>(i)] * n0b[static_cast<std::size_t>(i)];
                pairing += beta[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
            }
            REQUIRE(lhs == ruth_detail::rho_apply(alg, a, pairing));
        }
    }
    SECTION("a cocycle-violating K fails exactly the coherence clause") {
        auto alg = so3_plus_abelian(1);
        auto rep = RepUTHData::zero(alg, 1, 1);
        rep.kform[2][3][0][0] = GradedPoly::constant(alg.base(), Rational(1));
        rep.kform[3][2][0][0] = GradedPoly::constant(alg.base(), Rational(-1));
        auto r = check_ruth(rep, alg);
        REQUIRE_FALSE(r.passed());
        REQUIRE(clause(r, "chain-map"));
        REQUIRE(clause(r, "curvature-0"));
        REQUIRE(clause(r, "curvature-1"));
        REQUIRE_FALSE(clause(r, "d-nabla-K"));
    }
}

TEST_CASE("semidirect products in the three-degree layout") {
    SECTION("zero representation reduces to the algebroid alone") {
        auto alg = so3();
        auto d = semidirect(alg, RepUTHData::zero(alg, 0, 0), 4);
        REQUIRE(check_lk_jacobi(d).passed());
    }
    SECTION("coadjoint semidirect products pass") {
        for (auto alg : {so3(), heisenberg(), sl2()}) {
            auto d = semidirect(alg, coadjoint_rep(alg, ConnectionData::zero(alg)), 4);
            REQUIRE(check_lk_jacobi(d).passed());
        }
        Rng rng(60);
        auto alg = tangent(2);
        auto conn = random_connection(alg, rng);
        for (int k : {4, 5}) {
            auto d = semidirect(alg, coadjoint_rep(alg, conn), k);
            REQUIRE(check_lk_jacobi(d).passed());
        }
    }
    SECTION("clause correspondence with the representation identities") {
        auto alg = so3_plus_abelian(1);
        auto rep = RepUTHData::zero(alg, 1, 1);
        rep.kform[2][3][0][0] = GradedPoly::constant(alg.base(), Rational(1));
        rep.kform[3][2][0][0] = GradedPoly::constant(alg.base(), Rational(-1));
        auto r = check_ruth(rep, alg);
        auto j = check_lk_jacobi(semidirect(alg, rep, 4));
        REQUIRE(clause(j, "chain-connections") == clause(r, "chain-map"));
        REQUIRE(clause(j, "l3-psi-curvature") == clause(r, "curvature-0"));
        REQUIRE(clause(j, "l3-phi-curvature") == clause(r, "curvature-1"));
        REQUIRE(clause(j, "l3-cocycle") == clause(r, "d-nabla-K"));
        REQUIRE_FALSE(j.passed());
    }
}

TEST_CASE("twisted coadjoint semidirect products") {
    SECTION("zero twist is the plain coadjoint semidirect") {
        auto alg = so3();
        auto a = twisted_coadjoint_semidirect(alg, ConnectionData::zero(alg), nullptr, 4);
        auto b = semidirect(alg, coadjoint_rep(alg, ConnectionData::zero(alg)), 4);
        for (std::size_t i = 0; i < a.lk.size(); ++i)
            for (std::size_t j = 0; j < a.lk[i].size(); ++j) REQUIRE(a.lk[i][j] == b.lk[i][j]);
        REQUIRE(check_lk_jacobi(a).passed());
    }
    SECTION("point base, abelian, top-degree twist passes") {
        const int k = 4;
        auto alg = abelian(k + 1);
        TwistH h(alpha_word(alg, {1, 2, 3, 4, 5}), alg, k);
        auto d = twisted_coadjoint_semidirect(alg, ConnectionData::zero(alg), &h, k);
        REQUIRE(check_lk_jacobi(d).passed());
    }
    SECTION("point base, so3 + extra directions, closed twist passes") {
        const int k = 4;
        auto alg = so3_plus_abelian(2);
        TwistH h(alpha_word(alg, {1, 2, 3, 4, 5}), alg, k);
        REQUIRE(d_A(alg, h.poly()).is_zero());
        auto d = twisted_coadjoint_semidirect(alg, ConnectionData::zero(alg), &h, k);
        REQUIRE(check_lk_jacobi(d).passed());
    }
    SECTION("closed and non-closed twists over a base, assorted connections") {
        const int k = 4;
        auto alg = tangent(6);
        Rng rng(61);
        TablePtr ft = form_table(6, 6);
        GradedPoly closed = GradedPoly::generator(ft, 1) * alpha_word(alg, {2, 3, 4, 5, 6});
        GradedPoly open_form = GradedPoly::generator(ft, 0) * alpha_word(alg, {2, 3, 4, 5, 6});
        TwistH h_good(closed, alg, k);
        TwistH h_bad(open_form, alg, k);
        REQUIRE(d_A(alg, closed).is_zero());
        REQUIRE_FALSE(d_A(alg, open_form).is_zero());

        for (int iter = 0; iter < 2; ++iter) {
            auto conn = (iter == 0) ? ConnectionData::zero(alg) : random_connection(alg, rng);
            auto good = twisted_coadjoint_semidirect(alg, conn, &h_good, k);
            REQUIRE(check_lk_jacobi(good).passed());

            auto bad = twisted_coadjoint_semidirect(alg, conn, &h_bad, k);
            auto rep = check_lk_jacobi(bad);
            REQUIRE_FALSE(rep.passed());
            REQUIRE(clause(rep, "l2-jacobi"));
            REQUIRE(clause(rep, "chain-connections"));
            REQUIRE(clause(rep, "l3-psi-curvature"));
            REQUIRE(clause(rep, "l3-phi-curvature"));
            REQUIRE(clause(rep, "l3-cocycle"));
            REQUIRE_FALSE((clause(rep, "lk-closure") && clause(rep, "lk1-closure")));
        }
    }
    SECTION("twist validity is equivalent to closedness across a corpus") {
        struct Case {
            LieAlgebroidData alg;
            GradedPoly h;
            int k;
        };
        std::vector<Case> cases;
        {
            auto alg = so3_plus_abelian(2);
            cases.push_back({alg, alpha_word(alg, {1, 2, 3, 4, 5}), 4});
            cases.push_back({alg, alpha_word(alg, {1, 2, 4, 5}) + alpha_word(alg, {2, 3, 4, 5}), 3});
        }
        {
            auto alg = abelian(6);
            cases.push_back({alg, alpha_word(alg, {1, 2, 3, 4, 5, 6}), 5});
            cases.push_back({alg, alpha_word(alg, {1, 2, 3, 4, 5}), 4});
        }
        {
            auto alg = tangent(5);
            TablePtr ft = form_table(5, 5);
            cases.push_back({alg, GradedPoly::generator(ft, 0) * alpha_word(alg, {2, 3, 4, 5}), 3});
            cases.push_back({alg, GradedPoly::generator(ft, 1) * alpha_word(alg, {2, 3, 4, 5}), 3});
        }
        Rng rng(62);
        for (auto& c : cases) {
            if (c.k <= 3) continue; // three-degree layout needs k > 3
            TwistH h(c.h, c.alg, c.k);
            auto conn = random_connection(c.alg, rng);
            auto d = twisted_coadjoint_semidirect(c.alg, conn, &h, c.k);
            const bool closed = d_A(c.alg, c.h).is_zero();
            REQUIRE(check_lk_jacobi(d).passed() == closed);
        }
    }
}

TEST_CASE("correspondence with the hamiltonian vector field") {
    struct Case {
        std::string name;
        LieAlgebroidData alg;
        std::optional<GradedPoly> h;
        int k;
    };
    std::vector<Case> cases;
    cases.push_back({"abelian, no twist", abelian(3), std::nullopt, 4});
    cases.push_back({"so3, k=4", so3(), std::nullopt, 4});
    cases.push_back({"so3, k=5", so3(), std::nullopt, 5});
    cases.push_back({"heisenberg, k=4", heisenberg(), std::nullopt, 4});
    cases.push_back({"sl2, k=4", sl2(), std::nullopt, 4});
    cases.push_back({"filiform, k=5", filiform4(), std::nullopt, 5});
    {
        auto alg = abelian(5);
        cases.push_back({"abelian rank 5, top twist", alg, alpha_word(alg, {1, 2, 3, 4, 5}), 4});
    }
    {
        auto alg = so3_plus_abelian(2);
        cases.push_back({"so3+R^2, twist", alg, alpha_word(alg, {1, 2, 3, 4, 5}), 4});
    }
    {
        auto alg = abelian(6);
        cases.push_back({"abelian rank 6, k=5 twist", alg, alpha_word(alg, {1, 2, 3, 4, 5, 6}), 5});
    }
    {
        auto alg = so3_plus_abelian(3);
        GradedPoly h = alpha_word(alg, {1, 2, 3, 4, 5, 6});
        cases.push_back({"so3+R^3, k=5 twist", alg, h, 5});
    }

    for (auto& c : cases) {
        INFO(c.name);
        CotangentChart chart(c.k, 0, c.alg.rank());
        std::optional<TwistH> h;
        if (c.h) h.emplace(*c.h, c.alg, c.k);
        auto d = twisted_coadjoint_semidirect(c.alg, ConnectionData::zero(c.alg), h ? &*h : nullptr, c.k);
        Derivation q = q_from_lk(d, chart);
        Derivation xh = hamiltonian_vf(build_theta(c.alg, h ? &*h : nullptr, nullptr, chart), chart);
        for (std::size_t g = 0; g < chart.table()->size(); ++g) REQUIRE(q.value(g) == xh.value(g));
    }
}

TEST_CASE("two-term layout") {
    SECTION("semidirect of valid representations passes") {
        for (auto alg : {so3(), heisenberg()}) {
            auto d = semidirect_l2(alg, coadjoint_rep(alg, ConnectionData::zero(alg)));
            REQUIRE(check_l2_jacobi(d).passed());
        }
        Rng rng(70);
        auto alg = tangent(2);
        auto conn = random_connection(alg, rng);
        auto d = semidirect_l2(alg, coadjoint_rep(alg, conn));
        REQUIRE(check_l2_jacobi(d).passed());
        auto d2 = semidirect_l2(alg, adjoint_rep(alg, conn));
        REQUIRE(check_l2_jacobi(d2).passed());
    }
    SECTION("invalid representations fail") {
        auto alg = so3_plus_abelian(1);
        auto rep = RepUTHData::zero(alg, 1, 1);
        rep.kform[2][3][0][0] = GradedPoly::constant(alg.base(), Rational(1));
        rep.kform[3][2][0][0] = GradedPoly::constant(alg.base(), Rational(-1));
        REQUIRE_FALSE(check_ruth(rep, alg).passed());
        REQUIRE_FALSE(check_l2_jacobi(semidirect_l2(alg, rep)).passed());
    }
}
