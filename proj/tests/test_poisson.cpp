#include <catch2/catch_amalgamated.hpp>

#include "gcb/chart.hpp"
#include "gcb/poisson.hpp"
#include "gcb/random.hpp"

using namespace gcb;

namespace {

int sgn_pow(int e) { return (e % 2) ? -1 : 1; }

Derivation alpha_contraction(const CotangentChart& chart, const std::vector<GradedPoly>& coeffs) {
    Derivation d(chart.table(), -1);
    for (std::size_t i = 0; i < chart.table()->size(); ++i) {
        if (chart.is_alpha(i))
            d.set_value(i, coeffs[i - static_cast<std::size_t>(chart.base_dim())]);
        else
            d.set_value(i, GradedPoly::zero(chart.table()));
    }
    return d;
}

} // namespace

TEST_CASE("chart layout") {
    REQUIRE_THROWS_AS(CotangentChart(2, 1, 1), std::invalid_argument);
    CotangentChart chart(4, 2, 3);
    const auto& t = *chart.table();
    REQUIRE(t.size() == 10);
    REQUIRE(t.degree(chart.x(0)) == 0);
    REQUIRE(t.degree(chart.alpha(2)) == 1);
    REQUIRE(t.degree(chart.a(0)) == 3);
    REQUIRE(t.degree(chart.p(1)) == 4);
    REQUIRE(t.name(chart.a(1)) == "a2");
}

TEST_CASE("Darboux generator brackets") {
    for (int k : {3, 4, 5}) {
        CotangentChart chart(k, 2, 2);
        auto one = chart.constant(Rational(1));
        REQUIRE(poisson(chart.gen(chart.p(0)), chart.gen(chart.x(0)), chart) == one);
        REQUIRE(poisson(chart.gen(chart.p(0)), chart.gen(chart.x(1)), chart).is_zero());
        REQUIRE(poisson(chart.gen(chart.x(0)), chart.gen(chart.p(0)), chart) == -one);
        REQUIRE(poisson(chart.gen(chart.a(0)), chart.gen(chart.alpha(0)), chart) == one);
        REQUIRE(poisson(chart.gen(chart.alpha(0)), chart.gen(chart.a(0)), chart) ==
                Rational(sgn_pow(k)) * one);
        REQUIRE(poisson(chart.gen(chart.a(0)), chart.gen(chart.a(1)), chart).is_zero());
        REQUIRE(poisson(chart.gen(chart.p(0)), chart.gen(chart.p(1)), chart).is_zero());
        REQUIRE(poisson(chart.gen(chart.p(0)), chart.gen(chart.alpha(0)), chart).is_zero());
    }
}

TEST_CASE("bracket with a-generator acts as fibre derivative") {
    for (int k : {3, 4, 5}) {
        CotangentChart chart(k, 1, 3);
        auto al1 = chart.gen(chart.alpha(0)), al2 = chart.gen(chart.alpha(1));
        auto got = poisson(chart.gen(chart.a(0)), al1 * al2, chart);
        REQUIRE(got == al2);

        // cross-check against the Leibniz extension of d/d(al1)
        std::vector<GradedPoly> unit = {chart.constant(Rational(1)), chart.zero(), chart.zero()};
        auto d = alpha_contraction(chart, unit);
        REQUIRE(got == d(al1 * al2));
    }
}

TEST_CASE("Poisson axioms on random homogeneous triples") {
    for (int k : {3, 4, 5}) {
        CotangentChart chart(k, 2, 3);
        const auto& table = chart.table();
        Rng rng(100 + static_cast<std::uint64_t>(k));
        for (int iter = 0; iter < 60; ++iter) {
            const int df = static_cast<int>(rng.range(0, k + 2));
            const int dg = static_cast<int>(rng.range(0, k + 2));
            const int dh = static_cast<int>(rng.range(0, k + 2));
            auto f = random_homogeneous(table, df, 2, rng, 1);
            auto g = random_homogeneous(table, dg, 2, rng, 1);
            auto h = random_homogeneous(table, dh, 2, rng, 1);

            // (1) graded skew symmetry
            REQUIRE(poisson(f, g, chart) ==
                    Rational(-sgn_pow((df + k) * (dg + k))) * poisson(g, f, chart));

            // (2) Leibniz
            REQUIRE(poisson(f, g * h, chart) ==
                    poisson(f, g, chart) * h +
                        Rational(sgn_pow((df + k) * dg)) * (g * poisson(f, h, chart)));

            // (3) Jacobi
            REQUIRE(poisson(f, poisson(g, h, chart), chart) ==
                    poisson(poisson(f, g, chart), h, chart) +
                        Rational(sgn_pow((df + k) * (dg + k))) *
                            poisson(g, poisson(f, h, chart), chart));
        }
    }
}

TEST_CASE("degree-(k-1) pairing realization") {
    for (int k : {3, 4, 5}) {
        CotangentChart chart(k, 1, 4);
        Rng rng(40 + static_cast<std::uint64_t>(k));
        for (int iter = 0; iter < 25; ++iter) {
            // e1 = a + omega, e2 = b + eta with base-coefficient sections
            std::vector<GradedPoly> ac, bc;
            GradedPoly e1 = chart.zero(), e2 = chart.zero();
            for (int j = 0; j < 4; ++j) {
                auto f = random_homogeneous(chart.table(), 0, 1, rng, 2);
                auto g = random_homogeneous(chart.table(), 0, 1, rng, 2);
                ac.push_back(f);
                bc.push_back(g);
                e1 += f * chart.gen(chart.a(j));
                e2 += g * chart.gen(chart.a(j));
            }
            GradedPoly omega = random_homogeneous(chart.table(), k - 1, 2, rng, 1);
            GradedPoly eta = random_homogeneous(chart.table(), k - 1, 2, rng, 1);
            // keep only pure-form parts (strip accidental a-terms at k=3,4 degrees)
            auto strip = [&](const GradedPoly& w) {
                GradedPoly out = chart.zero();
                for (const auto& [m, c] : w.terms())
                    if (!chart.a_count(m) && !chart.p_count(m))
                        out += GradedPoly::term(chart.table(), m, c);
                return out;
            };
            omega = strip(omega);
            eta = strip(eta);
            e1 += omega;
            e2 += eta;

            auto ia = alpha_contraction(chart, ac);
            auto ib = alpha_contraction(chart, bc);
            REQUIRE(poisson(e1, e2, chart) == ia(eta) + ib(omega));
        }
    }
}

TEST_CASE("hamiltonian vector fields") {
    CotangentChart chart(4, 2, 2);
    SECTION("zero function gives the zero derivation") {
        auto d = hamiltonian_vf(chart.zero(), chart);
        for (std::size_t i = 0; i < chart.table()->size(); ++i) REQUIRE(d.value(i).is_zero());
    }
    SECTION("theta = p1 translates x1") {
        auto d = hamiltonian_vf(chart.gen(chart.p(0)), chart);
        REQUIRE(d.degree() == 0);
        REQUIRE(d.value(chart.x(0)) == chart.constant(Rational(1)));
        for (std::size_t i = 1; i < chart.table()->size(); ++i) REQUIRE(d.value(i).is_zero());
    }
    SECTION("degree arithmetic") {
        auto theta = chart.gen(chart.p(0)) * chart.gen(chart.alpha(0)); // degree k+1
        auto d = hamiltonian_vf(theta, chart);
        REQUIRE(d.degree() == 1);
    }
    SECTION("non-homogeneous input rejected") {
        auto bad = chart.gen(chart.x(0)) + chart.gen(chart.alpha(0));
        REQUIRE_THROWS_AS(hamiltonian_vf(bad, chart), std::invalid_argument);
    }
}

TEST_CASE("twist automorphism") {
    for (int k : {3, 4}) {
        CotangentChart chart(k, 2, 3);
        Rng rng(900 + static_cast<std::uint64_t>(k));

        auto mk_b = [&]() {
            GradedPoly b = chart.zero();
            for (int tries = 0; tries < 6; ++tries) {
                auto cand = random_homogeneous(chart.table(), k, 2, rng, 1);
                for (const auto& [m, c] : cand.terms())
                    if (!chart.a_count(m) && !chart.p_count(m))
                        b += GradedPoly::term(chart.table(), m, c);
            }
            return TwistCochain(b, chart);
        };

        auto b = mk_b();
        SECTION("identity on base and fibre generators, k=" + std::to_string(k)) {
            REQUIRE(twist(b, chart.gen(chart.x(0)), chart) == chart.gen(chart.x(0)));
            REQUIRE(twist(b, chart.gen(chart.alpha(1)), chart) == chart.gen(chart.alpha(1)));
        }
        SECTION("zero cochain acts trivially, k=" + std::to_string(k)) {
            TwistCochain zero(chart.zero(), chart);
            auto f = random_homogeneous(chart.table(), k + 1, 4, rng, 1);
            REQUIRE(twist(zero, f, chart) == f);
        }
        SECTION("multiplicativity, k=" + std::to_string(k)) {
            for (int iter = 0; iter < 10; ++iter) {
                auto f = random_homogeneous(chart.table(), static_cast<int>(rng.range(0, k + 1)), 2, rng, 1);
                auto g = random_homogeneous(chart.table(), static_cast<int>(rng.range(0, k + 1)), 2, rng, 1);
                REQUIRE(twist(b, f * g, chart) == twist(b, f, chart) * twist(b, g, chart));
            }
        }
        SECTION("preserves the bracket, k=" + std::to_string(k)) {
            for (int iter = 0; iter < 10; ++iter) {
                auto f = random_homogeneous(chart.table(), static_cast<int>(rng.range(0, k + 2)), 2, rng, 1);
                auto g = random_homogeneous(chart.table(), static_cast<int>(rng.range(0, k + 2)), 2, rng, 1);
                REQUIRE(poisson(twist(b, f, chart), twist(b, g, chart), chart) ==
                        twist(b, poisson(f, g, chart), chart));
            }
        }
    }
}

TEST_CASE("twist cochain validation") {
    CotangentChart chart(4, 1, 2);
    REQUIRE_THROWS_AS(TwistCochain(chart.gen(chart.alpha(0)), chart), std::invalid_argument);
    REQUIRE_THROWS_AS(TwistCochain(chart.gen(chart.p(0)), chart), std::invalid_argument);
}

TEST_CASE("section decomposition") {
    CotangentChart chart(4, 2, 3);
    SECTION("pure fibre direction") {
        auto s = decompose_section(chart.gen(chart.a(0)), chart);
        REQUIRE(s.a_part[0] == chart.constant(Rational(1)));
        REQUIRE(s.a_part[1].is_zero());
        REQUIRE(s.form.is_zero());
    }
    SECTION("pure form") {
        auto w = chart.gen(chart.alpha(0)) * chart.gen(chart.alpha(1)) * chart.gen(chart.alpha(2));
        auto s = decompose_section(w, chart);
        for (const auto& c : s.a_part) REQUIRE(c.is_zero());
        REQUIRE(s.form == w);
    }
    SECTION("mixed input") {
        auto w = chart.gen(chart.alpha(0)) * chart.gen(chart.alpha(1)) * chart.gen(chart.alpha(2));
        auto e = chart.gen(chart.x(0)) * chart.gen(chart.a(1)) + Rational(3) * w;
        auto s = decompose_section(e, chart);
        REQUIRE(s.a_part[1] == chart.gen(chart.x(0)));
        REQUIRE(s.form == Rational(3) * w);
        REQUIRE(section_poly(s, chart) == e);
    }
    SECTION("rejects momenta and wrong degrees") {
        REQUIRE_THROWS_AS(decompose_section(chart.gen(chart.p(0)), chart), std::invalid_argument);
        REQUIRE_THROWS_AS(decompose_section(chart.gen(chart.alpha(0)), chart), std::invalid_argument);
    }
}
