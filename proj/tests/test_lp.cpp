#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pvc/generators.hpp"
#include "pvc/lp.hpp"
#include "pvc/oracle.hpp"

using namespace pvc;
using pvc::test::make;
using pvc::test::single_edge;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    Rational r(6, 4);
    CHECK(numerator(r) == 3);
    CHECK(denominator(r) == 2);
    CHECK(to_string(r) == "3/2");
    CHECK(is_half_integral(r));
    CHECK_FALSE(is_half_integral(Rational(1, 3)));
}

TEST_CASE("lp on a single edge") {
    LpSolution sol = solve_rpvc(single_edge(5, 5));
    CHECK(sol.value == 5);
    CHECK(sol.basic);
    CHECK(check_semi_integrality(sol));
}

TEST_CASE("lp on the unit triangle is half-integral") {
    LpSolution sol = solve_rpvc(pvc::test::triangle_unit());
    CHECK(sol.value == Rational(3, 2));
    for (const Rational& x : sol.x) CHECK(x == Rational(1, 2));
    CHECK(check_semi_integrality(sol));
}

TEST_CASE("lp gap instance: fractional 4 vs integral 5, apex at zero") {
    auto inst = gen_lp_gap();
    LpSolution sol = solve_rpvc(inst);
    CHECK(sol.value == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(sol.x[v] == 1);
    CHECK(sol.x[4] == 0);
    CHECK(check_semi_integrality(sol));
    OracleResult oracle = brute_force_opt(inst);
    CHECK(oracle.opt_value == 5);
    CHECK(oracle.witness.p[4] > 0);
}

TEST_CASE("lp lower bound is sound") {
    CHECK(lp_lower_bound(single_edge(5, 5)) == 5);
    CHECK(lp_lower_bound(pvc::test::triangle_unit()) == 2);
    CHECK(lp_lower_bound(gen_lp_gap()) == 4);
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        auto inst = pvc::test::random_instance(seed, 9, 14, 5, seed % 2 == 0);
        CHECK(lp_lower_bound(inst) <= brute_force_value(inst));
    }
}

TEST_CASE("semi-integrality holds on random basic optima") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto inst = pvc::test::random_instance(seed, 10, 16, 5, false);
        LpSolution sol = solve_rpvc(inst);
        INFO("seed=" << seed);
        CHECK(check_semi_integrality(sol));
        CHECK(sol.value <= Rational(brute_force_value(inst)));
    }
}

TEST_CASE("non-basic solutions are rejected by the checker") {
    LpSolution sol = solve_rpvc(single_edge(2, 2));
    sol.basic = false;
    CHECK_THROWS_AS(check_semi_integrality(sol), std::invalid_argument);
    CHECK_THROWS_AS(solve_rpvc(single_edge(2, 1)), std::invalid_argument);
}

TEST_CASE("duality certificate: dual feasible with equal objective") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto inst = pvc::test::random_instance(seed, 9, 14, 5, false);
        LpSolution sol = solve_rpvc(inst);
        // dual feasibility: per-vertex load at most one, nonnegative weights
        std::vector<Rational> load(inst.n(), Rational(0));
        Rational dual_value = 0;
        for (int e = 0; e < inst.m(); ++e) {
            REQUIRE(sol.dual[e] >= 0);
            load[inst.edge(e).u] += sol.dual[e];
            load[inst.edge(e).v] += sol.dual[e];
            dual_value += sol.dual[e] * Rational(inst.edge(e).wu);
        }
        for (Vertex v = 0; v < inst.n(); ++v) REQUIRE(load[v] <= 1);
        // primal feasibility and exact objective equality
        for (const Edge& e : inst.edges()) REQUIRE(sol.x[e.u] + sol.x[e.v] >= Rational(e.wu));
        CHECK(dual_value == sol.value);
    }
}
