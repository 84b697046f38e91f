#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "helpers.hpp"
#include "pvc/generators.hpp"
#include "pvc/io.hpp"
#include "pvc/lp.hpp"
#include "pvc/oracle.hpp"
#include "pvc/tree_decomposition.hpp"
#include "pvc/treewidth_dp.hpp"

using namespace pvc;
using pvc::test::vc_by_enumeration;
using pvc::test::vc_from_mask;

TEST_CASE("clique reduction correspondence on small graphs") {
    // K2: one edge, VC 1 -> optimum 2 + 1
    VcInstance k2{2, {{0, 1}}};
    auto inst = gen_clique_reduction(k2, 2);
    CHECK(inst.n() == 3);
    CHECK(brute_force_value(inst) == 3);
    // P3: path, VC 1 -> 3 + 1
    VcInstance p3{3, {{0, 1}, {1, 2}}};
    CHECK(brute_force_value(gen_clique_reduction(p3, 2)) == 4);
    // empty graph on 3 vertices -> 3 + 0
    VcInstance e3{3, {}};
    CHECK(brute_force_value(gen_clique_reduction(e3, 2)) == 3);
}

TEST_CASE("clique reduction correspondence, exhaustive n=4 and larger K") {
    for (unsigned mask = 0; mask < 64; ++mask) {
        VcInstance g = vc_from_mask(4, mask);
        int vc = vc_by_enumeration(g);
        CHECK(brute_force_value(gen_clique_reduction(g, 2)) == 4 + vc);
        // general K: cover vertices pay K, the other originals pay 1
        CHECK(brute_force_value(gen_clique_reduction(g, 4)) == 4LL * vc + (4 - vc));
    }
}

TEST_CASE("zero-vertex construction correspondence") {
    VcInstance single{2, {{0, 1}}};
    auto inst = gen_zero_vertex(single);
    CHECK(inst.n() == 4);
    CHECK(brute_force_value(inst) == 3);
    VcInstance p3{3, {{0, 1}, {1, 2}}};
    CHECK(brute_force_value(gen_zero_vertex(p3)) == 5);

    LpSolution sol = solve_rpvc(gen_zero_vertex(single));
    CHECK(sol.x[0] == 0);
    CHECK(sol.x[1] == 0);
    CHECK(sol.value == 2);
}

TEST_CASE("zero-vertex correspondence over all 4-vertex graphs with <= 4 edges") {
    for (unsigned mask = 0; mask < 64; ++mask) {
        VcInstance g = vc_from_mask(4, mask);
        if (g.edges.size() > 4) continue;
        auto inst = gen_zero_vertex(g);
        Power expect = 2 * static_cast<Power>(g.edges.size()) + vc_by_enumeration(g);
        CHECK(brute_force_value(inst) == expect);
        LpSolution sol = solve_rpvc(inst);
        for (Vertex v = 0; v < g.n; ++v) CHECK(sol.x[v] == 0);
    }
}

TEST_CASE("lp gap instance shape") {
    auto inst = gen_lp_gap();
    CHECK(inst.n() == 5);
    CHECK(inst.m() == 6);
    CHECK(inst.symmetric());
}

TEST_CASE("tw-hardness: single choice gadget") {
    McisInstance m{1, 2, {}};
    TwHardnessResult r = gen_tw_hardness(m);
    CHECK(r.inst.n() == 6);
    CHECK(r.inst.m() == 6);
    CHECK(r.target == 6);
    CHECK(brute_force_value(r.inst) == 6);
}

TEST_CASE("tw-hardness: k=2 n=2 with one cross edge (independent set exists)") {
    McisInstance m{2, 2, {{1, 1, 2, 1}}};
    TwHardnessResult r = gen_tw_hardness(m);
    CHECK(r.target == 2 * 6 + 3 * 1 * 2);
    NiceTreeDecomposition ntd = make_nice(min_fill_decomposition(r.inst));
    DpResult dp = solve_tw_degree(r.inst, ntd);
    REQUIRE(dp.feasible);
    CHECK(dp.value == r.target);
    CHECK(mcis_has_independent_set(m));
}

TEST_CASE("tw-hardness: no independent set makes the optimum exceed the target") {
    McisInstance m{2, 1, {{1, 1, 2, 1}}};
    TwHardnessResult r = gen_tw_hardness(m);
    CHECK_FALSE(mcis_has_independent_set(m));
    NiceTreeDecomposition ntd = make_nice(min_fill_decomposition(r.inst));
    DpResult dp = solve_tw_degree(r.inst, ntd);
    REQUIRE(dp.feasible);
    CHECK(dp.value > r.target);
}

TEST_CASE("tw-hardness correspondence over all k=2 n=2 cross-edge subsets") {
    for (unsigned mask = 0; mask < 16; ++mask) {
        McisInstance m{2, 2, {}};
        int bit = 0;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j, ++bit)
                if (mask >> bit & 1) m.edges.push_back({1, i, 2, j});
        TwHardnessResult r = gen_tw_hardness(m);
        std::string why;
        TreeDecomposition td = min_fill_decomposition(r.inst);
        REQUIRE(validate_decomposition(r.inst, td, &why));
        NiceTreeDecomposition ntd = make_nice(td);
        DpResult dp = solve_tw_degree(r.inst, ntd);
        REQUIRE(dp.feasible);
        INFO("mask=" << mask << " target=" << r.target << " value=" << dp.value);
        if (mcis_has_independent_set(m))
            CHECK(dp.value == r.target);
        else
            CHECK(dp.value > r.target);
    }
}

TEST_CASE("random generator is deterministic and valid") {
    auto a = gen_random(9, 14, 5, true, 42);
    auto b = gen_random(9, 14, 5, true, 42);
    std::ostringstream sa, sb;
    write_instance(sa, a);
    write_instance(sb, b);
    CHECK(sa.str() == sb.str());
    CHECK(gen_random(5, 0, 3, false, 1).m() == 0);
    CHECK_THROWS_AS(gen_random(3, 4, 2, false, 1), std::invalid_argument);
    auto c = gen_random(9, 14, 5, true, 7);
    auto round = parse_instance(sa.str());
    CHECK(round.m() == a.m());
    (void)c;
}

TEST_CASE("generated instances pass validation round trips") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto inst = gen_random(8, 12, 6, seed % 2 == 0, seed);
        std::ostringstream os;
        write_instance(os, inst);
        auto back = parse_instance(os.str());
        CHECK(back.n() == inst.n());
        CHECK(back.m() == inst.m());
    }
}

TEST_CASE("both exact engines agree on a gadget instance") {
    McisInstance m{2, 2, {{1, 2, 2, 1}, {1, 1, 2, 2}}};
    TwHardnessResult r = gen_tw_hardness(m);
    NiceTreeDecomposition ntd = make_nice(min_fill_decomposition(r.inst));
    DpResult a = solve_tw_maxweight(r.inst, ntd);
    DpResult b = solve_tw_degree(r.inst, ntd);
    REQUIRE(a.feasible);
    REQUIRE(b.feasible);
    CHECK(a.value == b.value);
}
