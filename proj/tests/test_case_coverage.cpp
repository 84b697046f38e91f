// Every analyzed branching case must be reachable, not just correct when
// reached. Each instance here is built to survive the reduction rules and
// land in one specific case; the sweep cross-checks decisions against the
// oracle while the hooks confirm the case fired.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pvc/branching.hpp"
#include "pvc/oracle.hpp"

using namespace pvc;
using pvc::test::make;

namespace {

bool fires(const DpvcInstance& inst, const std::string& rule) {
    bool seen = false;
    SolveHooks h;
    h.on_rule = [&](const std::string& r, const DpvcInstance&, const DpvcInstance&, Power) {
        if (r == rule) seen = true;
    };
    h.on_branch = [&](const std::string& r, const DpvcInstance&,
                      const std::vector<std::pair<DpvcInstance, Power>>&) {
        if (r == rule) seen = true;
    };
    Power opt = brute_force_value(inst);
    for (Power P = 0; P <= opt + 2; ++P) {
        SolveOutcome o = algorithm2_solve(inst, P, &h);
        REQUIRE(o.yes == (P >= opt));
        if (o.yes) {
            REQUIRE(o.witness.has_value());
            CHECK(is_feasible(inst, *o.witness));
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("degree-4 cases of the weight-2 analysis are reachable") {
    // one unit out-edge, three weight-2 out-edges
    auto c1a = make(6, {{0, 1, 2, 1},
                        {0, 2, 2, 1},
                        {0, 3, 2, 1},
                        {0, 4, 1, 1},
                        {4, 5, 1, 1},
                        {1, 5, 1, 1}});
    CHECK(fires(c1a, "w2.c1a"));

    // three unit out-edges, one weight-2: forced adjust on the far endpoint
    auto c1b = make(6, {{0, 1, 2, 1},
                        {0, 2, 1, 1},
                        {0, 3, 1, 1},
                        {0, 4, 1, 1},
                        {2, 5, 1, 1},
                        {3, 5, 1, 1},
                        {4, 5, 1, 1}});
    CHECK(fires(c1b, "w2.c1b"));

    // two weight-2 out-edges, one with a degree-2 endpoint: branch on it
    auto c1c = make(7, {{0, 1, 2, 1},
                        {0, 2, 2, 1},
                        {0, 3, 1, 1},
                        {0, 4, 1, 1},
                        {2, 5, 1, 1},
                        {3, 6, 1, 1},
                        {4, 6, 1, 1},
                        {5, 6, 1, 1}});
    CHECK(fires(c1c, "w2.c1c"));
}

TEST_CASE("degree-3 cases of the weight-2 analysis are reachable") {
    // out (2,2,1) with the unit neighbor demanding 2 and pendant weight-2
    // neighbors: finalize u at 2 without branching
    auto c2a_forced = make(7, {{0, 1, 2, 1},
                               {0, 2, 2, 1},
                               {0, 3, 1, 2},
                               {3, 4, 1, 2},
                               {4, 5, 1, 1},
                               {4, 6, 1, 1},
                               {5, 6, 1, 1}});
    CHECK(fires(c2a_forced, "w2.c2a.forced"));

    // like above but a weight-2 neighbor has degree 2: branch on it
    auto c2a_ii = make(8, {{0, 1, 2, 1},
                           {0, 2, 2, 1},
                           {0, 3, 1, 2},
                           {3, 4, 1, 2},
                           {4, 5, 1, 1},
                           {4, 6, 1, 1},
                           {5, 6, 1, 1},
                           {1, 7, 1, 1},
                           {7, 5, 1, 1}});
    CHECK(fires(c2a_ii, "w2.c2a.ii"));

    // single (2,2) out-edge whose far endpoint has another weight-2 edge
    auto c2b = make(6, {{0, 1, 2, 2},
                        {0, 2, 1, 1},
                        {0, 3, 1, 1},
                        {1, 4, 2, 1},
                        {2, 5, 1, 1},
                        {3, 5, 1, 1}});
    CHECK(fires(c2b, "w2.c2b"));
}

TEST_CASE("weight-3 cases are reachable") {
    // single distance-2 vertex with unit links: detach and finish exactly
    auto pendant = make(6, {{0, 1, 3, 1},
                            {0, 2, 1, 1},
                            {0, 3, 2, 1},
                            {0, 4, 2, 1},
                            {1, 5, 1, 1},
                            {2, 5, 1, 1}});
    CHECK(fires(pendant, "alg2.step5.pendant"));

    // two distance-2 vertices: the general branch
    auto general = make(7, {{0, 1, 3, 1},
                            {0, 2, 1, 1},
                            {0, 3, 2, 1},
                            {0, 4, 2, 1},
                            {1, 5, 1, 1},
                            {2, 6, 1, 1},
                            {5, 6, 1, 1}});
    CHECK(fires(general, "alg2.step5.general"));

    // no distance-2 vertices at all: the whole component detaches
    auto component = make(5, {{0, 1, 3, 1}, {0, 2, 1, 1}, {0, 3, 2, 1}, {0, 4, 2, 1}, {1, 2, 1, 1}});
    CHECK(fires(component, "alg2.step5.component"));
}

TEST_CASE("remaining structural rules are reachable") {
    auto all2 = make(4, {{0, 1, 2, 2}, {0, 2, 2, 2}, {1, 3, 2, 1}, {2, 3, 2, 1}});
    CHECK(fires(all2, "w2.all2"));

    auto c3a = make(4, {{0, 1, 2, 2}, {0, 2, 1, 1}, {1, 3, 2, 1}, {2, 3, 1, 1}});
    CHECK(fires(c3a, "w2.c3a"));

    // a (2,2) edge in an otherwise-unit path, with the path ends tied
    // together so no vertex becomes cheaper to cover from outside
    auto rr3 = make(5, {{0, 1, 1, 1}, {1, 2, 2, 2}, {2, 3, 1, 1}, {0, 4, 1, 1}, {3, 4, 1, 1}});
    CHECK(fires(rr3, "rr3"));

    // unit wheel: the hub's neighbors cost 5 to buy out
    auto br1 = make(6, {{0, 1, 1, 1},
                        {0, 2, 1, 1},
                        {0, 3, 1, 1},
                        {0, 4, 1, 1},
                        {0, 5, 1, 1},
                        {1, 2, 1, 1},
                        {2, 3, 1, 1},
                        {3, 4, 1, 1},
                        {4, 5, 1, 1},
                        {5, 1, 1, 1}});
    CHECK(fires(br1, "br1"));

    // a {2,3} demand pair
    auto step4_23 = make(6, {{0, 1, 3, 2},
                             {0, 2, 1, 1},
                             {0, 3, 1, 1},
                             {1, 4, 1, 1},
                             {2, 5, 1, 1},
                             {3, 5, 1, 1},
                             {4, 5, 1, 1}});
    CHECK(fires(step4_23, "alg2.step4"));

    // demands summing to six
    auto step4_6 = make(5, {{0, 1, 3, 3}, {0, 2, 1, 1}, {1, 3, 1, 1}, {2, 4, 1, 1}, {3, 4, 1, 1}});
    CHECK(fires(step4_6, "alg2.step4"));
}
