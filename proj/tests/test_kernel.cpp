#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pvc/engines.hpp"
#include "pvc/kernel.hpp"
#include "pvc/ksolvers.hpp"
#include "pvc/oracle.hpp"

using namespace pvc;
using pvc::test::make;

TEST_CASE("kernel collapses a high-degree unit star") {
    // K_{1,k+1} with k=1: the center is forced, then everything drains away
    auto star = make(3, {{0, 1, 1, 1}, {0, 2, 1, 1}});
    KernelOutcome ko = kernelize(star, 1);
    REQUIRE_FALSE(ko.answer_no);
    CHECK(ko.reduced.n() == 0);
    CHECK(ko.k_remaining == 0);
}

TEST_CASE("kernel leaves small matchings alone") {
    // k+2 disjoint unit edges with parameter k: no rule fires
    for (Power k : {3, 4}) {
        int m = static_cast<int>(k) + 2;
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) edges.push_back({2 * i, 2 * i + 1, 1, 1});
        DpvcInstance inst(2 * m, std::move(edges));
        KernelOutcome ko = kernelize(inst, k);
        REQUIRE_FALSE(ko.answer_no);
        CHECK(ko.reduced.n() == inst.n());
        CHECK(ko.k_remaining == k);
        // support needs k+2 > k, so the solve still answers NO
        CHECK_FALSE(solve_dpvc_k(ko.reduced, ko.k_remaining, nullptr, &ko.marked).yes);
    }
}

TEST_CASE("kernel size bound holds") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto inst = pvc::test::random_instance(seed, 10, 16, 5, seed % 3 == 0);
        for (Power k = 0; k <= 4; ++k) {
            KernelOutcome ko = kernelize(inst, k);
            if (ko.answer_no) continue;
            CHECK(static_cast<Power>(ko.reduced.n()) <= ko.k_remaining * (ko.k_remaining + 1));
            for (Vertex v = 0; v < ko.reduced.n(); ++v) CHECK(ko.reduced.degree(v) > 0);
        }
    }
}

TEST_CASE("kernel-then-solve equals direct solve") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto inst = pvc::test::random_instance(seed, 10, 14, 5, seed % 2 == 0);
        int opt = brute_force_min_support(inst);
        for (Power k = 0; k <= opt + 2; ++k) {
            SolveOutcome combined = kernel_then_branch_k(inst, k);
            INFO("seed=" << seed << " k=" << k << " opt=" << opt);
            REQUIRE(combined.yes == (k >= opt));
            if (combined.yes) {
                REQUIRE(combined.witness.has_value());
                CHECK(is_feasible(inst, *combined.witness));
                CHECK(combined.witness->support() <= k);
            }
        }
    }
}

TEST_CASE("kernel keeps adjusted vertices accountable") {
    // hub with one cheap edge and two expensive ones, the cheap neighbors of
    // the expensive side carrying their own pendants: dropping the hub's
    // outstanding charge would flip the k=2 answer
    auto inst = make(6, {{0, 1, 5, 1},   // hub 0
                         {0, 2, 5, 1},
                         {0, 3, 1, 1},
                         {1, 4, 1, 1},
                         {2, 5, 1, 1}});
    REQUIRE(brute_force_min_support(inst) == 3);
    KernelOutcome ko = kernelize(inst, 2);
    REQUIRE_FALSE(ko.answer_no);
    // the hub was adjusted but is still alive, so it stays marked
    bool any_marked = false;
    for (char m : ko.marked) any_marked |= (m != 0);
    CHECK(any_marked);
    CHECK_FALSE(solve_dpvc_k(ko.reduced, ko.k_remaining, nullptr, &ko.marked).yes);
    CHECK_FALSE(kernel_then_branch_k(inst, 2).yes);
    CHECK(kernel_then_branch_k(inst, 3).yes);
}

TEST_CASE("kernelization is idempotent") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto inst = pvc::test::random_instance(seed, 10, 14, 5, seed % 2 == 1);
        for (Power k = 0; k <= 4; ++k) {
            KernelOutcome once = kernelize(inst, k);
            if (once.answer_no) continue;
            KernelOutcome twice = kernelize(once.reduced, once.k_remaining);
            REQUIRE_FALSE(twice.answer_no);
            CHECK(twice.reduced.n() == once.reduced.n());
            CHECK(twice.reduced.m() == once.reduced.m());
            CHECK(twice.k_remaining == once.k_remaining);
        }
    }
}

TEST_CASE("kernel witness lifting is feasible") {
    for (std::uint64_t seed = 200; seed <= 260; ++seed) {
        auto inst = pvc::test::random_instance(seed, 10, 14, 5, seed % 2 == 0);
        int opt = brute_force_min_support(inst);
        KernelOutcome ko = kernelize(inst, opt);
        if (ko.answer_no) continue;
        SolveOutcome sub = solve_dpvc_k(ko.reduced, ko.k_remaining, nullptr, &ko.marked);
        REQUIRE(sub.yes);
        PowerAssignment lifted = kernel_lift(ko, *sub.witness);
        CHECK(is_feasible(inst, lifted));
        CHECK(lifted.support() <= opt);
    }
}
