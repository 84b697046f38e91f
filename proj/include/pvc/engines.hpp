#pragma once

// Uniform front door over the solvers: decision calls, optimization via
// budget sweeps from the LP lower bound, and witness verification.

#include <optional>
#include <string>

#include "pvc/branching.hpp"
#include "pvc/core.hpp"
#include "pvc/fptas.hpp"
#include "pvc/kernel.hpp"
#include "pvc/ksolvers.hpp"
#include "pvc/lp.hpp"
#include "pvc/oracle.hpp"
#include "pvc/tree_decomposition.hpp"
#include "pvc/treewidth_dp.hpp"

namespace pvc {

enum class Engine { Brute, BranchP, BranchK, HybridK, TwExact, TwApprox };

inline const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Brute: return "brute";
        case Engine::BranchP: return "branch-p";
        case Engine::BranchK: return "branch-k";
        case Engine::HybridK: return "hybrid-k";
        case Engine::TwExact: return "tw-exact";
        case Engine::TwApprox: return "tw-approx";
    }
    return "?";
}

inline std::optional<Engine> engine_from_name(const std::string& s) {
    for (Engine e : {Engine::Brute, Engine::BranchP, Engine::BranchK, Engine::HybridK,
                     Engine::TwExact, Engine::TwApprox})
        if (s == engine_name(e)) return e;
    return std::nullopt;
}

// branch-p picks the symmetric or the general algorithm by inspection.
inline SolveOutcome branch_p_decide(const DpvcInstance& inst, Power P,
                                    const SolveHooks* hooks = nullptr) {
    return inst.symmetric() ? algorithm1_solve(inst, P, hooks) : algorithm2_solve(inst, P, hooks);
}

// branch-k likewise.
inline SolveOutcome branch_k_decide(const DpvcInstance& inst, Power k,
                                    const SolveHooks* hooks = nullptr) {
    return inst.symmetric() ? solve_pvc_k(inst, k, hooks) : solve_dpvc_k(inst, k, hooks);
}

// Kernelize, then run the k-solver on the reduced instance with its marks.
inline SolveOutcome kernel_then_branch_k(const DpvcInstance& inst, Power k) {
    KernelOutcome ko = kernelize(inst, k);
    SolveOutcome out;
    if (ko.answer_no) {
        out.yes = false;
        return out;
    }
    SolveOutcome sub = solve_dpvc_k(ko.reduced, ko.k_remaining, nullptr, &ko.marked);
    out.yes = sub.yes;
    out.stats = sub.stats;
    if (sub.yes && sub.witness) {
        PowerAssignment reduced_w = *sub.witness;
        out.witness = kernel_lift(ko, reduced_w);
    }
    return out;
}

struct OptimizeResult {
    Power value = 0;
    PowerAssignment witness;
    long long nodes = 0;
};

// Minimum total power by sweeping decision budgets upward from the LP bound.
inline OptimizeResult optimize_value_by_sweep(const DpvcInstance& inst, Engine engine) {
    if (engine != Engine::BranchP)
        throw std::invalid_argument("value sweep needs the branch-p engine");
    OptimizeResult out;
    for (Power P = lp_lower_bound(inst);; ++P) {
        SolveOutcome o = branch_p_decide(inst, P);
        out.nodes += o.stats.nodes;
        if (o.yes) {
            out.value = P;
            out.witness = *o.witness;
            return out;
        }
    }
}

// Minimum support by sweeping k upward from zero.
inline OptimizeResult optimize_support_by_sweep(const DpvcInstance& inst, Engine engine) {
    OptimizeResult out;
    for (Power k = 0;; ++k) {
        SolveOutcome o;
        if (engine == Engine::BranchK)
            o = branch_k_decide(inst, k);
        else if (engine == Engine::HybridK)
            o = hybrid_k_solve(inst, k);
        else
            throw std::invalid_argument("support sweep needs a k engine");
        out.nodes += o.stats.nodes;
        if (o.yes) {
            out.value = k;
            out.witness = *o.witness;
            return out;
        }
        if (k > inst.n()) throw std::logic_error("support sweep ran past n");
    }
}

}  // namespace pvc
