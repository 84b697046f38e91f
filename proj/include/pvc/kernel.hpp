#pragma once

// Quadratic-vertex kernel for DPVC parameterized by support.
//
// Rules, applied to a fixpoint:
//   - a vertex of degree >= k+1 must cover all but at most k of its edges,
//     so it can be adjusted by its (k+1)-st largest outgoing demand;
//   - degree-0 vertices leave the graph, costing one unit of k when they
//     were adjusted before (handled inside BranchState).
//
// If more than k(k+1) vertices remain the answer is NO. Otherwise the
// residual instance together with the remaining budget and the set of
// still-live adjusted ("marked") vertices is an equivalent instance; marks
// matter because an adjusted vertex's eventual charge is still outstanding.

#include <optional>
#include <vector>

#include "pvc/branch_state.hpp"
#include "pvc/core.hpp"

namespace pvc {

struct KernelOutcome {
    bool answer_no = false;
    DpvcInstance reduced;
    Power k_remaining = 0;
    std::vector<Vertex> vertex_map;   // reduced id -> original id
    std::vector<char> marked;         // per reduced vertex
    std::vector<TraceOp> trace;       // for lifting witnesses
    int original_n = 0;
};

namespace detail {

// Applies one high-degree adjustment if some vertex has degree >= budget+1;
// the amount is the (budget+1)-st largest outgoing demand.
inline bool apply_high_degree_rule(BranchState& st) {
    Power k = st.budget();
    if (k < 0) return false;
    for (Vertex u = 0; u < st.original().n(); ++u) {
        if (!st.vertex_alive(u)) continue;
        if (static_cast<Power>(st.degree(u)) < k + 1) continue;
        std::vector<Power> out;
        for (int e : st.original().incident(u))
            if (st.edge_alive(e)) out.push_back(st.residual_demand_of(e, u));
        std::sort(out.rbegin(), out.rend());
        st.adjust(u, out[static_cast<size_t>(k)]);
        return true;
    }
    return false;
}

}  // namespace detail

inline KernelOutcome kernelize(const DpvcInstance& inst, Power k) {
    BranchState st(inst, k, BudgetMode::Support);
    while (st.budget() >= 0 && detail::apply_high_degree_rule(st)) {}
    KernelOutcome out;
    out.original_n = inst.n();
    if (st.budget() < 0) {
        out.answer_no = true;
        return out;
    }
    int live = 0;
    for (Vertex v = 0; v < inst.n(); ++v) live += st.vertex_alive(v);
    Power kk = st.budget();
    if (live > kk * (kk + 1)) {
        out.answer_no = true;
        return out;
    }
    out.reduced = st.snapshot(&out.vertex_map);
    out.k_remaining = kk;
    out.marked.assign(out.vertex_map.size(), false);
    for (size_t i = 0; i < out.vertex_map.size(); ++i)
        out.marked[i] = st.marked(out.vertex_map[i]);
    out.trace = st.trace();
    return out;
}

// Lift an assignment for the reduced instance back to the original one.
inline PowerAssignment kernel_lift(const KernelOutcome& k, const PowerAssignment& reduced_witness) {
    PowerAssignment residual(k.original_n);
    for (size_t i = 0; i < k.vertex_map.size(); ++i)
        residual.p[k.vertex_map[i]] = reduced_witness.at(static_cast<Vertex>(i));
    return lift_assignment(k.original_n, k.trace, residual);
}

}  // namespace pvc
