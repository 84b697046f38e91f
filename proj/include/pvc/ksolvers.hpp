#pragma once

// Support-parameterized DPVC solvers.
//
//   solve_dpvc_k — high-degree reduction plus (s+1)-ary branching: for a
//     heaviest edge (u,v) either u covers it (finalize u at that demand) or
//     v does, at one of its incident demand levels >= w_{v,u}.
//
//   hybrid_k_solve — maintains sets C1/C2/I with I shrinking toward an
//     independent set and C1 u C2 toward the support; every branching grows
//     |C1 u C2| + |C2|, so at most 4^k leaves are produced. Leaves are
//     finished exactly by the brute-force oracle on <= k live vertices.

#include <optional>

#include "pvc/branching.hpp"
#include "pvc/kernel.hpp"

namespace pvc {

namespace detail {

class DpvcKSolver : public BranchingSolverBase {
public:
    DpvcKSolver(const DpvcInstance& inst, Power k, const SolveHooks* hooks,
                const std::vector<char>* seed_marks)
        : BranchingSolverBase(inst, k, BudgetMode::Support, hooks) {
        if (seed_marks)
            for (Vertex v = 0; v < inst.n(); ++v)
                if ((*seed_marks)[v]) st_.seed_mark(v);
    }

protected:
    bool step() override {
        ++stats_.nodes;
        while (st_.budget() >= 0 && apply_high_degree_rule(st_)) stats_.bump("high_degree");
        if (st_.budget() < 0) return leaf(false);
        if (st_.live_edge_count() == 0) return leaf(true);

        // all degrees are <= k now; branch on u's heaviest edge
        Vertex u = -1;
        for (Vertex x = 0; x < st_.original().n() && u < 0; ++x)
            if (st_.vertex_alive(x) && st_.degree(x) > 0) u = x;
        Power wu = st_.max_out_demand(u);
        Vertex v = -1;
        Power wvu = 0;
        for (auto [z, e] : sorted_live_neighbors(u)) {
            if (st_.residual_demand_of(e, u) != wu) continue;
            v = z;
            wvu = st_.residual_demand_of(e, v);
            break;
        }
        std::vector<Power> levels;
        for (int e : st_.original().incident(v)) {
            if (!st_.edge_alive(e)) continue;
            Power w = st_.residual_demand_of(e, v);
            if (w >= wvu) levels.push_back(w);
        }
        std::sort(levels.rbegin(), levels.rend());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

        std::vector<std::function<void()>> children;
        children.push_back([this, u, wu] { st_.set_power(u, wu); });
        for (Power w : levels) children.push_back([this, v, w] { st_.set_power(v, w); });
        return explore("kdpvc.branch", children);
    }
};

class HybridSolver : public BranchingSolverBase {
public:
    HybridSolver(const DpvcInstance& inst, Power k, const SolveHooks* hooks)
        : BranchingSolverBase(inst, k, BudgetMode::Support, hooks),
          k_(k),
          status_(inst.n(), kInI) {}

protected:
    enum VertexStatus { kInI = 0, kInC1 = 1, kInC2 = 2 };

    bool step() override {
        ++stats_.nodes;
        // rule 1: C1 vertices with no live edge into I retire to C2
        for (Vertex x = 0; x < st_.original().n(); ++x)
            if (st_.vertex_alive(x) && status_[x] == kInC1 && !has_edge_to_I(x)) status_[x] = kInC2;

        if (st_.budget() < 0) return leaf(false);
        if (st_.live_edge_count() == 0) return leaf(true);

        Power committed = counted();

        // rule 2: an edge inside I must be covered by one of its endpoints
        for (int e = 0; e < st_.original().m(); ++e) {
            if (!st_.edge_alive(e)) continue;
            const Edge& ed = st_.original().edge(e);
            if (status_[ed.u] != kInI || status_[ed.v] != kInI) continue;
            if (committed >= k_) return leaf(false);  // a fresh support vertex is unavoidable
            Power a = st_.residual_wu(e), b = st_.residual_wv(e);
            return explore_with_status("hyb.rule2",
                                       {[this, u = ed.u, a] {
                                            st_.adjust(u, a);
                                            if (st_.vertex_alive(u)) status_[u] = kInC1;
                                        },
                                        [this, v = ed.v, b] {
                                            st_.adjust(v, b);
                                            if (st_.vertex_alive(v)) status_[v] = kInC1;
                                        }});
        }

        // I is independent here; if edges into I remain they leave some C1 vertex
        Vertex u = -1;
        for (Vertex x = 0; x < st_.original().n() && u < 0; ++x)
            if (st_.vertex_alive(x) && status_[x] == kInC1 && has_edge_to_I(x)) u = x;

        if (u < 0) {
            // no edge is incident on I: finish the residual instance exactly
            return finish_leaf();
        }

        if (committed >= k_) {
            // support is exhausted: every remaining I vertex stays at zero, so
            // each C1 vertex covers its own edges into I
            stats_.bump("hyb.stop");
            while (u >= 0) {
                Power need = 0;
                for (int e : st_.original().incident(u)) {
                    if (!st_.edge_alive(e)) continue;
                    Vertex z = st_.original().edge(e).other(u);
                    if (status_[z] == kInI) need = std::max(need, st_.residual_demand_of(e, u));
                }
                st_.adjust(u, need);
                u = -1;
                for (Vertex x = 0; x < st_.original().n() && u < 0; ++x)
                    if (st_.vertex_alive(x) && status_[x] == kInC1 && has_edge_to_I(x)) u = x;
            }
            return step();
        }

        int eu = -1;
        Power wmax = -1;
        for (auto [z, e] : sorted_live_neighbors(u)) {
            if (status_[z] != kInI) continue;
            Power w = st_.residual_demand_of(e, u);
            if (w > wmax) {
                wmax = w;
                eu = e;
            }
        }
        Vertex v = st_.original().edge(eu).other(u);
        Power wvu = st_.residual_demand_of(eu, v);
        return explore_with_status("hyb.rule3", {[this, u, wmax] { st_.adjust(u, wmax); },
                                                 [this, v, wvu] {
                                                     st_.adjust(v, wvu);
                                                     if (st_.vertex_alive(v)) status_[v] = kInC1;
                                                 }});
    }

private:
    bool has_edge_to_I(Vertex x) const {
        for (int e : st_.original().incident(x)) {
            if (!st_.edge_alive(e)) continue;
            if (status_[st_.original().edge(e).other(x)] == kInI) return true;
        }
        return false;
    }

    // |C1 u C2| over the whole run: charges taken so far plus live marks
    Power counted() const {
        Power live_marked = 0;
        for (Vertex x = 0; x < st_.original().n(); ++x)
            if (st_.vertex_alive(x) && st_.marked(x)) ++live_marked;
        return (k_ - st_.budget()) + live_marked;
    }

    bool finish_leaf() {
        std::vector<Vertex> members;
        for (Vertex x = 0; x < st_.original().n(); ++x)
            if (st_.vertex_alive(x)) members.push_back(x);
        size_t mark = st_.checkpoint();
        commit_by_oracle(members);
        bool yes = st_.budget() >= 0;
        bool r = leaf(yes);
        st_.rollback(mark);
        return r;
    }

    bool explore_with_status(const char* rule, const std::vector<std::function<void()>>& children) {
        std::vector<int> saved = status_;
        stats_.bump(rule);
        const bool capture = hooks_ && hooks_->on_branch;
        std::optional<DpvcInstance> parent;
        if (capture) parent = st_.snapshot();
        std::vector<std::pair<DpvcInstance, Power>> kids;
        bool found = false;
        for (const auto& apply : children) {
            size_t mark = st_.checkpoint();
            Power b0 = st_.budget();
            apply();
            if (capture) kids.emplace_back(st_.snapshot(), b0 - st_.budget());
            if (!found) found = step();
            st_.rollback(mark);
            status_ = saved;
            if (found && !capture) break;
        }
        if (capture) hooks_->on_branch(rule, *parent, kids);
        return found;
    }

    Power k_;
    std::vector<int> status_;
};

}  // namespace detail

inline SolveOutcome solve_dpvc_k(const DpvcInstance& inst, Power k,
                                 const SolveHooks* hooks = nullptr,
                                 const std::vector<char>* seed_marks = nullptr) {
    return detail::DpvcKSolver(inst, k, hooks, seed_marks).run();
}

inline SolveOutcome hybrid_k_solve(const DpvcInstance& inst, Power k,
                                   const SolveHooks* hooks = nullptr) {
    return detail::HybridSolver(inst, k, hooks).run();
}

}  // namespace pvc
