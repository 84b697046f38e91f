#pragma once

// Mutable residual instance shared by the branching solvers and the
// kernelizer. Supports the two core operations:
//
//   adjust(u, w): commit p_u >= w on top of what u already has; u's side of
//     every incident demand drops by w, covered edges disappear.
//   set_power(u, w): finalize u's residual power at w and delete u; every
//     edge u no longer covers is handed to its other endpoint via adjust.
//
// Budget accounting has two modes. TotalPower: every committed unit of power
// is charged. Support: a vertex is charged once, when it leaves the graph
// with positive committed power (adjusted vertices are marked and charged on
// removal).
//
// All mutations go through an undo stack (checkpoint/rollback) and a forward
// trace. Replaying the trace backwards lifts a solution of the residual
// instance to one of the original instance.

#include <cassert>
#include <optional>
#include <vector>

#include "pvc/core.hpp"

namespace pvc {

enum class BudgetMode { TotalPower, Support };

struct TraceOp {
    enum Kind { Adjust, Set, ReweightEdge, CommitVertex } kind;
    Vertex u = -1;
    Vertex v = -1;   // ReweightEdge: second endpoint
    Power w = 0;     // Adjust/Set/CommitVertex: power committed; ReweightEdge: delta added back on lift
    Power cover = 0; // ReweightEdge: post-rule demand, for picking the covering endpoint on lift
};

// Unwind a trace over an assignment of the final residual instance (indexed
// by original vertex ids) to obtain an assignment of the original instance.
inline PowerAssignment lift_assignment(int n, const std::vector<TraceOp>& trace,
                                       const PowerAssignment& residual = {}) {
    PowerAssignment a(n);
    for (size_t v = 0; v < residual.p.size() && v < a.p.size(); ++v) a.p[v] = residual.p[v];
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        switch (it->kind) {
            case TraceOp::Adjust:
            case TraceOp::Set:
            case TraceOp::CommitVertex:
                a.p[it->u] += it->w;
                break;
            case TraceOp::ReweightEdge:
                // the endpoint covering the reduced edge absorbs the delta
                if (a.p[it->u] >= it->cover) {
                    a.p[it->u] += it->w;
                } else {
                    assert(a.p[it->v] >= it->cover);
                    a.p[it->v] += it->w;
                }
                break;
        }
    }
    return a;
}

class BranchState {
public:
    BranchState(const DpvcInstance& inst, Power budget, BudgetMode mode)
        : inst_(&inst),
          mode_(mode),
          budget_(budget),
          wu_(inst.m()),
          wv_(inst.m()),
          edge_alive_(inst.m(), true),
          vertex_alive_(inst.n(), true),
          degree_(inst.n(), 0),
          marked_(inst.n(), false),
          forced_(inst.n(), 0),
          live_edges_(inst.m()) {
        for (int i = 0; i < inst.m(); ++i) {
            wu_[i] = inst.edge(i).wu;
            wv_[i] = inst.edge(i).wv;
        }
        for (Vertex v = 0; v < inst.n(); ++v) degree_[v] = inst.degree(v);
        remove_isolated_vertices();
    }

    const DpvcInstance& original() const { return *inst_; }
    BudgetMode mode() const { return mode_; }
    Power budget() const { return budget_; }
    int live_edge_count() const { return live_edges_; }
    bool edge_alive(int e) const { return edge_alive_[e]; }
    bool vertex_alive(Vertex v) const { return vertex_alive_[v]; }
    int degree(Vertex v) const { return degree_[v]; }
    bool marked(Vertex v) const { return marked_[v]; }
    Power forced(Vertex v) const { return forced_[v]; }
    Power residual_wu(int e) const { return wu_[e]; }
    Power residual_wv(int e) const { return wv_[e]; }
    Power residual_demand_of(int e, Vertex x) const { return inst_->edge(e).u == x ? wu_[e] : wv_[e]; }
    Power residual_demand_of_other(int e, Vertex x) const { return inst_->edge(e).u == x ? wv_[e] : wu_[e]; }
    const std::vector<TraceOp>& trace() const { return trace_; }

    // M(u): max residual demand on u's side.
    Power max_out_demand(Vertex u) const {
        Power m = 0;
        for (int e : inst_->incident(u))
            if (edge_alive_[e]) m = std::max(m, residual_demand_of(e, u));
        return m;
    }

    // P(u): total cost of covering all of u's edges from the other side.
    Power neighbor_cover_cost(Vertex u) const {
        Power s = 0;
        for (int e : inst_->incident(u))
            if (edge_alive_[e]) s += residual_demand_of_other(e, u);
        return s;
    }

    std::vector<Vertex> live_neighbors(Vertex u) const {
        std::vector<Vertex> out;
        for (int e : inst_->incident(u))
            if (edge_alive_[e]) out.push_back(inst_->edge(e).other(u));
        return out;
    }

    Power max_residual_demand() const {
        Power m = 0;
        for (int e = 0; e < inst_->m(); ++e)
            if (edge_alive_[e]) m = std::max({m, wu_[e], wv_[e]});
        return m;
    }

    bool all_unit() const {
        for (int e = 0; e < inst_->m(); ++e)
            if (edge_alive_[e] && (wu_[e] != 1 || wv_[e] != 1)) return false;
        return true;
    }

    bool residual_symmetric() const {
        for (int e = 0; e < inst_->m(); ++e)
            if (edge_alive_[e] && wu_[e] != wv_[e]) return false;
        return true;
    }

    // --- operations ---

    void adjust(Vertex u, Power w) {
        assert(vertex_alive_[u] && w > 0);
        adjust_no_cleanup(u, w);
        remove_isolated_vertices();
    }

    void set_power(Vertex u, Power w) {
        assert(vertex_alive_[u] && w >= 0);
        // collect cascade targets before touching edges
        std::vector<std::pair<Vertex, Power>> cascade;
        std::vector<int> incident;
        for (int e : inst_->incident(u)) {
            if (!edge_alive_[e]) continue;
            incident.push_back(e);
            if (residual_demand_of(e, u) > w)
                cascade.push_back({inst_->edge(e).other(u), residual_demand_of_other(e, u)});
        }
        for (int e : incident) kill_edge(e);
        record_forced(u, w);
        if (mode_ == BudgetMode::TotalPower) {
            spend(w);
        } else if (w > 0 || marked_[u]) {
            spend(1);
        }
        kill_vertex(u);
        push_trace({TraceOp::Set, u, -1, w, 0});
        for (auto [z, wz] : cascade)
            if (vertex_alive_[z]) adjust_no_cleanup(z, wz);
        remove_isolated_vertices();
    }

    // Reduce the demand of live edge e: on lift, `delta` goes back onto
    // whichever endpoint covers the reduced edge. Used by rules that rewrite
    // weights (both sides must end up equal to `new_w`).
    void reweight_edge(int e, Power new_wu, Power new_wv, Power budget_delta, Power lift_delta,
                       Power lift_cover) {
        assert(edge_alive_[e]);
        set_edge_demands(e, new_wu, new_wv);
        if (budget_delta != 0) spend(budget_delta);
        push_trace({TraceOp::ReweightEdge, inst_->edge(e).u, inst_->edge(e).v, lift_delta, lift_cover});
    }

    // Finalize a detached set of vertices with an explicitly computed
    // assignment. Every live edge incident to the set must stay inside it and
    // be covered by the given powers.
    void commit_component(const std::vector<std::pair<Vertex, Power>>& assignment) {
        std::vector<char> in_set(inst_->n(), false);
        for (auto [x, px] : assignment) {
            assert(vertex_alive_[x] && px >= 0);
            in_set[x] = true;
        }
        for (auto [x, px] : assignment) {
            for (int e : inst_->incident(x)) {
                if (!edge_alive_[e]) continue;
                const Edge& ed = inst_->edge(e);
                assert(in_set[ed.u] && in_set[ed.v]);
                (void)ed;
            }
        }
        for (auto [x, px] : assignment) {
            std::vector<int> incident;
            for (int e : inst_->incident(x))
                if (edge_alive_[e]) incident.push_back(e);
            for (int e : incident) {
                const Edge& ed = inst_->edge(e);
                Power other_px = 0;
                for (auto [y, py] : assignment)
                    if (y == ed.other(x)) other_px = py;
                assert(px >= residual_demand_of(e, x) || other_px >= residual_demand_of_other(e, x));
                (void)other_px;
                kill_edge(e);
            }
            record_forced(x, px);
            if (mode_ == BudgetMode::TotalPower) {
                spend(px);
            } else if (px > 0 || marked_[x]) {
                spend(1);
            }
            kill_vertex(x);
            push_trace({TraceOp::CommitVertex, x, -1, px, 0});
        }
        remove_isolated_vertices();
    }

    // --- undo ---

    size_t checkpoint() const { return undo_.size(); }

    void rollback(size_t mark) {
        while (undo_.size() > mark) {
            const UndoRec& r = undo_.back();
            switch (r.kind) {
                case UndoRec::EdgeDemand:
                    wu_[r.a] = r.x;
                    wv_[r.a] = r.y;
                    break;
                case UndoRec::EdgeRevive: {
                    edge_alive_[r.a] = true;
                    ++live_edges_;
                    const Edge& e = inst_->edge(r.a);
                    ++degree_[e.u];
                    ++degree_[e.v];
                    break;
                }
                case UndoRec::VertexRevive:
                    vertex_alive_[r.a] = true;
                    break;
                case UndoRec::Unmark:
                    marked_[r.a] = false;
                    break;
                case UndoRec::Forced:
                    forced_[r.a] = r.x;
                    break;
                case UndoRec::Budget:
                    budget_ = r.x;
                    break;
                case UndoRec::TracePop:
                    trace_.pop_back();
                    break;
            }
            undo_.pop_back();
        }
    }

    // --- snapshots and lifting ---

    // Compacts the live residual graph. map_out[i] = original vertex of the
    // snapshot's vertex i.
    DpvcInstance snapshot(std::vector<Vertex>* map_out = nullptr) const {
        std::vector<Vertex> map;
        std::vector<int> idx(inst_->n(), -1);
        for (Vertex v = 0; v < inst_->n(); ++v)
            if (vertex_alive_[v]) {
                idx[v] = static_cast<int>(map.size());
                map.push_back(v);
            }
        std::vector<Edge> edges;
        for (int e = 0; e < inst_->m(); ++e)
            if (edge_alive_[e]) {
                const Edge& ed = inst_->edge(e);
                edges.push_back({idx[ed.u], idx[ed.v], wu_[e], wv_[e]});
            }
        if (map_out) *map_out = map;
        return DpvcInstance(static_cast<int>(map.size()), std::move(edges));
    }

    // Lift an assignment of the current residual instance (in original vertex
    // ids; pass empty for the all-zero assignment) back to the original
    // instance by unwinding the trace.
    PowerAssignment lift(const PowerAssignment& residual = {}) const {
        return lift_assignment(inst_->n(), trace_, residual);
    }

    // Marks installed before solving count as already-adjusted vertices
    // whose support charge is still outstanding. Not undoable.
    void seed_mark(Vertex v) { marked_[v] = true; }

private:
    struct UndoRec {
        enum Kind { EdgeDemand, EdgeRevive, VertexRevive, Unmark, Forced, Budget, TracePop } kind;
        int a = -1;
        Power x = 0, y = 0;
    };

    void push_trace(TraceOp op) {
        trace_.push_back(op);
        undo_.push_back({UndoRec::TracePop, 0, 0, 0});
    }

    void spend(Power amount) {
        undo_.push_back({UndoRec::Budget, 0, budget_, 0});
        budget_ -= amount;
    }

    void record_forced(Vertex u, Power w) {
        if (w == 0) return;
        undo_.push_back({UndoRec::Forced, u, forced_[u], 0});
        forced_[u] += w;
    }

    void mark(Vertex u) {
        if (marked_[u]) return;
        marked_[u] = true;
        undo_.push_back({UndoRec::Unmark, u, 0, 0});
    }

    void set_edge_demands(int e, Power nwu, Power nwv) {
        undo_.push_back({UndoRec::EdgeDemand, e, wu_[e], wv_[e]});
        wu_[e] = nwu;
        wv_[e] = nwv;
    }

    void kill_edge(int e) {
        assert(edge_alive_[e]);
        edge_alive_[e] = false;
        --live_edges_;
        const Edge& ed = inst_->edge(e);
        --degree_[ed.u];
        --degree_[ed.v];
        undo_.push_back({UndoRec::EdgeRevive, e, 0, 0});
    }

    void kill_vertex(Vertex v) {
        assert(vertex_alive_[v]);
        vertex_alive_[v] = false;
        undo_.push_back({UndoRec::VertexRevive, v, 0, 0});
    }

    void adjust_no_cleanup(Vertex u, Power w) {
        for (int e : inst_->incident(u)) {
            if (!edge_alive_[e]) continue;
            Power nu = wu_[e], nv = wv_[e];
            (inst_->edge(e).u == u ? nu : nv) -= w;
            set_edge_demands(e, nu, nv);
            if (nu <= 0 || nv <= 0) kill_edge(e);
        }
        record_forced(u, w);
        if (mode_ == BudgetMode::TotalPower) spend(w);
        mark(u);
        push_trace({TraceOp::Adjust, u, -1, w, 0});
    }

    // Degree-0 vertices leave the graph: free when unmarked, paid once
    // (Support mode) when marked.
    void remove_isolated_vertices() {
        for (Vertex v = 0; v < inst_->n(); ++v) {
            if (!vertex_alive_[v] || degree_[v] != 0) continue;
            if (mode_ == BudgetMode::Support && marked_[v]) spend(1);
            kill_vertex(v);
        }
    }

    const DpvcInstance* inst_;
    BudgetMode mode_;
    Power budget_;
    std::vector<Power> wu_, wv_;
    std::vector<char> edge_alive_, vertex_alive_;
    std::vector<int> degree_;
    std::vector<char> marked_;
    std::vector<Power> forced_;
    int live_edges_;
    std::vector<TraceOp> trace_;
    std::vector<UndoRec> undo_;
};

}  // namespace pvc
