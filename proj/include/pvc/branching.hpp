#pragma once

// Branch-and-reduce solvers:
//   algorithm1_solve  — PVC decision "value <= P" (symmetric demands)
//   solve_pvc_k       — PVC decision "support <= k" (same tree, support budget)
//   algorithm2_solve  — DPVC decision "value <= P"
//
// Both are driven by reduction rules (RR1 for PVC; RR2/RR3 for DPVC) plus
// branching rules whose budget decrements realize the analyzed branching
// factors. Unit-weight residual instances are handed to the vertex cover
// subsolver.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "pvc/branch_state.hpp"
#include "pvc/core.hpp"
#include "pvc/oracle.hpp"
#include "pvc/vc_solver.hpp"

namespace pvc {

struct SolveStats {
    long long nodes = 0;
    long long leaves = 0;
    std::map<std::string, long long> rules;

    void bump(const std::string& rule) { ++rules[rule]; }
};

struct SolveOutcome {
    bool yes = false;
    std::optional<PowerAssignment> witness;
    SolveStats stats;
};

// Instrumentation for correctness audits. `on_rule` fires for single-outcome
// reductions with (residual before, residual after, budget consumed);
// `on_branch` fires once per branching with every child's residual snapshot
// and consumption, including children explored after an answer was found.
struct SolveHooks {
    std::function<void(const std::string& rule, const DpvcInstance& before,
                       const DpvcInstance& after, Power consumed)>
        on_rule;
    std::function<void(const std::string& rule, const DpvcInstance& parent,
                       const std::vector<std::pair<DpvcInstance, Power>>& children)>
        on_branch;
};

namespace detail {

class BranchingSolverBase {
public:
    BranchingSolverBase(const DpvcInstance& inst, Power budget, BudgetMode mode,
                        const SolveHooks* hooks)
        : st_(inst, budget, mode), hooks_(hooks) {}

    SolveOutcome run() {
        SolveOutcome out;
        out.yes = step();
        out.witness = std::move(witness_);
        out.stats = std::move(stats_);
        return out;
    }

protected:
    virtual bool step() = 0;

    bool leaf(bool yes) {
        ++stats_.leaves;
        if (yes && !witness_) witness_ = st_.lift();
        return yes;
    }

    // Explore the children of a branching rule depth-first with rollback.
    // A single child encodes a forced move.
    bool explore(const char* rule, const std::vector<std::function<void()>>& children) {
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
            if (found && !capture) break;
        }
        if (capture) hooks_->on_branch(rule, *parent, kids);
        return found;
    }

    template <typename Fn>
    void reduction(const char* rule, Fn&& apply) {
        stats_.bump(rule);
        if (hooks_ && hooks_->on_rule) {
            DpvcInstance before = st_.snapshot();
            Power b0 = st_.budget();
            apply();
            hooks_->on_rule(rule, before, st_.snapshot(), b0 - st_.budget());
        } else {
            apply();
        }
    }

    // Edge scan order for rule selection: lowest endpoint, then the other
    // endpoint, independent of input edge order.
    const std::vector<int>& edge_order() {
        if (edge_order_.empty() && st_.original().m() > 0) {
            edge_order_.resize(st_.original().m());
            for (int e = 0; e < st_.original().m(); ++e) edge_order_[e] = e;
            std::sort(edge_order_.begin(), edge_order_.end(), [this](int a, int b) {
                const Edge& ea = st_.original().edge(a);
                const Edge& eb = st_.original().edge(b);
                auto ka = std::minmax(ea.u, ea.v);
                auto kb = std::minmax(eb.u, eb.v);
                return ka != kb ? ka < kb : a < b;
            });
        }
        return edge_order_;
    }

    // Live neighbors of u sorted by vertex index, with their edges.
    std::vector<std::pair<Vertex, int>> sorted_live_neighbors(Vertex u) const {
        std::vector<std::pair<Vertex, int>> out;
        for (int e : st_.original().incident(u))
            if (st_.edge_alive(e)) out.push_back({st_.original().edge(e).other(u), e});
        std::sort(out.begin(), out.end());
        return out;
    }

    // Residual demands are all 1: the instance is plain vertex cover.
    bool vc_delegate() {
        stats_.bump("vc_delegate");
        std::vector<Vertex> map;
        DpvcInstance snap = st_.snapshot(&map);
        auto cover = vc_subsolve(snap, st_.budget(), &stats_.nodes);
        if (!cover) return leaf(false);
        for (Vertex x : *cover) {
            Vertex orig = map[x];
            if (st_.vertex_alive(orig)) st_.set_power(orig, 1);
        }
        assert(st_.live_edge_count() == 0 && st_.budget() >= 0);
        return leaf(true);
    }

    // Exactly finish a detached component with the oracle. `members` must be
    // closed under live edges.
    void commit_by_oracle(const std::vector<Vertex>& members) {
        std::vector<int> pos(st_.original().n(), -1);
        for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (int e = 0; e < st_.original().m(); ++e) {
            if (!st_.edge_alive(e)) continue;
            const Edge& ed = st_.original().edge(e);
            if (pos[ed.u] >= 0 || pos[ed.v] >= 0) {
                assert(pos[ed.u] >= 0 && pos[ed.v] >= 0);
                edges.push_back({pos[ed.u], pos[ed.v], st_.residual_wu(e), st_.residual_wv(e)});
            }
        }
        DpvcInstance comp(static_cast<int>(members.size()), std::move(edges));
        PowerAssignment w;
        brute_force_value(comp, &w);
        std::vector<std::pair<Vertex, Power>> assignment;
        for (size_t i = 0; i < members.size(); ++i)
            if (st_.vertex_alive(members[i])) assignment.push_back({members[i], w.p[i]});
        st_.commit_component(assignment);
    }

    BranchState st_;
    const SolveHooks* hooks_;
    SolveStats stats_;
    std::optional<PowerAssignment> witness_;
    std::vector<int> edge_order_;
};

// ---------------------------------------------------------------------------
// Algorithm 1: symmetric instances, parameter P (TotalPower) or k (Support).

class Algorithm1Solver : public BranchingSolverBase {
public:
    using BranchingSolverBase::BranchingSolverBase;

protected:
    bool step() override {
        ++stats_.nodes;
        while (apply_rr1()) {}
        if (st_.budget() < 0) return leaf(false);
        if (st_.live_edge_count() == 0) return leaf(true);
        if (st_.max_residual_demand() == 1) return vc_delegate();
        return step4();
    }

private:
    // RR1: an edge strictly heavier than everything else incident to it can
    // be lowered to the runner-up weight B; the difference is collected now
    // and returned to the covering endpoint on lift.
    bool apply_rr1() {
        for (int e : edge_order()) {
            if (!st_.edge_alive(e)) continue;
            Power w = st_.residual_wu(e);
            const Edge& ed = st_.original().edge(e);
            Power runner_up = 0;
            bool has_other = false;
            for (Vertex x : {ed.u, ed.v}) {
                for (int f : st_.original().incident(x)) {
                    if (f == e || !st_.edge_alive(f)) continue;
                    has_other = true;
                    runner_up = std::max(runner_up, st_.residual_wu(f));
                }
            }
            if (!has_other || w <= runner_up) continue;
            Power delta = w - runner_up;
            Power spend = st_.mode() == BudgetMode::TotalPower ? delta : 0;
            reduction("rr1", [&] { st_.reweight_edge(e, runner_up, runner_up, spend, delta, runner_up); });
            return true;
        }
        return false;
    }

    bool step4() {
        Power maxw = st_.max_residual_demand();
        int e0 = -1;
        for (int e : edge_order())
            if (st_.edge_alive(e) && st_.residual_wu(e) == maxw) {
                e0 = e;
                break;
            }
        const Edge& ed = st_.original().edge(e0);
        int f0 = -1;
        for (int f : edge_order()) {
            if (f == e0 || !st_.edge_alive(f) || st_.residual_wu(f) != maxw) continue;
            const Edge& fd = st_.original().edge(f);
            if (fd.u == ed.u || fd.u == ed.v || fd.v == ed.u || fd.v == ed.v) {
                f0 = f;
                break;
            }
        }
        if (f0 < 0) {
            // post-RR1 this only happens for an isolated edge; either endpoint
            // must pay the full weight, so commit the lower-numbered one
            assert(st_.degree(ed.u) == 1 && st_.degree(ed.v) == 1);
            Vertex x = std::min(ed.u, ed.v);
            return explore("alg1.isolated", {[this, x, maxw] { st_.set_power(x, maxw); }});
        }
        const Edge& fd = st_.original().edge(f0);
        Vertex shared = (fd.u == ed.u || fd.v == ed.u) ? ed.u : ed.v;
        Vertex v = ed.other(shared);
        Vertex vp = fd.other(shared);
        return explore("alg1.step4",
                       {[this, shared, maxw] { st_.set_power(shared, maxw); },
                        [this, v, vp, maxw] {
                            st_.set_power(v, maxw);
                            if (st_.vertex_alive(vp)) st_.set_power(vp, maxw);
                        }});
    }
};

// ---------------------------------------------------------------------------
// Algorithm 2: general DPVC, parameter P.

class Algorithm2Solver : public BranchingSolverBase {
public:
    using BranchingSolverBase::BranchingSolverBase;

protected:
    bool step() override {
        ++stats_.nodes;
        for (;;) {
            if (apply_rr2()) continue;
            if (apply_rr3()) continue;
            break;
        }
        if (st_.budget() < 0) return leaf(false);
        if (st_.live_edge_count() == 0) return leaf(true);
        if (int u = find_br1(); u >= 0)
            return explore("br1", {[this, u] { st_.set_power(u, 0); },
                                   [this, u] { st_.adjust(u, 1); }});
        if (auto ch = step4_children(); !ch.empty()) return explore("alg2.step4", ch);
        if (auto r = step5(); r) return *r;
        if (st_.all_unit()) return vc_delegate();
        return weight2();
    }

private:
    // RR2: covering all of u's edges from the far side is no dearer than u
    // covering its heaviest edge, so u never pays M(u); the heaviest edge is
    // covered by its other endpoint.
    bool apply_rr2() {
        for (Vertex u = 0; u < st_.original().n(); ++u) {
            if (!st_.vertex_alive(u) || st_.degree(u) == 0) continue;
            Power maxout = st_.max_out_demand(u);
            if (st_.neighbor_cover_cost(u) > maxout) continue;
            for (auto [v, e] : sorted_live_neighbors(u)) {
                if (st_.residual_demand_of(e, u) != maxout) continue;
                Power amount = st_.residual_demand_of(e, v);
                reduction("rr2", [&, v = v] { st_.adjust(v, amount); });
                return true;
            }
        }
        return false;
    }

    // RR3: a (2,2) edge in an otherwise unit neighborhood behaves like a unit
    // edge plus one guaranteed unit of power.
    bool apply_rr3() {
        for (int e : edge_order()) {
            if (!st_.edge_alive(e) || st_.residual_wu(e) != 2 || st_.residual_wv(e) != 2) continue;
            const Edge& ed = st_.original().edge(e);
            bool ok = true;
            for (Vertex x : {ed.u, ed.v}) {
                for (int f : st_.original().incident(x)) {
                    if (f == e || !st_.edge_alive(f)) continue;
                    if (st_.residual_demand_of(f, x) != 1) ok = false;
                }
            }
            if (!ok) continue;
            Power spend = st_.mode() == BudgetMode::TotalPower ? 1 : 0;
            reduction("rr3", [&] { st_.reweight_edge(e, 1, 1, spend, 1, 1); });
            return true;
        }
        return false;
    }

    int find_br1() const {
        for (Vertex u = 0; u < st_.original().n(); ++u)
            if (st_.vertex_alive(u) && st_.neighbor_cover_cost(u) >= 5) return u;
        return -1;
    }

    std::vector<std::function<void()>> step4_children() {
        for (int e : edge_order()) {
            if (!st_.edge_alive(e)) continue;
            Power a = st_.residual_wu(e), b = st_.residual_wv(e);
            if (a + b < 6 && !(a == 2 && b == 3) && !(a == 3 && b == 2)) continue;
            const Edge& ed = st_.original().edge(e);
            return {[this, u = ed.u, a] { st_.adjust(u, a); },
                    [this, v = ed.v, b] { st_.adjust(v, b); }};
        }
        return {};
    }

    std::optional<bool> step5() {
        int e0 = -1;
        Vertex u = -1, v = -1;
        for (int e : edge_order()) {
            if (!st_.edge_alive(e)) continue;
            const Edge& ed = st_.original().edge(e);
            if (st_.residual_wu(e) == 3) {
                e0 = e, u = ed.u, v = ed.v;
                break;
            }
            if (st_.residual_wv(e) == 3) {
                e0 = e, u = ed.v, v = ed.u;
                break;
            }
        }
        if (e0 < 0) return std::nullopt;
        assert(st_.residual_demand_of(e0, v) == 1);

        std::vector<Vertex> nbrs = st_.live_neighbors(u);
        std::vector<char> in_closed(st_.original().n(), false);
        in_closed[u] = true;
        for (Vertex z : nbrs) in_closed[z] = true;
        std::vector<Vertex> dist2;
        for (Vertex z : nbrs)
            for (Vertex y : st_.live_neighbors(z))
                if (!in_closed[y]) {
                    in_closed[y] = true;  // reuse as dedup
                    dist2.push_back(y);
                }
        for (Vertex y : dist2) in_closed[y] = false;

        std::vector<Vertex> comp = nbrs;
        comp.push_back(u);
        std::sort(comp.begin(), comp.end());

        if (dist2.empty())
            return explore("alg2.step5.component", {[this, comp] { commit_by_oracle(comp); }});

        if (dist2.size() == 1) {
            Vertex t = dist2[0];
            bool unit_links = true;
            for (int f : st_.original().incident(t)) {
                if (!st_.edge_alive(f)) continue;
                Vertex z = st_.original().edge(f).other(t);
                bool z_in_n = std::find(nbrs.begin(), nbrs.end(), z) != nbrs.end();
                if (z_in_n && st_.residual_demand_of(f, t) != 1) unit_links = false;
            }
            if (unit_links)
                return explore("alg2.step5.pendant", {[this, t, comp] {
                                                          st_.adjust(t, 1);
                                                          commit_by_oracle(comp);
                                                      },
                                                      [this, t] { st_.set_power(t, 0); }});
        }
        return explore("alg2.step5.general",
                       {[this, v] { st_.adjust(v, 1); },
                        [this, u, nbrs] {
                            st_.set_power(u, 3);
                            for (Vertex z : nbrs)
                                if (st_.vertex_alive(z)) st_.set_power(z, 0);
                        }});
    }

    // Max residual demand is exactly 2: the analyzed case tree. The chosen
    // vertex is incident to a weight-2 edge (own side) and has maximum degree.
    bool weight2() {
        Vertex u = -1;
        int bestd = -1;
        for (Vertex x = 0; x < st_.original().n(); ++x)
            if (st_.vertex_alive(x) && st_.max_out_demand(x) == 2 && st_.degree(x) > bestd) {
                u = x;
                bestd = st_.degree(x);
            }
        assert(u >= 0);

        for (int redirects = 0;; ++redirects) {
            assert(redirects <= 1);
            std::vector<std::pair<Vertex, int>> out2, out1;  // (neighbor, edge)
            for (auto [z, e] : sorted_live_neighbors(u))
                (st_.residual_demand_of(e, u) == 2 ? out2 : out1).push_back({z, e});
            if (out1.empty())
                return explore("w2.all2", {[this, u] { st_.set_power(u, 0); },
                                           [this, u] { st_.set_power(u, 2); }});
            int d = st_.degree(u);
            if (d == 4) {
                if (out1.size() == 1)
                    return explore("w2.c1a", {[this, u] { st_.set_power(u, 0); },
                                              [this, u] { st_.set_power(u, 2); }});
                if (out1.size() == 3) {
                    auto [v, e] = out2[0];
                    Power amt = st_.residual_demand_of(e, v);
                    assert(amt == 1);
                    return explore("w2.c1b", {[this, v, amt] { st_.adjust(v, amt); }});
                }
                // two weight-2 edges (u,v),(u,z), two unit edges
                auto [v, ev] = out2[0];
                auto [z, ez] = out2[1];
                if (st_.degree(v) == 1 && st_.degree(z) == 1)
                    return explore("w2.c1c.forced", {[this, u] { st_.set_power(u, 2); }});
                auto [b, eb] = st_.degree(v) >= 2 ? out2[0] : out2[1];
                auto [o, eo] = st_.degree(v) >= 2 ? out2[1] : out2[0];
                Power amt = st_.residual_demand_of(eo, o);
                assert(amt == 1);
                return explore("w2.c1c", {[this, b] { st_.set_power(b, 0); },
                                          [this, b, o, amt] {
                                              st_.set_power(b, 1);
                                              if (st_.vertex_alive(o)) st_.adjust(o, amt);
                                          }});
            }
            if (d == 3) {
                if (out2.size() == 2) {
                    auto [t, et] = out1[0];
                    if (st_.residual_demand_of(et, t) == 1)
                        return explore("w2.c2a.i", {[this, u] { st_.set_power(u, 0); },
                                                    [this, u] { st_.set_power(u, 2); }});
                    auto [v, ev] = out2[0];
                    auto [z, ez] = out2[1];
                    assert(st_.residual_demand_of(ev, v) == 1 && st_.residual_demand_of(ez, z) == 1);
                    if (st_.degree(v) == 1 && st_.degree(z) == 1)
                        return explore("w2.c2a.forced", {[this, u] { st_.set_power(u, 2); }});
                    Vertex b = st_.degree(v) >= 2 ? v : z;
                    Vertex o = st_.degree(v) >= 2 ? z : v;
                    return explore("w2.c2a.ii", {[this, b] { st_.set_power(b, 0); },
                                                 [this, b, o] {
                                                     st_.adjust(b, 1);
                                                     if (st_.vertex_alive(o)) st_.adjust(o, 1);
                                                 }});
                }
                // single weight-2 edge (u,v)
                auto [v, ev] = out2[0];
                if (st_.residual_demand_of(ev, v) == 1)
                    return explore("w2.c2b.forced", {[this, v] { st_.adjust(v, 1); }});
                // w_{v,u} == 2: v must have another weight-2 edge or RR3 fires
                Vertex s = -1;
                Power s_amt = 0;
                for (auto [z, f] : sorted_live_neighbors(v)) {
                    if (f == ev) continue;
                    if (st_.residual_demand_of(f, v) == 2) {
                        s = z;
                        s_amt = st_.residual_demand_of(f, s);
                        break;
                    }
                }
                if (s < 0) throw std::logic_error("weight2: configuration excluded by RR3");
                return explore("w2.c2b", {[this, v] { st_.set_power(v, 2); },
                                          [this, u, s, s_amt] {
                                              st_.adjust(u, 2);
                                              if (st_.vertex_alive(s)) st_.adjust(s, s_amt);
                                          }});
            }
            assert(d == 2);
            auto [v, ev] = out2[0];
            auto [z, ez] = out1[0];
            if (st_.residual_demand_of(ez, z) == 1)
                return explore("w2.c3a", {[this, u] { st_.set_power(u, 0); },
                                          [this, u] { st_.set_power(u, 2); }});
            if (st_.residual_demand_of(ev, v) == 1)
                return explore("w2.c3b.forced", {[this, v] { st_.adjust(v, 1); }});
            // both far-side demands are 2; z is a degree-2 vertex with a
            // weight-2 edge toward u and a unit edge elsewhere: rerun on z
            assert(st_.degree(z) == 2);
            u = z;
        }
    }
};

}  // namespace detail

inline SolveOutcome algorithm1_solve(const DpvcInstance& inst, Power P,
                                     const SolveHooks* hooks = nullptr) {
    if (!inst.symmetric()) throw std::invalid_argument("algorithm1_solve: asymmetric instance");
    return detail::Algorithm1Solver(inst, P, BudgetMode::TotalPower, hooks).run();
}

inline SolveOutcome solve_pvc_k(const DpvcInstance& inst, Power k,
                                const SolveHooks* hooks = nullptr) {
    if (!inst.symmetric()) throw std::invalid_argument("solve_pvc_k: asymmetric instance");
    return detail::Algorithm1Solver(inst, k, BudgetMode::Support, hooks).run();
}

inline SolveOutcome algorithm2_solve(const DpvcInstance& inst, Power P,
                                     const SolveHooks* hooks = nullptr) {
    return detail::Algorithm2Solver(inst, P, BudgetMode::TotalPower, hooks).run();
}

}  // namespace pvc
