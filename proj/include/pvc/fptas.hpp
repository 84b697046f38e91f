#pragma once

// (1+eps)-approximation over a tree decomposition:
//   1. guess the largest power level M used by an optimal solution (every
//      distinct demand value is tried); edges whose demand exceeds M on one
//      side must be covered from the other, which is forced up front;
//   2. if the residual maximum demand exceeds n^2, scale demands down by
//      n^2/M (flooring) so levels stay polynomial;
//   3. solve the list instance whose allowed levels are 0 and the integer
//      ceilings of powers of (1+eps), capped per vertex at its own demand
//      ceiling, via the tree DP;
//   4. lift the rounded solution back by re-covering each original edge from
//      the endpoint that covered it in the rounded solution.
//
// With no rounding the result is within (1+eps) of optimal; with rounding
// within (1+eps+1/n).

#include <map>
#include <set>

#include "pvc/core.hpp"
#include "pvc/rational.hpp"
#include "pvc/tree_decomposition.hpp"
#include "pvc/treewidth_dp.hpp"

namespace pvc {

struct ForcedReduction {
    bool infeasible = false;       // no solution uses only levels <= M
    DpvcInstance residual;         // demands adjusted, covered edges dropped
    PowerAssignment forced;        // committed powers on the original instance
};

// Force every edge not coverable within max level M to its other endpoint,
// adjusting demands, until the residual maximum demand is at most M.
inline ForcedReduction fptas_guess_and_force(const DpvcInstance& inst, Power m_guess) {
    ForcedReduction out;
    out.forced = PowerAssignment(inst.n());
    std::vector<Power> wu(inst.m()), wv(inst.m());
    std::vector<char> alive(inst.m(), true);
    for (int e = 0; e < inst.m(); ++e) {
        wu[e] = inst.edge(e).wu;
        wv[e] = inst.edge(e).wv;
    }
    auto apply_adjust = [&](Vertex v, Power w) {
        out.forced.p[v] += w;
        for (int e : inst.incident(v)) {
            if (!alive[e]) continue;
            (inst.edge(e).u == v ? wu[e] : wv[e]) -= w;
            if (wu[e] <= 0 || wv[e] <= 0) alive[e] = false;
        }
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < inst.m(); ++e) {
            if (!alive[e]) continue;
            const Edge& ed = inst.edge(e);
            if (wu[e] > m_guess) {
                if (wv[e] > m_guess) {
                    out.infeasible = true;
                    return out;
                }
                apply_adjust(ed.v, wv[e]);
                changed = true;
            } else if (wv[e] > m_guess) {
                apply_adjust(ed.u, wu[e]);
                changed = true;
            }
        }
    }
    std::vector<Edge> edges;
    for (int e = 0; e < inst.m(); ++e)
        if (alive[e]) edges.push_back({inst.edge(e).u, inst.edge(e).v, wu[e], wv[e]});
    out.residual = DpvcInstance(inst.n(), std::move(edges));
    return out;
}

struct RoundedInstance {
    DpvcInstance inst;      // edges with both scaled demands >= 1
    bool scaled = false;
    Power scale_m = 0;      // original max demand M (scale factor M/n^2)
    Power n_squared = 0;
    // edges dropped because a scaled demand hit 0, with the zero side first
    std::vector<Edge> dropped;
};

// Scale demands to at most n^2 via w' = floor(w * n^2 / M); identity when
// M <= n^2. Edges with a zero scaled demand are free for that endpoint and
// recorded for the lift.
inline RoundedInstance fptas_round_weights(const DpvcInstance& inst) {
    RoundedInstance out;
    Power m = inst.max_demand();
    Power n2 = static_cast<Power>(inst.n()) * inst.n();
    out.scale_m = m;
    out.n_squared = n2;
    if (m <= n2) {
        out.inst = inst;
        return out;
    }
    out.scaled = true;
    std::vector<Edge> edges;
    for (const Edge& e : inst.edges()) {
        Power su = e.wu * n2 / m;
        Power sv = e.wv * n2 / m;
        if (su == 0) {
            out.dropped.push_back({e.u, e.v, e.wu, e.wv});
        } else if (sv == 0) {
            out.dropped.push_back({e.v, e.u, e.wv, e.wu});
        } else {
            edges.push_back({e.u, e.v, su, sv});
        }
    }
    out.inst = DpvcInstance(inst.n(), std::move(edges));
    return out;
}

// Geometric level lists: {0} and ceil((1+eps)^i) while (1+eps)^(i-1) < n^2,
// deduplicated, clamped at n^2 (demands are at most n^2 here, so a level of
// n^2 already covers everything). Per vertex the list is clipped at the
// first level reaching its own maximum demand (higher levels cover nothing
// more).
inline std::vector<std::vector<Power>> fptas_levels(const DpvcInstance& inst, const Rational& eps) {
    std::vector<Power> geo{0};
    Rational base = Rational(1) + eps;
    Rational cur = 1;
    Power n2 = static_cast<Power>(inst.n()) * inst.n();
    for (;;) {
        geo.push_back(std::min(to_power(ceil_rational(cur)), n2));
        if (cur >= n2) break;
        cur *= base;
    }
    std::sort(geo.begin(), geo.end());
    geo.erase(std::unique(geo.begin(), geo.end()), geo.end());
    std::vector<std::vector<Power>> levels(inst.n());
    for (Vertex v = 0; v < inst.n(); ++v) {
        Power maxdem = 0;
        for (int e : inst.incident(v)) maxdem = std::max(maxdem, inst.edge(e).demand_of(v));
        std::vector<Power>& l = levels[v];
        for (Power g : geo) {
            l.push_back(g);
            if (g >= maxdem) break;
        }
    }
    return levels;
}

// Cover every original edge from the endpoint that covers it in the rounded
// solution; each vertex pays the maximum original demand it is assigned.
inline PowerAssignment fptas_lift_rounded(const DpvcInstance& original, const RoundedInstance& ri,
                                          const PowerAssignment& rounded_sol) {
    if (!ri.scaled) return rounded_sol;
    PowerAssignment out(original.n());
    auto assign = [&](Vertex x, Power original_demand) {
        out.p[x] = std::max(out.p[x], original_demand);
    };
    for (const Edge& e : ri.inst.edges()) {
        // find the original demands of this edge
        Power ou = 0, ov = 0;
        for (int f : original.incident(e.u)) {
            const Edge& of = original.edge(f);
            if (of.other(e.u) == e.v) {
                ou = of.demand_of(e.u);
                ov = of.demand_of(e.v);
            }
        }
        if (rounded_sol.at(e.u) >= e.wu)
            assign(e.u, ou);
        else
            assign(e.v, ov);
    }
    for (const Edge& e : ri.dropped) assign(e.u, e.wu);  // zero side stored first
    return out;
}

// Full scheme; the returned assignment is feasible for `inst`.
inline PowerAssignment fptas_solve(const DpvcInstance& inst, const NiceTreeDecomposition& ntd,
                                   const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("fptas_solve: eps must be positive");
    PowerAssignment best;
    bool have = false;
    std::set<Power> guesses;
    for (const Edge& e : inst.edges()) {
        guesses.insert(e.wu);
        guesses.insert(e.wv);
    }
    if (guesses.empty()) return PowerAssignment(inst.n());
    for (Power m_guess : guesses) {
        ForcedReduction fr = fptas_guess_and_force(inst, m_guess);
        if (fr.infeasible) continue;
        RoundedInstance ri = fptas_round_weights(fr.residual);
        ListInstance li;
        li.inst = &ri.inst;
        li.levels = fptas_levels(ri.inst, eps);
        DpResult dp = ldpvc_dp(li, ntd);
        if (!dp.feasible) continue;  // cannot happen: top levels cover everything
        PowerAssignment lifted = fptas_lift_rounded(fr.residual, ri, dp.witness);
        for (Vertex v = 0; v < inst.n(); ++v) lifted.p[v] += fr.forced.p[v];
        assert(is_feasible(inst, lifted));
        if (!have || lifted.value() < best.value()) {
            best = lifted;
            have = true;
        }
    }
    assert(have);
    return best;
}

}  // namespace pvc
