#pragma once

// Exact ground-truth solvers by orientation enumeration: every feasible
// assignment induces a choice of covering endpoint per edge, and the cheapest
// assignment for a fixed choice gives each vertex the maximum demand assigned
// to it. Minimizing over the 2^m choices is therefore exact, both for total
// power and for support.

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "pvc/core.hpp"

namespace pvc {

struct OracleResult {
    Power opt_value = 0;
    int opt_support = 0;  // minimum support over all feasible assignments
    PowerAssignment witness;
};

inline int oracle_edge_limit() {
    if (const char* s = std::getenv("PVC_ORACLE_EDGE_LIMIT")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 24;
}

namespace detail {

struct OrientationSearch {
    const DpvcInstance& inst;
    std::vector<Power> cur;    // current per-vertex committed power
    std::vector<Power> bestp;
    Power cur_value = 0;
    Power best_value;

    explicit OrientationSearch(const DpvcInstance& g)
        : inst(g), cur(g.n(), 0), bestp(g.n(), 0) {
        Power ub = 0;
        for (const Edge& e : g.edges()) ub += std::min(e.wu, e.wv);
        best_value = ub + 1;
    }

    void run(int ei) {
        if (cur_value >= best_value) return;
        if (ei == inst.m()) {
            best_value = cur_value;
            bestp = cur;
            return;
        }
        const Edge& e = inst.edge(ei);
        for (int side = 0; side < 2; ++side) {
            Vertex x = side == 0 ? e.u : e.v;
            Power need = side == 0 ? e.wu : e.wv;
            Power inc = std::max<Power>(0, need - cur[x]);
            Power old = cur[x];
            cur[x] = std::max(cur[x], need);
            cur_value += inc;
            run(ei + 1);
            cur[x] = old;
            cur_value -= inc;
        }
    }
};

struct SupportSearch {
    const DpvcInstance& inst;
    std::vector<int> load;  // # edges assigned to each vertex
    int cur_support = 0;
    int best_support;

    explicit SupportSearch(const DpvcInstance& g) : inst(g), load(g.n(), 0), best_support(g.n() + 1) {}

    void run(int ei) {
        if (cur_support >= best_support) return;
        if (ei == inst.m()) {
            best_support = cur_support;
            return;
        }
        const Edge& e = inst.edge(ei);
        for (Vertex x : {e.u, e.v}) {
            cur_support += (load[x]++ == 0);
            run(ei + 1);
            cur_support -= (--load[x] == 0);
        }
    }
};

}  // namespace detail

inline void check_oracle_limit(const DpvcInstance& inst) {
    int limit = oracle_edge_limit();
    if (inst.m() > limit)
        throw std::invalid_argument("oracle edge limit exceeded: " + std::to_string(inst.m()) +
                                    " > " + std::to_string(limit));
}

inline Power brute_force_value(const DpvcInstance& inst, PowerAssignment* witness = nullptr) {
    check_oracle_limit(inst);
    detail::OrientationSearch s(inst);
    s.run(0);
    if (witness) witness->p = s.bestp;
    return s.best_value;
}

inline int brute_force_min_support(const DpvcInstance& inst) {
    check_oracle_limit(inst);
    detail::SupportSearch s(inst);
    s.run(0);
    return s.best_support;
}

inline OracleResult brute_force_opt(const DpvcInstance& inst) {
    OracleResult r;
    r.opt_value = brute_force_value(inst, &r.witness);
    r.opt_support = brute_force_min_support(inst);
    return r;
}

}  // namespace pvc
