#pragma once

// Core data model: directed-demand edge-weighted graphs (DPVC instances),
// power assignments, and feasibility checking.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pvc {

using Vertex = int;
using Power = std::int64_t;

// One edge with a demand per endpoint: u covers the edge iff p_u >= wu,
// v covers it iff p_v >= wv.
struct Edge {
    Vertex u = -1;
    Vertex v = -1;
    Power wu = 0;  // demand on u's side
    Power wv = 0;  // demand on v's side

    Vertex other(Vertex x) const { return x == u ? v : u; }
    Power demand_of(Vertex x) const { return x == u ? wu : wv; }
    Power demand_of_other(Vertex x) const { return x == u ? wv : wu; }
};

class DpvcInstance {
public:
    DpvcInstance() = default;

    // Validates: vertex range, no self-loops, no duplicate pairs, demands >= 1.
    DpvcInstance(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
        std::set<std::pair<Vertex, Vertex>> seen;
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
                throw std::invalid_argument("vertex index out of range");
            if (e.u == e.v) throw std::invalid_argument("self-loop");
            if (e.wu < 1 || e.wv < 1) throw std::invalid_argument("demand < 1");
            auto key = std::minmax(e.u, e.v);
            if (!seen.insert({key.first, key.second}).second)
                throw std::invalid_argument("duplicate edge");
        }
        adj_.assign(n_, {});
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            adj_[edges_[i].u].push_back(i);
            adj_[edges_[i].v].push_back(i);
        }
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }
    const std::vector<int>& incident(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool symmetric() const {
        for (const Edge& e : edges_)
            if (e.wu != e.wv) return false;
        return true;
    }

    Power max_demand() const {
        Power m = 0;
        for (const Edge& e : edges_) m = std::max({m, e.wu, e.wv});
        return m;
    }

    int max_degree() const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Dense nonnegative power assignment; value and support are derived.
struct PowerAssignment {
    std::vector<Power> p;

    PowerAssignment() = default;
    explicit PowerAssignment(int n) : p(n, 0) {}

    Power value() const {
        Power s = 0;
        for (Power x : p) s += x;
        return s;
    }

    int support() const {
        int s = 0;
        for (Power x : p) s += (x > 0);
        return s;
    }

    Power at(Vertex v) const { return v < static_cast<int>(p.size()) ? p[v] : 0; }
};

// Every edge needs one endpoint meeting its own-side demand.
inline bool is_feasible(const DpvcInstance& inst, const PowerAssignment& a) {
    for (const Edge& e : inst.edges())
        if (a.at(e.u) < e.wu && a.at(e.v) < e.wv) return false;
    return true;
}

// First edge not covered by `a`, or -1 if feasible.
inline int first_uncovered_edge(const DpvcInstance& inst, const PowerAssignment& a) {
    for (int i = 0; i < inst.m(); ++i) {
        const Edge& e = inst.edge(i);
        if (a.at(e.u) < e.wu && a.at(e.v) < e.wv) return i;
    }
    return -1;
}

// {0} plus the demands on v's side of its incident edges, sorted, deduplicated.
// In any optimal solution p_v can be assumed to be one of these.
inline std::vector<Power> candidate_levels(const DpvcInstance& inst, Vertex v) {
    std::vector<Power> levels{0};
    for (int ei : inst.incident(v)) levels.push_back(inst.edge(ei).demand_of(v));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

}  // namespace pvc
