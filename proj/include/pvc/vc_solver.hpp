#pragma once

// Decision solver for classical Vertex Cover, used on unit-weight residual
// instances. Max-degree branching (take v, or take N(v)) plus degree-0/1
// removal and degree-2 folding. Returns a cover so callers can lift it into
// a power assignment.

#include <optional>
#include <vector>

#include "pvc/core.hpp"

namespace pvc {

namespace detail {

struct VcGraph {
    // adjacency sets; folding appends merged vertices
    std::vector<std::vector<Vertex>> adj;
    std::vector<char> alive;

    void remove_vertex(Vertex v) {
        alive[v] = false;
        for (Vertex w : adj[v]) {
            auto& a = adj[w];
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] == v) {
                    a[i] = a.back();
                    a.pop_back();
                    break;
                }
        }
        adj[v].clear();
    }

    bool has_edge(Vertex u, Vertex v) const {
        for (Vertex w : adj[u])
            if (w == v) return true;
        return false;
    }

    bool any_edge() const {
        for (size_t v = 0; v < adj.size(); ++v)
            if (alive[v] && !adj[v].empty()) return true;
        return false;
    }
};

struct Fold {
    Vertex merged, center, a, b;  // center deg-2 with nonadjacent neighbors a,b
};

// On success, cover_out holds possibly-merged ids and folds_out the fold
// history of the successful path; the caller resolves merged ids.
inline bool vc_decide_rec(VcGraph g, long long budget, std::vector<Fold> folds,
                          std::vector<Vertex>& cover_out, std::vector<Fold>& folds_out,
                          long long* nodes) {
    ++*nodes;
    std::vector<Vertex> taken;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < static_cast<Vertex>(g.adj.size()); ++v) {
            if (!g.alive[v]) continue;
            if (g.adj[v].empty()) {
                g.alive[v] = false;
                continue;
            }
            if (g.adj[v].size() == 1) {
                Vertex u = g.adj[v][0];
                taken.push_back(u);
                --budget;
                g.remove_vertex(u);
                g.alive[v] = false;
                changed = true;
                break;
            }
            if (g.adj[v].size() == 2) {
                Vertex a = g.adj[v][0], b = g.adj[v][1];
                if (g.has_edge(a, b)) {
                    // some optimum takes both neighbors
                    taken.push_back(a);
                    taken.push_back(b);
                    budget -= 2;
                    g.remove_vertex(a);
                    g.remove_vertex(b);
                    g.alive[v] = false;
                } else {
                    Vertex f = static_cast<Vertex>(g.adj.size());
                    std::vector<Vertex> nbrs;
                    for (Vertex x : g.adj[a])
                        if (x != v) nbrs.push_back(x);
                    for (Vertex x : g.adj[b])
                        if (x != v && !g.has_edge(a, x)) nbrs.push_back(x);
                    g.remove_vertex(v);
                    g.remove_vertex(a);
                    g.remove_vertex(b);
                    g.adj.push_back(nbrs);
                    g.alive.push_back(true);
                    for (Vertex x : nbrs) g.adj[x].push_back(f);
                    folds.push_back({f, v, a, b});
                    --budget;
                }
                changed = true;
                break;
            }
        }
        if (budget < 0) return false;
    }
    if (!g.any_edge()) {
        cover_out = std::move(taken);
        folds_out = std::move(folds);
        return true;
    }
    Vertex best = -1;
    size_t bd = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.adj.size()); ++v)
        if (g.alive[v] && g.adj[v].size() > bd) {
            bd = g.adj[v].size();
            best = v;
        }
    // branch: best in the cover, or all its neighbors are
    {
        VcGraph g2 = g;
        g2.remove_vertex(best);
        std::vector<Vertex> sub;
        if (vc_decide_rec(std::move(g2), budget - 1, folds, sub, folds_out, nodes)) {
            cover_out = std::move(sub);
            cover_out.push_back(best);
            for (Vertex t : taken) cover_out.push_back(t);
            return true;
        }
    }
    {
        std::vector<Vertex> nbrs = g.adj[best];
        VcGraph g2 = std::move(g);
        for (Vertex w : nbrs) g2.remove_vertex(w);
        g2.alive[best] = false;
        std::vector<Vertex> sub;
        if (vc_decide_rec(std::move(g2), budget - static_cast<long long>(nbrs.size()), folds, sub,
                          folds_out, nodes)) {
            cover_out = std::move(sub);
            for (Vertex w : nbrs) cover_out.push_back(w);
            for (Vertex t : taken) cover_out.push_back(t);
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Decide whether the unit-weight instance has a vertex cover of size <= k;
// on success returns the cover. Rejects non-unit instances.
inline std::optional<std::vector<Vertex>> vc_subsolve(const DpvcInstance& inst, long long k,
                                                      long long* nodes = nullptr) {
    detail::VcGraph g;
    g.adj.resize(inst.n());
    g.alive.assign(inst.n(), true);
    for (const Edge& e : inst.edges()) {
        if (e.wu != 1 || e.wv != 1) throw std::invalid_argument("vc_subsolve: non-unit demand");
        g.adj[e.u].push_back(e.v);
        g.adj[e.v].push_back(e.u);
    }
    long long local_nodes = 0;
    std::vector<Vertex> cover;
    std::vector<detail::Fold> folds;
    bool yes = detail::vc_decide_rec(std::move(g), k, {}, cover, folds, &local_nodes);
    if (nodes) *nodes += local_nodes;
    if (!yes) return std::nullopt;
    // resolve merged vertices, newest fold first
    Vertex max_id = inst.n();
    for (const auto& f : folds) max_id = std::max(max_id, f.merged + 1);
    std::vector<char> in(max_id, false);
    for (Vertex v : cover) in[v] = true;
    for (auto it = folds.rbegin(); it != folds.rend(); ++it) {
        if (in[it->merged]) {
            in[it->merged] = false;
            in[it->a] = in[it->b] = true;
        } else {
            in[it->center] = true;
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < inst.n(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace pvc
