#pragma once

// Dynamic programming for List-DPVC over a nice tree decomposition: each bag
// enumerates every assignment of allowed levels to its vertices (a dense
// mixed-radix table), checking edge coverage when a vertex is introduced.
// Runs in L_max^(t+1) * poly(n).

#include <cstdint>
#include <limits>

#include "pvc/core.hpp"
#include "pvc/oracle.hpp"
#include "pvc/tree_decomposition.hpp"

namespace pvc {

struct ListInstance {
    const DpvcInstance* inst = nullptr;
    std::vector<std::vector<Power>> levels;  // sorted allowed power levels per vertex

    size_t l_max() const {
        size_t m = 0;
        for (const auto& l : levels) m = std::max(m, l.size());
        return m;
    }
};

struct DpResult {
    bool feasible = false;
    Power value = 0;
    PowerAssignment witness;
};

namespace detail {

constexpr Power kInf = std::numeric_limits<Power>::max() / 4;

struct DpTables {
    const ListInstance& li;
    const NiceTreeDecomposition& ntd;
    std::vector<std::vector<Power>> tables;
    // per node: strides over the (sorted) bag for mixed-radix indexing
    std::vector<std::vector<size_t>> strides;

    DpTables(const ListInstance& l, const NiceTreeDecomposition& t) : li(l), ntd(t) {
        tables.resize(ntd.nodes.size());
        strides.resize(ntd.nodes.size());
    }

    size_t table_size(const std::vector<Vertex>& bag, std::vector<size_t>& stride) const {
        stride.assign(bag.size(), 1);
        size_t total = 1;
        for (size_t i = 0; i < bag.size(); ++i) {
            stride[i] = total;
            total *= li.levels[bag[i]].size();
        }
        return total;
    }

    size_t digit(int node, size_t index, size_t pos) const {
        const auto& bag = ntd.nodes[node].bag;
        size_t radix = li.levels[bag[pos]].size();
        return index / strides[node][pos] % radix;
    }

    Power level_at(int node, size_t index, size_t pos) const {
        const auto& bag = ntd.nodes[node].bag;
        return li.levels[bag[pos]][digit(node, index, pos)];
    }

    Power bag_cost(int node, size_t index) const {
        Power c = 0;
        for (size_t i = 0; i < ntd.nodes[node].bag.size(); ++i) c += level_at(node, index, i);
        return c;
    }

    void compute(int node) {
        const NiceNode& nd = ntd.nodes[node];
        if (nd.left >= 0) compute(nd.left);
        if (nd.right >= 0) compute(nd.right);
        size_t size = table_size(nd.bag, strides[node]);
        auto& tab = tables[node];
        tab.assign(size, kInf);
        switch (nd.kind) {
            case NiceNode::Leaf: {
                for (size_t i = 0; i < size; ++i) tab[i] = li.levels[nd.bag[0]][i];
                break;
            }
            case NiceNode::Introduce: {
                const auto& cbag = ntd.nodes[nd.left].bag;
                size_t vpos = std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) -
                              nd.bag.begin();
                // edges between the introduced vertex and the rest of the bag
                std::vector<std::pair<size_t, const Edge*>> checks;
                for (int e : li.inst->incident(nd.vertex)) {
                    const Edge& ed = li.inst->edge(e);
                    Vertex z = ed.other(nd.vertex);
                    auto it = std::lower_bound(nd.bag.begin(), nd.bag.end(), z);
                    if (it != nd.bag.end() && *it == z)
                        checks.push_back({static_cast<size_t>(it - nd.bag.begin()), &ed});
                }
                for (size_t i = 0; i < size; ++i) {
                    Power pv = level_at(node, i, vpos);
                    bool ok = true;
                    for (auto [zpos, ed] : checks) {
                        Power pz = level_at(node, i, zpos);
                        Power need_v = ed->demand_of(nd.vertex);
                        Power need_z = ed->demand_of_other(nd.vertex);
                        if (pv < need_v && pz < need_z) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    // project out the introduced digit to index the child
                    size_t lo = i % strides[node][vpos];
                    size_t hi = i / strides[node][vpos] / li.levels[nd.vertex].size();
                    size_t ci = cbag.empty() ? 0 : lo + hi * strides[node][vpos];
                    Power sub = tables[nd.left][ci];
                    if (sub < kInf) tab[i] = sub + pv;
                }
                break;
            }
            case NiceNode::Forget: {
                size_t vpos = 0;
                const auto& cbag = ntd.nodes[nd.left].bag;
                vpos = std::lower_bound(cbag.begin(), cbag.end(), nd.vertex) - cbag.begin();
                size_t vstride = strides[nd.left][vpos];
                size_t nlevels = li.levels[nd.vertex].size();
                for (size_t ci = 0; ci < tables[nd.left].size(); ++ci) {
                    Power val = tables[nd.left][ci];
                    if (val >= kInf) continue;
                    size_t lo = ci % vstride;
                    size_t hi = ci / vstride / nlevels;
                    size_t i = lo + hi * vstride;
                    tab[i] = std::min(tab[i], val);
                }
                break;
            }
            case NiceNode::Join: {
                for (size_t i = 0; i < size; ++i) {
                    Power l = tables[nd.left][i], r = tables[nd.right][i];
                    if (l >= kInf || r >= kInf) continue;
                    // bag vertices are counted in both children
                    tab[i] = l + r - bag_cost(node, i);
                }
                break;
            }
        }
    }

    // Walk down from the root fixing the argmin choice at every node.
    void extract(int node, size_t index, PowerAssignment& out) const {
        const NiceNode& nd = ntd.nodes[node];
        switch (nd.kind) {
            case NiceNode::Leaf:
                out.p[nd.bag[0]] = level_at(node, index, 0);
                return;
            case NiceNode::Introduce: {
                size_t vpos = std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) -
                              nd.bag.begin();
                out.p[nd.vertex] = level_at(node, index, vpos);
                size_t lo = index % strides[node][vpos];
                size_t hi = index / strides[node][vpos] / li.levels[nd.vertex].size();
                extract(nd.left, lo + hi * strides[node][vpos], out);
                return;
            }
            case NiceNode::Forget: {
                const auto& cbag = ntd.nodes[nd.left].bag;
                size_t vpos = std::lower_bound(cbag.begin(), cbag.end(), nd.vertex) - cbag.begin();
                size_t vstride = strides[nd.left][vpos];
                size_t nlevels = li.levels[nd.vertex].size();
                size_t lo = index % vstride;
                size_t hi = index / vstride;
                for (size_t d = 0; d < nlevels; ++d) {
                    size_t ci = lo + d * vstride + hi * vstride * nlevels;
                    if (tables[nd.left][ci] == tables[node][index]) {
                        extract(nd.left, ci, out);
                        return;
                    }
                }
                assert(false && "forget backtrack failed");
                return;
            }
            case NiceNode::Join:
                extract(nd.left, index, out);
                extract(nd.right, index, out);
                return;
        }
    }
};

}  // namespace detail

// Optimal list-respecting cover, or infeasible. The decomposition must be
// valid for li.inst (checked by callers / tests via validate_nice).
inline DpResult ldpvc_dp(const ListInstance& li, const NiceTreeDecomposition& ntd) {
    DpResult res;
    const DpvcInstance& inst = *li.inst;
    for (const auto& l : li.levels)
        if (l.empty()) throw std::invalid_argument("ldpvc_dp: empty level list");
    if (inst.n() == 0 || ntd.nodes.empty()) {
        res.feasible = inst.n() == 0;
        res.witness = PowerAssignment(inst.n());
        return res;
    }
    detail::DpTables dp(li, ntd);
    dp.compute(ntd.root);
    const auto& root_tab = dp.tables[ntd.root];
    if (root_tab.empty()) return res;
    size_t best = 0;
    for (size_t i = 1; i < root_tab.size(); ++i)
        if (root_tab[i] < root_tab[best]) best = i;
    if (root_tab[best] >= detail::kInf) return res;
    res.feasible = true;
    res.value = root_tab[best];
    res.witness = PowerAssignment(inst.n());
    dp.extract(ntd.root, best, res.witness);
    return res;
}

// Exact DPVC via levels {0..M}.
inline DpResult solve_tw_maxweight(const DpvcInstance& inst, const NiceTreeDecomposition& ntd) {
    ListInstance li;
    li.inst = &inst;
    Power m = inst.max_demand();
    std::vector<Power> full(m + 1);
    for (Power i = 0; i <= m; ++i) full[i] = i;
    li.levels.assign(inst.n(), full);
    return ldpvc_dp(li, ntd);
}

// Exact DPVC via per-vertex incident-demand levels (degree-bounded lists).
inline DpResult solve_tw_degree(const DpvcInstance& inst, const NiceTreeDecomposition& ntd) {
    ListInstance li;
    li.inst = &inst;
    li.levels.resize(inst.n());
    for (Vertex v = 0; v < inst.n(); ++v) li.levels[v] = candidate_levels(inst, v);
    return ldpvc_dp(li, ntd);
}

}  // namespace pvc
