#pragma once

// Instance constructors: reduction gadgets (clique completion, the
// choice/checker treewidth-hardness construction, the zero-LP-vertex
// construction, the LP-gap example) and seeded random instances.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pvc/core.hpp"

namespace pvc {

// Unweighted simple graph, input side of the reductions.
struct VcInstance {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

// k parts of n vertices each (parts are implicit cliques), plus cross edges
// addressed as (part, 1-based index) pairs.
struct McisInstance {
    int k = 0;
    int n = 0;
    struct CrossEdge {
        int part_a, index_a, part_b, index_b;
    };
    std::vector<CrossEdge> edges;
};

// Complete graph on |V|+1 vertices: original edges get weight K, missing
// pairs weight 1, and a fresh apex joined to everyone with weight 1. A vertex
// cover of size c in g corresponds to value K*c + |V| (c*2 + |V| for K = 2).
inline DpvcInstance gen_clique_reduction(const VcInstance& g, Power K = 2) {
    if (K < 2) throw std::invalid_argument("gen_clique_reduction: K must be >= 2");
    std::vector<std::vector<char>> has(g.n, std::vector<char>(g.n, false));
    for (auto [u, v] : g.edges) has[u][v] = has[v][u] = true;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = u + 1; v < g.n; ++v) {
            Power w = has[u][v] ? K : 1;
            edges.push_back({u, v, w, w});
        }
    Vertex apex = g.n;
    for (Vertex u = 0; u < g.n; ++u) edges.push_back({u, apex, 1, 1});
    return DpvcInstance(g.n + 1, std::move(edges));
}

// Per original edge e=(u,v): a (2,2) gadget edge v'_e -- v''_e, with u
// attached to v'_e and v to v''_e by unit edges. Gadget vertices for edge i
// are n+2i and n+2i+1.
inline DpvcInstance gen_zero_vertex(const VcInstance& g) {
    std::vector<Edge> edges;
    int base = g.n;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        Vertex ve1 = base + 2 * static_cast<int>(i);
        Vertex ve2 = ve1 + 1;
        edges.push_back({ve1, ve2, 2, 2});
        edges.push_back({u, ve1, 1, 1});
        edges.push_back({v, ve2, 1, 1});
    }
    return DpvcInstance(g.n + 2 * static_cast<int>(g.edges.size()), std::move(edges));
}

// Two weight-2 edges plus an apex joined to their endpoints by unit edges:
// the LP optimum is 4 (endpoints at 1, apex 0) but every integer solution
// needs value 5 and a positive apex.
inline DpvcInstance gen_lp_gap() {
    // 0:u1 1:v1 2:u2 3:v2 4:apex
    std::vector<Edge> edges{{0, 1, 2, 2}, {2, 3, 2, 2}, {0, 4, 1, 1},
                            {1, 4, 1, 1}, {2, 4, 1, 1}, {3, 4, 1, 1}};
    return DpvcInstance(5, std::move(edges));
}

struct TwHardnessResult {
    DpvcInstance inst;
    Power target = 0;
    // hub vertices per part, for tests addressing the gadgets
    std::vector<Vertex> u, u_prime;
};

// Choice gadget per part: hubs u_c, u_c' plus n internal weight-n edges; the
// i-th internal edge hangs off u_c with weight i and off u_c' with weight
// n+1-i. The hub pair absorbs exactly n at optimum, and its split p(u_c) = i
// encodes choosing vertex i of the part. Checker gadget per cross edge: a K4
// of weight-n edges whose four vertices attach to u_c, u_c', u_d, u_d' with
// weights i+1, n-i+1, j+1, n-j+1, so a hub side covers its connector exactly
// when its encoded index differs from the edge's endpoint. A multicolored
// independent set of size k exists iff the optimum equals k(n^2+n) + 3mn.
//
// Two wiring adaptations keep that equivalence exact at the boundary hub
// values:
//   - an index equal to n would need a weight-(n+1) connector on u_c, which
//     neither the hub (<= n) nor a K4 vertex at n could cover; instead both
//     of that side's connectors attach to the prime hub with weight 1, which
//     is uncovered exactly when p(u_c') = 0, i.e. p(u_c) = n;
//   - hub value 0 encodes no vertex yet satisfies every checker, so when
//     cross edges exist each u_c gets a unit pendant, making value 0 cost
//     one extra unit.
//
// Numbering is gadget-major: part c occupies 2+2n consecutive ids starting
// at c*(2+2n) as [u_c, u_c', a_1, b_1, ..., a_n, b_n]; checker K4s follow in
// cross-edge order, then the pendants.
inline TwHardnessResult gen_tw_hardness(const McisInstance& m) {
    if (m.k < 1 || m.n < 1) throw std::invalid_argument("gen_tw_hardness: need k,n >= 1");
    Power n = m.n;
    std::vector<Edge> edges;
    TwHardnessResult out;
    int stride = 2 + 2 * m.n;
    for (int c = 0; c < m.k; ++c) {
        Vertex base = c * stride;
        Vertex hub = base, hubp = base + 1;
        out.u.push_back(hub);
        out.u_prime.push_back(hubp);
        for (int i = 1; i <= m.n; ++i) {
            Vertex a = base + 2 * i, b = base + 2 * i + 1;
            edges.push_back({a, b, n, n});
            edges.push_back({hub, a, static_cast<Power>(i), static_cast<Power>(i)});
            edges.push_back({hubp, b, static_cast<Power>(m.n + 1 - i), static_cast<Power>(m.n + 1 - i)});
        }
    }
    Vertex next = m.k * stride;
    for (const auto& ce : m.edges) {
        if (ce.part_a < 1 || ce.part_a > m.k || ce.part_b < 1 || ce.part_b > m.k ||
            ce.part_a == ce.part_b || ce.index_a < 1 || ce.index_a > m.n || ce.index_b < 1 ||
            ce.index_b > m.n)
            throw std::invalid_argument("gen_tw_hardness: bad cross edge");
        Vertex q[4] = {next, next + 1, next + 2, next + 3};
        next += 4;
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y) edges.push_back({q[x], q[y], n, n});
        auto attach_side = [&](int part, Power idx, Vertex qa, Vertex qb) {
            Vertex hub = out.u[part - 1], hubp = out.u_prime[part - 1];
            if (idx == n) {
                edges.push_back({hubp, qa, 1, 1});
                edges.push_back({hubp, qb, 1, 1});
            } else {
                edges.push_back({hub, qa, idx + 1, idx + 1});
                edges.push_back({hubp, qb, n - idx + 1, n - idx + 1});
            }
        };
        attach_side(ce.part_a, ce.index_a, q[0], q[1]);
        attach_side(ce.part_b, ce.index_b, q[2], q[3]);
    }
    if (!m.edges.empty()) {
        for (int c = 0; c < m.k; ++c) {
            edges.push_back({out.u[c], next, 1, 1});
            ++next;
        }
    }
    out.inst = DpvcInstance(next, std::move(edges));
    out.target = static_cast<Power>(m.k) * (n * n + n) +
                 3 * static_cast<Power>(m.edges.size()) * n;
    return out;
}

// Any choice of one index per part that avoids all cross edges.
inline bool mcis_has_independent_set(const McisInstance& m) {
    std::vector<int> pick(m.k, 1);
    for (;;) {
        bool ok = true;
        for (const auto& ce : m.edges)
            if (pick[ce.part_a - 1] == ce.index_a && pick[ce.part_b - 1] == ce.index_b) ok = false;
        if (ok) return true;
        int pos = m.k - 1;
        while (pos >= 0 && pick[pos] == m.n) pick[pos--] = 1;
        if (pos < 0) return false;
        ++pick[pos];
    }
}

// Deterministic xorshift-based generator so instances are reproducible
// across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Uniform simple graph with m edges and demands in [1, w_max]; symmetric
// unless directed.
inline DpvcInstance gen_random(int n, int m, Power w_max, bool directed, std::uint64_t seed) {
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > pairs) throw std::invalid_argument("gen_random: infeasible edge count");
    if (w_max < 1) throw std::invalid_argument("gen_random: w_max must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> all;
    all.reserve(pairs);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    // Fisher-Yates prefix
    for (int i = 0; i < m; ++i) {
        size_t j = i + rng.below(all.size() - i);
        std::swap(all[i], all[j]);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        Power wu = 1 + static_cast<Power>(rng.below(static_cast<std::uint64_t>(w_max)));
        Power wv = directed ? 1 + static_cast<Power>(rng.below(static_cast<std::uint64_t>(w_max))) : wu;
        edges.push_back({all[i].first, all[i].second, wu, wv});
    }
    return DpvcInstance(n, std::move(edges));
}

}  // namespace pvc
