#pragma once

// Shared test utilities: instance builders and independent oracles that must
// stay decoupled from the solver code paths they check.

#include <vector>

#include "pvc/core.hpp"
#include "pvc/generators.hpp"

namespace pvc::test {

inline DpvcInstance make(int n, std::vector<Edge> edges) { return DpvcInstance(n, std::move(edges)); }

inline DpvcInstance single_edge(Power wu, Power wv) { return make(2, {{0, 1, wu, wv}}); }

inline DpvcInstance triangle_unit() { return make(3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 2, 1, 1}}); }

// Subset-enumeration minimum vertex cover, independent of every solver.
inline int vc_by_enumeration(const VcInstance& g) {
    int best = g.n;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges)
            if (!(mask >> u & 1) && !(mask >> v & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

inline VcInstance vc_from_mask(int n, unsigned mask) {
    VcInstance g;
    g.n = n;
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.edges.push_back({u, v});
    return g;
}

// Random corpora mirroring the verification sweeps: small instances sized by
// seed, weights in [1, w_max].
inline DpvcInstance random_instance(std::uint64_t seed, int n_max, int m_max, Power w_max,
                                    bool directed) {
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    int n = 2 + static_cast<int>(rng.below(n_max - 1));
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    int m = static_cast<int>(rng.below(std::min<long long>(m_max, pairs) + 1));
    return gen_random(n, m, w_max, directed, rng.next());
}

}  // namespace pvc::test
