#pragma once

// Tree decompositions: min-fill construction, validity checking, conversion
// to nice form (Leaf / Introduce / Forget / Join), and PACE-style .td files.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pvc/core.hpp"
#include "pvc/io.hpp"

namespace pvc {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;        // sorted vertex lists
    std::vector<std::pair<int, int>> tree_edges;  // bag ids

    int width() const {
        size_t w = 0;
        for (const auto& b : bags) w = std::max(w, b.size());
        return static_cast<int>(w) - 1;
    }
};

// Checks the three defining conditions; returns an explanation on failure.
inline bool validate_decomposition(const DpvcInstance& inst, const TreeDecomposition& td,
                                   std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int b = static_cast<int>(td.bags.size());
    if (b == 0) return inst.n() == 0 ? true : fail("no bags");
    // tree shape: connected and acyclic
    if (static_cast<int>(td.tree_edges.size()) != b - 1) return fail("bag tree is not a tree");
    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || x >= b || y < 0 || y >= b) return fail("bag id out of range");
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    std::vector<char> seen(b, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y : tadj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    if (reached != b) return fail("bag tree is disconnected");
    // condition 1: bags cover all vertices
    std::vector<char> covered(inst.n(), false);
    for (const auto& bag : td.bags)
        for (Vertex v : bag) {
            if (v < 0 || v >= inst.n()) return fail("bag contains out-of-range vertex");
            covered[v] = true;
        }
    for (Vertex v = 0; v < inst.n(); ++v)
        if (!covered[v]) return fail("vertex " + std::to_string(v + 1) + " is in no bag");
    // condition 2: every edge inside some bag
    for (const Edge& e : inst.edges()) {
        bool found = false;
        for (const auto& bag : td.bags) {
            bool hu = std::binary_search(bag.begin(), bag.end(), e.u);
            bool hv = std::binary_search(bag.begin(), bag.end(), e.v);
            if (hu && hv) {
                found = true;
                break;
            }
        }
        if (!found)
            return fail("edge (" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                        ") is in no bag");
    }
    // condition 3: occurrences of each vertex form a subtree
    for (Vertex v = 0; v < inst.n(); ++v) {
        int start = -1, want = 0;
        for (int i = 0; i < b; ++i)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                ++want;
                start = i;
            }
        std::vector<char> vis(b, false);
        std::vector<int> st{start};
        vis[start] = true;
        int got = 0;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            ++got;
            for (int y : tadj[x]) {
                if (vis[y] || !std::binary_search(td.bags[y].begin(), td.bags[y].end(), v)) continue;
                vis[y] = true;
                st.push_back(y);
            }
        }
        if (got != want)
            return fail("occurrences of vertex " + std::to_string(v + 1) + " are disconnected");
    }
    return true;
}

// Min-fill elimination ordering; width is a treewidth upper bound.
inline TreeDecomposition min_fill_decomposition(const DpvcInstance& inst) {
    int n = inst.n();
    TreeDecomposition td;
    if (n == 0) return td;
    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : inst.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> gone(n, false);
    std::vector<int> bag_of(n, -1);
    std::vector<Vertex> order;
    for (int round = 0; round < n; ++round) {
        Vertex best = -1;
        long long best_fill = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best < 0 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        std::vector<Vertex> bag(adj[best].begin(), adj[best].end());
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        bag_of[best] = static_cast<int>(td.bags.size());
        td.bags.push_back(bag);
        order.push_back(best);
        for (Vertex x : adj[best])
            for (Vertex y : adj[best])
                if (x < y) {
                    adj[x].insert(y);
                    adj[y].insert(x);
                }
        for (Vertex x : adj[best]) adj[x].erase(best);
        adj[best].clear();
        gone[best] = true;
    }
    // connect each bag to the bag of its first-eliminated higher neighbor;
    // isolated-at-elimination vertices chain to the next eliminated vertex
    std::vector<int> elim_pos(n);
    for (int i = 0; i < n; ++i) elim_pos[order[i]] = i;
    for (int i = 0; i < n - 1; ++i) {
        Vertex v = order[i];
        Vertex parent = -1;
        int best_pos = n;
        for (Vertex x : td.bags[bag_of[v]]) {
            if (x == v) continue;
            if (elim_pos[x] > i && elim_pos[x] < best_pos) {
                best_pos = elim_pos[x];
                parent = x;
            }
        }
        if (parent < 0) parent = order[i + 1];
        td.tree_edges.push_back({bag_of[v], bag_of[parent]});
    }
    return td;
}

// --- nice form ---

struct NiceNode {
    enum Kind { Leaf, Introduce, Forget, Join } kind;
    Vertex vertex = -1;        // Introduce/Forget
    std::vector<Vertex> bag;   // sorted
    int left = -1, right = -1; // children
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const {
        size_t w = 0;
        for (const auto& nd : nodes) w = std::max(w, nd.bag.size());
        return static_cast<int>(w) - 1;
    }
};

namespace detail {

inline int nice_leaf_chain(NiceTreeDecomposition& out, const std::vector<Vertex>& bag) {
    // Leaf holds one vertex; introduce the rest
    int cur = static_cast<int>(out.nodes.size());
    out.nodes.push_back({NiceNode::Leaf, bag[0], {bag[0]}, -1, -1});
    std::vector<Vertex> acc{bag[0]};
    for (size_t i = 1; i < bag.size(); ++i) {
        acc.push_back(bag[i]);
        std::sort(acc.begin(), acc.end());
        int nxt = static_cast<int>(out.nodes.size());
        out.nodes.push_back({NiceNode::Introduce, bag[i], acc, cur, -1});
        cur = nxt;
    }
    return cur;
}

// Adapt a subtree topped with bag `from` so its top bag becomes `to`.
inline int nice_adapt(NiceTreeDecomposition& out, int node, std::vector<Vertex> from,
                      const std::vector<Vertex>& to) {
    for (Vertex v : std::vector<Vertex>(from)) {
        if (std::binary_search(to.begin(), to.end(), v)) continue;
        from.erase(std::find(from.begin(), from.end(), v));
        int nxt = static_cast<int>(out.nodes.size());
        out.nodes.push_back({NiceNode::Forget, v, from, node, -1});
        node = nxt;
    }
    for (Vertex v : to) {
        if (std::binary_search(from.begin(), from.end(), v)) continue;
        from.insert(std::upper_bound(from.begin(), from.end(), v), v);
        int nxt = static_cast<int>(out.nodes.size());
        out.nodes.push_back({NiceNode::Introduce, v, from, node, -1});
        node = nxt;
    }
    return node;
}

inline int nice_build(NiceTreeDecomposition& out, const TreeDecomposition& td,
                      const std::vector<std::vector<int>>& tadj, int bag, int parent) {
    std::vector<int> kids;
    for (int c : tadj[bag])
        if (c != parent) kids.push_back(c);
    const std::vector<Vertex>& mybag = td.bags[bag];
    if (kids.empty()) return nice_leaf_chain(out, mybag);
    std::vector<int> tops;
    for (int c : kids) {
        int sub = nice_build(out, td, tadj, c, bag);
        tops.push_back(nice_adapt(out, sub, td.bags[c], mybag));
    }
    int cur = tops[0];
    for (size_t i = 1; i < tops.size(); ++i) {
        int nxt = static_cast<int>(out.nodes.size());
        out.nodes.push_back({NiceNode::Join, -1, mybag, cur, tops[i]});
        cur = nxt;
    }
    return cur;
}

}  // namespace detail

// Root the decomposition at bag 0 and binarize. Empty bags are spliced out
// first (they impose nothing); a fully empty decomposition (n == 0) yields
// an empty node list, which callers treat as value 0.
inline NiceTreeDecomposition make_nice(const TreeDecomposition& input) {
    TreeDecomposition td = input;
    for (;;) {
        int victim = -1;
        for (size_t i = 0; i < td.bags.size() && victim < 0; ++i)
            if (td.bags[i].empty() && td.bags.size() > 1) victim = static_cast<int>(i);
        if (victim < 0) break;
        std::vector<int> nbrs;
        std::vector<std::pair<int, int>> kept;
        for (auto [x, y] : td.tree_edges) {
            if (x == victim) {
                nbrs.push_back(y);
            } else if (y == victim) {
                nbrs.push_back(x);
            } else {
                kept.push_back({x, y});
            }
        }
        for (size_t i = 1; i < nbrs.size(); ++i) kept.push_back({nbrs[0], nbrs[i]});
        td.bags.erase(td.bags.begin() + victim);
        td.tree_edges.clear();
        for (auto [x, y] : kept)
            td.tree_edges.push_back({x > victim ? x - 1 : x, y > victim ? y - 1 : y});
    }
    NiceTreeDecomposition out;
    if (td.bags.empty() || td.bags[0].empty()) return out;
    std::vector<std::vector<int>> tadj(td.bags.size());
    for (auto [x, y] : td.tree_edges) {
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    out.root = detail::nice_build(out, td, tadj, 0, -1);
    return out;
}

// Structural checks for nice form plus the decomposition conditions.
inline bool validate_nice(const DpvcInstance& inst, const NiceTreeDecomposition& ntd,
                          std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (ntd.nodes.empty()) return inst.n() == 0 ? true : fail("empty nice decomposition");
    TreeDecomposition flat;
    for (const auto& nd : ntd.nodes) flat.bags.push_back(nd.bag);
    for (int i = 0; i < static_cast<int>(ntd.nodes.size()); ++i) {
        const NiceNode& nd = ntd.nodes[i];
        if (nd.left >= 0) flat.tree_edges.push_back({i, nd.left});
        if (nd.right >= 0) flat.tree_edges.push_back({i, nd.right});
        switch (nd.kind) {
            case NiceNode::Leaf:
                if (nd.left >= 0 || nd.right >= 0 || nd.bag.size() != 1)
                    return fail("bad leaf node");
                break;
            case NiceNode::Introduce: {
                if (nd.left < 0 || nd.right >= 0) return fail("introduce node needs one child");
                std::vector<Vertex> expect = ntd.nodes[nd.left].bag;
                expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
                if (expect != nd.bag) return fail("introduce bag mismatch");
                break;
            }
            case NiceNode::Forget: {
                if (nd.left < 0 || nd.right >= 0) return fail("forget node needs one child");
                std::vector<Vertex> expect = ntd.nodes[nd.left].bag;
                auto it = std::find(expect.begin(), expect.end(), nd.vertex);
                if (it == expect.end()) return fail("forget of absent vertex");
                expect.erase(it);
                if (expect != nd.bag) return fail("forget bag mismatch");
                break;
            }
            case NiceNode::Join:
                if (nd.left < 0 || nd.right < 0) return fail("join node needs two children");
                if (ntd.nodes[nd.left].bag != nd.bag || ntd.nodes[nd.right].bag != nd.bag)
                    return fail("join children bags differ");
                break;
        }
    }
    return validate_decomposition(inst, flat, why);
}

// --- PACE .td format ---

inline TreeDecomposition parse_td(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    int lineno = 0;
    int bags = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (tok.size() != 5 || tok[1] != "td") throw ParseError(lineno, "malformed td header");
            bags = static_cast<int>(detail::to_int(tok[2], lineno, "bag count"));
            td.bags.assign(bags, {});
            continue;
        }
        if (tok[0] == "b") {
            if (bags < 0) throw ParseError(lineno, "bag before header");
            if (tok.size() < 2) throw ParseError(lineno, "malformed bag line");
            int id = static_cast<int>(detail::to_int(tok[1], lineno, "bag id"));
            if (id < 1 || id > bags) throw ParseError(lineno, "bag id out of range");
            for (size_t i = 2; i < tok.size(); ++i)
                td.bags[id - 1].push_back(
                    static_cast<Vertex>(detail::to_int(tok[i], lineno, "vertex") - 1));
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
            continue;
        }
        if (tok.size() == 2) {
            int a = static_cast<int>(detail::to_int(tok[0], lineno, "bag id"));
            int b = static_cast<int>(detail::to_int(tok[1], lineno, "bag id"));
            if (a < 1 || a > bags || b < 1 || b > bags)
                throw ParseError(lineno, "tree edge out of range");
            td.tree_edges.push_back({a - 1, b - 1});
            continue;
        }
        throw ParseError(lineno, "unknown line in td file");
    }
    if (bags < 0) throw ParseError(lineno, "missing td header");
    return td;
}

inline void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [x, y] : td.tree_edges) out << x + 1 << ' ' << y + 1 << '\n';
}

}  // namespace pvc
