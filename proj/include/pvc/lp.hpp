#pragma once

// Exact-rational LP machinery for the relaxation
//
//     min sum_i x_i   s.t.  x_i + x_j >= w_ij for every edge, x >= 0.
//
// An equivalent integer program has a covering indicator x_ij per edge with
// x_i >= w_ij * x_ij and x_j >= w_ji * (1 - x_ij); its relaxation coincides
// with the one above (set x_ij = x_i / w_ij), so the indicators are never
// materialized here.
//
// The solver runs primal simplex with Bland's rule on the dual
//
//     max sum_e w_e y_e   s.t.  sum_{e incident to i} y_e <= 1, y >= 0,
//
// whose all-slack basis is immediately feasible. The simplex multipliers of
// the optimal basis are a basic optimal solution x* of the relaxation (the
// basic columns pin |V| independent tight constraints), which is what the
// half-integrality check needs. Both solutions are verified against each
// other: x* feasible, y* feasible, equal objectives — a complete optimality
// certificate in exact arithmetic.

#include <vector>

#include "pvc/core.hpp"
#include "pvc/rational.hpp"

namespace pvc {

struct LpSolution {
    std::vector<Rational> x;   // per vertex
    std::vector<Rational> dual;  // per edge
    Rational value = 0;
    bool basic = false;
};

namespace detail {

// max c^T z  s.t.  A z <= b, z >= 0, with b >= 0. Dense tableau, Bland's
// rule (lowest-index entering and leaving), exact rationals. Returns the
// optimal z and the simplex multipliers pi (duals of the rows).
struct SimplexMax {
    int rows, cols;
    // tableau: rows x (cols + rows + 1); slack basis start
    std::vector<std::vector<Rational>> t;
    std::vector<Rational> obj;  // reduced objective row over structural+slack
    std::vector<int> basis;

    SimplexMax(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
               const std::vector<Rational>& c)
        : rows(static_cast<int>(a.size())), cols(static_cast<int>(c.size())) {
        t.assign(rows, std::vector<Rational>(cols + rows + 1, Rational(0)));
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) t[i][j] = a[i][j];
            t[i][cols + i] = 1;
            t[i][cols + rows] = b[i];
        }
        obj.assign(cols + rows + 1, Rational(0));
        for (int j = 0; j < cols; ++j) obj[j] = c[j];
        basis.resize(rows);
        for (int i = 0; i < rows; ++i) basis[i] = cols + i;
    }

    void pivot(int r, int c) {
        Rational p = t[r][c];
        for (auto& v : t[r]) v /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (int j = 0; j <= cols + rows; ++j) t[i][j] -= f * t[r][j];
        }
        if (obj[c] != 0) {
            Rational f = obj[c];
            for (int j = 0; j <= cols + rows; ++j) obj[j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    void run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols + rows; ++j)
                if (obj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < rows; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][cols + rows] / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("simplex: unbounded");
            pivot(leave, enter);
        }
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> z(cols, Rational(0));
        for (int i = 0; i < rows; ++i)
            if (basis[i] < cols) z[basis[i]] = t[i][cols + rows];
        return z;
    }

    // multiplier of row i = -reduced cost of its slack column
    std::vector<Rational> multipliers() const {
        std::vector<Rational> pi(rows);
        for (int i = 0; i < rows; ++i) pi[i] = -obj[cols + i];
        return pi;
    }

    Rational objective() const { return -obj[cols + rows]; }
};

}  // namespace detail

// Solve the relaxation of a symmetric instance, returning a basic optimal
// solution (a vertex of the polyhedron).
inline LpSolution solve_rpvc(const DpvcInstance& inst) {
    if (!inst.symmetric()) throw std::invalid_argument("solve_rpvc: asymmetric instance");
    int n = inst.n(), m = inst.m();
    // dual: one variable per edge, one <=1 row per vertex
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(n, Rational(1)), c(m);
    for (int e = 0; e < m; ++e) {
        a[inst.edge(e).u][e] = 1;
        a[inst.edge(e).v][e] = 1;
        c[e] = Rational(inst.edge(e).wu);
    }
    detail::SimplexMax sx(a, b, c);
    sx.run();
    LpSolution sol;
    sol.dual = sx.primal();
    sol.x = sx.multipliers();
    sol.basic = true;
    sol.value = 0;
    for (const Rational& xi : sol.x) sol.value += xi;

    // certificate: x feasible, dual feasible, objectives equal
    Rational dual_value = 0;
    std::vector<Rational> row_load(n, Rational(0));
    for (int e = 0; e < m; ++e) {
        const Edge& ed = inst.edge(e);
        if (sol.dual[e] < 0) throw std::logic_error("solve_rpvc: negative dual");
        if (sol.x[ed.u] + sol.x[ed.v] < Rational(ed.wu))
            throw std::logic_error("solve_rpvc: primal infeasible");
        dual_value += sol.dual[e] * Rational(ed.wu);
        row_load[ed.u] += sol.dual[e];
        row_load[ed.v] += sol.dual[e];
    }
    for (Vertex v = 0; v < n; ++v) {
        if (sol.x[v] < 0) throw std::logic_error("solve_rpvc: negative primal");
        if (row_load[v] > 1) throw std::logic_error("solve_rpvc: dual infeasible");
    }
    if (dual_value != sol.value) throw std::logic_error("solve_rpvc: duality gap");
    return sol;
}

// True iff 2 x_i is a nonnegative integer for every vertex. Only meaningful
// for extremal solutions.
inline bool check_semi_integrality(const LpSolution& sol) {
    if (!sol.basic) throw std::invalid_argument("check_semi_integrality: non-basic solution");
    for (const Rational& xi : sol.x)
        if (xi < 0 || !is_half_integral(xi)) return false;
    return true;
}

// Integer lower bound on the DPVC optimum. Asymmetric demands are weakened
// to min(w_uv, w_vu) so the symmetric relaxation applies.
inline Power lp_lower_bound(const DpvcInstance& inst) {
    if (inst.m() == 0) return 0;
    std::vector<Edge> edges;
    for (const Edge& e : inst.edges()) {
        Power w = std::min(e.wu, e.wv);
        edges.push_back({e.u, e.v, w, w});
    }
    DpvcInstance sym(inst.n(), std::move(edges));
    LpSolution sol = solve_rpvc(sym);
    return to_power(ceil_rational(sol.value));
}

}  // namespace pvc
