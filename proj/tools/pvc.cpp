// Command-line front end: solve | verify | kernel | lp | gen | sweep.
//
// Exit codes: 0 ok / YES / feasible, 1 NO / infeasible, 2 usage or input
// error, 3 internal disagreement (cross-engine mismatch or a witness that
// fails re-verification).

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "pvc/pvc.hpp"

namespace {

using namespace pvc;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagree = 3;

DpvcInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_instance(in);
}

NiceTreeDecomposition decomposition_for(const DpvcInstance& inst, const std::string& td_path) {
    TreeDecomposition td;
    if (td_path.empty()) {
        td = min_fill_decomposition(inst);
    } else {
        std::ifstream in(td_path);
        if (!in) throw std::runtime_error("cannot open '" + td_path + "'");
        td = parse_td(in);
    }
    std::string why;
    if (!validate_decomposition(inst, td, &why))
        throw std::runtime_error("invalid tree decomposition: " + why);
    NiceTreeDecomposition ntd = make_nice(td);
    if (!validate_nice(inst, ntd, &why))
        throw std::runtime_error("nice conversion failed validation: " + why);
    return ntd;
}

struct RunReport {
    std::string instance, engine, mode, param;
    std::string answer;  // yes/no for decisions
    Power value = -1;
    int support = -1;
    long long nodes = 0;
    std::string witness_path;
    double wall_ms = 0;
    bool print_times = false;

    void print(std::ostream& os) const {
        os << "instance=" << instance << '\n';
        os << "engine=" << engine << '\n';
        os << "mode=" << mode << '\n';
        if (!param.empty()) os << "param=" << param << '\n';
        if (!answer.empty()) os << "answer=" << answer << '\n';
        if (value >= 0) os << "value=" << value << '\n';
        if (support >= 0) os << "support=" << support << '\n';
        os << "nodes=" << nodes << '\n';
        if (!witness_path.empty()) os << "witness=" << witness_path << '\n';
        if (print_times) os << "time_ms=" << wall_ms << '\n';
    }
};

// Witnesses only leave the program after re-verification.
bool emit_witness(const DpvcInstance& inst, const PowerAssignment& w, const std::string& path) {
    if (!is_feasible(inst, w)) return false;
    if (!path.empty()) {
        std::ofstream out(path);
        write_solution(out, w);
    }
    return true;
}

int cmd_solve(const std::string& path, const std::string& engine_s, Power P, Power k,
              const std::string& eps_s, const std::string& td_path,
              const std::string& witness_path, bool pretty, bool times) {
    auto engine = engine_from_name(engine_s);
    if (!engine) {
        std::cerr << "unknown engine '" << engine_s << "'\n";
        return kExitUsage;
    }
    if (P >= 0 && *engine != Engine::BranchP) {
        std::cerr << "--P only applies to branch-p\n";
        return kExitUsage;
    }
    if (k >= 0 && *engine != Engine::BranchK && *engine != Engine::HybridK) {
        std::cerr << "--k only applies to branch-k and hybrid-k\n";
        return kExitUsage;
    }
    DpvcInstance inst = load_instance(path);
    RunReport rep;
    rep.instance = path;
    rep.engine = engine_s;
    rep.print_times = times;
    auto t0 = std::chrono::steady_clock::now();
    std::optional<PowerAssignment> witness;
    int exit_code = kExitYes;

    switch (*engine) {
        case Engine::Brute: {
            OracleResult r = brute_force_opt(inst);
            rep.mode = "optimization";
            rep.value = r.opt_value;
            rep.support = r.opt_support;
            witness = r.witness;
            break;
        }
        case Engine::BranchP: {
            if (P >= 0) {
                rep.mode = "decision";
                rep.param = "P=" + std::to_string(P);
                SolveOutcome o = branch_p_decide(inst, P);
                rep.answer = o.yes ? "yes" : "no";
                rep.nodes = o.stats.nodes;
                if (o.yes) {
                    witness = o.witness;
                    rep.value = o.witness->value();
                } else {
                    exit_code = kExitNo;
                }
            } else {
                rep.mode = "optimization";
                OptimizeResult r = optimize_value_by_sweep(inst, Engine::BranchP);
                rep.value = r.value;
                rep.nodes = r.nodes;
                witness = r.witness;
            }
            break;
        }
        case Engine::BranchK:
        case Engine::HybridK: {
            auto decide = [&](Power kk) {
                return *engine == Engine::BranchK ? branch_k_decide(inst, kk)
                                                  : hybrid_k_solve(inst, kk);
            };
            if (k >= 0) {
                rep.mode = "decision";
                rep.param = "k=" + std::to_string(k);
                SolveOutcome o = decide(k);
                rep.answer = o.yes ? "yes" : "no";
                rep.nodes = o.stats.nodes;
                if (o.yes) {
                    witness = o.witness;
                    rep.support = o.witness->support();
                    rep.value = o.witness->value();
                } else {
                    exit_code = kExitNo;
                }
            } else {
                rep.mode = "optimization";
                OptimizeResult r = optimize_support_by_sweep(inst, *engine);
                rep.support = static_cast<int>(r.value);
                rep.nodes = r.nodes;
                witness = r.witness;
                rep.value = r.witness.value();
            }
            break;
        }
        case Engine::TwExact: {
            rep.mode = "optimization";
            NiceTreeDecomposition ntd = decomposition_for(inst, td_path);
            // pick the cheaper list family: (M+1) vs per-vertex degree lists
            Power m = inst.max_demand();
            DpResult r = (m <= inst.max_degree()) ? solve_tw_maxweight(inst, ntd)
                                                  : solve_tw_degree(inst, ntd);
            rep.value = r.value;
            witness = r.witness;
            break;
        }
        case Engine::TwApprox: {
            if (eps_s.empty()) {
                std::cerr << "tw-approx requires --eps\n";
                return kExitUsage;
            }
            Rational eps = parse_rational(eps_s);
            if (eps <= 0) {
                std::cerr << "--eps must be positive\n";
                return kExitUsage;
            }
            rep.mode = "approximation";
            rep.param = "eps=" + to_string(eps);
            NiceTreeDecomposition ntd = decomposition_for(inst, td_path);
            PowerAssignment sol = fptas_solve(inst, ntd, eps);
            rep.value = sol.value();
            rep.support = sol.support();
            witness = sol;
            break;
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (witness) {
        if (!emit_witness(inst, *witness, witness_path)) {
            std::cerr << "internal error: solver returned an infeasible witness\n";
            return kExitDisagree;
        }
        rep.witness_path = witness_path;
    }
    if (pretty) {
        std::cout << "== " << rep.engine << " on " << rep.instance << " ==\n";
    }
    rep.print(std::cout);
    return exit_code;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
    DpvcInstance inst = load_instance(inst_path);
    std::ifstream in(sol_path);
    if (!in) throw std::runtime_error("cannot open '" + sol_path + "'");
    PowerAssignment a = parse_solution(in, inst.n());
    int bad = first_uncovered_edge(inst, a);
    if (bad >= 0) {
        const Edge& e = inst.edge(bad);
        std::cout << "infeasible: edge (" << e.u + 1 << "," << e.v + 1 << ") uncovered (needs "
                  << e.wu << " from " << e.u + 1 << " or " << e.wv << " from " << e.v + 1 << ")\n";
        return kExitNo;
    }
    std::cout << "feasible=yes\nvalue=" << a.value() << "\nsupport=" << a.support() << '\n';
    return kExitYes;
}

int cmd_kernel(const std::string& path, Power k, const std::string& out_path,
               const std::string& trace_path) {
    DpvcInstance inst = load_instance(path);
    KernelOutcome ko = kernelize(inst, k);
    if (ko.answer_no) {
        std::cout << "answer=no\n";
        return kExitNo;
    }
    std::cout << "k_remaining=" << ko.k_remaining << "\nn=" << ko.reduced.n()
              << "\nm=" << ko.reduced.m() << '\n';
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        write_instance(out, ko.reduced);
    } else {
        write_instance(std::cout, ko.reduced);
    }
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        out << "c kernel lifting trace\n";
        out << "k " << ko.k_remaining << '\n';
        for (size_t i = 0; i < ko.vertex_map.size(); ++i)
            out << "m " << i + 1 << ' ' << ko.vertex_map[i] + 1 << (ko.marked[i] ? " *" : "")
                << '\n';
        for (const TraceOp& op : ko.trace)
            if (op.kind == TraceOp::Adjust) out << "a " << op.u + 1 << ' ' << op.w << '\n';
    }
    return kExitYes;
}

int cmd_lp(const std::string& path, bool check_half) {
    DpvcInstance inst = load_instance(path);
    if (!inst.symmetric()) {
        std::cerr << "lp requires a symmetric instance\n";
        return kExitUsage;
    }
    LpSolution sol = solve_rpvc(inst);
    std::cout << "value=" << to_string(sol.value) << '\n';
    for (Vertex v = 0; v < inst.n(); ++v)
        std::cout << "x " << v + 1 << ' ' << to_string(sol.x[v]) << '\n';
    if (check_half) {
        bool ok = check_semi_integrality(sol);
        std::cout << "half_integral=" << (ok ? "yes" : "no") << '\n';
        if (!ok) return kExitNo;
    }
    return kExitYes;
}

VcInstance parse_vc_graph(int n, const std::string& edges_s) {
    VcInstance g;
    g.n = n;
    if (edges_s.empty()) return g;
    std::istringstream ss(edges_s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::runtime_error("bad edge '" + tok + "'");
        int u = std::stoi(tok.substr(0, dash));
        int v = std::stoi(tok.substr(dash + 1));
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw std::runtime_error("bad edge '" + tok + "'");
        g.edges.push_back({u - 1, v - 1});
    }
    return g;
}

void write_generated(const DpvcInstance& inst, const std::string& out_path,
                     const std::string& comment) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        os = &file;
    }
    if (!comment.empty()) *os << "c " << comment << '\n';
    write_instance(*os, inst);
}

// One sweep row: every engine solves its own copy, results compared later.
struct SweepRow {
    bool done = false;
    bool usage_error = false;
    std::string error;
    Power reference = -1;
    std::string ref_engine;
    Power mismatch = -1;
    std::string mismatch_engine;
    std::string instance_text;
};

SweepRow sweep_one(const DpvcInstance& inst, const std::vector<std::string>& engines,
                   bool support_mode) {
    SweepRow row;
    for (const std::string& es : engines) {
        Power got = -1;
        if (es == "brute") {
            got = support_mode ? brute_force_min_support(inst) : brute_force_value(inst);
        } else if (es == "branch-p" && !support_mode) {
            got = optimize_value_by_sweep(inst, Engine::BranchP).value;
        } else if ((es == "branch-k" || es == "hybrid-k") && support_mode) {
            got = optimize_support_by_sweep(inst, es == "branch-k" ? Engine::BranchK
                                                                   : Engine::HybridK)
                      .value;
        } else if (es == "kernel+branch-k" && support_mode) {
            for (Power kk = 0;; ++kk) {
                if (kernel_then_branch_k(inst, kk).yes) {
                    got = kk;
                    break;
                }
            }
        } else if (es == "tw-exact" && !support_mode) {
            NiceTreeDecomposition ntd = make_nice(min_fill_decomposition(inst));
            DpResult a = solve_tw_maxweight(inst, ntd);
            DpResult b = solve_tw_degree(inst, ntd);
            if (!a.feasible || !b.feasible || a.value != b.value) {
                row.error = "tw-exact list families disagree";
                std::ostringstream os;
                write_instance(os, inst);
                row.instance_text = os.str();
                return row;
            }
            got = a.value;
        } else {
            row.usage_error = true;
            row.error = "engine '" + es + "' not usable in this sweep";
            return row;
        }
        if (row.reference < 0) {
            row.reference = got;
            row.ref_engine = es;
        } else if (got != row.reference) {
            row.mismatch = got;
            row.mismatch_engine = es;
            std::ostringstream os;
            write_instance(os, inst);
            row.instance_text = os.str();
            return row;
        }
    }
    row.done = true;
    return row;
}

// Cross-engine agreement harness. Instances run on a worker pool (each
// worker owns its instance and solver state); rows are aggregated and
// printed by the main thread in instance order. Any mismatch dumps the
// instance and fails.
int cmd_sweep(int count, int n, int m, Power wmax, bool directed, std::uint64_t seed,
              const std::vector<std::string>& engines, const std::string& param, int jobs) {
    bool support_mode = param == "support";
    std::vector<DpvcInstance> instances;
    for (int i = 0; i < count; ++i)
        instances.push_back(gen_random(n, std::min<long long>(m, 1LL * n * (n - 1) / 2), wmax,
                                       directed, seed + i));
    std::vector<SweepRow> rows(count);
    std::atomic<int> next{0};
    unsigned hw = std::thread::hardware_concurrency();
    int workers = jobs > 0 ? jobs : static_cast<int>(hw ? hw : 1);
    workers = std::max(1, std::min(workers, count));
    auto work = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = sweep_one(instances[i], engines, support_mode);
            } catch (const std::exception& ex) {
                rows[i].error = ex.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (int i = 0; i < count; ++i) {
        const SweepRow& row = rows[i];
        if (row.usage_error) {
            std::cerr << row.error << '\n';
            return kExitUsage;
        }
        if (!row.done) {
            if (!row.mismatch_engine.empty()) {
                std::cerr << "disagreement on instance seed=" << seed + i << ": "
                          << row.ref_engine << "=" << row.reference << " vs "
                          << row.mismatch_engine << "=" << row.mismatch << '\n';
                std::cerr << row.instance_text;
                return kExitDisagree;
            }
            std::cerr << "instance seed=" << seed + i << ": " << row.error << '\n';
            std::cerr << row.instance_text;
            return row.instance_text.empty() ? kExitUsage : kExitDisagree;
        }
        std::cout << "instance=" << i << " seed=" << seed + i << " " << param << "="
                  << row.reference << " engines=" << engines.size() << " agree=yes\n";
    }
    std::cout << "sweep=ok count=" << count << '\n';
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Power vertex cover solver suite"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance with a chosen engine");
    std::string solve_path, engine = "branch-p", eps, td_path, witness_path;
    Power P = -1, K = -1;
    bool pretty = false, times = false;
    solve->add_option("instance", solve_path)->required();
    solve->add_option("--engine", engine, "brute|branch-p|branch-k|hybrid-k|tw-exact|tw-approx");
    solve->add_option("--P", P, "total power budget (decision mode)");
    solve->add_option("--k", K, "support budget (decision mode)");
    solve->add_option("--eps", eps, "approximation parameter, exact rational like 1/2");
    solve->add_option("--td", td_path, "tree decomposition file (PACE format)");
    solve->add_option("--witness", witness_path, "write the witness here");
    solve->add_flag("--pretty", pretty);
    solve->add_flag("--times", times, "include wall time in the report");

    // verify
    auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
    std::string verify_inst, verify_sol;
    verify->add_option("instance", verify_inst)->required();
    verify->add_option("solution", verify_sol)->required();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "reduce an instance for the support parameter");
    std::string kernel_path, kernel_out, kernel_trace;
    Power kernel_k = 0;
    kernel->add_option("instance", kernel_path)->required();
    kernel->add_option("--k", kernel_k)->required();
    kernel->add_option("-o,--output", kernel_out);
    kernel->add_option("--trace", kernel_trace, "lifting trace sidecar");

    // lp
    auto* lp = app.add_subcommand("lp", "solve the fractional relaxation exactly");
    std::string lp_path;
    bool check_half = false;
    lp->add_option("instance", lp_path)->required();
    lp->add_flag("--check-half", check_half, "verify half-integrality of the basic optimum");

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    gen->fallthrough();
    std::string gen_out;
    gen->add_option("-o,--output", gen_out);

    auto* gen_gap = gen->add_subcommand("lp-gap", "the 5-vertex integrality-gap instance");
    gen_gap->fallthrough();

    auto* gen_rand = gen->add_subcommand("random", "seeded uniform instance");
    gen_rand->fallthrough();
    int rn = 8, rm = 12;
    Power rw = 5;
    bool rdir = false;
    std::uint64_t rseed = 1;
    gen_rand->add_option("--n", rn);
    gen_rand->add_option("--m", rm);
    gen_rand->add_option("--wmax", rw);
    gen_rand->add_flag("--directed", rdir);
    gen_rand->add_option("--seed", rseed);

    auto* gen_clique = gen->add_subcommand("clique-reduction", "complete-graph construction");
    gen_clique->fallthrough();
    int cq_n = 0;
    std::string cq_edges;
    Power cq_K = 2;
    gen_clique->add_option("--vc-n", cq_n)->required();
    gen_clique->add_option("--vc-edges", cq_edges, "comma list like 1-2,2-3");
    gen_clique->add_option("--K", cq_K, "weight of original edges");

    auto* gen_zero = gen->add_subcommand("zero-vertex", "zero-LP-value construction");
    gen_zero->fallthrough();
    int zv_n = 0;
    std::string zv_edges;
    gen_zero->add_option("--vc-n", zv_n)->required();
    gen_zero->add_option("--vc-edges", zv_edges);

    auto* gen_tw = gen->add_subcommand("tw-hardness", "choice/checker construction");
    gen_tw->fallthrough();
    int tw_k = 1, tw_n = 2;
    std::string tw_cross;
    gen_tw->add_option("--parts", tw_k);
    gen_tw->add_option("--size", tw_n);
    gen_tw->add_option("--cross", tw_cross, "comma list like 1:1-2:2 (part:index pairs)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "cross-engine agreement harness");
    int sw_count = 20, sw_n = 8, sw_m = 12;
    Power sw_w = 5;
    bool sw_dir = false;
    std::uint64_t sw_seed = 1;
    std::string sw_engines = "brute,branch-p", sw_param = "value";
    sweep->add_option("--count", sw_count);
    sweep->add_option("--n", sw_n);
    sweep->add_option("--m", sw_m);
    sweep->add_option("--wmax", sw_w);
    sweep->add_flag("--directed", sw_dir);
    sweep->add_option("--seed", sw_seed);
    sweep->add_option("--engines", sw_engines, "comma list");
    sweep->add_option("--param", sw_param, "value|support");
    int sw_jobs = 0;
    sweep->add_option("--jobs", sw_jobs, "worker threads (default: hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve)
            return cmd_solve(solve_path, engine, P, K, eps, td_path, witness_path, pretty, times);
        if (*verify) return cmd_verify(verify_inst, verify_sol);
        if (*kernel) return cmd_kernel(kernel_path, kernel_k, kernel_out, kernel_trace);
        if (*lp) return cmd_lp(lp_path, check_half);
        if (*gen) {
            if (*gen_gap) {
                write_generated(gen_lp_gap(), gen_out, "");
                return kExitYes;
            }
            if (*gen_rand) {
                write_generated(gen_random(rn, rm, rw, rdir, rseed), gen_out, "");
                return kExitYes;
            }
            if (*gen_clique) {
                write_generated(gen_clique_reduction(parse_vc_graph(cq_n, cq_edges), cq_K), gen_out,
                                "");
                return kExitYes;
            }
            if (*gen_zero) {
                write_generated(gen_zero_vertex(parse_vc_graph(zv_n, zv_edges)), gen_out, "");
                return kExitYes;
            }
            if (*gen_tw) {
                McisInstance mc;
                mc.k = tw_k;
                mc.n = tw_n;
                if (!tw_cross.empty()) {
                    std::istringstream ss(tw_cross);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) {
                        int a, ia, b, ib;
                        char c1, c2, c3;
                        std::istringstream ts(tok);
                        if (!(ts >> a >> c1 >> ia >> c2 >> b >> c3 >> ib) || c1 != ':' ||
                            c2 != '-' || c3 != ':')
                            throw std::runtime_error("bad cross edge '" + tok + "'");
                        mc.edges.push_back({a, ia, b, ib});
                    }
                }
                TwHardnessResult r = gen_tw_hardness(mc);
                write_generated(r.inst, gen_out, "target " + std::to_string(r.target));
                if (!gen_out.empty()) std::cout << "target=" << r.target << '\n';
                return kExitYes;
            }
        }
        if (*sweep) {
            std::vector<std::string> engines;
            std::istringstream ss(sw_engines);
            std::string tok;
            while (std::getline(ss, tok, ',')) engines.push_back(tok);
            if (sw_param != "value" && sw_param != "support") {
                std::cerr << "--param must be value or support\n";
                return kExitUsage;
            }
            return cmd_sweep(sw_count, sw_n, sw_m, sw_w, sw_dir, sw_seed, engines, sw_param, sw_jobs);
        }
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
