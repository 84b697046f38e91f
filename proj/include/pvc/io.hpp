#pragma once

// Line-oriented instance and solution file formats.
//
// Instance (1-indexed vertices on the wire):
//   c <comment>
//   p pvc <n> <m>        followed by m lines  e <u> <v> <w>
//   p dpvc <n> <m>       followed by m lines  e <u> <v> <w_uv> <w_vu>
//
// Solution:
//   s <value> <support>
//   v <id> <power>       one line per positive-power vertex

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pvc/core.hpp"

namespace pvc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {
inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

inline long long to_int(const std::string& s, int line, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("malformed ") + what + " '" + s + "'");
    }
}
}  // namespace detail

inline DpvcInstance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    bool directed = false;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || (tok[1] != "pvc" && tok[1] != "dpvc"))
                throw ParseError(lineno, "malformed header (expected 'p pvc|dpvc <n> <m>')");
            directed = tok[1] == "dpvc";
            n = static_cast<int>(detail::to_int(tok[2], lineno, "vertex count"));
            m = detail::to_int(tok[3], lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
            continue;
        }
        if (tok[0] == "e") {
            if (n < 0) throw ParseError(lineno, "edge line before header");
            size_t want = directed ? 5 : 4;
            if (tok.size() != want)
                throw ParseError(lineno, directed ? "expected 'e <u> <v> <w_uv> <w_vu>'"
                                                  : "expected 'e <u> <v> <w>'");
            long long u = detail::to_int(tok[1], lineno, "vertex");
            long long v = detail::to_int(tok[2], lineno, "vertex");
            long long wu = detail::to_int(tok[3], lineno, "demand");
            long long wv = directed ? detail::to_int(tok[4], lineno, "demand") : wu;
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex index out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            if (wu < 1 || wv < 1) throw ParseError(lineno, "demand < 1");
            edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                             static_cast<Power>(wu), static_cast<Power>(wv)});
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                     ", got " + std::to_string(edges.size()));
    try {
        return DpvcInstance(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        // duplicate-edge detection spans lines; report at end of input
        throw ParseError(lineno, ex.what());
    }
}

inline DpvcInstance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

inline void write_instance(std::ostream& out, const DpvcInstance& inst) {
    bool sym = inst.symmetric();
    out << "p " << (sym ? "pvc" : "dpvc") << ' ' << inst.n() << ' ' << inst.m() << '\n';
    for (const Edge& e : inst.edges()) {
        out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.wu;
        if (!sym) out << ' ' << e.wv;
        out << '\n';
    }
}

inline PowerAssignment parse_solution(std::istream& in, int n) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long value = 0, support = 0;
    PowerAssignment a(n);
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (have_header || tok.size() != 3) throw ParseError(lineno, "malformed solution header");
            value = detail::to_int(tok[1], lineno, "value");
            support = detail::to_int(tok[2], lineno, "support");
            have_header = true;
            continue;
        }
        if (tok[0] == "v") {
            if (!have_header || tok.size() != 3) throw ParseError(lineno, "malformed vertex line");
            long long id = detail::to_int(tok[1], lineno, "vertex");
            long long p = detail::to_int(tok[2], lineno, "power");
            if (id < 1 || id > n) throw ParseError(lineno, "vertex index out of range");
            if (p < 0) throw ParseError(lineno, "negative power");
            a.p[id - 1] = p;
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
    }
    if (!have_header) throw ParseError(lineno, "missing solution header");
    if (a.value() != value || a.support() != support)
        throw ParseError(lineno, "solution header inconsistent with vertex lines");
    return a;
}

inline void write_solution(std::ostream& out, const PowerAssignment& a) {
    out << "s " << a.value() << ' ' << a.support() << '\n';
    for (size_t v = 0; v < a.p.size(); ++v)
        if (a.p[v] > 0) out << "v " << v + 1 << ' ' << a.p[v] << '\n';
}

}  // namespace pvc
