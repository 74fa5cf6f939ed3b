#include "qzeta/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace qzeta {

int ArcTable::index_of(int u, int v) const {
    for (int e = 0; e < size(); ++e) {
        if (origin(e) == u && terminal(e) == v) return e;
    }
    return -1;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n_ < 1) {
        throw ValidationError("graph needs at least one vertex");
    }
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw ValidationError("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") has a vertex out of range");
        }
        if (u == v) {
            throw ValidationError("loop at vertex " + std::to_string(u) +
                                  " not allowed");
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        }
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end());

    degrees_.assign(static_cast<std::size_t>(n_), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges_) {
        ++degrees_[static_cast<std::size_t>(u)];
        ++degrees_[static_cast<std::size_t>(v)];
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    // Connectivity by traversal from vertex 0.
    std::vector<char> visited(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!visited[static_cast<std::size_t>(v)]) {
                visited[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    if (count != n_) {
        throw ValidationError("graph is disconnected (" + std::to_string(count) +
                              " of " + std::to_string(n_) + " vertices reachable)");
    }

    arcs_.arcs.reserve(edges_.size() * 2);
    for (auto [u, v] : edges_) {
        arcs_.arcs.push_back({u, v});
        arcs_.arcs.push_back({v, u});
    }
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
}

bool parse_int(const std::string& tok, int& out) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) return false;
        out = static_cast<int>(v);
        return out == v;
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_double(const std::string& tok, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(tok, &used);
        return used == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) {
        if (t[0] == '#') break; // trailing comment
        toks.push_back(t);
    }
    return toks;
}

} // namespace

Graph parse_graph(std::istream& in) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "n") {
            if (n >= 0) parse_fail(line_no, "duplicate 'n' line");
            if (toks.size() != 2 || !parse_int(toks[1], n) || n < 1)
                parse_fail(line_no, "expected 'n <positive count>'");
        } else if (toks[0] == "e") {
            if (n < 0) parse_fail(line_no, "'e' line before 'n' line");
            int u = 0, v = 0;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                parse_fail(line_no, "expected 'e <u> <v>'");
            edges.push_back({u, v});
        } else {
            parse_fail(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (n < 0) throw ParseError("missing 'n' line");
    return Graph(n, std::move(edges));
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

WeightAssignment::WeightAssignment(const Graph& g,
                                   std::vector<Quaternion> per_arc)
    : per_arc_(std::move(per_arc)) {
    if (static_cast<int>(per_arc_.size()) != g.arc_count()) {
        throw MissingWeightError("weight assignment covers " +
                                 std::to_string(per_arc_.size()) + " arcs, graph has " +
                                 std::to_string(g.arc_count()));
    }
    for (const Quaternion& q : per_arc_) {
        if (!q.is_finite()) {
            throw ValidationError("non-finite arc weight");
        }
    }
}

WeightAssignment WeightAssignment::ones(const Graph& g) {
    return WeightAssignment(
        g, std::vector<Quaternion>(static_cast<std::size_t>(g.arc_count()),
                                   Quaternion(1.0)));
}

WeightAssignment WeightAssignment::from_map(
    const Graph& g, const std::map<std::pair<int, int>, Quaternion>& w) {
    std::vector<Quaternion> per_arc(static_cast<std::size_t>(g.arc_count()),
                                    Quaternion(1.0));
    const ArcTable& arcs = g.arc_table();
    for (const auto& [uv, q] : w) {
        const int e = arcs.index_of(uv.first, uv.second);
        if (e < 0) {
            throw ValidationError("weight given for non-arc (" +
                                  std::to_string(uv.first) + "," +
                                  std::to_string(uv.second) + ")");
        }
        per_arc[static_cast<std::size_t>(e)] = q;
    }
    return WeightAssignment(g, std::move(per_arc));
}

WeightAssignment WeightAssignment::parse(const Graph& g, std::istream& in) {
    std::vector<Quaternion> per_arc(static_cast<std::size_t>(g.arc_count()),
                                    Quaternion(1.0));
    std::vector<char> listed(static_cast<std::size_t>(g.arc_count()), 0);
    const ArcTable& arcs = g.arc_table();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] != "w") parse_fail(line_no, "unknown directive '" + toks[0] + "'");
        if (toks.size() != 7)
            parse_fail(line_no, "expected 'w <u> <v> <x0> <x1> <x2> <x3>'");
        int u = 0, v = 0;
        if (!parse_int(toks[1], u) || !parse_int(toks[2], v))
            parse_fail(line_no, "bad vertex id");
        double comp[4];
        for (int i = 0; i < 4; ++i) {
            if (!parse_double(toks[static_cast<std::size_t>(3 + i)], comp[i]))
                parse_fail(line_no, "bad weight component '" +
                                        toks[static_cast<std::size_t>(3 + i)] + "'");
        }
        const int e = arcs.index_of(u, v);
        if (e < 0) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": weight for non-arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        }
        if (listed[static_cast<std::size_t>(e)]) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") listed twice");
        }
        listed[static_cast<std::size_t>(e)] = 1;
        per_arc[static_cast<std::size_t>(e)] =
            Quaternion(comp[0], comp[1], comp[2], comp[3]);
    }
    return WeightAssignment(g, std::move(per_arc));
}

WeightAssignment WeightAssignment::parse_file(const Graph& g,
                                              const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weight file '" + path + "'");
    return parse(g, in);
}

bool WeightAssignment::all_complex() const {
    for (const Quaternion& q : per_arc_)
        if (!q.is_complex()) return false;
    return true;
}

bool WeightAssignment::all_ones() const {
    for (const Quaternion& q : per_arc_)
        if (q != Quaternion(1.0)) return false;
    return true;
}

ClassicMatrices matrices_classic(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const std::size_t a2m = static_cast<std::size_t>(g.arc_count());
    const ArcTable& arcs = g.arc_table();

    ClassicMatrices out{CMatrix(n, n), CMatrix(n, n), CMatrix(a2m, a2m),
                        CMatrix(a2m, a2m)};
    for (auto [u, v] : g.edges()) {
        out.adjacency(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1.0;
        out.adjacency(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1.0;
    }
    for (std::size_t v = 0; v < n; ++v)
        out.degree(v, v) = static_cast<double>(g.degree(static_cast<int>(v)));
    for (int e = 0; e < arcs.size(); ++e) {
        for (int f = 0; f < arcs.size(); ++f) {
            if (arcs.terminal(e) == arcs.origin(f))
                out.transition(static_cast<std::size_t>(e),
                               static_cast<std::size_t>(f)) = 1.0;
        }
        out.inversion(static_cast<std::size_t>(e),
                      static_cast<std::size_t>(arcs.inverse(e))) = 1.0;
    }
    return out;
}

WeightedMatrices matrices_weighted(const Graph& g, const WeightAssignment& w) {
    if (w.size() != g.arc_count()) {
        throw MissingWeightError("weight assignment does not match graph");
    }
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const std::size_t a2m = static_cast<std::size_t>(g.arc_count());
    const ArcTable& arcs = g.arc_table();

    WeightedMatrices out{QMatrix(n, n), QMatrix(n, n), QMatrix(a2m, a2m),
                         QMatrix(a2m, n), QMatrix(a2m, n)};
    for (int e = 0; e < arcs.size(); ++e) {
        const std::size_t o = static_cast<std::size_t>(arcs.origin(e));
        const std::size_t t = static_cast<std::size_t>(arcs.terminal(e));
        out.vertex_weight(o, t) = w[e];
        out.out_weight(o, o) += w[e];
        out.origin_weight(static_cast<std::size_t>(e), o) = w[e];
        out.terminal_incidence(static_cast<std::size_t>(e), t) = Quaternion(1.0);
        for (int f = 0; f < arcs.size(); ++f) {
            if (arcs.terminal(e) == arcs.origin(f))
                out.weighted_transition(static_cast<std::size_t>(e),
                                        static_cast<std::size_t>(f)) = w[f];
        }
    }
    return out;
}

Quaternion edge_weight(const Graph& g, const WeightAssignment& w, int e, int f) {
    const ArcTable& arcs = g.arc_table();
    if (e < 0 || e >= arcs.size() || f < 0 || f >= arcs.size()) {
        throw IndexError("arc index out of range");
    }
    if (f == arcs.inverse(e)) return w[f] - Quaternion(1.0);
    if (arcs.terminal(e) == arcs.origin(f)) return w[f];
    return Quaternion();
}

QMatrix edge_matrix(const Graph& g, const WeightAssignment& w) {
    const int a2m = g.arc_count();
    QMatrix out(static_cast<std::size_t>(a2m), static_cast<std::size_t>(a2m));
    for (int e = 0; e < a2m; ++e)
        for (int f = 0; f < a2m; ++f)
            out(static_cast<std::size_t>(e), static_cast<std::size_t>(f)) =
                edge_weight(g, w, e, f);
    return out;
}

} // namespace qzeta
