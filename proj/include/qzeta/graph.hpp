#ifndef QZETA_GRAPH_HPP
#define QZETA_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "qzeta/qmatrix.hpp"
#include "qzeta/quaternion.hpp"

namespace qzeta {

// Canonical arc table of an undirected graph. Edges are sorted
// lexicographically as (u, v) with u < v; edge k yields arc 2k = (u, v) and
// arc 2k+1 = (v, u), so an arc and its inverse are always adjacent and the
// inversion matrix is block-diagonal with 2x2 swap blocks.
struct ArcTable {
    std::vector<std::pair<int, int>> arcs; // size 2m

    int size() const { return static_cast<int>(arcs.size()); }
    int origin(int e) const { return arcs[static_cast<std::size_t>(e)].first; }
    int terminal(int e) const { return arcs[static_cast<std::size_t>(e)].second; }
    int inverse(int e) const { return e ^ 1; }

    // Index of arc (u, v); -1 when (u, v) is not an arc.
    int index_of(int u, int v) const;
};

// Finite simple connected graph on vertices 0..n-1.
class Graph {
  public:
    // Validates: no loops, no duplicate edges, ids in range, connected.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int arc_count() const { return 2 * edge_count(); }
    // Betti number m - n + 1; zero exactly for trees.
    int betti_number() const { return edge_count() - n_ + 1; }
    bool is_tree() const { return betti_number() == 0; }
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const ArcTable& arc_table() const { return arcs_; }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // normalized (u < v), sorted
    std::vector<int> degrees_;
    ArcTable arcs_;
};

// Text format: '#' comments, one "n <count>" line, then "e <u> <v>" lines.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

// Quaternion weight per arc, in canonical arc order.
class WeightAssignment {
  public:
    // Every arc must be covered; MissingWeightError otherwise.
    WeightAssignment(const Graph& g, std::vector<Quaternion> per_arc);

    static WeightAssignment ones(const Graph& g);
    // Map keyed by arc (u, v); arcs not listed default to weight 1.
    static WeightAssignment from_map(
        const Graph& g, const std::map<std::pair<int, int>, Quaternion>& w);

    // Text format: lines "w <u> <v> <x0> <x1> <x2> <x3>"; unlisted arcs
    // default to 1; listing a non-arc or the same arc twice is an error.
    static WeightAssignment parse(const Graph& g, std::istream& in);
    static WeightAssignment parse_file(const Graph& g, const std::string& path);

    const Quaternion& operator[](int arc) const {
        return per_arc_[static_cast<std::size_t>(arc)];
    }
    int size() const { return static_cast<int>(per_arc_.size()); }

    bool all_complex() const; // zero j,k parts everywhere
    bool all_ones() const;

  private:
    std::vector<Quaternion> per_arc_;
};

// Unweighted structural matrices. transition(e,f) = 1 iff the terminal of e
// is the origin of f; inversion(e,f) = 1 iff f is the inverse arc of e.
struct ClassicMatrices {
    CMatrix adjacency; // n x n
    CMatrix degree;    // n x n diagonal
    CMatrix transition; // 2m x 2m
    CMatrix inversion;  // 2m x 2m
};
ClassicMatrices matrices_classic(const Graph& g);

// Weighted counterparts. weighted_transition(e,f) = w(f) iff t(e) = o(f).
// origin_weight(e,v) = w(e) iff o(e) = v; terminal_incidence(e,v) = 1 iff
// t(e) = v. They satisfy terminal_incidence * origin_weight^T =
// weighted_transition exactly.
struct WeightedMatrices {
    QMatrix vertex_weight;       // n x n, W(u,v) = w(u,v) on arcs else 0
    QMatrix out_weight;          // n x n diagonal of outgoing weight sums
    QMatrix weighted_transition; // 2m x 2m
    QMatrix origin_weight;       // 2m x n
    QMatrix terminal_incidence;  // 2m x n
};
WeightedMatrices matrices_weighted(const Graph& g, const WeightAssignment& w);

// Entry (e,f) of the weighted edge matrix: w(f) on a non-inverting
// transition, w(f) - 1 on an inversion, 0 otherwise.
Quaternion edge_weight(const Graph& g, const WeightAssignment& w, int e, int f);

// The full 2m x 2m weighted edge matrix (weighted_transition - inversion).
QMatrix edge_matrix(const Graph& g, const WeightAssignment& w);

} // namespace qzeta

#endif // QZETA_GRAPH_HPP
