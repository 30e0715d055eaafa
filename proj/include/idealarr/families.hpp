#pragma once

#include "idealarr/arrangement.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace idealarr {

/// Simple undirected graph on vertices 0..vertices-1.
class Graph {
public:
    explicit Graph(int vertices = 0);

    int vertices() const { return n_; }
    /// Throws on loops or out-of-range vertices; repeated edges are ignored.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].count(v) > 0; }
    const std::set<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// Edges (u, v) with u < v, sorted.
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    /// Adds every edge among the given vertices.
    void add_clique(const std::vector<int>& vs);

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_;
    std::vector<std::set<int>> adj_;
    std::set<std::pair<int, int>> edges_;
};

/// Coordinates x_1..x_n plus all x_i - x_j.
Arrangement build_jn(int n);
/// Coordinates plus all x_i + x_j.
Arrangement build_kn(int n);
/// J_n minus ker(x_i - x_j) for 1 <= i <= r < j <= n; needs 1 <= r < n-1.
Arrangement build_jn_r(int n, int r);
/// J_n minus ker(x_i - x_j) for 1 <= i <= s < j <= t; needs 1 <= s < t < n.
Arrangement build_jn_st(int n, int s, int t);
/// J_n minus ker(x_i - x_j) for i <= r < j, or r < i <= s < j <= t;
/// needs 1 <= r < s < t < n.
Arrangement build_jn_rst(int n, int r, int s, int t);

/// Hyperplanes x_u = x_v in Q^vertices, one per edge.
Arrangement graphic_arrangement(const Graph& g);
/// Same graph with vertex 0 pinned to the origin: edge (0, i) gives ker x_i
/// and (i, j) gives ker(x_i - x_j), in Q^(vertices-1). Inverse of
/// arrangement_graph.
Arrangement pinned_graphic_arrangement(const Graph& g);

/// Reads an arrangement in the J-family convention as a graph on {0..dim}:
/// ker x_i becomes edge (0, i) and ker(x_i - x_j) becomes (i, j), with
/// coordinates numbered from 1. Throws std::invalid_argument on any other
/// normal.
Graph arrangement_graph(const Arrangement& arr);

struct ChordalResult {
    /// Perfect elimination ordering, present iff the graph is chordal.
    std::optional<std::vector<int>> ordering;
    /// Chordless cycle of length >= 4 when not chordal.
    std::vector<int> cycle;

    bool chordal() const { return ordering.has_value(); }
};

/// Maximum cardinality search, then verification of the reversed visit
/// order as a perfect elimination ordering.
ChordalResult is_chordal(const Graph& g);

/// Type A_n only: vertices 0..n, edge (i, j) iff e_i - e_j lies in Iᶜ.
Graph ideal_to_graph(const RootSystem& rs, const Ideal& ideal);

}  // namespace idealarr
