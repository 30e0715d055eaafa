#include "idealarr/families.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace idealarr {

Graph::Graph(int vertices) : n_(vertices), adj_(static_cast<std::size_t>(std::max(vertices, 0))) {
    if (vertices < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
    edges_.emplace(std::min(u, v), std::max(u, v));
}

void Graph::add_clique(const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) add_edge(vs[a], vs[b]);
}

namespace {

IntVector coord(int n, int i) {
    IntVector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

IntVector diff(int n, int i, int j) {
    IntVector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    v[static_cast<std::size_t>(j - 1)] = -1;
    return v;
}

template <typename Drop>
Arrangement jn_without(int n, Drop drop) {
    std::vector<IntVector> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(coord(n, i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!drop(i, j)) rows.push_back(diff(n, i, j));
    return Arrangement(static_cast<std::size_t>(n), rows);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Arrangement build_jn(int n) {
    require(n >= 1, "build_jn: need n >= 1");
    return jn_without(n, [](int, int) { return false; });
}

Arrangement build_kn(int n) {
    require(n >= 2, "build_kn: need n >= 2");
    std::vector<IntVector> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(coord(n, i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            IntVector v = coord(n, i);
            v[static_cast<std::size_t>(j - 1)] = 1;
            rows.push_back(std::move(v));
        }
    return Arrangement(static_cast<std::size_t>(n), rows);
}

Arrangement build_jn_r(int n, int r) {
    require(1 <= r && r < n - 1, "build_jn_r: need 1 <= r < n-1 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
    return jn_without(n, [r](int i, int j) { return i <= r && r < j; });
}

Arrangement build_jn_st(int n, int s, int t) {
    require(1 <= s && s < t && t < n, "build_jn_st: need 1 <= s < t < n");
    return jn_without(n, [s, t](int i, int j) { return i <= s && s < j && j <= t; });
}

Arrangement build_jn_rst(int n, int r, int s, int t) {
    require(1 <= r && r < s && s < t && t < n, "build_jn_rst: need 1 <= r < s < t < n");
    return jn_without(n, [r, s, t](int i, int j) { return (i <= r && r < j) || (r < i && i <= s && s < j && j <= t); });
}

Arrangement graphic_arrangement(const Graph& g) {
    const int n = g.vertices();
    std::vector<IntVector> rows;
    for (auto [u, v] : g.edges()) rows.push_back(diff(n, u + 1, v + 1));
    return Arrangement(static_cast<std::size_t>(n), rows);
}

Arrangement pinned_graphic_arrangement(const Graph& g) {
    require(g.vertices() >= 1, "pinned_graphic_arrangement: empty graph");
    const int n = g.vertices() - 1;
    std::vector<IntVector> rows;
    for (auto [u, v] : g.edges()) rows.push_back(u == 0 ? coord(n, v) : diff(n, u, v));
    return Arrangement(static_cast<std::size_t>(n), rows);
}

Graph arrangement_graph(const Arrangement& arr) {
    const int n = static_cast<int>(arr.dim());
    Graph g(n + 1);
    for (const auto& v : arr.normals()) {
        std::vector<int> pos;
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) pos.push_back(i);
        // normals are primitive with a positive leading entry
        if (pos.size() == 1 && v[static_cast<std::size_t>(pos[0])] == 1)
            g.add_edge(0, pos[0] + 1);
        else if (pos.size() == 2 && v[static_cast<std::size_t>(pos[0])] == 1 && v[static_cast<std::size_t>(pos[1])] == -1)
            g.add_edge(pos[0] + 1, pos[1] + 1);
        else
            throw std::invalid_argument("arrangement_graph: normal is neither x_i nor x_i - x_j");
    }
    return g;
}

namespace {

// Shortest path from a to b avoiding `blocked`; empty when none exists.
std::vector<int> bfs_path(const Graph& g, int a, int b, const std::vector<char>& blocked) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertices()), -1);
    std::queue<int> q;
    q.push(a);
    parent[static_cast<std::size_t>(a)] = a;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (u == b) break;
        for (int w : g.neighbors(u)) {
            if (blocked[static_cast<std::size_t>(w)] || parent[static_cast<std::size_t>(w)] >= 0) continue;
            parent[static_cast<std::size_t>(w)] = u;
            q.push(w);
        }
    }
    if (parent[static_cast<std::size_t>(b)] < 0) return {};
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

// A graph has a chordless cycle of length >= 4 through v iff two
// non-adjacent neighbours a, b of v are joined by a path avoiding the rest
// of N[v]; a shortest such path closes an induced cycle.
std::vector<int> chordless_cycle(const Graph& g) {
    for (int v = 0; v < g.vertices(); ++v) {
        const auto& nb = g.neighbors(v);
        for (int a : nb)
            for (int b : nb) {
                if (a >= b || g.adjacent(a, b)) continue;
                std::vector<char> blocked(static_cast<std::size_t>(g.vertices()), 0);
                blocked[static_cast<std::size_t>(v)] = 1;
                for (int w : nb)
                    if (w != a && w != b) blocked[static_cast<std::size_t>(w)] = 1;
                auto path = bfs_path(g, a, b, blocked);
                if (path.empty()) continue;
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
    }
    return {};
}

}  // namespace

ChordalResult is_chordal(const Graph& g) {
    const int n = g.vertices();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    std::vector<int> visit;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        numbered[static_cast<std::size_t>(best)] = 1;
        visit.push_back(best);
        for (int w : g.neighbors(best))
            if (!numbered[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    std::vector<int> peo(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;

    bool ok = true;
    for (int v : peo) {
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
        if (later.empty()) continue;
        const int u = *std::min_element(later.begin(), later.end(), [&](int a, int b) {
            return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
        });
        for (int w : later)
            if (w != u && !g.adjacent(u, w)) ok = false;
        if (!ok) break;
    }
    ChordalResult res;
    if (ok)
        res.ordering = std::move(peo);
    else
        res.cycle = chordless_cycle(g);
    return res;
}

Graph ideal_to_graph(const RootSystem& rs, const Ideal& ideal) {
    require(rs.type() == 'A', "ideal_to_graph: needs a type A system");
    Graph g(rs.rank() + 1);
    complement(rs, ideal).for_each([&](std::size_t i) {
        const auto& c = rs.scaled_coords(i);
        int a = -1, b = -1;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] > 0) a = static_cast<int>(k);
            if (c[k] < 0) b = static_cast<int>(k);
        }
        g.add_edge(a, b);
    });
    return g;
}

}  // namespace idealarr
