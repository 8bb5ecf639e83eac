#pragma once

// k-vertex paths of a host graph, the P_k-graph built from them, and the
// thorn/diamond gadgets with their swap involutions.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathkit/graph.hpp"

namespace pathkit {

// A k-path as its vertex sequence, normalized so the sequence is
// lexicographically <= its reverse; each path of the host then has exactly
// one representative (equality is impossible: the endpoints differ).
using PathK = std::vector<int>;

inline PathK normalize_path(PathK p) {
    if (std::lexicographical_compare(p.rbegin(), p.rend(), p.begin(), p.end()))
        std::reverse(p.begin(), p.end());
    return p;
}

inline std::vector<PathK> enumerate_paths(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("enumerate_paths: k must be >= 2");
    int n = g.num_vertices();
    std::vector<PathK> out;
    PathK cur;
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        used[v] = 1;
        if (static_cast<int>(cur.size()) == k) {
            if (!std::lexicographical_compare(cur.rbegin(), cur.rend(), cur.begin(), cur.end()))
                out.push_back(cur);
        } else {
            for (int w : g.neighbors(v))
                if (!used[w]) self(self, w);
        }
        used[v] = 0;
        cur.pop_back();
    };
    for (int v = 0; v < n; ++v) dfs(dfs, v);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Adjacency rule of the P_k-graph, applied literally: form the union of the
// two paths and test whether it is a path on k+1 vertices or a cycle on k.
// Both paths are connected and (when the vertex counts below match) share a
// vertex, so the union is connected and the degree profile decides.
inline bool paths_adjacent(const PathK& p, const PathK& q) {
    int k = static_cast<int>(p.size());
    int shared = 0;
    for (int v : q)
        if (std::find(p.begin(), p.end(), v) != p.end()) ++shared;
    if (shared != k && shared != k - 1) return false;

    std::vector<int> verts(p);
    for (int v : q)
        if (std::find(p.begin(), p.end(), v) == p.end()) verts.push_back(v);
    int m = static_cast<int>(verts.size());

    std::vector<std::pair<int, int>> es;
    auto add = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        es.emplace_back(a, b);
    };
    for (int i = 0; i + 1 < k; ++i) add(p[i], p[i + 1]);
    for (int i = 0; i + 1 < k; ++i) add(q[i], q[i + 1]);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());

    std::vector<int> deg(m, 0);
    for (auto& [a, b] : es) {
        deg[std::find(verts.begin(), verts.end(), a) - verts.begin()]++;
        deg[std::find(verts.begin(), verts.end(), b) - verts.begin()]++;
    }
    if (m == k + 1) {
        // path on k+1 vertices: k edges, two ends of degree 1, rest degree 2
        if (static_cast<int>(es.size()) != k) return false;
        int ones = 0;
        for (int d : deg) {
            if (d == 1) ++ones;
            else if (d != 2) return false;
        }
        return ones == 2;
    }
    // cycle on k vertices: k edges, every degree 2
    if (static_cast<int>(es.size()) != k) return false;
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

inline int path_index(const std::vector<PathK>& paths, const PathK& p) {
    auto it = std::lower_bound(paths.begin(), paths.end(), p);
    if (it == paths.end() || *it != p)
        throw std::logic_error("path_index: path not present in enumeration");
    return static_cast<int>(it - paths.begin());
}

}  // namespace detail

struct PathGraphResult {
    Graph pgraph{0};            // graph over path indices
    std::vector<PathK> labels;  // index -> path of the host, enumerate_paths order
};

inline PathGraphResult build_path_graph(const Graph& g, int k) {
    PathGraphResult r;
    r.labels = enumerate_paths(g, k);
    int p = static_cast<int>(r.labels.size());
    r.pgraph = Graph(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (detail::paths_adjacent(r.labels[i], r.labels[j])) r.pgraph.add_edge(i, j);
    return r;
}

struct Thorn {
    PathK path;
    int grade;  // number of path endpoints with host-degree 1
};

inline std::pair<std::vector<Thorn>, std::vector<Thorn>> find_thorns(const Graph& g) {
    std::vector<Thorn> t1, t2;
    for (auto& p : enumerate_paths(g, 3)) {
        int ends = (g.degree(p.front()) == 1) + (g.degree(p.back()) == 1);
        if (ends == 1) t1.push_back({p, 1});
        else if (ends == 2) t2.push_back({p, 2});
    }
    return {std::move(t1), std::move(t2)};
}

struct Diamond {
    int endA = -1, endB = -1;  // endA < endB
    std::vector<int> middles;  // degree-2 vertices with neighborhood {endA, endB}
    bool braced = false;       // endA adjacent endB (that edge is not part of the diamond)
    int width() const { return static_cast<int>(middles.size()); }
};

inline std::vector<Diamond> find_diamonds(const Graph& g) {
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (int c = 0; c < g.num_vertices(); ++c) {
        if (g.degree(c) != 2) continue;
        auto nb = g.neighbors(c);
        by_ends[{nb[0], nb[1]}].push_back(c);
    }
    std::vector<Diamond> out;
    out.reserve(by_ends.size());
    for (auto& [ends, mids] : by_ends)
        out.push_back({ends.first, ends.second, mids, g.has_edge(ends.first, ends.second)});
    return out;
}

struct SwapPermutation {
    std::vector<int> mapping;      // involution on enumerate_paths(g,3) indices
    char kind = '?';               // 'B', 'S', or 'D'
    std::array<PathK, 2> support;  // the two exchanged paths
};

namespace detail {

inline SwapPermutation make_swap(const Graph& g, char kind, const PathK& p1, const PathK& p2) {
    auto paths = enumerate_paths(g, 3);
    SwapPermutation s;
    s.kind = kind;
    s.mapping.resize(paths.size());
    std::iota(s.mapping.begin(), s.mapping.end(), 0);
    int i = path_index(paths, p1);
    int j = path_index(paths, p2);
    std::swap(s.mapping[i], s.mapping[j]);
    s.support = {paths[std::min(i, j)], paths[std::max(i, j)]};
    return s;
}

inline void swap_check(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace detail

// Exchanges the sibling 1-thorns abc and abd: leaves c, d hang off b, and a
// is a non-leaf neighbor of b.
inline SwapPermutation build_b_swap(const Graph& g, int a, int b, int c, int d) {
    using detail::swap_check;
    auto deg = [&](int v) { return std::to_string(g.degree(v)); };
    swap_check(c != d, "b-swap: c and d must be distinct");
    swap_check(g.degree(a) >= 2, "b-swap: deg(a) must be >= 2, vertex " + std::to_string(a) +
                                     " has degree " + deg(a));
    swap_check(g.degree(c) == 1, "b-swap: deg(c) must be 1, vertex " + std::to_string(c) +
                                     " has degree " + deg(c));
    swap_check(g.degree(d) == 1, "b-swap: deg(d) must be 1, vertex " + std::to_string(d) +
                                     " has degree " + deg(d));
    swap_check(g.has_edge(b, a), "b-swap: b must be adjacent to a");
    swap_check(g.has_edge(b, c), "b-swap: b must be adjacent to c");
    swap_check(g.has_edge(b, d), "b-swap: b must be adjacent to d");
    return detail::make_swap(g, 'B', normalize_path({a, b, c}), normalize_path({a, b, d}));
}

// Exchanges the end paths abc and cde of a pendant P_5 abcde whose center c
// has degree exactly 2.
inline SwapPermutation build_s_swap(const Graph& g, int a, int b, int c, int d, int e) {
    using detail::swap_check;
    int vs[] = {a, b, c, d, e};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            swap_check(vs[i] != vs[j], "s-swap: the five path vertices must be distinct");
    swap_check(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, e),
               "s-swap: abcde must be a path");
    auto deg = [&](int v) { return std::to_string(g.degree(v)); };
    swap_check(g.degree(a) == 1, "s-swap: deg(a) must be 1, vertex " + std::to_string(a) +
                                     " has degree " + deg(a));
    swap_check(g.degree(e) == 1, "s-swap: deg(e) must be 1, vertex " + std::to_string(e) +
                                     " has degree " + deg(e));
    swap_check(g.degree(c) == 2, "s-swap: deg(c) must be 2, vertex " + std::to_string(c) +
                                     " has degree " + deg(c));
    return detail::make_swap(g, 'S', normalize_path({a, b, c}), normalize_path({c, d, e}));
}

// Exchanges the diamond pair c_i a c_j and c_i b c_j of the diamond with ends
// {a, b}; i and j index its middle list.
inline SwapPermutation build_d_swap(const Graph& g, int a, int b, int i, int j) {
    using detail::swap_check;
    if (a > b) std::swap(a, b);
    const Diamond* dm = nullptr;
    auto diamonds = find_diamonds(g);
    for (const auto& d : diamonds)
        if (d.endA == a && d.endB == b) {
            dm = &d;
            break;
        }
    swap_check(dm != nullptr, "d-swap: no diamond with ends " + std::to_string(a) + "," +
                                  std::to_string(b));
    swap_check(0 <= i && i < j && j < dm->width(),
               "d-swap: middle indices must satisfy 0 <= i < j < width " +
                   std::to_string(dm->width()));
    int ci = dm->middles[i], cj = dm->middles[j];
    return detail::make_swap(g, 'D', normalize_path({ci, a, cj}), normalize_path({ci, b, cj}));
}

}  // namespace pathkit
