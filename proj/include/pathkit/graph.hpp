#pragma once

// Simple undirected graphs over vertex ids 0..n-1, stored as dense bit rows.
// Values are cheap to copy and never mutated after construction by the
// algorithms in this library, so they can be shared freely across threads.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pathkit {

class Graph {
public:
    Graph() : n_(0), words_(0) {}

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int num_vertices() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        row(u)[v >> 6] |= uint64_t(1) << (v & 63);
        row(v)[u >> 6] |= uint64_t(1) << (u & 63);
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }

    int degree(int v) const {
        const uint64_t* r = row(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        const uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            uint64_t x = r[w];
            while (x) {
                out.push_back(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    int num_edges() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    // Relabeled copy: vertex v of *this becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw std::invalid_argument("permuted: permutation size mismatch");
        Graph h(n_);
        for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
        return h;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int row_words() const { return words_; }

private:
    uint64_t* row(int v) { return bits_.data() + static_cast<size_t>(v) * words_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id out of range");
    }

    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

// The empty graph is not connected; the one-vertex graph is.
inline bool is_connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.row_words(); ++w) {
            uint64_t x = g.row(v)[w];
            while (x) {
                int u = w * 64 + std::countr_zero(x);
                x &= x - 1;
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
    }
    return count == n;
}

struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

// 2-coloring by BFS, one component at a time. Each component's lowest-id
// vertex goes to side A, so vertex 0 always lands in side A. Returns
// nullopt when the graph has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = color[v] ^ 1;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? bp.side_a : bp.side_b).push_back(v);
    return bp;
}

}  // namespace pathkit
