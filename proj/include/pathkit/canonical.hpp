#pragma once

// Exact canonical labeling by individualization-refinement.
//
// Initial colors are degree ranks. Refinement replaces each vertex color by
// the rank of (color, sorted multiset of neighbor colors) until the partition
// stops splitting; cell fragments stay in their parent cell's position, so
// the cell order is a relabeling-invariant function of the graph. Backtracking
// individualizes vertices of the first non-singleton cell (lowest color index,
// lowest vertex id first), and the canonical form is the lexicographically
// least serialized adjacency string over the leaves of that search tree.
//
// Two exact prunings keep highly symmetric graphs tractable: subtrees whose
// decided singleton-prefix bits already exceed the best leaf are cut, and
// sibling branches equivalent under automorphisms discovered at equal-cert
// leaves are skipped (automorphisms found this way generate the full group,
// so the reported vertex orbits are exact).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathkit/graph.hpp"
#include "pathkit/graph6.hpp"

namespace pathkit {

struct NodeBudgetExceeded : std::runtime_error {
    long long budget;
    explicit NodeBudgetExceeded(long long b)
        : std::runtime_error("canonical labeling: search tree exceeded node budget " +
                             std::to_string(b)),
          budget(b) {}
};

constexpr long long kDefaultNodeBudget = 10'000'000;

struct CanonicalForm {
    std::string canon_g6;        // serialized canonically relabeled graph
    std::vector<int> relabeling; // original vertex -> canonical position
};

struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> orbits;     // vertex -> least vertex in its Aut orbit
    std::vector<std::vector<int>> generators;
    long long nodes = 0;
};

namespace detail {

class Canonicalizer {
public:
    Canonicalizer(const Graph& g, long long budget)
        : g_(g), n_(g.num_vertices()), budget_(budget), orbit_(n_) {
        std::iota(orbit_.begin(), orbit_.end(), 0);
    }

    CanonicalResult run() {
        std::vector<int> col = initial_colors();
        std::vector<uint64_t> prefix;
        std::vector<int> path;
        dfs(std::move(col), std::move(prefix), 0, path);

        CanonicalResult res;
        res.form.relabeling = best_lab_;
        Graph canon = n_ ? g_.permuted(best_lab_) : Graph(0);
        res.form.canon_g6 = write_graph6_any(canon);
        res.orbits.resize(n_);
        for (int v = 0; v < n_; ++v) res.orbits[v] = find(v);
        // normalize orbit reps to the least member
        {
            std::vector<int> least(n_, n_);
            for (int v = 0; v < n_; ++v) least[res.orbits[v]] = std::min(least[res.orbits[v]], v);
            for (int v = 0; v < n_; ++v) res.orbits[v] = least[res.orbits[v]];
        }
        res.generators = std::move(gens_);
        res.nodes = nodes_;
        return res;
    }

private:
    static constexpr size_t kMaxStoredGens = 256;

    const Graph& g_;
    int n_;
    long long budget_;
    long long nodes_ = 0;

    bool have_best_ = false;
    std::vector<uint64_t> best_cert_;
    std::vector<int> best_lab_;      // vertex -> position
    std::vector<int> best_lab_inv_;  // position -> vertex

    std::vector<std::vector<int>> gens_;
    std::vector<int> orbit_;  // global union-find over all discovered automorphisms

    // scratch buffers reused across refinement sweeps
    std::vector<int> sig_data_, sig_off_, order_, newcol_, cellsize_;

    int find(int v) {
        while (orbit_[v] != v) v = orbit_[v] = orbit_[orbit_[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) orbit_[std::max(a, b)] = std::min(a, b);
    }

    std::vector<int> initial_colors() const {
        std::vector<int> deg(n_), uniq;
        for (int v = 0; v < n_; ++v) deg[v] = g_.degree(v);
        uniq = deg;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> col(n_);
        for (int v = 0; v < n_; ++v)
            col[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), deg[v]) -
                                      uniq.begin());
        return col;
    }

    int count_cells(const std::vector<int>& col) const {
        int m = -1;
        for (int c : col) m = std::max(m, c);
        return m + 1;
    }

    // One global re-rank by (old color, sorted neighbor colors), iterated to
    // fixpoint. Fragments inherit their parent cell's relative position.
    void refine(std::vector<int>& col) {
        int ncells = count_cells(col);
        if (ncells == n_) return;
        for (;;) {
            sig_off_.assign(n_ + 1, 0);
            sig_data_.clear();
            for (int v = 0; v < n_; ++v) {
                sig_off_[v] = static_cast<int>(sig_data_.size());
                sig_data_.push_back(col[v]);
                size_t beg = sig_data_.size();
                const uint64_t* r = g_.row(v);
                for (int w = 0; w < g_.row_words(); ++w) {
                    uint64_t x = r[w];
                    while (x) {
                        sig_data_.push_back(col[w * 64 + std::countr_zero(x)]);
                        x &= x - 1;
                    }
                }
                std::sort(sig_data_.begin() + beg, sig_data_.end());
            }
            sig_off_[n_] = static_cast<int>(sig_data_.size());

            order_.resize(n_);
            std::iota(order_.begin(), order_.end(), 0);
            const int* d = sig_data_.data();
            const int* off = sig_off_.data();
            std::sort(order_.begin(), order_.end(), [&](int a, int b) {
                return std::lexicographical_compare(d + off[a], d + off[a + 1], d + off[b],
                                                    d + off[b + 1]);
            });

            newcol_.resize(n_);
            int c = 0;
            newcol_[order_[0]] = 0;
            for (int i = 1; i < n_; ++i) {
                int a = order_[i - 1], b = order_[i];
                if (!std::equal(d + off[a], d + off[a + 1], d + off[b], d + off[b + 1])) ++c;
                newcol_[order_[i]] = c;
            }
            if (c + 1 == ncells) return;  // no cell split
            ncells = c + 1;
            col.assign(newcol_.begin(), newcol_.end());
            if (ncells == n_) return;
        }
    }

    static void set_bit(std::vector<uint64_t>& bits, long long i, bool v) {
        size_t w = static_cast<size_t>(i >> 6);
        if (w >= bits.size()) bits.resize(w + 1, 0);
        if (v) bits[w] |= uint64_t(1) << (63 - (i & 63));
    }

    // -1 / 0 / +1 comparison of the first nbits of a against b; words past the
    // stored length are implicitly zero (set_bit never allocates for 0-bits)
    static int cmp_bits(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                        long long nbits) {
        auto word = [](const std::vector<uint64_t>& v, size_t w) {
            return w < v.size() ? v[w] : uint64_t(0);
        };
        size_t full = static_cast<size_t>(nbits >> 6);
        for (size_t w = 0; w < full; ++w) {
            uint64_t x = word(a, w), y = word(b, w);
            if (x != y) return x < y ? -1 : 1;
        }
        int rem = static_cast<int>(nbits & 63);
        if (rem) {
            uint64_t mask = ~uint64_t(0) << (64 - rem);
            uint64_t x = word(a, full) & mask, y = word(b, full) & mask;
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }

    void leaf(const std::vector<int>& col, const std::vector<uint64_t>& cert) {
        if (!have_best_) {
            have_best_ = true;
            best_cert_ = cert;
            store_lab(col);
            return;
        }
        int c = cmp_bits(cert, best_cert_, static_cast<long long>(n_) * (n_ - 1) / 2);
        if (c < 0) {
            best_cert_ = cert;
            store_lab(col);
        } else if (c == 0) {
            // two labelings with the same serialized form give an automorphism
            bool nontrivial = false;
            std::vector<int> alpha(n_);
            for (int v = 0; v < n_; ++v) {
                alpha[v] = best_lab_inv_[col[v]];
                if (alpha[v] != v) nontrivial = true;
            }
            if (nontrivial) {
                for (int v = 0; v < n_; ++v) unite(v, alpha[v]);
                if (gens_.size() < kMaxStoredGens) gens_.push_back(std::move(alpha));
            }
        }
    }

    void store_lab(const std::vector<int>& col) {
        best_lab_ = col;
        best_lab_inv_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) best_lab_inv_[col[v]] = v;
    }

    void dfs(std::vector<int> col, std::vector<uint64_t> prefix, int prefix_cols,
             std::vector<int>& path) {
        if (++nodes_ > budget_) throw NodeBudgetExceeded(budget_);
        refine(col);

        int ncells = count_cells(col);
        cellsize_.assign(ncells, 0);
        for (int v = 0; v < n_; ++v) ++cellsize_[col[v]];
        int p = 0;
        while (p < ncells && cellsize_[p] == 1) ++p;

        // vertices at decided positions 0..p-1
        std::vector<int> vertex_at(p, -1);
        for (int v = 0; v < n_; ++v)
            if (col[v] < p) vertex_at[col[v]] = v;

        long long bits = static_cast<long long>(prefix_cols) * (prefix_cols - 1) / 2;
        for (int j = prefix_cols; j < p; ++j)
            for (int i = 0; i < j; ++i, ++bits)
                set_bit(prefix, bits, g_.has_edge(vertex_at[i], vertex_at[j]));
        if (have_best_ && cmp_bits(prefix, best_cert_, bits) > 0) return;  // prune

        if (p == ncells && ncells == n_) {
            leaf(col, prefix);
            return;
        }

        // branch on the first non-singleton cell, lowest vertex id first
        std::vector<int> candidates;
        for (int v = 0; v < n_; ++v)
            if (col[v] == p) candidates.push_back(v);

        std::vector<int> explored;
        std::vector<int> local_orbit;
        size_t built_gens = SIZE_MAX;
        auto rebuild_local = [&]() {
            local_orbit.resize(n_);
            std::iota(local_orbit.begin(), local_orbit.end(), 0);
            auto lfind = [&](int v) {
                while (local_orbit[v] != v) v = local_orbit[v] = local_orbit[local_orbit[v]];
                return v;
            };
            for (const auto& gen : gens_) {
                bool fixes_path = true;
                for (int w : path)
                    if (gen[w] != w) {
                        fixes_path = false;
                        break;
                    }
                if (!fixes_path) continue;
                for (int v = 0; v < n_; ++v) {
                    int a = lfind(v), b = lfind(gen[v]);
                    if (a != b) local_orbit[std::max(a, b)] = std::min(a, b);
                }
            }
            built_gens = gens_.size();
        };
        auto local_find = [&](int v) {
            while (local_orbit[v] != v) v = local_orbit[v] = local_orbit[local_orbit[v]];
            return v;
        };

        for (int v : candidates) {
            if (!explored.empty()) {
                if (built_gens != gens_.size()) rebuild_local();
                bool equivalent = false;
                int rv = local_find(v);
                for (int u : explored)
                    if (local_find(u) == rv) {
                        equivalent = true;
                        break;
                    }
                if (equivalent) continue;
            }
            std::vector<int> child = col;
            for (int u = 0; u < n_; ++u)
                if (child[u] > col[v] || (child[u] == col[v] && u != v)) ++child[u];
            path.push_back(v);
            dfs(std::move(child), prefix, p, path);
            path.pop_back();
            explored.push_back(v);
        }
    }
};

}  // namespace detail

inline CanonicalResult canonical_form_ex(const Graph& g, long long node_budget = kDefaultNodeBudget) {
    detail::Canonicalizer c(g, node_budget);
    return c.run();
}

inline CanonicalForm canonical_form(const Graph& g, long long node_budget = kDefaultNodeBudget) {
    return canonical_form_ex(g, node_budget).form;
}

}  // namespace pathkit
