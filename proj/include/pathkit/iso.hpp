#pragma once

// Exact isomorphism testing on top of canonical forms, plus induction and
// verification of P_k-isomorphisms.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathkit/canonical.hpp"
#include "pathkit/graph.hpp"
#include "pathkit/paths.hpp"

namespace pathkit {

struct IsoCertificate {
    std::vector<int> map;  // vertex bijection G -> H
};

inline bool check_certificate(const Graph& g, const Graph& h, const std::vector<int>& map) {
    int n = g.num_vertices();
    if (h.num_vertices() != n || static_cast<int>(map.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : map) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) != h.has_edge(map[u], map[v])) return false;
    return true;
}

inline std::optional<IsoCertificate> are_isomorphic(const Graph& g, const Graph& h,
                                                    long long node_budget = kDefaultNodeBudget) {
    if (g.num_vertices() != h.num_vertices()) return std::nullopt;
    if (g.num_edges() != h.num_edges()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    CanonicalForm cg = canonical_form(g, node_budget);
    CanonicalForm ch = canonical_form(h, node_budget);
    if (cg.canon_g6 != ch.canon_g6) return std::nullopt;
    int n = g.num_vertices();
    std::vector<int> h_at(n);  // canonical position -> vertex of h
    for (int v = 0; v < n; ++v) h_at[ch.relabeling[v]] = v;
    IsoCertificate cert;
    cert.map.resize(n);
    for (int v = 0; v < n; ++v) cert.map[v] = h_at[cg.relabeling[v]];
    if (!check_certificate(g, h, cert.map))
        throw std::logic_error("are_isomorphic: composed certificate failed edge recheck");
    return cert;
}

struct PkIsomorphism {
    int k = 3;
    std::vector<int> map;  // enumerate_paths(g,k) index -> enumerate_paths(h,k) index
};

inline PkIsomorphism induce_pk_isomorphism(const IsoCertificate& sigma, const Graph& g,
                                           const Graph& h, int k) {
    if (!check_certificate(g, h, sigma.map))
        throw std::invalid_argument("induce_pk_isomorphism: sigma is not an isomorphism g -> h");
    auto pg = enumerate_paths(g, k);
    auto ph = enumerate_paths(h, k);
    PkIsomorphism tau;
    tau.k = k;
    tau.map.reserve(pg.size());
    for (const auto& p : pg) {
        PathK img(p.size());
        std::transform(p.begin(), p.end(), img.begin(), [&](int v) { return sigma.map[v]; });
        tau.map.push_back(detail::path_index(ph, normalize_path(std::move(img))));
    }
    return tau;
}

struct PkVerification {
    bool ok = true;
    char side = 'G';      // 'G': edge of P_k(g) whose image pair is not an edge; 'H': converse
    PathK first, second;  // first violating pair in enumeration order
    explicit operator bool() const { return ok; }
};

inline PkVerification verify_pk_isomorphism(const PkIsomorphism& tau, const Graph& g,
                                            const Graph& h) {
    auto pg = enumerate_paths(g, tau.k);
    auto ph = enumerate_paths(h, tau.k);
    int np = static_cast<int>(pg.size());
    if (static_cast<int>(tau.map.size()) != np || pg.size() != ph.size())
        throw std::invalid_argument("verify_pk_isomorphism: map size " +
                                    std::to_string(tau.map.size()) + " does not biject " +
                                    std::to_string(pg.size()) + " paths onto " +
                                    std::to_string(ph.size()));
    std::vector<int> inv(np, -1);
    for (int i = 0; i < np; ++i) {
        int t = tau.map[i];
        if (t < 0 || t >= np || inv[t] != -1)
            throw std::invalid_argument("verify_pk_isomorphism: map is not a bijection");
        inv[t] = i;
    }
    // forward: every edge of P_k(g) must map onto an edge of P_k(h)
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j)
            if (detail::paths_adjacent(pg[i], pg[j]) &&
                !detail::paths_adjacent(ph[tau.map[i]], ph[tau.map[j]]))
                return {false, 'G', pg[i], pg[j]};
    // backward: every edge of P_k(h) must pull back to an edge of P_k(g)
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j)
            if (detail::paths_adjacent(ph[i], ph[j]) &&
                !detail::paths_adjacent(pg[inv[i]], pg[inv[j]]))
                return {false, 'H', ph[i], ph[j]};
    return {};
}

}  // namespace pathkit
