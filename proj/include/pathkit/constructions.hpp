#pragma once

// Generator families: named base graphs, the exceptional Whitney models with
// their edge bijections, the thorn-count equation, diamond inflation, and the
// pair constructions built from them.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathkit/graph.hpp"

namespace pathkit {

// --- named graphs ---------------------------------------------------------
// Deterministic vertex numbering, documented per family.

// Subdivision of K_{1,3}: center 0, midpoints 1..3, leaves 4..6; midpoint i
// sits between the center and leaf i+3.
inline Graph make_sw() {
    return graph_from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Star K_{1,n}: center 0, leaves 1..n.
inline Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("star: need n >= 1 leaves");
    Graph g(n + 1);
    for (int v = 1; v <= n; ++v) g.add_edge(0, v);
    return g;
}

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Sides 0..m-1 and m..m+n-1.
inline Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: need m, n >= 1");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

// Triangles sharing the spine edge 0-1; page apexes 2..pages+1.
inline Graph make_book(int pages) {
    if (pages < 1) throw std::invalid_argument("book: need pages >= 1");
    Graph g(pages + 2);
    g.add_edge(0, 1);
    for (int p = 0; p < pages; ++p) {
        g.add_edge(0, p + 2);
        g.add_edge(1, p + 2);
    }
    return g;
}

inline Graph named_graph(const std::string& name, const std::vector<int>& params) {
    auto arity = [&](size_t want) {
        if (params.size() != want)
            throw std::invalid_argument("named_graph: " + name + " takes " +
                                        std::to_string(want) + " parameter(s), got " +
                                        std::to_string(params.size()));
    };
    if (name == "sw") {
        arity(0);
        return make_sw();
    }
    if (name == "cycle") {
        arity(1);
        return make_cycle(params[0]);
    }
    if (name == "path") {
        arity(1);
        return make_path(params[0]);
    }
    if (name == "star") {
        arity(1);
        return make_star(params[0]);
    }
    if (name == "complete") {
        arity(1);
        return make_complete(params[0]);
    }
    if (name == "complete_bipartite") {
        arity(2);
        return make_complete_bipartite(params[0], params[1]);
    }
    if (name == "book") {
        arity(1);
        return make_book(params[0]);
    }
    throw std::invalid_argument("named_graph: unknown family \"" + name + "\"");
}

// --- Whitney models --------------------------------------------------------

using Edge = std::pair<int, int>;

// The exceptional pairs of Whitney's edge-isomorphism theorem. W lives on
// {a,b,c,d} = ids 0..3; W' on {u,v,w,x} = ids 0..3 (x absent for i=3). phi is
// listed in W.edges() order.
struct WhitneyModel {
    int i = 6;
    Graph W{0}, Wp{0};
    std::vector<std::pair<Edge, Edge>> phi;
};

inline WhitneyModel whitney_model(int i) {
    if (i < 3 || i > 6) throw std::invalid_argument("whitney_model: i must be 3..6");
    // the full bijection on K_4 vs K_4:
    //   ab->uv, ac->uw, ad->vw, bc->ux, bd->vx, cd->wx
    std::vector<std::pair<Edge, Edge>> full = {
        {{0, 1}, {0, 1}}, {{0, 2}, {0, 2}}, {{0, 3}, {1, 2}},
        {{1, 2}, {0, 3}}, {{1, 3}, {1, 3}}, {{2, 3}, {2, 3}},
    };
    size_t keep = i == 6 ? 6 : i == 5 ? 5 : i == 4 ? 4 : 3;  // drop cd, then bd, then bc
    WhitneyModel m;
    m.i = i;
    m.phi.assign(full.begin(), full.begin() + keep);
    m.W = Graph(4);
    m.Wp = Graph(i == 3 ? 3 : 4);
    for (auto& [e, ep] : m.phi) {
        m.W.add_edge(e.first, e.second);
        m.Wp.add_edge(ep.first, ep.second);
    }
    return m;
}

// --- thorn-count equation ---------------------------------------------------

struct ThornInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ThornExcluded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThornSolution {
    std::array<int, 4> values{};  // t_u, t_v, t_w, t_x
    bool has_x = true;            // false for type 3, whose second model has no x
};

namespace detail {

inline std::string thorn_tuple(const std::array<int, 4>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
           "," + std::to_string(t[3]) + ")";
}

}  // namespace detail

// Solves the linear system tying thorn counts of the two Whitney models
// together; accepts only all-integer solutions with every count 0 or 1, minus
// the per-type exclusions of the known solution table.
inline ThornSolution solve_thorn_equation(int i, const std::array<int, 4>& t) {
    if (i < 3 || i > 6) throw std::invalid_argument("solve_thorn_equation: i must be 3..6");
    for (int z : t)
        if (z != 0 && z != 1)
            throw std::invalid_argument("solve_thorn_equation: thorn counts must be 0 or 1, got " +
                                        detail::thorn_tuple(t));
    const auto [ta, tb, tc, td] = t;
    std::array<int, 4> num = {ta + tb + tc - td, ta + tb - tc + td, ta - tb + tc + td,
                              -ta + tb + tc + td};
    static const char* names[] = {"t_u", "t_v", "t_w", "t_x"};
    for (int z = 0; z < 4; ++z) {
        if (num[z] & 1)
            throw ThornInfeasible("thorn assignment " + detail::thorn_tuple(t) +
                                  " is infeasible: " + names[z] + " = " +
                                  std::to_string(num[z]) + "/2 is not an integer");
        int v = num[z] / 2;
        if (v != 0 && v != 1)
            throw ThornInfeasible("thorn assignment " + detail::thorn_tuple(t) +
                                  " is infeasible: " + names[z] + " = " + std::to_string(v));
    }

    struct Exclusion {
        std::array<int, 4> t;
        std::array<int, 3> types;  // -1 padded
    };
    static const Exclusion excluded[] = {
        {{1, 1, 1, 1}, {3, -1, -1}},
        {{0, 1, 1, 0}, {3, -1, -1}},
        {{0, 1, 0, 1}, {3, 4, -1}},
        {{0, 0, 1, 1}, {3, 4, 5}},
    };
    for (const auto& ex : excluded)
        if (ex.t == t)
            for (int type : ex.types)
                if (type == i)
                    throw ThornExcluded("thorn assignment " + detail::thorn_tuple(t) +
                                        " is excluded for type " + std::to_string(i));

    ThornSolution sol;
    for (int z = 0; z < 4; ++z) sol.values[z] = num[z] / 2;
    sol.has_x = i != 3;
    return sol;
}

// --- diamond inflation ------------------------------------------------------

struct InflationSpec {
    Graph base{0};
    std::vector<int> widths;  // per edge, base.edges() order; each >= 1
    std::vector<int> thorns;  // per vertex; each >= 0
};

struct VertexOrigin {
    char role = 'b';     // 'b' base vertex, 'm' diamond middle, 't' thorn leaf
    int a = -1, b = -1;  // 'b'/'t': a = base vertex; 'm': diamond ends a < b
    int index = 0;       // middle index within its diamond / leaf index at its vertex
};

struct Inflation {
    Graph graph{0};
    std::vector<VertexOrigin> provenance;  // per vertex of graph
};

// Replaces each base edge ab by an unbraced diamond of the prescribed width
// (the edge itself is removed; each middle is adjacent to exactly a and b) and
// hangs the prescribed number of pendant leaves off each base vertex. Vertex
// order: base vertices, then middles by (edge, middle) index, then leaves by
// (vertex, leaf) index.
inline Inflation diamond_inflate(const InflationSpec& spec) {
    int n = spec.base.num_vertices();
    auto es = spec.base.edges();
    if (spec.widths.size() != es.size())
        throw std::invalid_argument("diamond_inflate: need one width per edge (" +
                                    std::to_string(es.size()) + "), got " +
                                    std::to_string(spec.widths.size()));
    if (static_cast<int>(spec.thorns.size()) != n)
        throw std::invalid_argument("diamond_inflate: need one thorn count per vertex (" +
                                    std::to_string(n) + "), got " +
                                    std::to_string(spec.thorns.size()));
    for (int s : spec.widths)
        if (s < 1) throw std::invalid_argument("diamond_inflate: widths must be >= 1");
    for (int t : spec.thorns)
        if (t < 0) throw std::invalid_argument("diamond_inflate: thorn counts must be >= 0");

    int total = n;
    for (int s : spec.widths) total += s;
    for (int t : spec.thorns) total += t;

    Inflation out;
    out.graph = Graph(total);
    out.provenance.resize(total);
    for (int v = 0; v < n; ++v) out.provenance[v] = {'b', v, -1, 0};

    int next = n;
    for (size_t e = 0; e < es.size(); ++e) {
        auto [a, b] = es[e];
        for (int s = 0; s < spec.widths[e]; ++s, ++next) {
            out.graph.add_edge(a, next);
            out.graph.add_edge(next, b);
            out.provenance[next] = {'m', a, b, s};
        }
    }
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < spec.thorns[v]; ++t, ++next) {
            out.graph.add_edge(v, next);
            out.provenance[next] = {'t', v, -1, t};
        }
    return out;
}

// --- pair generators --------------------------------------------------------

// Inflates the two Whitney models of type i with matching widths (mapped
// through the edge bijection) and thorn counts tied by the thorn equation.
inline std::pair<Inflation, Inflation> whitney_pair(int i, const std::array<int, 4>& thorns,
                                                    const std::vector<int>& widths) {
    WhitneyModel m = whitney_model(i);
    ThornSolution sol = solve_thorn_equation(i, thorns);
    if (widths.size() != m.phi.size())
        throw std::invalid_argument("whitney_pair: type " + std::to_string(i) + " needs " +
                                    std::to_string(m.phi.size()) + " widths, got " +
                                    std::to_string(widths.size()));

    InflationSpec g;
    g.base = m.W;
    g.widths = widths;  // phi (and therefore widths) is in W.edges() order
    g.thorns = {thorns[0], thorns[1], thorns[2], thorns[3]};

    InflationSpec h;
    h.base = m.Wp;
    for (auto ep : h.base.edges()) {
        for (size_t e = 0; e < m.phi.size(); ++e)
            if (m.phi[e].second == ep) {
                h.widths.push_back(widths[e]);
                break;
            }
    }
    h.thorns = {sol.values[0], sol.values[1], sol.values[2]};
    if (sol.has_x) h.thorns.push_back(sol.values[3]);

    return {diamond_inflate(g), diamond_inflate(h)};
}

struct BipartitePairSpec {
    Graph base{0};
    Bipartition sides;
    std::vector<int> widths;  // per edge, base.edges() order
    int k = 0;
    std::vector<int> thorns;  // t_v per vertex; the second inflation uses t_v -/+ k
};

// Two inflations of the same bipartite base: identical widths, thorn counts
// shifted by k down on side A and up on side B. Connected path-graphs force
// every count into {0,1}; anything else is rejected naming the vertex.
inline std::pair<Inflation, Inflation> bipartite_pair(const BipartitePairSpec& spec) {
    int n = spec.base.num_vertices();
    if (spec.base.num_edges() < 1)
        throw std::invalid_argument("bipartite_pair: base must have at least one edge");
    if (static_cast<int>(spec.thorns.size()) != n)
        throw std::invalid_argument("bipartite_pair: need one thorn count per vertex");
    if (spec.k < 0) throw std::invalid_argument("bipartite_pair: k must be >= 0");

    std::vector<char> in_a(n, 0);
    for (int v : spec.sides.side_a) in_a[v] = 1;
    for (int v : spec.sides.side_b)
        if (in_a[v]) throw std::invalid_argument("bipartite_pair: sides overlap at vertex " +
                                                 std::to_string(v));
    if (spec.sides.side_a.size() + spec.sides.side_b.size() != static_cast<size_t>(n))
        throw std::invalid_argument("bipartite_pair: sides must cover every vertex");
    for (auto [u, v] : spec.base.edges())
        if (in_a[u] == in_a[v])
            throw std::invalid_argument("bipartite_pair: edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " lies inside one side");

    std::vector<int> shifted(n);
    for (int v = 0; v < n; ++v) {
        int t = spec.thorns[v];
        int tp = in_a[v] ? t - spec.k : t + spec.k;
        if (t != 0 && t != 1)
            throw ThornInfeasible("bipartite_pair: t_" + std::to_string(v) + " = " +
                                  std::to_string(t) + "; thorn counts must be 0 or 1");
        if (tp != 0 && tp != 1)
            throw ThornInfeasible("bipartite_pair: t'_" + std::to_string(v) + " = " +
                                  std::to_string(tp) + " for vertex " + std::to_string(v) +
                                  "; thorn counts must be 0 or 1");
        shifted[v] = tp;
    }

    InflationSpec a{spec.base, spec.widths, spec.thorns};
    InflationSpec b{spec.base, spec.widths, shifted};
    return {diamond_inflate(a), diamond_inflate(b)};
}

// The two fully determined generalized-K_{3,3} cases: "vii" is the pair on
// K_{3,3} itself, "i" the double star ab,ac,ad,be,bf against C_4 + P_3 + P_3.
inline std::pair<Graph, Graph> k33_case(const std::string& id) {
    if (id == "vii") return {make_complete_bipartite(3, 3), make_complete_bipartite(3, 3)};
    if (id == "i") {
        Graph g = graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
        Graph h = graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                        {7, 8}, {8, 9}});
        return {g, h};
    }
    throw std::invalid_argument("k33_case: unsupported case \"" + id + "\" (supported: i, vii)");
}

}  // namespace pathkit
