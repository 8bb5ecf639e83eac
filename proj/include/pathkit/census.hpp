#pragma once

// Isomorph-free enumeration of connected graphs and the path-graph census:
// group a population by canonical P_k-graph and flag any class holding three
// or more pairwise nonisomorphic originals.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "pathkit/canonical.hpp"
#include "pathkit/graph.hpp"
#include "pathkit/graph6.hpp"
#include "pathkit/paths.hpp"

namespace pathkit {

struct CensusLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Graph remove_vertex(const Graph& g, int r) {
    Graph h(g.num_vertices() - 1);
    for (auto [u, v] : g.edges()) {
        if (u == r || v == r) continue;
        h.add_edge(u - (u > r), v - (v > r));
    }
    return h;
}

}  // namespace detail

// One representative per isomorphism class of connected graphs on 1..max_n
// vertices, by canonical augmentation: each accepted m-vertex graph is
// extended by a vertex joined to every nonempty subset, and a child survives
// iff its new vertex lies in the orbit of the canonical deletion vertex (the
// canonically last vertex whose removal keeps the graph connected — plain
// "canonically last" would orphan graphs whose last vertex is a cut vertex).
// Each level is sorted by canonical string.
inline std::vector<std::vector<Graph>> enumerate_connected_levels(
    int max_n, int limit = 9, long long node_budget = kDefaultNodeBudget) {
    if (max_n < 1) throw std::invalid_argument("enumerate_connected: need n >= 1");
    if (max_n > limit)
        throw CensusLimitExceeded("enumerate_connected: n = " + std::to_string(max_n) +
                                  " exceeds the limit " + std::to_string(limit));
    std::vector<std::vector<Graph>> levels(max_n);
    levels[0] = {Graph(1)};
    for (int m = 1; m < max_n; ++m) {
        std::vector<std::pair<std::string, Graph>> accepted;
        for (const Graph& parent : levels[m - 1]) {
            std::set<std::string> seen;
            for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
                Graph child(m + 1);
                for (auto [u, v] : parent.edges()) child.add_edge(u, v);
                for (int v = 0; v < m; ++v)
                    if (mask >> v & 1) child.add_edge(v, m);
                CanonicalResult cr = canonical_form_ex(child, node_budget);
                int del = -1;  // deletion vertex: canonically last, removal stays connected
                for (int pos = m; pos >= 0 && del < 0; --pos) {
                    int v = 0;
                    while (cr.form.relabeling[v] != pos) ++v;
                    if (is_connected(detail::remove_vertex(child, v))) del = v;
                }
                if (cr.orbits[m] != cr.orbits[del]) continue;
                if (!seen.insert(cr.form.canon_g6).second) continue;
                accepted.emplace_back(cr.form.canon_g6, std::move(child));
            }
        }
        std::sort(accepted.begin(), accepted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        levels[m].reserve(accepted.size());
        for (auto& [key, g] : accepted) levels[m].push_back(std::move(g));
    }
    return levels;
}

inline std::vector<Graph> enumerate_connected(int n, int limit = 9,
                                              long long node_budget = kDefaultNodeBudget) {
    auto levels = enumerate_connected_levels(n, limit, node_budget);
    return std::move(levels.back());
}

// --- census -----------------------------------------------------------------

struct CensusClass {
    std::string pk_canon;              // canonical string of the shared P_k-graph
    std::vector<std::string> members;  // canonical strings of the originals, sorted
};

struct CensusReport {
    int k = 3;
    bool require_connected_pk = true;
    std::string population_label;
    long long population_size = 0;
    std::string population_digest;             // over sorted original canon strings
    std::vector<CensusClass> classes;          // sorted by pk_canon
    std::map<std::string, long long> dropped;  // reason -> count
    std::vector<std::string> skipped;          // inputs whose canonicalization blew the budget
    long long pk_without_isolated = 0;         // originals whose nonempty P_k has no isolated vertex
};

struct CensusOptions {
    int k = 3;
    bool require_connected_pk = true;
    int threads = 1;  // 0 = hardware concurrency
    long long node_budget = kDefaultNodeBudget;
    std::string population_label;
};

namespace detail {

inline uint64_t fnv1a64(uint64_t h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct CensusItem {
    enum class Outcome { kept, empty_pi_k, disconnected_pk, disconnected_input, skipped };
    Outcome outcome = Outcome::skipped;
    std::string orig_canon;
    std::string pk_canon;
    bool pk_no_isolated = false;
    std::string orig_g6;
};

inline CensusItem census_one(const Graph& g, const CensusOptions& opt) {
    CensusItem item;
    item.orig_g6 = write_graph6_any(g);
    try {
        if (!is_connected(g)) {
            item.outcome = CensusItem::Outcome::disconnected_input;
            return item;
        }
        item.orig_canon = canonical_form(g, opt.node_budget).canon_g6;
        PathGraphResult pk = build_path_graph(g, opt.k);
        if (pk.pgraph.num_vertices() == 0) {
            item.outcome = CensusItem::Outcome::empty_pi_k;
            return item;
        }
        int min_deg = pk.pgraph.num_vertices();
        for (int v = 0; v < pk.pgraph.num_vertices(); ++v)
            min_deg = std::min(min_deg, pk.pgraph.degree(v));
        item.pk_no_isolated = min_deg >= 1;
        if (opt.require_connected_pk && !is_connected(pk.pgraph)) {
            item.outcome = CensusItem::Outcome::disconnected_pk;
            return item;
        }
        item.pk_canon = canonical_form(pk.pgraph, opt.node_budget).canon_g6;
        item.outcome = CensusItem::Outcome::kept;
    } catch (const NodeBudgetExceeded&) {
        item.outcome = CensusItem::Outcome::skipped;
    }
    return item;
}

}  // namespace detail

// Classifies the population by canonical P_k-graph. Per-graph work runs on
// opt.threads workers over fixed result slots; the fold below is sequential
// and key-sorted, so the report is byte-stable for any thread count and any
// input order.
inline CensusReport p3_census(const std::vector<Graph>& population, const CensusOptions& opt) {
    using detail::CensusItem;
    int nthreads = opt.threads > 0
                       ? opt.threads
                       : std::max(1u, std::thread::hardware_concurrency());
    std::vector<CensusItem> items(population.size());
    {
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errors(nthreads);
        auto work = [&](int slot) {
            try {
                for (size_t i = next.fetch_add(1); i < population.size(); i = next.fetch_add(1))
                    items[i] = detail::census_one(population[i], opt);
            } catch (...) {
                errors[slot] = std::current_exception();
            }
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    CensusReport report;
    report.k = opt.k;
    report.require_connected_pk = opt.require_connected_pk;
    report.population_label = opt.population_label.empty()
                                  ? std::to_string(population.size()) + " graphs"
                                  : opt.population_label;
    report.population_size = static_cast<long long>(population.size());
    for (const char* reason : {"disconnected_input", "duplicate_input", "empty_pi_k",
                               "disconnected_pk"})
        report.dropped[reason] = 0;

    std::map<std::string, std::set<std::string>> classes;  // pk_canon -> orig canons
    std::set<std::string> seen_orig;
    std::vector<std::string> digest_keys;
    for (const CensusItem& item : items) {
        if (item.outcome == CensusItem::Outcome::skipped) {
            report.skipped.push_back(item.orig_g6);
            continue;
        }
        if (item.outcome == CensusItem::Outcome::disconnected_input) {
            ++report.dropped["disconnected_input"];
            continue;
        }
        digest_keys.push_back(item.orig_canon);
        if (!seen_orig.insert(item.orig_canon).second) {
            ++report.dropped["duplicate_input"];
            continue;
        }
        if (item.pk_no_isolated) ++report.pk_without_isolated;
        switch (item.outcome) {
            case CensusItem::Outcome::empty_pi_k:
                ++report.dropped["empty_pi_k"];
                break;
            case CensusItem::Outcome::disconnected_pk:
                ++report.dropped["disconnected_pk"];
                break;
            case CensusItem::Outcome::kept:
                classes[item.pk_canon].insert(item.orig_canon);
                break;
            default:
                break;
        }
    }
    std::sort(report.skipped.begin(), report.skipped.end());
    std::sort(digest_keys.begin(), digest_keys.end());
    uint64_t h = 14695981039346656037ull;
    for (const auto& key : digest_keys) {
        h = detail::fnv1a64(h, key);
        h = detail::fnv1a64(h, "\n");
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    report.population_digest = hex;
    report.classes.reserve(classes.size());
    for (auto& [pk_canon, members] : classes)
        report.classes.push_back({pk_canon, {members.begin(), members.end()}});
    return report;
}

struct AuditVerdict {
    std::string verdict;               // PASS / FAIL / INFORMATIONAL
    std::vector<CensusClass> pairs;    // classes of size >= 2
    std::vector<CensusClass> triples;  // classes of size >= 3; any of these fails the audit
};

// PASS needs k = 3, no class of size >= 3, and nothing skipped (a budget
// blowout would hide a potential triple). Other k is reported, not judged.
inline AuditVerdict audit_report(const CensusReport& r) {
    AuditVerdict v;
    for (const auto& c : r.classes)
        if (c.members.size() >= 2) {
            v.pairs.push_back(c);
            if (c.members.size() >= 3) v.triples.push_back(c);
        }
    if (r.k != 3)
        v.verdict = "INFORMATIONAL";
    else if (!v.triples.empty() || !r.skipped.empty())
        v.verdict = "FAIL";
    else
        v.verdict = "PASS";
    return v;
}

}  // namespace pathkit
