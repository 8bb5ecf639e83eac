// pk: command-line front end for the path-graph toolkit.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "pathkit/pathkit.hpp"

namespace {

using namespace pathkit;

long long node_budget_from_env() {
    const char* s = std::getenv("PK_NODE_BUDGET");
    if (!s || !*s) return kDefaultNodeBudget;
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != std::string(s).size() || v < 1) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("PK_NODE_BUDGET must be a positive integer, got \"" +
                                    std::string(s) + "\"");
    }
}

std::vector<Graph> read_population(const std::string& file) {
    if (file == "-") return read_graph6_lines(std::cin);
    return read_graph6_file(file);
}

Graph read_single(const std::string& file, const std::string& what) {
    auto graphs = read_population(file);
    if (graphs.empty()) throw std::invalid_argument(what + ": no graphs in " + file);
    if (graphs.size() > 1)
        throw std::invalid_argument(what + ": expected one graph in " + file + ", found " +
                                    std::to_string(graphs.size()));
    return graphs.front();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad integer \"" + tok + "\" in list \"" + s + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string format_path(const PathK& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

nlohmann::ordered_json provenance_json(const Inflation& inf) {
    nlohmann::ordered_json g;
    g["graph6"] = write_graph6_any(inf.graph);
    auto vs = nlohmann::ordered_json::array();
    for (size_t v = 0; v < inf.provenance.size(); ++v) {
        const VertexOrigin& o = inf.provenance[v];
        nlohmann::ordered_json e;
        e["id"] = v;
        if (o.role == 'b') {
            e["role"] = "base";
            e["base_vertex"] = o.a;
        } else if (o.role == 'm') {
            e["role"] = "middle";
            e["ends"] = {o.a, o.b};
            e["index"] = o.index;
        } else {
            e["role"] = "leaf";
            e["base_vertex"] = o.a;
            e["index"] = o.index;
        }
        vs.push_back(std::move(e));
    }
    g["vertices"] = std::move(vs);
    return g;
}

void write_provenance(const std::string& path, const Inflation& a, const Inflation& b) {
    nlohmann::ordered_json j;
    j["graphs"] = {provenance_json(a), provenance_json(b)};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open provenance file " + path);
    out << j.dump(2) << '\n';
}

int emit_pair(const Graph& g, const Graph& h, long long budget) {
    std::cout << write_graph6_any(g) << '\n' << write_graph6_any(h) << '\n';
    std::cout << "isomorphic: " << (are_isomorphic(g, h, budget) ? "yes" : "no") << '\n';
    Graph pg = build_path_graph(g, 3).pgraph;
    Graph ph = build_path_graph(h, 3).pgraph;
    std::cout << "p3_isomorphic: " << (are_isomorphic(pg, ph, budget) ? "yes" : "no") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path-graph toolkit: P_k construction, isomorphism, generators, census"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "build the P_k-graph of each input graph");
    int compute_k = 3;
    std::string compute_file = "-";
    compute->add_option("-k", compute_k, "path length k (>= 2)")->check(CLI::Range(2, 64));
    compute->add_option("file", compute_file, "graph6 file, one token per line, or - for stdin");

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
    std::string iso_a, iso_b;
    iso->add_option("a", iso_a, "graph6 file holding the first graph")->required();
    iso->add_option("b", iso_b, "graph6 file holding the second graph")->required();

    auto* gen = app.add_subcommand("gen", "emit a named graph family member");
    std::string gen_family;
    std::vector<int> gen_params;
    gen->add_option("family", gen_family,
                    "sw | cycle N | path N | star N | complete N | complete_bipartite M N | "
                    "book P")
        ->required();
    gen->add_option("params", gen_params, "family parameters");

    auto* pair = app.add_subcommand("pair", "emit a generator pair with isomorphism trailers");
    pair->require_subcommand(1);
    auto* pw = pair->add_subcommand("whitney", "inflated Whitney model pair");
    int pw_type = 3;
    std::string pw_thorns = "0,0,0,0", pw_widths, pw_prov;
    pw->add_option("--type", pw_type, "Whitney type (3..6)")->required();
    pw->add_option("--thorns", pw_thorns, "t_a,t_b,t_c,t_d (each 0 or 1)");
    pw->add_option("--widths", pw_widths, "diamond widths, one per model edge (default all 1)");
    pw->add_option("--provenance", pw_prov, "write a JSON provenance sidecar to this file");
    auto* pb = pair->add_subcommand("bipartite", "shifted-thorn inflation pair");
    std::string pb_base, pb_thorns, pb_widths, pb_prov;
    int pb_k = 1;
    pb->add_option("--base", pb_base, "graph6 token of the bipartite base graph")->required();
    pb->add_option("--k", pb_k, "thorn shift between the two inflations");
    pb->add_option("--thorns", pb_thorns, "t_v per vertex (default: k on side A, 0 on side B)");
    pb->add_option("--widths", pb_widths, "diamond widths, one per base edge (default all 1)");
    pb->add_option("--provenance", pb_prov, "write a JSON provenance sidecar to this file");
    auto* pk33 = pair->add_subcommand("k33", "fixed generalized-K_{3,3} case");
    std::string pk33_case;
    pk33->add_option("--case", pk33_case, "i or vii")->required();

    auto* census = app.add_subcommand("census", "group graphs by canonical P_k-graph and audit");
    int census_max_n = 0, census_k = 3, census_threads = 0, census_limit = 9;
    std::string census_g6, census_json;
    bool census_allow_disconnected = false;
    auto* maxn_opt =
        census->add_option("--max-n", census_max_n, "census all connected graphs on 1..N vertices");
    census->add_option("-k", census_k, "path length k (>= 2)")->check(CLI::Range(2, 64));
    census->add_option("--g6", census_g6, "population from a graph6 file instead")
        ->excludes(maxn_opt);
    census->add_option("--json", census_json, "also write the JSON report to this file");
    census->add_option("--threads", census_threads, "worker threads (0 = machine parallelism)");
    census->add_option("--limit", census_limit, "refuse enumeration beyond this vertex count");
    census->add_flag("--allow-disconnected-pk", census_allow_disconnected,
                     "keep graphs whose P_k-graph is disconnected");

    auto* swap = app.add_subcommand("swap", "build a swap involution on the host's P_3 set");
    swap->require_subcommand(1);
    std::string swap_host = "-";
    bool swap_verify = false;
    for (auto* sc : {swap}) {
        sc->add_option("--host", swap_host, "graph6 file holding the host graph, - for stdin");
        sc->add_flag("--verify", swap_verify, "check the swap is a P_3-automorphism");
    }
    auto* sb = swap->add_subcommand("b", "swap the sibling 1-thorns abc and abd");
    sb->fallthrough();
    int sb_a = 0, sb_b = 0, sb_c = 0, sb_d = 0;
    sb->add_option("-a", sb_a)->required();
    sb->add_option("-b", sb_b)->required();
    sb->add_option("-c", sb_c)->required();
    sb->add_option("-d", sb_d)->required();
    auto* ss = swap->add_subcommand("s", "swap the end paths abc and cde of a pendant P_5");
    ss->fallthrough();
    int ss_a = 0, ss_b = 0, ss_c = 0, ss_d = 0, ss_e = 0;
    ss->add_option("-a", ss_a)->required();
    ss->add_option("-b", ss_b)->required();
    ss->add_option("-c", ss_c)->required();
    ss->add_option("-d", ss_d)->required();
    ss->add_option("-e", ss_e)->required();
    auto* sd = swap->add_subcommand("d", "swap a diamond pair c_i a c_j and c_i b c_j");
    sd->fallthrough();
    int sd_a = 0, sd_b = 0, sd_i = 0, sd_j = 1;
    sd->add_option("-a", sd_a, "first diamond end")->required();
    sd->add_option("-b", sd_b, "second diamond end")->required();
    sd->add_option("-i", sd_i, "first middle index");
    sd->add_option("-j", sd_j, "second middle index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        long long budget = node_budget_from_env();

        if (compute->parsed()) {
            for (const Graph& g : read_population(compute_file))
                std::cout << write_graph6_any(build_path_graph(g, compute_k).pgraph) << '\n';
            return 0;
        }

        if (iso->parsed()) {
            Graph a = read_single(iso_a, "iso");
            Graph b = read_single(iso_b, "iso");
            auto cert = are_isomorphic(a, b, budget);
            std::cout << "isomorphic: " << (cert ? "yes" : "no") << '\n';
            if (cert) {
                std::cout << "map:";
                for (size_t v = 0; v < cert->map.size(); ++v)
                    std::cout << ' ' << v << "->" << cert->map[v];
                std::cout << '\n';
            }
            return 0;
        }

        if (gen->parsed()) {
            std::cout << write_graph6_any(named_graph(gen_family, gen_params)) << '\n';
            return 0;
        }

        if (pw->parsed()) {
            auto thorns_list = parse_int_list(pw_thorns);
            if (thorns_list.size() != 4)
                throw std::invalid_argument("whitney pair: --thorns needs 4 entries");
            std::array<int, 4> thorns;
            std::copy(thorns_list.begin(), thorns_list.end(), thorns.begin());
            WhitneyModel model = whitney_model(pw_type);
            std::vector<int> widths = pw_widths.empty()
                                          ? std::vector<int>(model.phi.size(), 1)
                                          : parse_int_list(pw_widths);
            auto [gi, hi] = whitney_pair(pw_type, thorns, widths);
            if (!pw_prov.empty()) write_provenance(pw_prov, gi, hi);
            return emit_pair(gi.graph, hi.graph, budget);
        }

        if (pb->parsed()) {
            BipartitePairSpec spec;
            spec.base = parse_graph6(pb_base);
            auto sides = bipartition(spec.base);
            if (!sides)
                throw std::invalid_argument("bipartite pair: base graph is not bipartite");
            spec.sides = *sides;
            spec.k = pb_k;
            spec.widths = pb_widths.empty()
                              ? std::vector<int>(spec.base.num_edges(), 1)
                              : parse_int_list(pb_widths);
            if (pb_thorns.empty()) {
                spec.thorns.assign(spec.base.num_vertices(), 0);
                for (int v : spec.sides.side_a) spec.thorns[v] = spec.k;
            } else {
                spec.thorns = parse_int_list(pb_thorns);
            }
            auto [gi, hi] = bipartite_pair(spec);
            if (!pb_prov.empty()) write_provenance(pb_prov, gi, hi);
            return emit_pair(gi.graph, hi.graph, budget);
        }

        if (pk33->parsed()) {
            auto [g, h] = k33_case(pk33_case);
            return emit_pair(g, h, budget);
        }

        if (census->parsed()) {
            std::vector<Graph> population;
            std::string label;
            if (!census_g6.empty()) {
                population = read_population(census_g6);
                label = "graph6 input (" + std::to_string(population.size()) + " tokens)";
            } else {
                if (census_max_n < 1)
                    throw std::invalid_argument("census: need --max-n >= 1 or --g6 FILE");
                auto levels = enumerate_connected_levels(census_max_n, census_limit, budget);
                for (auto& level : levels)
                    for (auto& g : level) population.push_back(std::move(g));
                label = "connected graphs on 1.." + std::to_string(census_max_n) + " vertices";
            }
            CensusOptions opt;
            opt.k = census_k;
            opt.require_connected_pk = !census_allow_disconnected;
            opt.threads = census_threads;
            opt.node_budget = budget;
            opt.population_label = label;
            CensusReport report = p3_census(population, opt);
            AuditVerdict verdict = audit_report(report);
            std::string text = census_report_text(report, verdict);
            std::cout << text;
            if (!census_json.empty()) {
                std::ofstream out(census_json, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot open " + census_json);
                out << text;
            }
            std::cerr << "census: " << report.population_size << " graphs, "
                      << report.classes.size() << " classes, " << verdict.pairs.size()
                      << " of size >= 2, verdict " << verdict.verdict << '\n';
            for (const auto& c : verdict.pairs) {
                std::cerr << "  size " << c.members.size() << ":";
                for (const auto& m : c.members) std::cerr << ' ' << m;
                std::cerr << '\n';
            }
            return verdict.verdict == "FAIL" ? 2 : 0;
        }

        if (swap->parsed()) {
            Graph host = read_single(swap_host, "swap");
            SwapPermutation sp;
            if (sb->parsed())
                sp = build_b_swap(host, sb_a, sb_b, sb_c, sb_d);
            else if (ss->parsed())
                sp = build_s_swap(host, ss_a, ss_b, ss_c, ss_d, ss_e);
            else
                sp = build_d_swap(host, sd_a, sd_b, sd_i, sd_j);
            std::cout << "kind: " << sp.kind << '\n';
            std::cout << "swap: " << format_path(sp.support[0]) << " <-> "
                      << format_path(sp.support[1]) << '\n';
            if (swap_verify) {
                PkIsomorphism tau{3, sp.mapping};
                PkVerification res = verify_pk_isomorphism(tau, host, host);
                if (res.ok) {
                    std::cout << "verify: P_3-automorphism\n";
                } else {
                    std::cout << "verify: violation at (" << format_path(res.first) << ", "
                              << format_path(res.second) << ")\n";
                    return 2;
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
