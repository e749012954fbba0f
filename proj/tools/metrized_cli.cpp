// Command-line front end: invariant reports, identity verification,
// contraction, free-tree enumeration and the inverse Wiener scans.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "metrized/families.hpp"
#include "metrized/identities.hpp"
#include "metrized/invariants.hpp"
#include "metrized/inverse_wiener.hpp"
#include "metrized/io.hpp"
#include "metrized/random_graph.hpp"
#include "metrized/tree_wiener.hpp"

namespace {

using namespace metrized;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

std::string fingerprint(const MetrizedGraph& g) {
    std::string s = std::to_string(g.vertex_count()) + ";";
    for (const Edge& e : g.edges())
        s += std::to_string(e.u) + "-" + std::to_string(e.v) + ":" + to_string(e.len) + ",";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(s));
    return std::string("v") + std::to_string(g.vertex_count()) + "e" +
           std::to_string(g.edge_count()) + "-" + buf;
}

json report_to_json(const IndexReport& rep) {
    return json{{"v", rep.v},
                {"e", rep.e},
                {"total_length", to_string(rep.total_length)},
                {"kirchhoff", to_string(rep.kirchhoff)},
                {"wiener", to_string(rep.wiener)},
                {"x", to_string(rep.x)},
                {"y", to_string(rep.y)},
                {"r_gamma", to_string(rep.r_gamma)}};
}

struct VerifyConfig {
    std::vector<std::string> identities;
    bool float_mode = false;
    double tol = 1e-9;
    int jobs = 1;
    int depth_k = -1;
};

bool report_passes(const IdentityReport& r, const VerifyConfig& cfg) {
    if (r.skipped) return true;
    if (!cfg.float_mode || r.inequality) return r.pass;
    double l = to_double(r.lhs), h = to_double(r.rhs);
    return std::abs(l - h) <= cfg.tol * std::max(1.0, std::abs(l));
}

int run_verify(const std::vector<MetrizedGraph>& graphs, const VerifyConfig& cfg,
               const std::string& format) {
    struct Entry {
        std::string graph;
        IdentityReport report;
    };
    std::vector<std::vector<Entry>> results(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            const MetrizedGraph& g = graphs[i];
            std::string fp = fingerprint(g);
            for (const std::string& id : cfg.identities)
                results[i].push_back({fp, verify_identity(g, id, cfg.depth_k)});
        }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    bool all_pass = true;
    json out = json::array();
    for (const auto& per_graph : results)
        for (const auto& e : per_graph) {
            const IdentityReport& r = e.report;
            bool ok = report_passes(r, cfg);
            all_pass = all_pass && ok;
            if (format == "json") {
                out.push_back({{"graph", e.graph},
                               {"identity", r.id},
                               {"lhs", to_string(r.lhs)},
                               {"rhs", to_string(r.rhs)},
                               {"pass", ok},
                               {"skipped", r.skipped},
                               {"note", r.note}});
            } else {
                std::cout << (r.skipped ? "SKIP" : ok ? "PASS" : "FAIL") << " " << e.graph
                          << " " << r.id;
                if (r.skipped)
                    std::cout << " (" << r.note << ")";
                else if (!ok)
                    std::cout << " lhs=" << to_string(r.lhs) << " rhs=" << to_string(r.rhs);
                std::cout << "\n";
            }
        }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return all_pass ? kExitOk : kExitVerify;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metrized graph invariants: Kirchhoff/Wiener indices, "
                 "contraction identities, inverse Wiener enumeration"};
    app.require_subcommand(1);

    std::string graph_file, format = "text", identities_arg = "all", out_file;
    std::string poly_name;
    std::string edges_csv;
    bool float_mode = false, forbidden = false, spectrum = false, list_trees = false,
         witnesses = false;
    double tol = 1e-9;
    int random_n = 0, jobs = 1, tree_n = 0, depth_k = -1;
    long bound = 5000;
    unsigned long long seed = 1;

    auto* index_cmd = app.add_subcommand("index", "compute all invariants of a graph");
    index_cmd->add_option("file", graph_file, "graph file (JSON or edge list)")->required();
    index_cmd->add_option("--output", format, "json|text");

    auto* verify_cmd = app.add_subcommand("verify", "verify contraction identities");
    verify_cmd->add_option("file", graph_file, "graph file (JSON or edge list)");
    verify_cmd->add_option("--random", random_n, "verify N seeded random multigraphs");
    verify_cmd->add_option("--seed", seed, "seed for --random");
    verify_cmd->add_option("--identities", identities_arg, "'all' or comma list of ids");
    verify_cmd->add_option("--k", depth_k, "contraction depth for MAIN2/SUCC_XY");
    verify_cmd->add_flag("--float", float_mode, "tolerance comparison instead of exact");
    verify_cmd->add_option("--tol", tol, "relative tolerance in float mode");
    verify_cmd->add_option("--jobs", jobs, "worker threads");
    verify_cmd->add_option("--output", format, "json|text");

    auto* contract_cmd = app.add_subcommand("contract", "apply a contraction sequence");
    contract_cmd->add_option("file", graph_file, "graph file")->required();
    contract_cmd->add_option("--edges", edges_csv, "comma list of edge ids, applied in order")
        ->required();
    contract_cmd->add_option("-o,--out", out_file, "output file (default stdout)");

    auto* trees_cmd = app.add_subcommand("trees", "enumerate free trees");
    trees_cmd->add_option("--n", tree_n, "vertex count")->required();
    trees_cmd->add_flag("--spectrum", spectrum, "report attained Wiener values");
    trees_cmd->add_flag("--list", list_trees, "emit edge lists");

    auto* inverse_cmd = app.add_subcommand("inverse", "inverse Wiener enumerations");
    inverse_cmd->add_option("--poly", poly_name, "F or G");
    inverse_cmd->add_flag("--forbidden-wiener", forbidden, "scan tree Wiener indices");
    inverse_cmd->add_option("--bound", bound, "enumeration bound");
    inverse_cmd->add_flag("--witnesses", witnesses, "include witnesses in output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*index_cmd) {
            MetrizedGraph g = io::load_file(graph_file);
            IndexReport rep = index_report(g);
            if (format == "json") {
                std::cout << report_to_json(rep).dump(2) << "\n";
            } else {
                std::cout << "v " << rep.v << "\ne " << rep.e << "\nlength "
                          << to_string(rep.total_length) << "\nkirchhoff "
                          << to_string(rep.kirchhoff) << "\nwiener "
                          << to_string(rep.wiener) << "\nx " << to_string(rep.x)
                          << "\ny " << to_string(rep.y) << "\nr_gamma "
                          << to_string(rep.r_gamma) << "\n";
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            VerifyConfig cfg;
            cfg.float_mode = float_mode;
            cfg.tol = tol;
            cfg.jobs = jobs;
            cfg.depth_k = depth_k;
            if (identities_arg == "all") {
                cfg.identities = identity_catalog();
            } else {
                std::stringstream ss(identities_arg);
                std::string id;
                while (std::getline(ss, id, ',')) cfg.identities.push_back(id);
            }
            std::vector<MetrizedGraph> graphs;
            if (random_n > 0) {
                std::mt19937_64 rng(seed);
                for (int i = 0; i < random_n; ++i)
                    graphs.push_back(random_connected_multigraph(rng));
            } else if (!graph_file.empty()) {
                graphs.push_back(io::load_file(graph_file));
            } else {
                std::cerr << "verify: need a graph file or --random N\n";
                return kExitInput;
            }
            return run_verify(graphs, cfg, format);
        }

        if (*contract_cmd) {
            MetrizedGraph g = io::load_file(graph_file);
            ContractionSeq seq{parse_int_list(edges_csv)};
            auto [h, map] = apply_contractions(g, seq);
            json out = io::to_json(h);
            out["vertex_map"] = map;
            if (out_file.empty()) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::ofstream f(out_file);
                f << out.dump(2) << "\n";
            }
            return kExitOk;
        }

        if (*trees_cmd) {
            FreeTreeEnumerator iter(tree_n);
            json out;
            out["n"] = tree_n;
            long count = 0;
            json tree_list = json::array();
            std::map<long, long> spec_counts;
            iter.for_each([&](const std::vector<std::pair<int, int>>& edges) {
                ++count;
                if (list_trees) {
                    json je = json::array();
                    for (auto [u, v] : edges) je.push_back({u, v});
                    tree_list.push_back(je);
                }
                if (spectrum) {
                    std::vector<Edge> es;
                    for (auto [u, v] : edges) es.push_back({u, v, Rat(1)});
                    MetrizedGraph t(tree_n, std::move(es));
                    ++spec_counts[wiener_via_splits(t)];
                }
            });
            out["count"] = count;
            if (list_trees) out["trees"] = tree_list;
            if (spectrum) {
                json sp = json::object();
                for (const auto& [w, c] : spec_counts) sp[std::to_string(w)] = c;
                out["spectrum"] = sp;
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (*inverse_cmd) {
            if (forbidden) {
                ForbiddenWienerResult res = forbidden_wiener(bound);
                json out{{"bound", res.bound}, {"forbidden_wiener", res.forbidden}};
                if (witnesses) {
                    json w = json::object();
                    for (const auto& [val, edges] : res.witnesses) {
                        json je = json::array();
                        for (auto [a, b] : edges) je.push_back({a, b});
                        w[std::to_string(val)] = je;
                    }
                    out["witnesses"] = w;
                }
                std::cout << out.dump(2) << "\n";
                return kExitOk;
            }
            if (poly_name != "F" && poly_name != "G") {
                std::cerr << "inverse: need --poly F|G or --forbidden-wiener\n";
                return kExitInput;
            }
            Poly poly = poly_name == "F" ? Poly::F : Poly::G;
            AttainedSet att = attained_values(poly, bound);
            json out{{"poly", poly_name}, {"bound", bound}, {"excluded", att.excluded()}};
            if (witnesses) {
                json w = json::object();
                for (const auto& [val, args] : att.witnesses)
                    w[std::to_string(val)] = args;
                out["witnesses"] = w;
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
