// Command-line front end. Talks to the toolkit exclusively through the C API
// in csf/csf_c.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csf/csf_c.h"

namespace {

struct GraphOptions {
    std::string spider;
    int star = 0;
    int path = 0;
    int complete = 0;
    std::vector<int> windmill;
    std::string edges_file;
    std::string graph6;
    std::string tree_code;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    auto* spider = cmd->add_option("--spider", opts.spider, "spider leg lengths, e.g. 4,1,1");
    auto* star = cmd->add_option("--star", opts.star, "star on n vertices");
    auto* path = cmd->add_option("--path", opts.path, "path on n vertices");
    auto* complete = cmd->add_option("--complete", opts.complete, "complete graph on n vertices");
    auto* windmill = cmd->add_option("--windmill", opts.windmill,
                                     "windmill W^d_n: d copies of K_n sharing a vertex")
                         ->expected(2);
    auto* edges = cmd->add_option("--edges", opts.edges_file,
                                  "edge-list file: first line n, then one 'u v' per line");
    auto* g6 = cmd->add_option("--graph6", opts.graph6, "graph6 string");
    auto* tree = cmd->add_option("--tree", opts.tree_code, "tree level-sequence code, e.g. 0,1,2,1");
    spider->excludes(star)->excludes(path)->excludes(complete)->excludes(windmill)
          ->excludes(edges)->excludes(g6)->excludes(tree);
    star->excludes(path)->excludes(complete)->excludes(windmill)->excludes(edges)
        ->excludes(g6)->excludes(tree);
    path->excludes(complete)->excludes(windmill)->excludes(edges)->excludes(g6)->excludes(tree);
    complete->excludes(windmill)->excludes(edges)->excludes(g6)->excludes(tree);
    windmill->excludes(edges)->excludes(g6)->excludes(tree);
    edges->excludes(g6)->excludes(tree);
    g6->excludes(tree);
}

// Accepts both plain and exponent partition notation: "4,1,1" or "4,1^2".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t caret = tok.find('^');
        size_t used = 0;
        int value = std::stoi(tok.substr(0, caret), &used);
        int count = 1;
        if (caret != std::string::npos) {
            size_t usedExp = 0;
            count = std::stoi(tok.substr(caret + 1), &usedExp);
            if (usedExp != tok.size() - caret - 1) throw std::invalid_argument("bad exponent: " + tok);
        } else if (used != tok.size()) {
            throw std::invalid_argument("bad part: " + tok);
        }
        for (int i = 0; i < count; ++i) out.push_back(value);
    }
    return out;
}

csf_graph* build_graph(const GraphOptions& opts) {
    if (!opts.spider.empty()) {
        auto legs = parse_int_list(opts.spider);
        return csf_graph_spider(legs.data(), static_cast<int>(legs.size()));
    }
    if (opts.star > 0) return csf_graph_star(opts.star);
    if (opts.path > 0) return csf_graph_path(opts.path);
    if (opts.complete > 0) return csf_graph_complete(opts.complete);
    if (opts.windmill.size() == 2) return csf_graph_windmill(opts.windmill[0], opts.windmill[1]);
    if (!opts.edges_file.empty()) {
        std::ifstream in(opts.edges_file);
        if (!in) {
            std::cerr << "cannot open " << opts.edges_file << "\n";
            return nullptr;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return csf_graph_from_edge_list(buf.str().c_str());
    }
    if (!opts.graph6.empty()) return csf_graph_from_graph6(opts.graph6.c_str());
    if (!opts.tree_code.empty()) return csf_graph_from_tree_code(opts.tree_code.c_str());
    std::cerr << "no graph given (try --spider, --star, --path, --windmill, --complete, "
                 "--edges, --graph6 or --tree)\n";
    return nullptr;
}

int emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(out_file);
    if (!out) {
        std::cerr << "cannot open " << out_file << "\n";
        return 1;
    }
    out << text;
    return 0;
}

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { csf_string_free(s); }
};

int fail(const char* what) {
    std::cerr << what << ": " << csf_last_error() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic symmetric function toolkit"};
    app.require_subcommand(1);

    // ---- csf ----
    auto* csfCmd = app.add_subcommand("csf", "compute X_G in a chosen basis");
    GraphOptions csfGraph;
    add_graph_options(csfCmd, csfGraph);
    std::string basis = "e";
    bool csfJson = false;
    std::string csfOut;
    int csfMaxEdges = 0, csfWorkers = 0;
    csfCmd->add_option("--basis", basis, "output basis: p, m, e or s")->default_val("e");
    csfCmd->add_flag("--json", csfJson, "JSON output");
    csfCmd->add_option("--out", csfOut, "write output to file");
    csfCmd->add_option("--max-edges", csfMaxEdges, "subset-route edge bound (default 26)");
    csfCmd->add_option("--workers", csfWorkers, "worker threads (default CSF_WORKERS or cores)");

    // ---- positivity ----
    auto* posCmd = app.add_subcommand("positivity", "e- and Schur-positivity report");
    GraphOptions posGraph;
    add_graph_options(posCmd, posGraph);
    std::string posOut;
    int posMaxEdges = 0, posWorkers = 0;
    posCmd->add_option("--out", posOut, "write report to file");
    posCmd->add_option("--max-edges", posMaxEdges, "expansion edge bound (default 26)");
    posCmd->add_option("--workers", posWorkers, "worker threads");

    // ---- spider ----
    auto* spiderCmd = app.add_subcommand("spider", "non-e-positivity decision for a spider");
    std::string spiderLegs;
    int spiderVerifyMax = 12;
    std::string spiderOut;
    spiderCmd->add_option("legs", spiderLegs, "leg lengths, e.g. 8,2,2,1")->required();
    spiderCmd->add_option("--verify-max-n", spiderVerifyMax,
                          "independently verify witnesses up to this vertex count");
    spiderCmd->add_option("--out", spiderOut, "write output to file");

    // ---- scan ----
    auto* scanCmd = app.add_subcommand("scan", "conjecture scans over free trees");
    std::string scanId;
    int scanNMax = 0, scanWorkers = 0;
    bool scanExhaustive = false, scanForce = false, scanJson = false;
    std::string scanCache, scanJsonl, scanOut;
    scanCmd->add_option("conjecture", scanId, "degree4-e or halfdegree-schur")->required();
    scanCmd->add_option("--n-max", scanNMax, "largest tree order to scan")->required();
    scanCmd->add_option("--workers", scanWorkers, "worker threads");
    scanCmd->add_flag("--exhaustive", scanExhaustive,
                      "halfdegree: examine the whole population instead of stopping at the first witness");
    scanCmd->add_flag("--force-budget", scanForce, "run past the default compute budget");
    scanCmd->add_option("--cache", scanCache, "expansion cache file (default CSF_CACHE)");
    scanCmd->add_option("--jsonl", scanJsonl, "write one JSON line per examined tree");
    scanCmd->add_flag("--json", scanJson, "print the scan result as JSON instead of a summary");
    scanCmd->add_option("--out", scanOut, "write the scan result to file");

    // ---- verify-paper ----
    auto* verifyCmd = app.add_subcommand("verify-paper", "recompute the worked examples");
    int verifyWorkers = 0;
    std::string verifyOut;
    verifyCmd->add_option("--workers", verifyWorkers, "worker threads");
    verifyCmd->add_option("--out", verifyOut, "write the ledger to file");

    // ---- trees ----
    auto* treesCmd = app.add_subcommand("trees", "enumerate free trees");
    int treesN = 0, treesMinMaxDeg = 0, treesExistsDeg = 0, treesBound = 0;
    std::string treesFormat = "codes", treesOut;
    treesCmd->add_option("n", treesN, "vertex count")->required();
    treesCmd->add_option("--max-degree-at-least", treesMinMaxDeg,
                         "keep trees whose maximum degree reaches this");
    treesCmd->add_option("--degree-exists", treesExistsDeg,
                         "keep trees with a vertex of exactly this degree");
    treesCmd->add_option("--format", treesFormat, "codes, edges or g6")->default_val("codes");
    treesCmd->add_option("--bound", treesBound, "raise the tree-order bound (default 19)");
    treesCmd->add_option("--out", treesOut, "write output to file");

    CLI11_PARSE(app, argc, argv);

    try {
    if (csfCmd->parsed()) {
        std::unique_ptr<csf_graph, decltype(&csf_graph_free)> g(build_graph(csfGraph),
                                                                &csf_graph_free);
        if (!g) return 1;
        StringGuard out;
        csf_status rc = csf_graph_csf(g.get(), basis.empty() ? 'e' : basis[0],
                                      csfJson ? 1 : 0, csfMaxEdges, csfWorkers, &out.s);
        if (rc == CSF_ERR_BOUND) {
            std::cerr << "bound exceeded: " << csf_last_error() << "\n";
            return 3;
        }
        if (rc != CSF_OK) return fail("csf");
        return emit(out.s, csfOut);
    }

    if (posCmd->parsed()) {
        std::unique_ptr<csf_graph, decltype(&csf_graph_free)> g(build_graph(posGraph),
                                                                &csf_graph_free);
        if (!g) return 1;
        StringGuard out;
        int verdict = 2;
        csf_status rc = csf_graph_positivity(g.get(), posMaxEdges, posWorkers, &out.s, &verdict);
        if (rc != CSF_OK) return fail("positivity");
        int ec = emit(out.s, posOut);
        if (ec) return ec;
        // 0: e-positive, 2: not e-positive, 3: undecided within bounds
        return verdict == 1 ? 0 : verdict == 0 ? 2 : 3;
    }

    if (spiderCmd->parsed()) {
        auto legs = parse_int_list(spiderLegs);
        StringGuard out;
        csf_status rc = csf_spider_analyze(legs.data(), static_cast<int>(legs.size()),
                                           spiderVerifyMax, &out.s);
        if (rc != CSF_OK) return fail("spider");
        return emit(out.s, spiderOut);
    }

    if (scanCmd->parsed()) {
        StringGuard out;
        int status = 0;
        csf_status rc = csf_scan(scanId.c_str(), scanNMax, scanWorkers, scanExhaustive ? 1 : 0,
                                 scanForce ? 1 : 0, scanCache.empty() ? nullptr : scanCache.c_str(),
                                 scanJsonl.empty() ? nullptr : scanJsonl.c_str(), &out.s, &status);
        if (rc != CSF_OK) return fail("scan");
        std::string text = out.s;
        if (!scanOut.empty()) {
            int ec = emit(text, scanOut);
            if (ec) return ec;
        }
        if (scanJson) {
            std::cout << text << "\n";
        } else {
            auto j = nlohmann::json::parse(text);
            std::cout << j["conjecture"].get<std::string>() << " up to n="
                      << j["n_max"].get<int>() << ": " << j["status"].get<std::string>()
                      << " (" << j["trees_examined"].get<long long>() << " trees, "
                      << j["workers"].get<int>() << " workers, " << j["wall_seconds"].get<double>()
                      << "s)\n";
            for (const auto& per : j["per_n"]) {
                std::cout << "  n=" << per["n"].get<int>() << ": population "
                          << per["population"].get<long long>() << ", examined "
                          << per["examined"].get<long long>();
                if (per.contains("witness_found")) {
                    if (per["witness_found"].get<bool>())
                        std::cout << ", witness " << per["witness"].get<std::string>();
                    else
                        std::cout << ", NO WITNESS";
                }
                std::cout << "\n";
            }
            if (!j["counterexamples"].empty())
                std::cout << "  counterexamples: " << j["counterexamples"].size() << "\n";
            if (j.contains("resume"))
                std::cout << "  budget reached; resume with --force-budget ("
                          << j["resume"].get<std::string>() << ")\n";
        }
        // 0 VERIFIED, 2 COUNTEREXAMPLE, 3 PARTIAL
        return status == 0 ? 0 : status == 1 ? 2 : 3;
    }

    if (verifyCmd->parsed()) {
        StringGuard out;
        int failed = 0;
        csf_status rc = csf_verify_paper(verifyWorkers, &out.s, &failed);
        if (rc != CSF_OK) return fail("verify-paper");
        int ec = emit(out.s, verifyOut);
        if (ec) return ec;
        return failed == 0 ? 0 : 1;
    }

    if (treesCmd->parsed()) {
        int format = treesFormat == "edges" ? 1 : treesFormat == "g6" ? 2 : 0;
        StringGuard out;
        csf_status rc = csf_trees(treesN, treesMinMaxDeg, treesExistsDeg, format, treesBound,
                                  &out.s);
        if (rc == CSF_ERR_BOUND) {
            std::cerr << "bound exceeded: " << csf_last_error() << " (use --bound)\n";
            return 3;
        }
        if (rc != CSF_OK) return fail("trees");
        return emit(out.s, treesOut);
    }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    return 0;
}
