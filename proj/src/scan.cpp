#include "csf/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "csf/cache.hpp"
#include "csf/csf.hpp"
#include "csf/util.hpp"

namespace csf {

namespace {

// Batch size is fixed so that early-stopping decisions (and therefore every
// reported count) are independent of the worker count.
constexpr int kBatch = 32;

SymFunc expansion(const Graph& g, const TreeCode& code, Basis basis, CoeffCache* cache) {
    if (cache) {
        if (auto hit = cache->lookup(code.to_string(), basis, g.n())) return *hit;
    }
    CsfOptions opts;
    opts.workers = 1;  // parallelism lives at the per-tree level here
    SymFunc f = to_basis(chromatic_symmetric_function(g, opts), basis);
    if (cache) cache->store(code.to_string(), f);
    return f;
}

// Non-e-positivity via cheap certificates first, exact E expansion otherwise.
bool tree_not_e_positive(const Graph& g, const TreeCode& code, CoeffCache* cache,
                         std::string& via) {
    if (matching_criterion(g)) {
        via = "matching";
        return true;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 3) continue;
        auto comps = cut_vertex_components(g, v);
        if (comps.size() < 3) continue;
        if (auto w = spider_e_negativity_decision(spider_reduction(g, v))) {
            via = rule_name(w->rule);
            return true;
        }
    }
    via = "expansion";
    return !is_nonnegative(expansion(g, code, Basis::E, cache)).nonnegative;
}

bool tree_schur_positive(const Graph& g, const TreeCode& code, CoeffCache* cache,
                         std::string& via) {
    if (bipartite_degree_criterion(g)) {
        via = "bipartite-degree";
        return false;
    }
    via = "expansion";
    return is_nonnegative(expansion(g, code, Basis::S, cache)).nonnegative;
}

struct BatchItem {
    TreeCode code;
    bool flag = false;       // degree4: not e-positive; halfdegree: Schur-positive
    std::string via;
};

void process_batch(std::vector<BatchItem>& batch, int workers, bool schurMode,
                   CoeffCache* cache) {
    auto work = [&](int w) {
        for (size_t i = w; i < batch.size(); i += workers) {
            Graph g = batch[i].code.decode();
            batch[i].flag = schurMode
                                ? tree_schur_positive(g, batch[i].code, cache, batch[i].via)
                                : tree_not_e_positive(g, batch[i].code, cache, batch[i].via);
        }
    };
    if (workers <= 1 || batch.size() <= 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
}

}  // namespace

ScanResult scan_conjecture(const std::string& id, int n_max, const ScanOptions& opts) {
    bool degree4 = id == "degree4-e";
    bool halfdeg = id == "halfdegree-schur";
    if (!degree4 && !halfdeg)
        throw std::invalid_argument("unknown conjecture id: " + id +
                                    " (want degree4-e or halfdegree-schur)");
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");

    int budget = degree4 ? kDegree4Budget : kHalfDegreeBudget;
    int limit = n_max;
    ScanResult result;
    result.conjecture = id;
    result.n_max = n_max;
    result.workers = worker_count(opts.workers);
    if (n_max > budget && !opts.override_budget) {
        limit = budget;
        result.resume_token = "n=" + std::to_string(limit + 1);
        result.status = ScanStatus::Partial;
    }

    std::unique_ptr<CoeffCache> cache;
    std::string cachePath = opts.cache_path;
    if (cachePath.empty()) {
        if (const char* env = std::getenv("CSF_CACHE")) cachePath = env;
    }
    if (!cachePath.empty()) cache = std::make_unique<CoeffCache>(cachePath);

    auto start = std::chrono::steady_clock::now();
    bool sawCounterexample = false;

    for (int n = result.n_min; n <= limit; ++n) {
        PerNScan per;
        per.n = n;
        int target = n / 2;
        FreeTreeStream::DegreeFilter filter;
        if (degree4) {
            filter = [](const std::vector<int>& deg) {
                return *std::max_element(deg.begin(), deg.end()) >= 4;
            };
        } else {
            filter = [target](const std::vector<int>& deg) {
                return std::find(deg.begin(), deg.end(), target) != deg.end();
            };
        }
        FreeTreeStream stream(n, filter, std::max(n, kDefaultTreeBound));
        bool stop = false;
        while (!stop) {
            std::vector<BatchItem> batch;
            while (batch.size() < kBatch) {
                auto code = stream.next();
                if (!code) break;
                batch.push_back(BatchItem{*code, false, ""});
            }
            if (batch.empty()) break;
            per.population += static_cast<long long>(batch.size());
            process_batch(batch, result.workers, halfdeg, cache.get());
            per.examined += static_cast<long long>(batch.size());
            for (const auto& item : batch) {
                if (opts.jsonl) {
                    nlohmann::ordered_json line;
                    line["conjecture"] = id;
                    line["n"] = n;
                    line["tree"] = item.code.to_string();
                    line[degree4 ? "e_positive" : "schur_positive"] =
                        degree4 ? !item.flag : item.flag;
                    line["via"] = item.via;
                    (*opts.jsonl) << line.dump() << "\n";
                }
                if (degree4 && !item.flag) {
                    // An e-positive tree with a degree >= 4 vertex refutes the
                    // conjecture.
                    result.counterexamples.push_back(
                        ScanCounterexample{n, item.code, full_report(item.code.decode(),
                                                                     "tree(" + item.code.to_string() + ")")});
                    sawCounterexample = true;
                }
                if (halfdeg && item.flag) {
                    if (!per.witness_found) {
                        per.witness_found = true;
                        per.witness = item.code;
                    }
                    ++per.witness_count;
                }
            }
            if (halfdeg && per.witness_found && !opts.exhaustive) stop = true;
        }
        // Count the rest of the filtered population without examining it.
        if (halfdeg && stop) {
            while (stream.next()) ++per.population;
        }
        if (halfdeg && !per.witness_found) sawCounterexample = true;
        result.trees_examined += per.examined;
        result.per_n.push_back(std::move(per));
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (sawCounterexample) result.status = ScanStatus::Counterexample;
    return result;
}

std::string scan_status_name(ScanStatus status) {
    switch (status) {
        case ScanStatus::Verified: return "VERIFIED";
        case ScanStatus::Counterexample: return "COUNTEREXAMPLE";
        case ScanStatus::Partial: return "PARTIAL";
    }
    return "?";
}

std::string scan_result_to_json(const ScanResult& result) {
    nlohmann::ordered_json j;
    j["conjecture"] = result.conjecture;
    j["n_min"] = result.n_min;
    j["n_max"] = result.n_max;
    j["status"] = scan_status_name(result.status);
    j["trees_examined"] = result.trees_examined;
    j["workers"] = result.workers;
    j["wall_seconds"] = result.wall_seconds;
    if (result.resume_token) j["resume"] = *result.resume_token;
    j["per_n"] = nlohmann::json::array();
    for (const auto& per : result.per_n) {
        nlohmann::ordered_json p;
        p["n"] = per.n;
        p["population"] = per.population;
        p["examined"] = per.examined;
        if (result.conjecture == "halfdegree-schur") {
            p["witness_found"] = per.witness_found;
            p["witness"] = per.witness ? nlohmann::json(per.witness->to_string())
                                       : nlohmann::json();
            p["witness_count"] = per.witness_count;
        }
        j["per_n"].push_back(p);
    }
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& ce : result.counterexamples) {
        nlohmann::ordered_json c;
        c["n"] = ce.n;
        c["tree"] = ce.tree.to_string();
        c["report"] = nlohmann::json::parse(report_to_json(ce.report));
        j["counterexamples"].push_back(c);
    }
    return j.dump();
}

std::string scan_result_summary(const ScanResult& result) {
    std::string out = result.conjecture + " up to n=" + std::to_string(result.n_max) + ": " +
                      scan_status_name(result.status) + " (" +
                      std::to_string(result.trees_examined) + " trees examined, " +
                      std::to_string(result.workers) + " workers, " +
                      std::to_string(result.wall_seconds) + "s)\n";
    for (const auto& per : result.per_n) {
        out += "  n=" + std::to_string(per.n) + ": population " +
               std::to_string(per.population) + ", examined " + std::to_string(per.examined);
        if (result.conjecture == "halfdegree-schur") {
            out += per.witness_found ? ", witness " + per.witness->to_string()
                                     : ", NO WITNESS";
        }
        out += "\n";
    }
    if (!result.counterexamples.empty())
        out += "  counterexamples: " + std::to_string(result.counterexamples.size()) + "\n";
    if (result.resume_token) out += "  resume with --force-budget from " + *result.resume_token + "\n";
    return out;
}

}  // namespace csf
