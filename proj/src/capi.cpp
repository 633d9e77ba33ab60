#include "csf/csf_c.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "csf/cache.hpp"
#include "csf/csf.hpp"
#include "csf/positivity.hpp"
#include "csf/scan.hpp"
#include "csf/spider_theory.hpp"
#include "csf/treegen.hpp"
#include "csf/util.hpp"
#include "csf/verify.hpp"

struct csf_graph {
    csf::Graph g;
    std::string id;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
csf_status guarded(Fn&& fn) {
    try {
        fn();
        return CSF_OK;
    } catch (const csf::BoundError& e) {
        g_last_error = e.what();
        return CSF_ERR_BOUND;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CSF_ERR_INVALID;
    } catch (const std::logic_error& e) {
        g_last_error = e.what();
        return CSF_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CSF_ERR_INVALID;
    }
}

template <typename Fn>
csf_graph* guarded_graph(const std::string& id, Fn&& fn) {
    try {
        return new csf_graph{fn(), id};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

csf::SpiderSpec spec_from(const int* legs, int leg_count) {
    if (!legs || leg_count < 1) throw std::invalid_argument("null or empty leg list");
    return csf::SpiderSpec(csf::Partition(std::vector<int>(legs, legs + leg_count)));
}

std::string spider_json(const csf::SpiderSpec& spec, int verify_max_n) {
    using csf::MatchingClass;
    nlohmann::ordered_json j;
    j["legs"] = spec.legs.to_string();
    j["n"] = spec.vertex_count();
    switch (csf::spider_matching_class(spec)) {
        case MatchingClass::Perfect: j["matching_class"] = "PERFECT"; break;
        case MatchingClass::Almost: j["matching_class"] = "ALMOST"; break;
        case MatchingClass::Neither: j["matching_class"] = "NEITHER"; break;
    }
    auto witness = csf::spider_e_negativity_decision(spec);
    if (witness) {
        nlohmann::ordered_json w;
        w["rule"] = csf::rule_name(witness->rule);
        w["missing_type"] = witness->missing_type.to_string();
        w["params"] = nlohmann::ordered_json::object();
        for (const auto& [name, value] : witness->params) w["params"][name] = value;
        if (spec.vertex_count() <= verify_max_n) {
            bool missing =
                !csf::has_connected_partition(csf::make_spider(spec), witness->missing_type);
            w["verified_missing"] = missing;
            if (!missing)
                throw std::logic_error("spider witness failed independent verification");
        } else {
            w["verified_missing"] = nullptr;
        }
        j["witness"] = w;
        j["e_positive"] = false;
    } else {
        j["witness"] = nullptr;
    }
    return j.dump();
}

}  // namespace

extern "C" {

const char* csf_version(void) { return "csf 1.0.0"; }

const char* csf_last_error(void) { return g_last_error.c_str(); }

void csf_string_free(char* s) { std::free(s); }

csf_graph* csf_graph_path(int n) {
    return guarded_graph("path(" + std::to_string(n) + ")", [&] { return csf::make_path(n); });
}

csf_graph* csf_graph_star(int n) {
    return guarded_graph("star(" + std::to_string(n) + ")", [&] { return csf::make_star(n); });
}

csf_graph* csf_graph_complete(int n) {
    return guarded_graph("complete(" + std::to_string(n) + ")",
                         [&] { return csf::make_complete(n); });
}

csf_graph* csf_graph_spider(const int* legs, int leg_count) {
    try {
        auto spec = spec_from(legs, leg_count);
        return new csf_graph{csf::make_spider(spec), "spider(" + spec.legs.to_string() + ")"};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

csf_graph* csf_graph_windmill(int d, int n) {
    return guarded_graph("windmill(" + std::to_string(d) + "," + std::to_string(n) + ")",
                         [&] { return csf::make_windmill(d, n); });
}

csf_graph* csf_graph_from_edge_list(const char* text) {
    if (!text) {
        g_last_error = "null edge list";
        return nullptr;
    }
    return guarded_graph("edges", [&] { return csf::parse_edge_list(text); });
}

csf_graph* csf_graph_from_graph6(const char* text) {
    if (!text) {
        g_last_error = "null graph6 string";
        return nullptr;
    }
    return guarded_graph("graph6(" + std::string(text) + ")",
                         [&] { return csf::parse_graph6(text); });
}

csf_graph* csf_graph_from_tree_code(const char* levels) {
    if (!levels) {
        g_last_error = "null tree code";
        return nullptr;
    }
    return guarded_graph("tree(" + std::string(levels) + ")",
                         [&] { return csf::TreeCode::parse(levels).decode(); });
}

void csf_graph_free(csf_graph* g) { delete g; }

int csf_graph_n(const csf_graph* g) { return g ? g->g.n() : 0; }

int csf_graph_edges(const csf_graph* g) { return g ? g->g.edge_count() : 0; }

csf_status csf_graph_csf(const csf_graph* g, char basis, int format, int max_edges,
                         int workers, char** out) {
    if (!g || !out) {
        g_last_error = "null argument";
        return CSF_ERR_INVALID;
    }
    return guarded([&] {
        csf::CsfOptions opts;
        if (max_edges > 0) opts.max_edges = max_edges;
        opts.workers = workers;
        csf::SymFunc f =
            csf::to_basis(csf::chromatic_symmetric_function(g->g, opts), csf::basis_from_letter(basis));
        *out = dup_string(format == 1 ? csf::render_json(f) : csf::render_text(f));
    });
}

csf_status csf_graph_positivity(const csf_graph* g, int max_edges, int workers,
                                char** out_json, int* e_verdict) {
    if (!g || !out_json) {
        g_last_error = "null argument";
        return CSF_ERR_INVALID;
    }
    return guarded([&] {
        csf::ReportOptions opts;
        if (max_edges > 0) opts.max_edges = max_edges;
        opts.workers = workers;
        csf::PositivityReport report = csf::full_report(g->g, g->id, opts);
        *out_json = dup_string(csf::report_to_json(report));
        if (e_verdict)
            *e_verdict = report.e_positive.has_value() ? (*report.e_positive ? 1 : 0) : 2;
    });
}

csf_status csf_spider_analyze(const int* legs, int leg_count, int verify_max_n,
                              char** out_json) {
    if (!out_json) {
        g_last_error = "null argument";
        return CSF_ERR_INVALID;
    }
    return guarded([&] {
        *out_json = dup_string(spider_json(spec_from(legs, leg_count), verify_max_n));
    });
}

csf_status csf_scan(const char* conjecture_id, int n_max, int workers, int exhaustive,
                    int override_budget, const char* cache_path, const char* jsonl_path,
                    char** out_json, int* scan_status) {
    if (!conjecture_id || !out_json) {
        g_last_error = "null argument";
        return CSF_ERR_INVALID;
    }
    return guarded([&] {
        csf::ScanOptions opts;
        opts.workers = workers;
        opts.exhaustive = exhaustive != 0;
        opts.override_budget = override_budget != 0;
        if (cache_path) opts.cache_path = cache_path;
        std::ofstream jsonl;
        if (jsonl_path && *jsonl_path) {
            jsonl.open(jsonl_path);
            if (!jsonl) throw std::invalid_argument(std::string("cannot open ") + jsonl_path);
            opts.jsonl = &jsonl;
        }
        csf::ScanResult result = csf::scan_conjecture(conjecture_id, n_max, opts);
        *out_json = dup_string(csf::scan_result_to_json(result));
        if (scan_status) {
            switch (result.status) {
                case csf::ScanStatus::Verified: *scan_status = 0; break;
                case csf::ScanStatus::Counterexample: *scan_status = 1; break;
                case csf::ScanStatus::Partial: *scan_status = 2; break;
            }
        }
    });
}

csf_status csf_verify_paper(int workers, char** out_text, int* n_failed) {
    if (!out_text) {
        g_last_error = "null argument";
        return CSF_ERR_INVALID;
    }
    return guarded([&] {
        auto checks = csf::verify_paper(workers);
        *out_text = dup_string(csf::checks_to_text(checks));
        if (n_failed) *n_failed = csf::count_failures(checks);
    });
}

csf_status csf_trees(int n, int min_max_degree, int exists_degree, int format, int bound,
                     char** out) {
    if (!out) {
        g_last_error = "null argument";
        return CSF_ERR_INVALID;
    }
    return guarded([&] {
        csf::FreeTreeStream::DegreeFilter filter;
        if (min_max_degree > 0 || exists_degree > 0) {
            filter = [min_max_degree, exists_degree](const std::vector<int>& deg) {
                if (min_max_degree > 0 &&
                    *std::max_element(deg.begin(), deg.end()) < min_max_degree)
                    return false;
                if (exists_degree > 0 &&
                    std::find(deg.begin(), deg.end(), exists_degree) == deg.end())
                    return false;
                return true;
            };
        }
        csf::FreeTreeStream stream(n, filter, bound > 0 ? bound : csf::kDefaultTreeBound);
        std::ostringstream text;
        while (auto code = stream.next()) {
            if (format == 1) {
                text << code->decode().to_edge_list() << "\n";
            } else if (format == 2) {
                text << code->decode().to_graph6() << "\n";
            } else {
                text << code->to_string() << "\n";
            }
        }
        *out = dup_string(text.str());
    });
}

}  // extern "C"
