#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"
#include "csf/spider_theory.hpp"
#include "csf/symfunc.hpp"

namespace csf {

// True iff the vertex set splits into blocks of sizes `type`, each inducing a
// connected subgraph. Requires G connected and weight(type) == n.
bool has_connected_partition(const Graph& g, const Partition& type);

// Smallest type (in enumeration order) with no connected partition, or nullopt
// when every type is realised. Requires G connected.
std::optional<Partition> missing_connected_type(const Graph& g);

// True iff the vertex set splits into independent sets of sizes `type`.
bool has_stable_partition(const Graph& g, const Partition& type);

// A pair (held, missing) with a stable partition of type `held`, `missing`
// strictly below it in dominance, and no stable partition of type `missing`.
// Such a pair certifies non-Schur-positivity. First such pair in enumeration
// order (held outer, missing inner), or nullopt.
std::optional<std::pair<Partition, Partition>> schur_dominance_violation(const Graph& g);

// One-sided criteria: a returned certificate proves non-positivity; nullopt
// means the criterion is silent, never that the graph is positive. All
// require G connected.

// No (almost) perfect matching: the matching type (2^{n/2}) or
// (2^{(n-1)/2}, 1) is missing.
std::optional<Partition> matching_criterion(const Graph& g);

struct ShortLegsCert {
    int cut_vertex;
    int max_component;
    Partition missing_type;  // (n - m - 1, m + 1)
};
// Some cut vertex leaves d >= 3 components all smaller than floor(n/2).
std::optional<ShortLegsCert> short_legs_criterion(const Graph& g);

struct Log2Cert {
    int cut_vertex;
    int component_count;
    SpiderWitness witness;  // from the reduced spider; its missing type is missing in G
};
// Some cut vertex leaves d >= 3 components with d >= log2(n) + 1; the spider
// decision procedure is guaranteed to produce a witness there.
std::optional<Log2Cert> log2_cut_vertex_criterion(const Graph& g);

struct BipartiteDegreeCert {
    int vertex;
    int degree;
    Partition held_stable_type;     // (m, n - m), the bipartition
    Partition missing_stable_type;  // (ceil(n/2), floor(n/2))
};
// Bipartite with a vertex of degree > ceil(n/2): Schur-positivity fails by the
// stable-partition dominance criterion.
std::optional<BipartiteDegreeCert> bipartite_degree_criterion(const Graph& g);

struct PositivityReport {
    std::string graph_id;
    int n = 0;
    int edge_count = 0;
    std::optional<bool> e_positive;      // nullopt: undecided within bounds
    std::optional<bool> schur_positive;  // nullopt: undecided within bounds
    std::optional<std::pair<Partition, Rat>> e_witness;  // negative E coefficient
    std::optional<Partition> missing_connected_type;
    std::optional<std::pair<Partition, Partition>> violated_stable_type;
    std::vector<std::string> criteria_fired;
};

struct ReportOptions {
    int max_edges = 26;            // bound for exact expansions
    int witness_search_max_n = 12; // bound for exhaustive missing-type search
    int workers = 0;
};

// Runs the cheap criteria, then exact E and S expansions when the size allows.
// Verdict fields stay nullopt only when the graph is too large to expand and
// no certificate settles them. Throws std::invalid_argument for disconnected
// input.
PositivityReport full_report(const Graph& g, const std::string& graph_id,
                             const ReportOptions& opts = {});

std::string report_to_json(const PositivityReport& report);

}  // namespace csf
