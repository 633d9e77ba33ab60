#include "csf/positivity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "csf/csf.hpp"

namespace csf {

namespace {

// Enumerates connected vertex sets of exactly `size` vertices containing
// `root`, inside `allowed`. Each set is visited once. The callback returns
// false to stop early; the function returns false when stopped.
template <typename Callback>
bool enumerate_connected_sets(const Graph& g, int root, int size, uint64_t allowed,
                              Callback&& cb) {
    uint64_t rootBit = 1ull << root;
    if (size == 1) return cb(rootBit);
    auto rec = [&](auto&& self, uint64_t set, int count, uint64_t ext, uint64_t visited) -> bool {
        while (ext) {
            uint64_t wbit = ext & -ext;
            ext ^= wbit;  // removal persists for siblings: sets with w only below this branch
            int w = std::countr_zero(wbit);
            uint64_t frontier = g.adjacency(w) & allowed & ~visited;
            if (count + 1 == size) {
                if (!cb(set | wbit)) return false;
            } else {
                if (!self(self, set | wbit, count + 1, ext | frontier, visited | frontier))
                    return false;
            }
        }
        return true;
    };
    uint64_t frontier = g.adjacency(root) & allowed;
    return rec(rec, rootBit, 1, frontier, rootBit | frontier);
}

// Distinct remaining part sizes with counts, descending.
struct PartPool {
    std::vector<int> sizes;   // distinct, descending
    std::vector<int> counts;

    explicit PartPool(const Partition& type) {
        for (int p : type.parts()) {
            if (!sizes.empty() && sizes.back() == p) ++counts.back();
            else {
                sizes.push_back(p);
                counts.push_back(1);
            }
        }
    }
    bool empty() const {
        for (int c : counts)
            if (c > 0) return false;
        return true;
    }
};

bool connected_partition_rec(const Graph& g, uint64_t used, PartPool& pool) {
    uint64_t unused = g.full_mask() & ~used;
    if (!unused) return true;
    // Feasibility: every component of the unused set must be fillable, i.e.
    // its size must be a subset sum of the remaining part sizes.
    uint64_t reachable = 1;  // bit k set: k is a subset sum
    for (size_t i = 0; i < pool.sizes.size(); ++i)
        for (int c = 0; c < pool.counts[i]; ++c) reachable |= reachable << pool.sizes[i];
    for (uint64_t comp : g.components_of_mask(unused)) {
        int sz = std::popcount(comp);
        if (sz > 62 || !((reachable >> sz) & 1)) return false;
    }
    int v = std::countr_zero(unused);
    for (size_t i = 0; i < pool.sizes.size(); ++i) {
        if (pool.counts[i] == 0) continue;
        --pool.counts[i];
        bool found = !enumerate_connected_sets(
            g, v, pool.sizes[i], unused,
            [&](uint64_t block) { return !connected_partition_rec(g, used | block, pool); });
        ++pool.counts[i];
        if (found) return true;
    }
    return false;
}

}  // namespace

bool has_connected_partition(const Graph& g, const Partition& type) {
    if (type.weight() != g.n())
        throw std::invalid_argument("partition weight must equal the vertex count");
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    PartPool pool(type);
    return connected_partition_rec(g, 0, pool);
}

std::optional<Partition> missing_connected_type(const Graph& g) {
    for (const Partition& type : partitions_of(g.n())) {
        if (!has_connected_partition(g, type)) return type;
    }
    return std::nullopt;
}

namespace {

bool stable_two_part(const Graph& g, const Partition& type) {
    auto parts = is_bipartite_with_parts(g);
    if (!parts) return false;
    // Pick one side per component; the first class must reach size type[0].
    uint64_t reachable = 1;
    for (auto [a, b] : *parts) reachable = (reachable << a) | (reachable << b);
    int target = type.length() >= 1 ? type.part(0) : 0;
    return (reachable >> target) & 1;
}

}  // namespace

bool has_stable_partition(const Graph& g, const Partition& type) {
    if (type.weight() != g.n())
        throw std::invalid_argument("partition weight must equal the vertex count");
    if (type.length() == 1) return g.edge_count() == 0;
    if (type.length() == 2) return stable_two_part(g, type);

    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    int k = type.length();
    std::vector<int> cap(type.parts());
    std::vector<int> used(k, 0);
    std::vector<uint64_t> members(k, 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == g.n()) return true;
        int v = order[idx];
        uint64_t adj = g.adjacency(v);
        int lastEmptyCap = -1;
        for (int c = 0; c < k; ++c) {
            if (used[c] == cap[c]) continue;
            if (members[c] & adj) continue;
            if (used[c] == 0) {
                if (cap[c] == lastEmptyCap) continue;  // symmetric to an earlier empty class
                lastEmptyCap = cap[c];
            }
            ++used[c];
            members[c] |= 1ull << v;
            if (self(self, idx + 1)) return true;
            --used[c];
            members[c] &= ~(1ull << v);
        }
        return false;
    };
    return rec(rec, 0);
}

std::optional<std::pair<Partition, Partition>> schur_dominance_violation(const Graph& g) {
    const auto types = partitions_of(g.n());
    std::map<Partition, bool, EnumOrderLess> memo;
    auto stable = [&](const Partition& t) {
        auto it = memo.find(t);
        if (it == memo.end()) it = memo.emplace(t, has_stable_partition(g, t)).first;
        return it->second;
    };
    for (const Partition& held : types) {
        if (!stable(held)) continue;
        for (const Partition& below : types) {
            if (below == held) continue;
            if (!dominates(held, below)) continue;
            if (!stable(below)) return std::make_pair(held, below);
        }
    }
    return std::nullopt;
}

std::optional<Partition> matching_criterion(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    int n = g.n();
    if (n % 2 == 0) {
        if (has_perfect_matching(g)) return std::nullopt;
        return Partition::repeated(2, n / 2);
    }
    if (has_almost_perfect_matching(g)) return std::nullopt;
    std::vector<int> parts(n / 2, 2);
    parts.push_back(1);
    return Partition(parts);
}

std::optional<ShortLegsCert> short_legs_criterion(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    int n = g.n();
    for (int v = 0; v < n; ++v) {
        auto comps = cut_vertex_components(g, v);
        if (comps.size() < 3) continue;
        int m = static_cast<int>(comps[0].size());
        if (m < n / 2) return ShortLegsCert{v, m, Partition({n - m - 1, m + 1})};
    }
    return std::nullopt;
}

std::optional<Log2Cert> log2_cut_vertex_criterion(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    int n = g.n();
    for (int v = 0; v < n; ++v) {
        auto comps = cut_vertex_components(g, v);
        int d = static_cast<int>(comps.size());
        if (d < 3 || d > 62 || (1ll << (d - 1)) < n) continue;
        auto witness = spider_e_negativity_decision(spider_reduction(g, v));
        if (!witness)
            throw std::logic_error("log2 criterion hypothesis held but no spider witness");
        return Log2Cert{v, d, *witness};
    }
    return std::nullopt;
}

std::optional<BipartiteDegreeCert> bipartite_degree_criterion(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    auto parts = is_bipartite_with_parts(g);
    if (!parts) return std::nullopt;
    int n = g.n();
    int ceilHalf = (n + 1) / 2;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > ceilHalf) {
            auto [big, small] = (*parts)[0];
            return BipartiteDegreeCert{v, g.degree(v), Partition({big, small}),
                                       Partition({ceilHalf, n - ceilHalf})};
        }
    }
    return std::nullopt;
}

namespace {

void note_criterion(std::vector<std::string>& fired, const std::string& name) {
    if (std::find(fired.begin(), fired.end(), name) == fired.end()) fired.push_back(name);
}

}  // namespace

PositivityReport full_report(const Graph& g, const std::string& graph_id,
                             const ReportOptions& opts) {
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    PositivityReport report;
    report.graph_id = graph_id;
    report.n = g.n();
    report.edge_count = g.edge_count();

    std::optional<Partition> certMissing;
    if (auto t = matching_criterion(g)) {
        note_criterion(report.criteria_fired, "matching");
        certMissing = t;
    }
    if (auto c = short_legs_criterion(g)) {
        note_criterion(report.criteria_fired, "short-legs");
        if (!certMissing) certMissing = c->missing_type;
    }
    for (int v = 0; v < g.n(); ++v) {
        auto comps = cut_vertex_components(g, v);
        if (comps.size() < 3) continue;
        if (auto w = spider_e_negativity_decision(spider_reduction(g, v))) {
            note_criterion(report.criteria_fired, rule_name(w->rule));
            if (!certMissing) certMissing = w->missing_type;
        }
    }
    if (auto c = log2_cut_vertex_criterion(g)) {
        note_criterion(report.criteria_fired, "log2-bound");
        if (!certMissing) certMissing = c->witness.missing_type;
    }
    if (auto c = bipartite_degree_criterion(g)) {
        note_criterion(report.criteria_fired, "bipartite-degree");
        report.schur_positive = false;
        report.violated_stable_type = std::make_pair(c->held_stable_type, c->missing_stable_type);
    }

    if (g.edge_count() <= opts.max_edges) {
        CsfOptions copts;
        copts.max_edges = opts.max_edges;
        copts.workers = opts.workers;
        SymFunc xp = chromatic_symmetric_function(g, copts);
        auto eres = is_nonnegative(to_basis(xp, Basis::E));
        auto sres = is_nonnegative(to_basis(xp, Basis::S));
        report.e_positive = eres.nonnegative;
        report.e_witness = eres.witness;
        report.schur_positive = sres.nonnegative;
        if (certMissing && eres.nonnegative)
            throw std::logic_error("criterion produced a certificate for an e-positive graph");
        if (eres.nonnegative && !sres.nonnegative)
            throw std::logic_error("e-positive expansion with a negative Schur coefficient");
    } else if (certMissing) {
        report.e_positive = false;
    }

    if (g.n() <= opts.witness_search_max_n) {
        report.missing_connected_type = missing_connected_type(g);
        if (report.missing_connected_type && report.e_positive == true)
            throw std::logic_error("missing connected type found for an e-positive graph");
        if (report.missing_connected_type) report.e_positive = false;
    } else if (certMissing) {
        report.missing_connected_type = certMissing;
    }

    if (!report.violated_stable_type && g.n() <= opts.witness_search_max_n &&
        report.schur_positive != true) {
        report.violated_stable_type = schur_dominance_violation(g);
        if (report.violated_stable_type) {
            if (report.schur_positive == true)
                throw std::logic_error("stable dominance violation for a Schur-positive graph");
            report.schur_positive = false;
        }
    }
    return report;
}

std::string report_to_json(const PositivityReport& report) {
    nlohmann::ordered_json j;
    j["graph"] = report.graph_id;
    j["n"] = report.n;
    j["edges"] = report.edge_count;
    j["e_positive"] = report.e_positive ? nlohmann::json(*report.e_positive) : nlohmann::json();
    j["schur_positive"] =
        report.schur_positive ? nlohmann::json(*report.schur_positive) : nlohmann::json();
    if (report.e_witness) {
        j["e_witness"] = {{"type", report.e_witness->first.to_string()},
                          {"coefficient", rat_to_string(report.e_witness->second)}};
    } else {
        j["e_witness"] = nullptr;
    }
    j["missing_connected_type"] = report.missing_connected_type
                                      ? nlohmann::json(report.missing_connected_type->to_string())
                                      : nlohmann::json();
    if (report.violated_stable_type) {
        j["violated_stable_type"] = {{"held", report.violated_stable_type->first.to_string()},
                                     {"missing", report.violated_stable_type->second.to_string()}};
    } else {
        j["violated_stable_type"] = nullptr;
    }
    j["criteria_fired"] = report.criteria_fired;
    return j.dump();
}

}  // namespace csf
