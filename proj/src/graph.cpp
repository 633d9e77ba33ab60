#include "csf/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace csf {

namespace {
constexpr int kMaxVertices = 62;
}

SpiderSpec::SpiderSpec(Partition legs_) : legs(std::move(legs_)) {
    if (legs.length() < 3) throw std::invalid_argument("a spider needs at least 3 legs");
}

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adj_[u] & (1ull << v)) throw std::invalid_argument("duplicate edge");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

uint64_t Graph::full_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

std::vector<uint64_t> Graph::components_of_mask(uint64_t mask) const {
    std::vector<uint64_t> comps;
    uint64_t rest = mask;
    while (rest) {
        uint64_t comp = rest & -rest;
        while (true) {
            uint64_t frontier = 0;
            uint64_t cur = comp;
            while (cur) {
                int v = std::countr_zero(cur);
                cur &= cur - 1;
                frontier |= adj_[v] & mask & ~comp;
            }
            if (!frontier) break;
            comp |= frontier;
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;
}

bool Graph::is_connected() const { return components_of_mask(full_mask()).size() == 1; }

bool Graph::is_tree() const { return is_connected() && edge_count() == n_ - 1; }

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << "\n";
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    for (auto [u, v] : sorted) out << u << " " << v << "\n";
    return out.str();
}

std::string Graph::to_graph6() const {
    std::string out;
    if (n_ <= 62) {
        out += static_cast<char>(n_ + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n_ >> 12) & 63) + 63);
        out += static_cast<char>(((n_ >> 6) & 63) + 63);
        out += static_cast<char>((n_ & 63) + 63);
    }
    int bit = 0, acc = 0;
    for (int v = 1; v < n_; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (has_edge(u, v) ? 1 : 0);
            if (++bit == 6) {
                out += static_cast<char>(acc + 63);
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit > 0) out += static_cast<char>((acc << (6 - bit)) + 63);
    return out;
}

Graph make_path(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph make_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph make_spider(const SpiderSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int leg : spec.legs.parts()) {
        edges.emplace_back(0, next);
        for (int i = 1; i < leg; ++i) {
            edges.emplace_back(next, next + 1);
            ++next;
        }
        ++next;
    }
    return Graph(spec.vertex_count(), edges);
}

Graph make_windmill(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("windmill needs d >= 1, n >= 1");
    int total = d * (n - 1) + 1;
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < d; ++b) {
        int lo = 1 + b * (n - 1);
        for (int u = lo; u < lo + n - 1; ++u) {
            edges.emplace_back(0, u);
            for (int v = u + 1; v < lo + n - 1; ++v) edges.emplace_back(u, v);
        }
    }
    return Graph(total, edges);
}

std::vector<std::vector<int>> cut_vertex_components(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    uint64_t rest = g.full_mask() & ~(1ull << v);
    std::vector<std::vector<int>> comps;
    for (uint64_t mask : g.components_of_mask(rest)) {
        std::vector<int> verts;
        while (mask) {
            verts.push_back(std::countr_zero(mask));
            mask &= mask - 1;
        }
        comps.push_back(std::move(verts));
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return comps;
}

SpiderSpec spider_reduction(const Graph& g, int v) {
    auto comps = cut_vertex_components(g, v);
    if (comps.size() < 3)
        throw std::invalid_argument("spider reduction needs a cut vertex with >= 3 components");
    std::vector<int> sizes;
    for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
    return SpiderSpec(Partition(sizes));
}

std::optional<std::vector<std::pair<int, int>>> is_bipartite_with_parts(const Graph& g) {
    std::vector<int> colour(g.n(), -1);
    std::vector<std::pair<int, int>> parts;
    for (int start = 0; start < g.n(); ++start) {
        if (colour[start] != -1) continue;
        int count[2] = {0, 0};
        std::vector<int> stack{start};
        colour[start] = 0;
        ++count[0];
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            uint64_t nb = g.adjacency(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (colour[u] == -1) {
                    colour[u] = 1 - colour[v];
                    ++count[colour[u]];
                    stack.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
        parts.emplace_back(std::max(count[0], count[1]), std::min(count[0], count[1]));
    }
    return parts;
}

bool contains_claw(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> nb;
        uint64_t m = g.adjacency(v);
        while (m) {
            nb.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (size_t c = b + 1; c < nb.size(); ++c)
                    if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return true;
            }
    }
    return false;
}

namespace {

// Trees: repeatedly match a leaf with its unique neighbour; a perfect matching
// exists iff the process consumes every vertex.
bool tree_perfect_matching(const Graph& g, uint64_t mask) {
    std::vector<int> deg(g.n(), 0);
    uint64_t cur = mask;
    while (cur) {
        int v = std::countr_zero(cur);
        cur &= cur - 1;
        deg[v] = std::popcount(g.adjacency(v) & mask);
    }
    std::vector<int> leaves;
    cur = mask;
    while (cur) {
        int v = std::countr_zero(cur);
        cur &= cur - 1;
        if (deg[v] == 1) leaves.push_back(v);
    }
    uint64_t alive = mask;
    while (!leaves.empty()) {
        int v = leaves.back();
        leaves.pop_back();
        if (!(alive & (1ull << v)) || deg[v] != 1) continue;
        uint64_t nbm = g.adjacency(v) & alive;
        if (!nbm) return false;
        int u = std::countr_zero(nbm);
        alive &= ~(1ull << v);
        alive &= ~(1ull << u);
        uint64_t un = g.adjacency(u) & alive;
        while (un) {
            int w = std::countr_zero(un);
            un &= un - 1;
            if (--deg[w] == 1) leaves.push_back(w);
            if (deg[w] == 0 && (alive & (1ull << w))) return false;  // isolated leftover
        }
    }
    return alive == 0;
}

bool perfect_matching_on_mask(const Graph& g, uint64_t mask,
                              std::map<uint64_t, bool>& memo) {
    if (mask == 0) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = std::countr_zero(mask);
    uint64_t nb = g.adjacency(v) & mask;
    bool ok = false;
    while (nb && !ok) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        ok = perfect_matching_on_mask(g, mask & ~(1ull << v) & ~(1ull << u), memo);
    }
    memo.emplace(mask, ok);
    return ok;
}

bool perfect_matching_any(const Graph& g, uint64_t mask) {
    if (std::popcount(mask) % 2 != 0) return false;
    // Every component must match within itself.
    for (uint64_t comp : g.components_of_mask(mask)) {
        if (std::popcount(comp) % 2 != 0) return false;
    }
    bool acyclic = true;
    int edgesInMask = 0;
    for (auto [u, v] : g.edges())
        if ((mask >> u & 1) && (mask >> v & 1)) ++edgesInMask;
    acyclic = edgesInMask == std::popcount(mask) - static_cast<int>(g.components_of_mask(mask).size());
    if (acyclic) {
        for (uint64_t comp : g.components_of_mask(mask))
            if (!tree_perfect_matching(g, comp)) return false;
        return true;
    }
    std::map<uint64_t, bool> memo;
    return perfect_matching_on_mask(g, mask, memo);
}

}  // namespace

bool has_perfect_matching(const Graph& g) {
    if (g.n() % 2 != 0) return false;
    return perfect_matching_any(g, g.full_mask());
}

bool has_almost_perfect_matching(const Graph& g) {
    if (g.n() % 2 != 1) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (perfect_matching_any(g, g.full_mask() & ~(1ull << v))) return true;
    }
    return false;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    if (!in.eof() && in.fail()) throw std::invalid_argument("edge list: bad edge line");
    return Graph(n, edges);
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.substr(0, 10) == ">>graph6<<") s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    size_t pos = 0;
    long long n;
    auto val = [&](size_t i) -> int {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated");
        int c = static_cast<unsigned char>(s[i]) - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad character");
        return c;
    };
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~') throw std::invalid_argument("graph6: graph too large");
        n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6: vertex count out of range");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                acc = val(pos++);
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

}  // namespace csf
