#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

// Leg lengths of a spider: a partition with at least 3 parts. The spider
// S(legs) has 1 + sum(legs) vertices.
struct SpiderSpec {
    Partition legs;

    explicit SpiderSpec(Partition legs_);
    int leg_count() const { return legs.length(); }
    int vertex_count() const { return legs.weight() + 1; }
    bool operator==(const SpiderSpec& other) const { return legs == other.legs; }
};

// Finite simple undirected graph on vertices 0..n-1, n <= 62. Immutable after
// construction; adjacency kept as per-vertex bitmasks.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    uint64_t adjacency(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    uint64_t full_mask() const;

    bool is_connected() const;
    bool is_tree() const;
    // Connected components of the induced subgraph on `mask`, as bitmasks in
    // order of lowest member vertex.
    std::vector<uint64_t> components_of_mask(uint64_t mask) const;

    std::string to_edge_list() const;  // "n" line then "u v" lines
    std::string to_graph6() const;

private:
    int n_;
    std::vector<uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;

    void add_edge(int u, int v);
};

// Named families. Vertex labellings are fixed so cached results stay
// reproducible:
//   path: 0-1-...-(n-1)
//   star: centre 0, leaves 1..n-1
//   complete: all pairs
//   spider: centre 0, then each leg's vertices consecutively outward from the
//           centre, legs in spec order (longest first)
//   windmill W^d_n: hub 0, blade b occupying vertices 1+b(n-1)..(b+1)(n-1),
//           each blade plus the hub forming K_n
Graph make_path(int n);
Graph make_star(int n);
Graph make_complete(int n);
Graph make_spider(const SpiderSpec& spec);
Graph make_windmill(int d, int n);

// Connected components of G - v as vertex sets, largest first (ties by
// smallest member). Requires G connected.
std::vector<std::vector<int>> cut_vertex_components(const Graph& g, int v);

// Component sizes of G - v as a spider spec; requires >= 3 components. Every
// connected-partition type of G is then a connected-partition type of the
// reduced spider.
SpiderSpec spider_reduction(const Graph& g, int v);

// Per-component 2-colouring class sizes (larger first), or nullopt if any
// component has an odd cycle. Components ordered by smallest vertex.
std::optional<std::vector<std::pair<int, int>>> is_bipartite_with_parts(const Graph& g);

// True iff some vertex has three pairwise nonadjacent neighbours (induced S_4).
bool contains_claw(const Graph& g);

bool has_perfect_matching(const Graph& g);         // false when n is odd
bool has_almost_perfect_matching(const Graph& g);  // false when n is even

Graph parse_edge_list(const std::string& text);
Graph parse_graph6(const std::string& text);

}  // namespace csf
