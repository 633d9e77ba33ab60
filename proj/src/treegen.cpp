#include "csf/treegen.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "csf/util.hpp"

namespace csf {

Graph TreeCode::decode() const {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        int parent = -1;
        for (int j = i - 1; j >= 0; --j) {
            if (levels[j] == levels[i] - 1) {
                parent = j;
                break;
            }
        }
        if (parent < 0) throw std::invalid_argument("bad level sequence");
        edges.emplace_back(parent, i);
    }
    return Graph(n, edges);
}

std::vector<int> TreeCode::degrees() const {
    int n = static_cast<int>(levels.size());
    std::vector<int> deg(n, 0);
    for (int i = 1; i < n; ++i) {
        int parent = -1;
        for (int j = i - 1; j >= 0; --j) {
            if (levels[j] == levels[i] - 1) {
                parent = j;
                break;
            }
        }
        ++deg[i];
        ++deg[parent];
    }
    return deg;
}

std::string TreeCode::to_string() const {
    std::string out;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(levels[i]);
    }
    return out;
}

TreeCode TreeCode::parse(const std::string& text) {
    TreeCode code;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        code.levels.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (code.levels.empty() || code.levels[0] != 0)
        throw std::invalid_argument("bad tree code: " + text);
    code.decode();  // validates
    return code;
}

namespace {

// Level sequence of the canonically ordered rooted tree: children blocks
// sorted in non-increasing lexicographic order.
std::vector<int> canonical_rooted(const Graph& g, int root, int parent) {
    std::vector<std::vector<int>> children;
    uint64_t nb = g.adjacency(root);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (u == parent) continue;
        auto sub = canonical_rooted(g, u, root);
        for (int& lv : sub) ++lv;
        children.push_back(std::move(sub));
    }
    std::sort(children.begin(), children.end(),
              [](const auto& a, const auto& b) { return b < a; });
    std::vector<int> out{0};
    for (const auto& c : children) out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::vector<int> centroids(const Graph& g) {
    int n = g.n();
    if (n == 1) return {0};
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        uint64_t nb = g.adjacency(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (!seen[u]) {
                seen[u] = true;
                parent[u] = v;
                stack.push_back(u);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    }
    std::vector<int> best;
    int bestMax = n + 1;
    for (int v = 0; v < n; ++v) {
        int mx = n - size[v];
        uint64_t nb = g.adjacency(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (parent[u] == v) mx = std::max(mx, size[u]);
        }
        if (mx < bestMax) {
            bestMax = mx;
            best = {v};
        } else if (mx == bestMax) {
            best.push_back(v);
        }
    }
    return best;
}

}  // namespace

TreeCode canonical_tree_code(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("not a tree");
    std::vector<int> bestSeq;
    for (int c : centroids(tree)) {
        auto seq = canonical_rooted(tree, c, -1);
        if (bestSeq.empty() || seq > bestSeq) bestSeq = std::move(seq);
    }
    return TreeCode{std::move(bestSeq)};
}

FreeTreeStream::FreeTreeStream(int n, DegreeFilter filter, int bound)
    : n_(n), filter_(std::move(filter)) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    if (n > bound)
        throw BoundError("tree order out of bounds (n=" + std::to_string(n) +
                         ", bound=" + std::to_string(bound) + ")");
}

// Beyer-Hedetniemi successor over canonical rooted level sequences, in
// decreasing lexicographic order from the path to the star.
bool FreeTreeStream::advance_rooted() {
    if (!started_) {
        levels_.resize(n_);
        std::iota(levels_.begin(), levels_.end(), 0);
        started_ = true;
        return true;
    }
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i) {
        if (levels_[i] >= 2) {
            p = i;
            break;
        }
    }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
        if (levels_[i] == levels_[p] - 1) {
            q = i;
            break;
        }
    }
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    return true;
}

std::optional<TreeCode> FreeTreeStream::next() {
    while (!done_) {
        if (!advance_rooted()) {
            done_ = true;
            break;
        }
        TreeCode candidate{levels_};
        if (filter_ && !filter_(candidate.degrees())) continue;
        if (canonical_tree_code(candidate.decode()) == candidate) return candidate;
    }
    return std::nullopt;
}

std::vector<TreeCode> free_trees(int n, FreeTreeStream::DegreeFilter filter, int bound) {
    FreeTreeStream stream(n, std::move(filter), bound);
    std::vector<TreeCode> out;
    while (auto code = stream.next()) out.push_back(*code);
    return out;
}

}  // namespace csf
