#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

// Canonical encoding of a free tree: the level sequence (root depth 0) of the
// centroid-rooted canonical form. Two TreeCodes are equal iff the trees are
// isomorphic.
struct TreeCode {
    std::vector<int> levels;

    int n() const { return static_cast<int>(levels.size()); }
    Graph decode() const;
    std::vector<int> degrees() const;
    std::string to_string() const;  // "0,1,2,1"
    static TreeCode parse(const std::string& text);
    bool operator==(const TreeCode& other) const = default;
    bool operator<(const TreeCode& other) const { return levels < other.levels; }
};

// Canonical code of an arbitrary tree graph (centroid-rooted, children blocks
// in non-increasing lexicographic order; ties between the two centroids of a
// bicentroidal tree resolved towards the larger sequence).
TreeCode canonical_tree_code(const Graph& tree);

inline constexpr int kDefaultTreeBound = 19;

// Streams every isomorphism class of free trees on n vertices exactly once.
// The optional filter sees the degree multiset and skips decoding when it
// rejects. Enumeration is a single sequential stage; per-tree work belongs
// downstream.
class FreeTreeStream {
public:
    using DegreeFilter = std::function<bool(const std::vector<int>& degrees)>;

    explicit FreeTreeStream(int n, DegreeFilter filter = nullptr,
                            int bound = kDefaultTreeBound);
    std::optional<TreeCode> next();

private:
    int n_;
    DegreeFilter filter_;
    std::vector<int> levels_;
    bool started_ = false;
    bool done_ = false;

    bool advance_rooted();
};

std::vector<TreeCode> free_trees(int n, FreeTreeStream::DegreeFilter filter = nullptr,
                                 int bound = kDefaultTreeBound);

}  // namespace csf
