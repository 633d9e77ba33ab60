#pragma once

#include "csf/graph.hpp"
#include "csf/symfunc.hpp"

namespace csf {

struct CsfOptions {
    int max_edges = 26;  // 2^|E| edge subsets are enumerated
    int workers = 0;     // 0: CSF_WORKERS env or hardware concurrency
};

// X_G in the power-sum basis via the edge-subset expansion
// X_G = sum over S subset of E of (-1)^{|S|} p_{lambda(S)}, where lambda(S)
// lists component sizes of (V, S). Integer coefficients, degree n. The subset
// range is split across workers; the merged result does not depend on the
// split. Throws when the edge count exceeds the configured bound.
SymFunc chromatic_symmetric_function(const Graph& g, const CsfOptions& opts = {});

// Independent route: tallies all proper colourings with colour set {1..n}
// (lossless for degree n) into the monomial basis. Only for n <= 7.
SymFunc csf_coloring_oracle(const Graph& g);

}  // namespace csf
