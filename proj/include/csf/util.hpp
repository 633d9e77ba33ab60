#pragma once

#include <stdexcept>
#include <string>

namespace csf {

// Worker count for parallel stages: explicit request > CSF_WORKERS env
// variable > hardware concurrency. Always at least 1.
int worker_count(int requested = 0);

// A configured size bound was exceeded (edge-subset route, oracle size,
// tree-order limit). Distinct from invalid input so callers can report
// "undecided within bounds" instead of an error.
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace csf
