#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "csf/symfunc.hpp"

namespace csf {

// Append-only expansion cache keyed by canonical tree code and basis letter.
// One JSON line per entry after a version-stamp header; a stamp mismatch
// discards the file. Safe for concurrent use within one process.
class CoeffCache {
public:
    explicit CoeffCache(std::string path);

    std::optional<SymFunc> lookup(const std::string& tree_key, Basis basis, int degree);
    void store(const std::string& tree_key, const SymFunc& f);

    size_t entry_count() const { return index_.size(); }

private:
    std::string path_;
    std::mutex mu_;
    std::map<std::string, std::string> index_;  // "key|basis" -> coefficients JSON
};

}  // namespace csf
