#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "csf/positivity.hpp"
#include "csf/treegen.hpp"

namespace csf {

enum class ScanStatus { Verified, Counterexample, Partial };

struct ScanCounterexample {
    int n;
    TreeCode tree;
    PositivityReport report;
};

struct PerNScan {
    int n;
    long long population = 0;  // trees passing the degree filter
    long long examined = 0;
    bool witness_found = false;           // halfdegree only
    std::optional<TreeCode> witness;      // halfdegree only
    long long witness_count = 0;          // halfdegree, exhaustive mode
};

struct ScanResult {
    std::string conjecture;
    int n_min = 2;
    int n_max = 0;
    long long trees_examined = 0;
    std::vector<ScanCounterexample> counterexamples;
    ScanStatus status = ScanStatus::Verified;
    double wall_seconds = 0;
    int workers = 1;
    std::vector<PerNScan> per_n;
    std::optional<std::string> resume_token;  // "n=<k>" when budget-truncated
};

struct ScanOptions {
    int workers = 0;
    bool exhaustive = false;       // halfdegree: keep scanning past the first witness
    bool override_budget = false;  // allow n_max beyond the default budget
    std::string cache_path;        // "" : use CSF_CACHE env var if set
    std::ostream* jsonl = nullptr; // one JSON object per examined tree
};

// Default compute budgets: degree4-e up to n = 13, halfdegree-schur up to
// n = 12. Requests beyond the budget run to the budget and return Partial with
// a resume token unless override_budget is set.
inline constexpr int kDegree4Budget = 13;
inline constexpr int kHalfDegreeBudget = 12;

// id: "degree4-e" (every tree with a vertex of degree >= 4 is not e-positive)
// or "halfdegree-schur" (for each n some tree with a degree-floor(n/2) vertex
// is Schur-positive). Results excluding wall_seconds are identical across
// worker counts.
ScanResult scan_conjecture(const std::string& id, int n_max, const ScanOptions& opts = {});

std::string scan_status_name(ScanStatus status);
std::string scan_result_to_json(const ScanResult& result);
std::string scan_result_summary(const ScanResult& result);

}  // namespace csf
