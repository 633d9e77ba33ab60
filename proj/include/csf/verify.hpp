#pragma once

#include <string>
#include <vector>

namespace csf {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // filled on failure, sometimes on pass
};

// Recomputes the toolkit's worked examples and their displayed values as a
// regression ledger: one entry per check.
std::vector<CheckResult> verify_paper(int workers = 0);

// "name: PASS/FAIL [detail]" lines plus a summary line.
std::string checks_to_text(const std::vector<CheckResult>& checks);

int count_failures(const std::vector<CheckResult>& checks);

}  // namespace csf
