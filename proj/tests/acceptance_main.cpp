// Acceptance gate: runs the full verification suite and prints one line per
// criterion. Exits nonzero if any criterion fails.

#include <cstdio>

#include "qst/checks.hpp"

int main() {
    auto reports = qst::acceptance_suite({}, 12345);
    bool ok = true;
    int n = 0;
    for (const auto& r : reports) {
        ++n;
        std::printf("criterion %2d %-4s %-26s %8.1f ms  %s\n", n,
                    r.passed() ? "PASS" : "FAIL", r.check_id.c_str(), r.wall_ms,
                    r.detail.c_str());
        ok = ok && r.passed();
    }
    std::printf("%s\n", ok ? "acceptance: all criteria pass"
                           : "acceptance: FAILURES present");
    return ok ? 0 : 1;
}
