// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.
#include <cstdio>

#include "incgeo/acceptance.hpp"

int main() {
    bool all_ok = true;
    for (int id : incgeo::criteria_for_scope("all")) {
        incgeo::CriterionResult r = incgeo::run_criterion(id);
        all_ok = all_ok && r.passed;
        std::printf("%s  criterion %d: %s  [%s]\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
