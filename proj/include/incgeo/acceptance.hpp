#ifndef INCGEO_ACCEPTANCE_HPP
#define INCGEO_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace incgeo {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // measured numbers, or the failing witness
};

struct AcceptanceOptions {
    // Caps the lattice dimensions exercised by the lattice criteria
    // (the full list is 5, 10, 17).
    std::size_t max_d = 17;
};

// Scope -> criterion ids: all -> 1..9, lattice -> {1,2,3}, sampler -> {4},
// reduction -> {5,6}, grid -> {7,8}, protocol -> {9}.
std::vector<int> criteria_for_scope(const std::string& scope);

// Deterministic: each criterion fixes its own seeds internally.
CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});

std::vector<CriterionResult> run_acceptance(const std::string& scope,
                                            const AcceptanceOptions& opts = {});

}  // namespace incgeo

#endif
