#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidaug::acceptance {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// The full acceptance suite; trials is the per-identity random-point count.
std::vector<CriterionResult> run_all(uint64_t rng_seed, int trials);

}  // namespace braidaug::acceptance
