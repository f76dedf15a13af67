#pragma once

#include <cstdint>
#include <vector>

#include "replim/problem.hpp"
#include "replim/solvers.hpp"

namespace replim {

// Thrown when the exhaustive search exceeds its visit budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoverSearchResult {
    std::uint64_t best_count = 0;
    std::vector<InputId> witness;   // one maximizing subset
    std::uint64_t visited = 0;      // search nodes expanded
};

constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Exact maximum, over all q-subsets of the input universe, of the number
// of outputs whose whole provenance lies in the subset. Branch and bound;
// `prune` can be disabled to cross-check the pruned search.
CoverSearchResult max_coverable_outputs(const Problem& problem, std::uint64_t q,
                                        std::uint64_t budget = kDefaultSearchBudget,
                                        bool prune = true);

// Reference semantics: local_solve over every present input.
LocalSolveResult solve_instance(const Problem& problem,
                                const std::vector<InputId>& present);

}  // namespace replim
