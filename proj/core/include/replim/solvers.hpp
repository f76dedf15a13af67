#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "replim/problem.hpp"

namespace replim {

// Outputs producible from the inputs present at one reducer. For HD1,
// Triangle and Join an output appears only when its whole provenance set
// is present. For GroupBy an output appears as soon as one tuple of the
// group is present and carries the sum of present B-values.
struct LocalSolveResult {
    std::vector<OutputId> outputs;                    // sorted, unique
    std::map<std::uint64_t, std::uint64_t> group_sums;  // GroupBy only: a -> sum
    bool operator==(const LocalSolveResult&) const = default;
};

// The b strings at Hamming distance 1 from w, in bit-index order.
std::vector<std::uint64_t> hd1_neighbors(std::uint64_t w, int b);

// `inputs` must be canonical and within the problem universe; they need
// not be sorted.
LocalSolveResult local_solve(const Problem& problem,
                             const std::vector<InputId>& inputs);

}  // namespace replim
