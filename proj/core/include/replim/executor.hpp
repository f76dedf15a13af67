#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "replim/schema.hpp"
#include "replim/solvers.hpp"

namespace replim {

// The subset of the input universe actually present.
struct Instance {
    Problem problem;
    std::vector<InputId> present;  // sorted, unique
};

// One simulated map-reduce round.
struct RunReport {
    std::vector<OutputId> outputs;                      // sorted, unique
    std::map<std::uint64_t, std::uint64_t> group_sums;  // GroupBy only
    std::uint64_t communication_cost = 0;   // (reducer, input) deliveries
    std::map<ReducerKey, std::uint64_t> reducer_loads;  // present inputs per key
    double expected_cost = 0.0;             // schema rate x |present|
    std::uint64_t duplicates_suppressed = 0;
};

// Bernoulli(x) draw per universe input, keyed by (seed, input rank) with a
// counter-based generator, so the result is independent of traversal order.
Instance generate_instance(const Problem& problem, double x, std::uint64_t seed,
                           std::uint64_t cap = kDefaultUniverseCap);

Instance make_instance(const Problem& problem, std::vector<InputId> present);

// Map present inputs per schema, group by reducer key, run local solvers,
// deduplicate, and account communication.
RunReport run(const Problem& problem, const MappingSchema& schema,
              const Instance& instance);

// Newline-delimited canonical input encodings.
void write_instance(std::ostream& out, const Instance& instance);
Instance read_instance(const Problem& problem, std::istream& in);

}  // namespace replim
