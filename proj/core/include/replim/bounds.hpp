#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "replim/problem.hpp"

namespace replim {

// A computed bound or estimate. `exact` is false for Stirling-style and
// asymptotic estimates, which must never feed pass/fail decisions.
struct BoundResult {
    double value = 0.0;
    bool exact = true;
    std::string formula;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Max outputs coverable by one HD1 reducer holding q inputs: (q/2) log2 q.
BoundResult hd1_cover_bound(std::uint64_t q);

// Replication-rate floor for HD1 with strings of length b: b / log2 q.
BoundResult hd1_lower_bound(int b, std::uint64_t q);

// Max triangles coverable with q edges: (sqrt(2)/3) q^(3/2).
BoundResult triangle_cover_bound(std::uint64_t q);

// Replication-rate floor for triangle finding on n nodes: n / sqrt(2q).
BoundResult triangle_lower_bound(int n, std::uint64_t q);

// Exact input/output universe sizes; matches the enumerators.
struct UniverseCounts {
    std::uint64_t inputs = 0;
    std::uint64_t outputs = 0;
};
UniverseCounts universe_counts(const Problem& problem);

// The generic rate floor q * |O| / (g(q) * |I|), valid whenever g(q)/q is
// nondecreasing in q.
BoundResult generic_lower_bound(double num_inputs, double num_outputs,
                                const std::function<double(double)>& cover_bound,
                                double q);

// Stirling estimate of the most populous weight cell: k^d 2^b / (b^{d/2} (2pi/d)^{d/2}).
BoundResult weight_cell_estimate(int b, int d, int k);

// Stirling estimate of the central binomial C(n, n/2): 2^n / sqrt(2 pi n).
BoundResult stirling_central(int n);

// Constant-free asymptotic shape q^{1-m/a} n^{m-a} for a multiway join of
// m variables over one relation of arity a.
BoundResult multiway_join_bound_estimate(double q, double n, int m, int a);

// Rate floor for a SchemaReport given the observed max load. Join and
// GroupBy have no nontrivial bound in the model; they get the trivial 1.
double rate_lower_bound(const Problem& problem, std::uint64_t q);

}  // namespace replim
