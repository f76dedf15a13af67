#include "replim/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace replim {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);  // exact: product of i+1 consecutive ints
    }
    return result;
}

BoundResult hd1_cover_bound(std::uint64_t q) {
    if (q < 1) throw std::invalid_argument("hd1_cover_bound: q must be >= 1");
    double qd = static_cast<double>(q);
    return {qd / 2.0 * std::log2(qd), true, "(q/2)log2(q)"};
}

BoundResult hd1_lower_bound(int b, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("hd1_lower_bound: q must be >= 2");
    return {static_cast<double>(b) / std::log2(static_cast<double>(q)), true,
            "b/log2(q)"};
}

BoundResult triangle_cover_bound(std::uint64_t q) {
    if (q < 1) throw std::invalid_argument("triangle_cover_bound: q must be >= 1");
    double qd = static_cast<double>(q);
    return {std::numbers::sqrt2 / 3.0 * std::pow(qd, 1.5), true, "(sqrt(2)/3)q^(3/2)"};
}

BoundResult triangle_lower_bound(int n, std::uint64_t q) {
    if (n < 3 || q < 1)
        throw std::invalid_argument("triangle_lower_bound: need n >= 3, q >= 1");
    return {static_cast<double>(n) / std::sqrt(2.0 * static_cast<double>(q)), true,
            "n/sqrt(2q)"};
}

UniverseCounts universe_counts(const Problem& p) {
    return {input_count(p), output_count(p)};
}

BoundResult generic_lower_bound(double num_inputs, double num_outputs,
                                const std::function<double(double)>& cover_bound,
                                double q) {
    double g = cover_bound(q);
    if (g <= 0.0) throw std::invalid_argument("generic_lower_bound: g(q) must be > 0");
    return {q * num_outputs / (g * num_inputs), true, "q|O|/(g(q)|I|)"};
}

BoundResult weight_cell_estimate(int b, int d, int k) {
    if (d < 1 || b % d != 0) throw std::invalid_argument("weight_cell_estimate: d must divide b");
    int piece = b / d;
    if (k < 1 || piece % k != 0 || piece < k)
        throw std::invalid_argument("weight_cell_estimate: k must divide b/d");
    double value = std::pow(static_cast<double>(k), d) *
                   std::pow(2.0, static_cast<double>(b)) /
                   (std::pow(static_cast<double>(b), d / 2.0) *
                    std::pow(2.0 * std::numbers::pi / d, d / 2.0));
    return {value, false, "k^d 2^b / (b^(d/2) (2pi/d)^(d/2))"};
}

BoundResult stirling_central(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("stirling_central: n must be even");
    double value = std::pow(2.0, static_cast<double>(n)) /
                   std::sqrt(2.0 * std::numbers::pi * static_cast<double>(n));
    return {value, false, "2^n/sqrt(2 pi n)"};
}

BoundResult multiway_join_bound_estimate(double q, double n, int m, int a) {
    if (a < 1 || m < a)
        throw std::invalid_argument("multiway_join_bound_estimate: need a >= 1, m >= a");
    double value = std::pow(q, 1.0 - static_cast<double>(m) / a) *
                   std::pow(n, static_cast<double>(m - a));
    return {value, false, "q^(1-m/a) n^(m-a)"};
}

double rate_lower_bound(const Problem& p, std::uint64_t q) {
    switch (p.kind) {
        case ProblemKind::HD1:
            return q >= 2 ? hd1_lower_bound(p.b, q).value : 0.0;
        case ProblemKind::Triangle:
            return triangle_lower_bound(p.n, q).value;
        case ProblemKind::Join:
        case ProblemKind::GroupBy:
            return 1.0;
    }
    return 1.0;
}

}  // namespace replim
