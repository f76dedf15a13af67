#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "replim/problem.hpp"

namespace replim {

// Exact nonnegative rational, always normalized.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// Identity of one reducer.
struct ReducerKey {
    enum class Tag : std::uint8_t {
        Pair,        // one reducer per output; a = lower string, b = bit index
        Single,      // the lone reducer
        Group,       // splitting: a = group index, b = residual string
        WeightCell,  // a = cell coordinates, 8 bits per dimension
        TriTriple,   // a = sorted group triple, 16 bits per slot
        Hash,        // a = partition index
    };
    Tag tag = Tag::Single;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    auto operator<=>(const ReducerKey&) const = default;
};

struct ReducerKeyHash {
    std::size_t operator()(const ReducerKey& k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k.tag);
        for (std::uint64_t v : {k.a, k.b}) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// A data-independent assignment of every input to a nonempty reducer set.
// `map` appends this input's keys; it must depend only on the input.
// `responsible` (optional) marks the one reducer allowed to emit a given
// output, for duplicate-free emission.
struct MappingSchema {
    std::string spec;                 // canonical CLI spec, e.g. "splitting:r=2"
    ProblemKind kind = ProblemKind::HD1;
    std::uint64_t max_load = 0;       // declared q over the full universe
    std::optional<double> declared_rate;  // analytic replication rate
    bool declared_rate_exact = false;
    std::function<void(const InputId&, std::vector<ReducerKey>&)> map;
    std::function<bool(const ReducerKey&, const OutputId&)> responsible;
};

// Outcome of exhaustive schema verification over the full universe.
struct SchemaReport {
    std::uint64_t p = 0;                // reducers receiving >= 1 input
    std::uint64_t q_max_observed = 0;   // heaviest reducer load
    std::uint64_t q_declared = 0;
    bool q_ok = true;                   // q_max_observed <= q_declared
    Rational r;                         // exact replication rate
    bool coverage_ok = false;
    double lower_bound = 0.0;
    double ratio = 0.0;                 // r / lower_bound
};

// Number of reducers this input is sent to.
std::uint64_t replication_of(const MappingSchema& schema, const InputId& input);

// Full-universe verification: per-reducer loads, exact rate, coverage.
SchemaReport verify_schema(const Problem& problem, const MappingSchema& schema,
                           std::uint64_t cap = kDefaultUniverseCap);

// Exact universe replication rate (sum of per-input replication / |I|).
Rational schema_rate(const Problem& problem, const MappingSchema& schema,
                     std::uint64_t cap = kDefaultUniverseCap);

}  // namespace replim
