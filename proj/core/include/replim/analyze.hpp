#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "replim/schema.hpp"

namespace replim {

// One row of the replication/parallelism tradeoff table. Rows with
// schema "lower_bound" sample the bound curve itself.
struct TradeoffRow {
    std::string schema;
    std::uint64_t q = 0;
    double log2_q = 0.0;
    std::uint64_t p = 0;
    double r_achieved = 0.0;
    double r_lower_bound = 0.0;
    double ratio = 0.0;
};

struct Analysis {
    std::vector<TradeoffRow> rows;
    std::vector<SchemaReport> reports;  // parallel to the schema specs
    bool all_ok = true;                 // every schema passed coverage and q
};

// Verifies each schema against the problem and appends 32 log-spaced
// bound-curve samples. Rows come out sorted by (schema, q).
Analysis analyze(const Problem& problem, const std::vector<std::string>& schema_specs);

// Fixed header `schema,q,log2_q,p,r_achieved,r_lower_bound,ratio`;
// decimals to 6 places, byte-stable for fixed inputs.
void write_csv(std::ostream& out, const std::vector<TradeoffRow>& rows);

}  // namespace replim
