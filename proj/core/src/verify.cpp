#include <algorithm>
#include <unordered_map>

#include "replim/bounds.hpp"
#include "replim/schema.hpp"

namespace replim {

std::uint64_t replication_of(const MappingSchema& schema, const InputId& input) {
    std::vector<ReducerKey> keys;
    schema.map(input, keys);
    return keys.size();
}

Rational schema_rate(const Problem& problem, const MappingSchema& schema,
                     std::uint64_t cap) {
    std::uint64_t total = 0;
    std::uint64_t count = input_count(problem);
    if (count > cap)
        throw UniverseTooLarge("universe too large for enumeration: " +
                               std::to_string(count) + " inputs");
    std::vector<ReducerKey> keys;
    for (std::uint64_t i = 0; i < count; ++i) {
        keys.clear();
        schema.map(input_at_rank(problem, i), keys);
        total += keys.size();
    }
    return Rational(static_cast<std::int64_t>(total), static_cast<std::int64_t>(count));
}

SchemaReport verify_schema(const Problem& problem, const MappingSchema& schema,
                           std::uint64_t cap) {
    if (schema.kind != problem.kind)
        throw std::invalid_argument("schema '" + schema.spec +
                                    "' does not apply to problem " +
                                    format_problem(problem));
    std::vector<InputId> inputs = enumerate_inputs(problem, cap);

    std::vector<std::vector<ReducerKey>> keys_by_rank(inputs.size());
    std::unordered_map<ReducerKey, std::uint64_t, ReducerKeyHash> loads;
    std::uint64_t total_assignments = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        schema.map(inputs[i], keys_by_rank[i]);
        if (keys_by_rank[i].empty())
            throw std::logic_error("schema '" + schema.spec +
                                   "' maps an input to no reducer");
        for (const ReducerKey& k : keys_by_rank[i]) ++loads[k];
        total_assignments += keys_by_rank[i].size();
    }

    SchemaReport report;
    report.p = loads.size();
    for (const auto& [key, load] : loads)
        report.q_max_observed = std::max(report.q_max_observed, load);
    report.q_declared = schema.max_load;
    report.q_ok = report.q_max_observed <= report.q_declared;
    report.r = Rational(static_cast<std::int64_t>(total_assignments),
                        static_cast<std::int64_t>(inputs.size()));

    // An output is covered iff some key appears in the lists of all of its
    // provenance inputs.
    report.coverage_ok = true;
    std::vector<OutputId> outputs = enumerate_outputs(problem, cap);
    for (const OutputId& out : outputs) {
        std::vector<InputId> prov = provenance(problem, out);
        const auto& first = keys_by_rank[input_rank(problem, prov[0])];
        bool covered = false;
        for (const ReducerKey& candidate : first) {
            bool at_all = true;
            for (std::size_t j = 1; j < prov.size() && at_all; ++j) {
                const auto& other = keys_by_rank[input_rank(problem, prov[j])];
                at_all = std::find(other.begin(), other.end(), candidate) != other.end();
            }
            if (at_all) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.coverage_ok = false;
            break;
        }
    }

    report.lower_bound = rate_lower_bound(problem, report.q_max_observed);
    report.ratio = report.lower_bound > 0.0 ? report.r.value() / report.lower_bound : 0.0;
    return report;
}

}  // namespace replim
