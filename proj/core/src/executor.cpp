#include "replim/executor.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

namespace replim {

namespace {

// splitmix64; the counter keyed by (seed, rank) makes draws order-free
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Instance generate_instance(const Problem& problem, double x, std::uint64_t seed,
                           std::uint64_t cap) {
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("generate_instance: x must be in [0, 1]");
    std::uint64_t count = input_count(problem);
    if (count > cap)
        throw UniverseTooLarge("universe too large for enumeration: " +
                               std::to_string(count) + " inputs");
    Instance instance{problem, {}};
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        std::uint64_t u = mix(mix(seed) ^ rank);
        double draw = static_cast<double>(u >> 11) * 0x1.0p-53;
        if (draw < x) instance.present.push_back(input_at_rank(problem, rank));
    }
    return instance;
}

Instance make_instance(const Problem& problem, std::vector<InputId> present) {
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    return Instance{problem, std::move(present)};
}

RunReport run(const Problem& problem, const MappingSchema& schema,
              const Instance& instance) {
    if (schema.kind != problem.kind)
        throw std::invalid_argument("schema '" + schema.spec +
                                    "' does not apply to problem " +
                                    format_problem(problem));
    RunReport report;

    // map phase
    std::unordered_map<ReducerKey, std::vector<InputId>, ReducerKeyHash> groups;
    std::vector<ReducerKey> keys;
    for (const InputId& in : instance.present) {
        keys.clear();
        schema.map(in, keys);
        for (const ReducerKey& k : keys) groups[k].push_back(in);
        report.communication_cost += keys.size();
    }

    // reduce phase
    std::uint64_t emissions = 0;
    std::map<std::uint64_t, std::set<std::uint64_t>> group_tuples;  // GroupBy dedup
    for (const auto& [key, inputs] : groups) {
        report.reducer_loads[key] = inputs.size();
        LocalSolveResult local = local_solve(problem, inputs);
        for (const OutputId& out : local.outputs) {
            if (schema.responsible && !schema.responsible(key, out)) continue;
            report.outputs.push_back(out);
            ++emissions;
        }
        if (problem.kind == ProblemKind::GroupBy) {
            for (const InputId& in : inputs) group_tuples[in.a].insert(in.b);
        }
    }
    std::sort(report.outputs.begin(), report.outputs.end());
    report.outputs.erase(std::unique(report.outputs.begin(), report.outputs.end()),
                         report.outputs.end());
    report.duplicates_suppressed = emissions - report.outputs.size();

    if (problem.kind == ProblemKind::GroupBy) {
        for (const auto& [a, bs] : group_tuples) {
            std::uint64_t sum = 0;
            for (std::uint64_t b : bs) sum += b;
            report.group_sums[a] = sum;
        }
    }

    report.expected_cost =
        schema_rate(problem, schema).value() * static_cast<double>(instance.present.size());
    return report;
}

void write_instance(std::ostream& out, const Instance& instance) {
    for (const InputId& in : instance.present)
        out << format_input(instance.problem, in) << '\n';
}

Instance read_instance(const Problem& problem, std::istream& in) {
    std::vector<InputId> present;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        present.push_back(parse_input(problem, line));
    }
    return make_instance(problem, std::move(present));
}

}  // namespace replim
