#include <cmath>
#include <sstream>

#include "doctest.h"
#include "replim/executor.hpp"
#include "replim/oracle.hpp"
#include "replim/schemas.hpp"

using namespace replim;
using doctest::Approx;

TEST_CASE("generate_instance endpoints") {
    Problem p = Problem::hd1(6);
    CHECK(generate_instance(p, 1.0, 42).present.size() == 64);
    CHECK(generate_instance(p, 0.0, 42).present.empty());
    CHECK_THROWS_AS(generate_instance(p, 1.5, 0), std::invalid_argument);
}

TEST_CASE("generate_instance is reproducible and seed-sensitive") {
    Problem p = Problem::triangle(12);
    Instance a = generate_instance(p, 0.4, 9);
    Instance b = generate_instance(p, 0.4, 9);
    Instance c = generate_instance(p, 0.4, 10);
    CHECK(a.present == b.present);
    CHECK(a.present != c.present);
}

TEST_CASE("generate_instance hd1 b=16 pinned draw") {
    Instance inst = generate_instance(Problem::hd1(16), 0.5, 20240817);
    // binomial concentration: within 4 sigma of 32768 (sigma = 128)
    auto count = static_cast<double>(inst.present.size());
    CHECK(std::abs(count - 32768.0) <= 4.0 * 128.0);
    CHECK(inst.present.size() == 32749);  // golden value for this seed
}

TEST_CASE("run splitting on the full hd1 universe") {
    Problem p = Problem::hd1(4);
    Instance inst = make_instance(p, enumerate_inputs(p));
    RunReport report = run(p, hd1_splitting(4, 2), inst);
    CHECK(report.outputs.size() == 32);
    CHECK(report.communication_cost == 32);  // r=2 over 16 inputs
    CHECK(report.expected_cost == Approx(32.0));
    CHECK(report.duplicates_suppressed == 0);  // splitting covers each pair once
}

TEST_CASE("run triangle partition on full K6") {
    Problem p = Problem::triangle(6);
    Instance inst = make_instance(p, enumerate_inputs(p));
    RunReport report = run(p, triangle_partition(6, 3), inst);
    CHECK(report.outputs.size() == 20);
    CHECK(report.communication_cost == 45);  // 15 edges, replication 3
    CHECK(report.duplicates_suppressed == 0);  // responsibility rule
}

TEST_CASE("run on an empty instance") {
    Problem p = Problem::hd1(4);
    RunReport report = run(p, hd1_splitting(4, 2), Instance{p, {}});
    CHECK(report.outputs.empty());
    CHECK(report.communication_cost == 0);
}

TEST_CASE("run rejects mismatched schema") {
    Problem p = Problem::triangle(5);
    CHECK_THROWS_AS(run(p, hd1_single(4), Instance{p, {}}), std::invalid_argument);
}

TEST_CASE("executor equals the reference solver on random instances") {
    struct Case {
        Problem problem;
        MappingSchema schema;
    };
    std::vector<Case> cases;
    cases.push_back({Problem::hd1(6), hd1_splitting(6, 2)});
    cases.push_back({Problem::hd1(6), hd1_splitting(6, 3)});
    cases.push_back({Problem::hd1(6), hd1_pairwise(6)});
    cases.push_back({Problem::hd1(8), hd1_weight(8, 2, 2)});
    cases.push_back({Problem::hd1(8), hd1_weight(8, 4, 1)});
    cases.push_back({Problem::triangle(9), triangle_partition(9, 3)});
    cases.push_back({Problem::triangle(7), triangle_partition(7, 2)});
    cases.push_back({Problem::join(3, 4, 3), join_hash_b(Problem::join(3, 4, 3), 2)});
    cases.push_back({Problem::group_by(4, 5), groupby_hash_a(Problem::group_by(4, 5), 2)});
    cases.push_back({Problem::hd1(5), hd1_single(5)});

    int runs = 0;
    for (const Case& c : cases) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Instance inst = generate_instance(c.problem, 0.45, seed * 977 + 13);
            RunReport report = run(c.problem, c.schema, inst);
            LocalSolveResult reference = solve_instance(c.problem, inst.present);
            CHECK(report.outputs == reference.outputs);
            CHECK(report.group_sums == reference.group_sums);

            std::uint64_t expected_cost = 0;
            for (const InputId& in : inst.present)
                expected_cost += replication_of(c.schema, in);
            CHECK(report.communication_cost == expected_cost);
            ++runs;
        }
    }
    CHECK(runs == 100);
}

TEST_CASE("mean communication cost tracks r * x * universe") {
    Problem p = Problem::hd1(10);
    MappingSchema s = hd1_splitting(10, 2);
    double x = 0.3;
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Instance inst = generate_instance(p, x, seed);
        total += static_cast<double>(run(p, s, inst).communication_cost);
    }
    double mean = total / 50.0;
    double expected = 2.0 * x * 1024.0;
    CHECK(std::abs(mean - expected) / expected < 0.05);
}

TEST_CASE("determinism: identical runs give identical reports") {
    Problem p = Problem::triangle(8);
    MappingSchema s = triangle_partition(8, 2);
    Instance inst = generate_instance(p, 0.6, 3);
    RunReport a = run(p, s, inst);
    RunReport b = run(p, s, inst);
    CHECK(a.outputs == b.outputs);
    CHECK(a.communication_cost == b.communication_cost);
    CHECK(a.reducer_loads == b.reducer_loads);
}

TEST_CASE("weight schema double coverage is deduplicated") {
    Problem p = Problem::hd1(8);
    Instance inst = make_instance(p, enumerate_inputs(p));
    RunReport report = run(p, hd1_weight(8, 2, 2), inst);
    CHECK(report.outputs.size() == 1024);  // every output exactly once
    CHECK(report.duplicates_suppressed > 0);  // shared-border pairs seen twice
}

TEST_CASE("instance files round-trip") {
    for (const Problem& p : {Problem::hd1(5), Problem::triangle(8),
                             Problem::join(2, 3, 4), Problem::group_by(3, 4)}) {
        Instance inst = generate_instance(p, 0.5, 77);
        std::stringstream stream;
        write_instance(stream, inst);
        Instance parsed = read_instance(p, stream);
        CHECK(parsed.present == inst.present);
    }
}
