#include <unordered_map>

#include "doctest.h"
#include "replim/bounds.hpp"
#include "replim/oracle.hpp"
#include "replim/schemas.hpp"

using namespace replim;

TEST_CASE("max cover on the 3-cube with 4 inputs is a square") {
    CoverSearchResult result = max_coverable_outputs(Problem::hd1(3), 4);
    CHECK(result.best_count == 4);
    CHECK(result.witness.size() == 4);
    CHECK(local_solve(Problem::hd1(3), result.witness).outputs.size() == 4);
}

TEST_CASE("max cover small cases") {
    CHECK(max_coverable_outputs(Problem::hd1(2), 2).best_count == 1);
    CHECK(max_coverable_outputs(Problem::hd1(2), 1).best_count == 0);
    CoverSearchResult tri = max_coverable_outputs(Problem::triangle(4), 3);
    CHECK(tri.best_count == 1);
    CHECK(local_solve(Problem::triangle(4), tri.witness).outputs.size() == 1);
}

TEST_CASE("witness always reproduces best_count") {
    for (std::uint64_t q = 1; q <= 6; ++q) {
        for (const Problem& p : {Problem::hd1(3), Problem::triangle(5)}) {
            CoverSearchResult result = max_coverable_outputs(p, q);
            CHECK(result.witness.size() <= q);
            CHECK(local_solve(p, result.witness).outputs.size() == result.best_count);
        }
    }
}

TEST_CASE("pruned search matches the unpruned search") {
    for (const Problem& p : {Problem::hd1(3), Problem::hd1(4), Problem::triangle(5)}) {
        for (std::uint64_t q : {2, 4, 6}) {
            CoverSearchResult pruned = max_coverable_outputs(p, q);
            CoverSearchResult plain =
                max_coverable_outputs(p, q, kDefaultSearchBudget, false);
            CHECK(pruned.best_count == plain.best_count);
            CHECK(pruned.visited <= plain.visited);
        }
    }
}

TEST_CASE("best count is nondecreasing in q") {
    std::uint64_t prev = 0;
    for (std::uint64_t q = 1; q <= 10; ++q) {
        std::uint64_t best = max_coverable_outputs(Problem::hd1(3), q).best_count;
        CHECK(best >= prev);
        prev = best;
    }
}

TEST_CASE("cover bounds dominate the brute-force maximum") {
    for (int b : {2, 3, 4}) {
        Problem p = Problem::hd1(b);
        std::uint64_t q_top = std::min<std::uint64_t>(8, input_count(p));
        for (std::uint64_t q = 1; q <= q_top; ++q)
            CHECK(static_cast<double>(max_coverable_outputs(p, q).best_count) <=
                  hd1_cover_bound(q).value + 1e-9);
    }
    for (int n : {4, 5, 6}) {
        Problem p = Problem::triangle(n);
        for (std::uint64_t q = 1; q <= 8; ++q)
            CHECK(static_cast<double>(max_coverable_outputs(p, q).best_count) <=
                  triangle_cover_bound(q).value + 1e-9);
    }
}

TEST_CASE("budget exhaustion raises") {
    CHECK_THROWS_AS(max_coverable_outputs(Problem::hd1(4), 8, 100), BudgetExceeded);
}

TEST_CASE("per-reducer cover audit for hd1 schemas at b <= 4") {
    for (int b : {2, 3, 4}) {
        Problem p = Problem::hd1(b);
        std::vector<MappingSchema> schemas = {hd1_pairwise(b), hd1_single(b)};
        if (b % 2 == 0) {
            schemas.push_back(hd1_splitting(b, 2));
            schemas.push_back(hd1_weight(b, 2, b / 2));
        }
        for (const MappingSchema& s : schemas) {
            std::unordered_map<ReducerKey, std::vector<InputId>, ReducerKeyHash> sets;
            std::vector<ReducerKey> keys;
            for (const InputId& in : enumerate_inputs(p)) {
                keys.clear();
                s.map(in, keys);
                for (const ReducerKey& k : keys) sets[k].push_back(in);
            }
            for (const auto& [key, assigned] : sets) {
                double covered =
                    static_cast<double>(local_solve(p, assigned).outputs.size());
                CHECK(covered <= hd1_cover_bound(assigned.size()).value + 1e-9);
            }
        }
    }
}

TEST_CASE("solve_instance basics") {
    Problem p = Problem::hd1(3);
    CHECK(solve_instance(p, enumerate_inputs(p)).outputs.size() == 12);
    CHECK(solve_instance(p, {}).outputs.empty());
    Problem tri = Problem::triangle(3);
    auto result = solve_instance(tri, {{0, 0, 1}, {0, 0, 2}, {0, 1, 2}});
    CHECK(result.outputs == std::vector<OutputId>{{0, 1, 2}});
}
