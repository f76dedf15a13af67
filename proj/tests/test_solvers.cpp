#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "replim/oracle.hpp"
#include "replim/solvers.hpp"

using namespace replim;

TEST_CASE("hd1_neighbors flips each bit once, in bit-index order") {
    CHECK(hd1_neighbors(0b000, 3) == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(hd1_neighbors(0b101, 3) == std::vector<std::uint64_t>{0b100, 0b111, 0b001});
    for (std::uint64_t w = 0; w < 32; ++w) {
        auto nbrs = hd1_neighbors(w, 5);
        CHECK(nbrs.size() == 5);
        for (std::uint64_t v : nbrs) CHECK(std::popcount(v ^ w) == 1);
    }
}

TEST_CASE("hd1_neighbors is symmetric") {
    for (std::uint64_t w = 0; w < 64; ++w) {
        for (std::uint64_t v : hd1_neighbors(w, 6)) {
            auto back = hd1_neighbors(v, 6);
            CHECK(std::find(back.begin(), back.end(), w) != back.end());
        }
    }
}

TEST_CASE("local_solve hd1 finds exactly the adjacent pairs present") {
    Problem p = Problem::hd1(3);
    auto result = local_solve(p, {{0, 0b000, 0}, {0, 0b001, 0}, {0, 0b011, 0}});
    CHECK(result.outputs == std::vector<OutputId>{{0b000, 0, 0}, {0b001, 1, 0}});
}

TEST_CASE("local_solve triangle needs all three edges") {
    Problem p = Problem::triangle(4);
    auto result = local_solve(p, {{0, 0, 1}, {0, 0, 2}, {0, 1, 2}, {0, 0, 3}});
    CHECK(result.outputs == std::vector<OutputId>{{0, 1, 2}});
}

TEST_CASE("local_solve join matches on the shared B value") {
    Problem p = Problem::join(2, 3, 4);
    auto result = local_solve(p, {{0, 0, 1}, {1, 1, 2}, {1, 1, 3}});
    CHECK(result.outputs == std::vector<OutputId>{{0, 1, 2}, {0, 1, 3}});
}

TEST_CASE("local_solve groupby sums present B values per group") {
    Problem p = Problem::group_by(3, 4);
    auto result = local_solve(p, {{0, 0, 1}, {0, 0, 3}, {0, 2, 2}});
    CHECK(result.outputs == std::vector<OutputId>{{0, 0, 0}, {2, 0, 0}});
    CHECK(result.group_sums.at(0) == 4);
    CHECK(result.group_sums.at(2) == 2);
}

TEST_CASE("local_solve on the full universe reproduces every output") {
    for (const Problem& p : {Problem::hd1(4), Problem::triangle(6),
                             Problem::join(2, 3, 3)}) {
        auto result = local_solve(p, enumerate_inputs(p));
        CHECK(result.outputs == enumerate_outputs(p));
    }
    Problem gb = Problem::group_by(3, 4);
    auto result = local_solve(gb, enumerate_inputs(gb));
    CHECK(result.outputs.size() == 3);
    for (const auto& [a, sum] : result.group_sums) CHECK(sum == 0 + 1 + 2 + 3);
}

TEST_CASE("local_solve is monotone under adding inputs") {
    std::mt19937_64 rng(7);
    for (const Problem& p : {Problem::hd1(4), Problem::triangle(6),
                             Problem::join(2, 3, 3)}) {
        auto universe = enumerate_inputs(p);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<InputId> small, large;
            for (const InputId& in : universe) {
                bool in_small = rng() % 4 == 0;
                bool in_large = in_small || rng() % 2 == 0;
                if (in_small) small.push_back(in);
                if (in_large) large.push_back(in);
            }
            auto a = local_solve(p, small).outputs;
            auto b = local_solve(p, large).outputs;
            CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
    }
}

TEST_CASE("local_solve rejects inputs outside the universe") {
    CHECK_THROWS_AS(local_solve(Problem::hd1(3), {{0, 8, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(local_solve(Problem::triangle(4), {{0, 2, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(local_solve(Problem::join(2, 3, 4), {{0, 2, 0}}),
                    std::invalid_argument);
}
