#include "replim/oracle.hpp"

#include <algorithm>

namespace replim {

namespace {

struct CoverSearch {
    const Problem& problem;
    std::vector<InputId> inputs;
    std::vector<std::vector<std::uint64_t>> prov_ranks;  // per output
    std::vector<std::vector<std::uint32_t>> incident;    // input rank -> output idx
    std::uint64_t max_degree = 0;

    std::uint64_t budget;
    bool prune;
    std::uint64_t visited = 0;

    std::vector<char> chosen;
    std::vector<std::uint64_t> picks;
    std::uint64_t current = 0;
    std::uint64_t best = 0;
    std::vector<std::uint64_t> best_picks;

    CoverSearch(const Problem& p, std::uint64_t budget_, bool prune_)
        : problem(p), budget(budget_), prune(prune_) {
        inputs = enumerate_inputs(p);
        std::vector<OutputId> outputs = enumerate_outputs(p);
        prov_ranks.reserve(outputs.size());
        incident.resize(inputs.size());
        for (std::uint32_t o = 0; o < outputs.size(); ++o) {
            std::vector<std::uint64_t> ranks;
            for (const InputId& in : provenance(p, outputs[o]))
                ranks.push_back(input_rank(p, in));
            for (std::uint64_t r : ranks) incident[r].push_back(o);
            prov_ranks.push_back(std::move(ranks));
        }
        for (const auto& inc : incident)
            max_degree = std::max<std::uint64_t>(max_degree, inc.size());
        chosen.assign(inputs.size(), 0);
    }

    std::uint64_t add(std::uint64_t rank) {
        chosen[rank] = 1;
        std::uint64_t gained = 0;
        for (std::uint32_t o : incident[rank]) {
            bool complete = true;
            for (std::uint64_t r : prov_ranks[o]) complete = complete && chosen[r];
            if (complete) ++gained;
        }
        current += gained;
        picks.push_back(rank);
        return gained;
    }

    void remove(std::uint64_t rank, std::uint64_t gained) {
        chosen[rank] = 0;
        current -= gained;
        picks.pop_back();
    }

    void dfs(std::uint64_t start, std::uint64_t slots) {
        if (++visited > budget)
            throw BudgetExceeded("oracle search budget exceeded (" +
                                 std::to_string(budget) + " visits)");
        if (current > best || best_picks.empty()) {
            best = current;
            best_picks = picks;
        }
        if (slots == 0) return;
        // each further pick can complete at most max_degree outputs
        if (prune && current + slots * max_degree <= best) return;
        for (std::uint64_t i = start; i + slots <= inputs.size(); ++i) {
            std::uint64_t gained = add(i);
            dfs(i + 1, slots - 1);
            remove(i, gained);
        }
    }
};

}  // namespace

CoverSearchResult max_coverable_outputs(const Problem& problem, std::uint64_t q,
                                        std::uint64_t budget, bool prune) {
    CoverSearch search(problem, budget, prune);
    std::uint64_t slots = std::min<std::uint64_t>(q, search.inputs.size());
    search.dfs(0, slots);
    CoverSearchResult result;
    result.best_count = search.best;
    result.visited = search.visited;
    for (std::uint64_t r : search.best_picks) result.witness.push_back(search.inputs[r]);
    return result;
}

LocalSolveResult solve_instance(const Problem& problem,
                                const std::vector<InputId>& present) {
    return local_solve(problem, present);
}

}  // namespace replim
