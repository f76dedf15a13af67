#include "replim/solvers.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace replim {

std::vector<std::uint64_t> hd1_neighbors(std::uint64_t w, int b) {
    if (b < 1 || b > 62 || w >= (std::uint64_t{1} << b))
        throw std::invalid_argument("hd1_neighbors: w out of range");
    std::vector<std::uint64_t> out;
    out.reserve(b);
    for (int i = 0; i < b; ++i) out.push_back(w ^ (std::uint64_t{1} << i));
    return out;
}

namespace {

void check_in_universe(const Problem& p, const InputId& in) {
    bool ok = false;
    switch (p.kind) {
        case ProblemKind::HD1:
            ok = in.tag == 0 && in.a < (std::uint64_t{1} << p.b);
            break;
        case ProblemKind::Triangle:
            ok = in.tag == 0 && in.a < in.b && in.b < static_cast<std::uint64_t>(p.n);
            break;
        case ProblemKind::Join:
            ok = in.tag == 0 ? (in.a < p.na && in.b < p.nb)
                             : (in.tag == 1 && in.a < p.nb && in.b < p.nc);
            break;
        case ProblemKind::GroupBy:
            ok = in.tag == 0 && in.a < p.na && in.b < p.nb;
            break;
    }
    if (!ok)
        throw std::invalid_argument("input outside the problem universe: " +
                                    std::to_string(in.a) + "," + std::to_string(in.b));
}

}  // namespace

LocalSolveResult local_solve(const Problem& p, const std::vector<InputId>& raw) {
    std::vector<InputId> inputs = raw;
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
    for (const InputId& in : inputs) check_in_universe(p, in);
    LocalSolveResult result;
    switch (p.kind) {
        case ProblemKind::HD1: {
            std::unordered_set<std::uint64_t> present;
            present.reserve(inputs.size() * 2);
            for (const InputId& in : inputs) present.insert(in.a);
            for (const InputId& in : inputs) {
                // emit from the lower string of the pair only
                for (int i = 0; i < p.b; ++i) {
                    std::uint64_t bit = std::uint64_t{1} << i;
                    if (!(in.a & bit) && present.count(in.a | bit))
                        result.outputs.push_back({in.a, static_cast<std::uint64_t>(i), 0});
                }
            }
            break;
        }
        case ProblemKind::Triangle: {
            std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> adj;
            for (const InputId& in : inputs) {
                adj[in.a].push_back(in.b);
                adj[in.b].push_back(in.a);
            }
            for (auto& [node, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
            for (const InputId& in : inputs) {
                const auto& au = adj[in.a];
                const auto& av = adj[in.b];
                // common neighbors above v close a triangle exactly once
                std::vector<std::uint64_t> common;
                std::set_intersection(au.begin(), au.end(), av.begin(), av.end(),
                                      std::back_inserter(common));
                for (std::uint64_t w : common)
                    if (w > in.b) result.outputs.push_back({in.a, in.b, w});
            }
            break;
        }
        case ProblemKind::Join: {
            std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> r_by_b, s_by_b;
            for (const InputId& in : inputs)
                (in.tag == 0 ? r_by_b[in.b] : s_by_b[in.a]).push_back(in.tag == 0 ? in.a : in.b);
            for (const auto& [b, as] : r_by_b) {
                auto it = s_by_b.find(b);
                if (it == s_by_b.end()) continue;
                for (std::uint64_t a : as)
                    for (std::uint64_t c : it->second) result.outputs.push_back({a, b, c});
            }
            break;
        }
        case ProblemKind::GroupBy: {
            for (const InputId& in : inputs) result.group_sums[in.a] += in.b;
            for (const auto& [a, sum] : result.group_sums)
                result.outputs.push_back({a, 0, 0});
            break;
        }
    }
    std::sort(result.outputs.begin(), result.outputs.end());
    result.outputs.erase(std::unique(result.outputs.begin(), result.outputs.end()),
                         result.outputs.end());
    return result;
}

}  // namespace replim
