#include "replim/schemas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <map>
#include <sstream>

#include "replim/bounds.hpp"

namespace replim {

namespace {

std::map<std::string, std::uint64_t> parse_params(const std::string& text,
                                                  const std::string& spec) {
    std::map<std::string, std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad parameter '" + item + "' in '" + spec + "'");
        std::string val = item.substr(eq + 1);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            throw ParseError("bad number '" + val + "' in '" + spec + "'");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

std::uint64_t require_param(const std::map<std::string, std::uint64_t>& params,
                            const std::string& key, const std::string& spec) {
    auto it = params.find(key);
    if (it == params.end())
        throw ParseError("missing parameter '" + key + "' in '" + spec + "'");
    return it->second;
}

std::array<std::uint16_t, 3> unpack_triple(std::uint64_t a) {
    return {static_cast<std::uint16_t>(a & 0xffff),
            static_cast<std::uint16_t>((a >> 16) & 0xffff),
            static_cast<std::uint16_t>((a >> 32) & 0xffff)};
}

std::uint64_t pack_triple(std::array<std::uint16_t, 3> g) {
    std::sort(g.begin(), g.end());
    return static_cast<std::uint64_t>(g[0]) | (static_cast<std::uint64_t>(g[1]) << 16) |
           (static_cast<std::uint64_t>(g[2]) << 32);
}

}  // namespace

MappingSchema hd1_pairwise(int b) {
    Problem::hd1(b);  // validates b
    MappingSchema s;
    s.spec = "pairwise";
    s.kind = ProblemKind::HD1;
    s.max_load = 2;
    s.declared_rate = static_cast<double>(b);
    s.declared_rate_exact = true;
    s.map = [b](const InputId& in, std::vector<ReducerKey>& keys) {
        for (int i = 0; i < b; ++i) {
            std::uint64_t bit = std::uint64_t{1} << i;
            keys.push_back({ReducerKey::Tag::Pair, in.a & ~bit,
                            static_cast<std::uint64_t>(i)});
        }
    };
    s.responsible = [](const ReducerKey& key, const OutputId& out) {
        return key.a == out.a && key.b == out.b;
    };
    return s;
}

MappingSchema hd1_single(int b) {
    Problem::hd1(b);
    MappingSchema s;
    s.spec = "single";
    s.kind = ProblemKind::HD1;
    s.max_load = std::uint64_t{1} << b;
    s.declared_rate = 1.0;
    s.declared_rate_exact = true;
    s.map = [](const InputId&, std::vector<ReducerKey>& keys) {
        keys.push_back({ReducerKey::Tag::Single, 0, 0});
    };
    return s;
}

MappingSchema hd1_splitting(int b, int r) {
    Problem::hd1(b);
    if (r < 2) throw std::invalid_argument("splitting: r must be >= 2");
    if (b % r != 0) throw std::invalid_argument("splitting: r must divide b");
    int piece_len = b / r;
    MappingSchema s;
    s.spec = "splitting:r=" + std::to_string(r);
    s.kind = ProblemKind::HD1;
    s.max_load = std::uint64_t{1} << piece_len;
    s.declared_rate = static_cast<double>(r);
    s.declared_rate_exact = true;
    s.map = [r, piece_len](const InputId& in, std::vector<ReducerKey>& keys) {
        for (int i = 0; i < r; ++i) {
            std::uint64_t low = in.a & ((std::uint64_t{1} << (i * piece_len)) - 1);
            std::uint64_t high = in.a >> ((i + 1) * piece_len);
            std::uint64_t residual = low | (high << (i * piece_len));
            keys.push_back({ReducerKey::Tag::Group, static_cast<std::uint64_t>(i),
                            residual});
        }
    };
    return s;
}

namespace {

struct WeightLayout {
    int b, d, k;
    int piece_len;    // b/d
    int groups;       // piece_len/k, per dimension

    int group_of(int weight) const { return std::min(weight / k, groups - 1); }

    int piece_weight(std::uint64_t w, int i) const {
        std::uint64_t mask = (std::uint64_t{1} << piece_len) - 1;
        return std::popcount((w >> (i * piece_len)) & mask);
    }
};

// Exact census of the heaviest cell, counting home strings plus replicas
// arriving from the next-higher neighbor in each dimension.
std::uint64_t weight_max_load(const WeightLayout& l) {
    // strings of one piece whose weight falls in group g
    std::vector<std::uint64_t> group_pop(l.groups, 0);
    for (int w = 0; w <= l.piece_len; ++w)
        group_pop[l.group_of(w)] += binomial(l.piece_len, w);

    std::uint64_t best = 0;
    std::vector<int> cell(l.d, 0);
    while (true) {
        std::uint64_t home = 1;
        for (int j = 0; j < l.d; ++j) home *= group_pop[cell[j]];
        std::uint64_t load = home;
        for (int j = 0; j < l.d; ++j) {
            if (cell[j] + 1 >= l.groups) continue;
            // incoming: neighbor strings sitting on group cell[j]+1's lowest weight
            std::uint64_t incoming = binomial(l.piece_len, (cell[j] + 1) * l.k);
            for (int o = 0; o < l.d; ++o)
                if (o != j) incoming *= group_pop[cell[o]];
            load += incoming;
        }
        best = std::max(best, load);
        int j = 0;
        while (j < l.d && ++cell[j] == l.groups) cell[j++] = 0;
        if (j == l.d) break;
    }
    return best;
}

}  // namespace

MappingSchema hd1_weight(int b, int d, int k) {
    Problem::hd1(b);
    if (d < 1 || d > 8 || b % d != 0)
        throw std::invalid_argument("weight: d must divide b (d <= 8)");
    int piece_len = b / d;
    if (k < 1 || piece_len % k != 0)
        throw std::invalid_argument("weight: k must divide b/d");
    WeightLayout layout{b, d, k, piece_len, piece_len / k};

    MappingSchema s;
    s.spec = "weight:d=" + std::to_string(d) + ",k=" + std::to_string(k);
    s.kind = ProblemKind::HD1;
    s.max_load = weight_max_load(layout);
    s.declared_rate = 1.0 + static_cast<double>(d) / k;
    s.declared_rate_exact = false;
    s.map = [layout](const InputId& in, std::vector<ReducerKey>& keys) {
        std::uint64_t home = 0;
        for (int i = 0; i < layout.d; ++i) {
            int g = layout.group_of(layout.piece_weight(in.a, i));
            home |= static_cast<std::uint64_t>(g) << (8 * i);
        }
        keys.push_back({ReducerKey::Tag::WeightCell, home, 0});
        for (int i = 0; i < layout.d; ++i) {
            int weight = layout.piece_weight(in.a, i);
            int g = layout.group_of(weight);
            // border: lowest weight of a group with a lower neighbor
            if (g > 0 && weight == g * layout.k) {
                std::uint64_t cell = home - (std::uint64_t{1} << (8 * i));
                keys.push_back({ReducerKey::Tag::WeightCell, cell, 0});
            }
        }
    };
    return s;
}

MappingSchema triangle_partition(int n, int rho) {
    Problem::triangle(n);
    if (rho < 1 || rho > 1024)
        throw std::invalid_argument("tri: rho must be in [1, 1024]");

    // exact heaviest multiset load from the mod-rho group sizes
    std::vector<std::uint64_t> size(rho, 0);
    for (int v = 0; v < n; ++v) ++size[v % rho];
    auto within = [](std::uint64_t s) { return s * (s > 0 ? s - 1 : 0) / 2; };
    std::uint64_t q = 0;
    for (int x = 0; x < rho; ++x)
        for (int y = x; y < rho; ++y)
            for (int z = y; z < rho; ++z) {
                std::uint64_t load = 0;
                if (x == y && y == z) {
                    load = within(size[x]);
                } else if (x == y) {
                    load = within(size[x]) + size[x] * size[z];
                } else if (y == z) {
                    load = within(size[y]) + size[x] * size[y];
                } else {
                    load = size[x] * size[y] + size[x] * size[z] + size[y] * size[z];
                }
                q = std::max(q, load);
            }

    MappingSchema s;
    s.spec = "tri:rho=" + std::to_string(rho);
    s.kind = ProblemKind::Triangle;
    s.max_load = q;
    s.declared_rate = static_cast<double>(rho);
    s.declared_rate_exact = true;
    s.map = [rho](const InputId& in, std::vector<ReducerKey>& keys) {
        auto gu = static_cast<std::uint16_t>(in.a % rho);
        auto gv = static_cast<std::uint16_t>(in.b % rho);
        for (std::uint16_t t = 0; t < rho; ++t)
            keys.push_back({ReducerKey::Tag::TriTriple, pack_triple({gu, gv, t}), 0});
    };
    s.responsible = [rho](const ReducerKey& key, const OutputId& out) {
        return key.a == pack_triple({static_cast<std::uint16_t>(out.a % rho),
                                     static_cast<std::uint16_t>(out.b % rho),
                                     static_cast<std::uint16_t>(out.c % rho)});
    };
    return s;
}

namespace {

// value -> contiguous range index, ranges of near-equal size
std::uint64_t range_index(std::uint64_t v, std::uint64_t domain, std::uint64_t p) {
    return v * p / domain;
}

std::uint64_t max_range_size(std::uint64_t domain, std::uint64_t p) {
    std::vector<std::uint64_t> counts(p, 0);
    for (std::uint64_t v = 0; v < domain; ++v) ++counts[range_index(v, domain, p)];
    return *std::max_element(counts.begin(), counts.end());
}

}  // namespace

MappingSchema join_hash_b(const Problem& problem, int p) {
    if (problem.kind != ProblemKind::Join)
        throw std::invalid_argument("hashb applies to join problems only");
    if (p < 1 || static_cast<std::uint64_t>(p) > problem.nb)
        throw std::invalid_argument("hashb: p must be in [1, nb]");
    std::uint64_t nb = problem.nb;
    MappingSchema s;
    s.spec = "hashb:p=" + std::to_string(p);
    s.kind = ProblemKind::Join;
    s.max_load = max_range_size(nb, p) * (problem.na + problem.nc);
    s.declared_rate = 1.0;
    s.declared_rate_exact = true;
    s.map = [nb, p](const InputId& in, std::vector<ReducerKey>& keys) {
        std::uint64_t b_value = in.tag == 0 ? in.b : in.a;
        keys.push_back({ReducerKey::Tag::Hash, range_index(b_value, nb, p), 0});
    };
    return s;
}

MappingSchema groupby_hash_a(const Problem& problem, int p) {
    if (problem.kind != ProblemKind::GroupBy)
        throw std::invalid_argument("hasha applies to groupby problems only");
    if (p < 1 || static_cast<std::uint64_t>(p) > problem.na)
        throw std::invalid_argument("hasha: p must be in [1, na]");
    std::uint64_t na = problem.na;
    MappingSchema s;
    s.spec = "hasha:p=" + std::to_string(p);
    s.kind = ProblemKind::GroupBy;
    s.max_load = max_range_size(na, p) * problem.nb;
    s.declared_rate = 1.0;
    s.declared_rate_exact = true;
    s.map = [na, p](const InputId& in, std::vector<ReducerKey>& keys) {
        keys.push_back({ReducerKey::Tag::Hash, range_index(in.a, na, p), 0});
    };
    return s;
}

MappingSchema parse_schema(const Problem& problem, const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    auto params = parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1), spec);
    try {
        if (name == "pairwise") return hd1_pairwise(problem.b);
        if (name == "single") return hd1_single(problem.b);
        if (name == "splitting")
            return hd1_splitting(problem.b,
                                 static_cast<int>(require_param(params, "r", spec)));
        if (name == "weight")
            return hd1_weight(problem.b, static_cast<int>(require_param(params, "d", spec)),
                              static_cast<int>(require_param(params, "k", spec)));
        if (name == "tri")
            return triangle_partition(problem.n,
                                      static_cast<int>(require_param(params, "rho", spec)));
        if (name == "hashb")
            return join_hash_b(problem, static_cast<int>(require_param(params, "p", spec)));
        if (name == "hasha")
            return groupby_hash_a(problem, static_cast<int>(require_param(params, "p", spec)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown schema '" + name + "'");
}

}  // namespace replim
