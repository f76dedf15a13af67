#include "replim/problem.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace replim {

std::string to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::HD1: return "hd1";
        case ProblemKind::Triangle: return "tri";
        case ProblemKind::Join: return "join";
        case ProblemKind::GroupBy: return "groupby";
    }
    return "?";
}

Problem Problem::hd1(int b) {
    if (b < 1 || b > 62) throw std::invalid_argument("hd1: b must be in [1, 62]");
    Problem p;
    p.kind = ProblemKind::HD1;
    p.b = b;
    return p;
}

Problem Problem::triangle(int n) {
    if (n < 3) throw std::invalid_argument("triangle: n must be >= 3");
    Problem p;
    p.kind = ProblemKind::Triangle;
    p.n = n;
    return p;
}

Problem Problem::join(std::uint64_t na, std::uint64_t nb, std::uint64_t nc) {
    if (na < 1 || nb < 1 || nc < 1)
        throw std::invalid_argument("join: domain sizes must be >= 1");
    Problem p;
    p.kind = ProblemKind::Join;
    p.na = na;
    p.nb = nb;
    p.nc = nc;
    return p;
}

Problem Problem::group_by(std::uint64_t na, std::uint64_t nb) {
    if (na < 1 || nb < 1)
        throw std::invalid_argument("groupby: domain sizes must be >= 1");
    Problem p;
    p.kind = ProblemKind::GroupBy;
    p.na = na;
    p.nb = nb;
    return p;
}

namespace {

// Parses the "key=value,key=value" tail of a spec string.
std::map<std::string, std::uint64_t> parse_params(const std::string& text,
                                                  const std::string& spec) {
    std::map<std::string, std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad parameter '" + item + "' in '" + spec + "'");
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            throw ParseError("bad number '" + val + "' in '" + spec + "'");
        out[key] = v;
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

}  // namespace

Problem parse_problem(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    auto params = parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1), spec);
    try {
        if (kind == "hd1")
            return Problem::hd1(static_cast<int>(require_param(params, "b", spec)));
        if (kind == "tri")
            return Problem::triangle(static_cast<int>(require_param(params, "n", spec)));
        if (kind == "join")
            return Problem::join(require_param(params, "na", spec),
                                 require_param(params, "nb", spec),
                                 require_param(params, "nc", spec));
        if (kind == "groupby")
            return Problem::group_by(require_param(params, "na", spec),
                                     require_param(params, "nb", spec));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown problem kind '" + kind + "'");
}

std::string format_problem(const Problem& p) {
    switch (p.kind) {
        case ProblemKind::HD1: return "hd1:b=" + std::to_string(p.b);
        case ProblemKind::Triangle: return "tri:n=" + std::to_string(p.n);
        case ProblemKind::Join:
            return "join:na=" + std::to_string(p.na) + ",nb=" + std::to_string(p.nb) +
                   ",nc=" + std::to_string(p.nc);
        case ProblemKind::GroupBy:
            return "groupby:na=" + std::to_string(p.na) + ",nb=" + std::to_string(p.nb);
    }
    return "?";
}

std::uint64_t input_count(const Problem& p) {
    switch (p.kind) {
        case ProblemKind::HD1: return std::uint64_t{1} << p.b;
        case ProblemKind::Triangle: {
            std::uint64_t n = static_cast<std::uint64_t>(p.n);
            return n * (n - 1) / 2;
        }
        case ProblemKind::Join: return p.na * p.nb + p.nb * p.nc;
        case ProblemKind::GroupBy: return p.na * p.nb;
    }
    return 0;
}

std::uint64_t output_count(const Problem& p) {
    switch (p.kind) {
        case ProblemKind::HD1:
            // (b/2) * 2^b, always integral as b * 2^(b-1)
            return static_cast<std::uint64_t>(p.b) << (p.b - 1);
        case ProblemKind::Triangle: {
            std::uint64_t n = static_cast<std::uint64_t>(p.n);
            return n * (n - 1) * (n - 2) / 6;
        }
        case ProblemKind::Join: return p.na * p.nb * p.nc;
        case ProblemKind::GroupBy: return p.na;
    }
    return 0;
}

std::uint64_t input_rank(const Problem& p, const InputId& in) {
    switch (p.kind) {
        case ProblemKind::HD1: return in.a;
        case ProblemKind::Triangle: {
            std::uint64_t n = static_cast<std::uint64_t>(p.n);
            std::uint64_t u = in.a, v = in.b;
            // pairs (u, v) with u < v in lex order
            return u * n - u * (u + 1) / 2 + (v - u - 1);
        }
        case ProblemKind::Join:
            return in.tag == 0 ? in.a * p.nb + in.b
                               : p.na * p.nb + in.a * p.nc + in.b;
        case ProblemKind::GroupBy: return in.a * p.nb + in.b;
    }
    return 0;
}

InputId input_at_rank(const Problem& p, std::uint64_t rank) {
    InputId in;
    switch (p.kind) {
        case ProblemKind::HD1:
            in.a = rank;
            return in;
        case ProblemKind::Triangle: {
            std::uint64_t n = static_cast<std::uint64_t>(p.n);
            std::uint64_t u = 0;
            std::uint64_t row = n - 1;
            while (rank >= row) {
                rank -= row;
                --row;
                ++u;
            }
            in.a = u;
            in.b = u + 1 + rank;
            return in;
        }
        case ProblemKind::Join:
            if (rank < p.na * p.nb) {
                in.tag = 0;
                in.a = rank / p.nb;
                in.b = rank % p.nb;
            } else {
                rank -= p.na * p.nb;
                in.tag = 1;
                in.a = rank / p.nc;
                in.b = rank % p.nc;
            }
            return in;
        case ProblemKind::GroupBy:
            in.a = rank / p.nb;
            in.b = rank % p.nb;
            return in;
    }
    return in;
}

std::vector<InputId> enumerate_inputs(const Problem& p, std::uint64_t cap) {
    std::uint64_t count = input_count(p);
    if (count > cap)
        throw UniverseTooLarge("universe too large for enumeration: " +
                               std::to_string(count) + " inputs (cap " +
                               std::to_string(cap) + ")");
    std::vector<InputId> inputs;
    inputs.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) inputs.push_back(input_at_rank(p, i));
    return inputs;
}

std::vector<InputId> provenance(const Problem& p, const OutputId& out) {
    std::vector<InputId> inputs;
    switch (p.kind) {
        case ProblemKind::HD1:
            inputs.push_back({0, out.a, 0});
            inputs.push_back({0, out.a | (std::uint64_t{1} << out.b), 0});
            break;
        case ProblemKind::Triangle:
            inputs.push_back({0, out.a, out.b});
            inputs.push_back({0, out.a, out.c});
            inputs.push_back({0, out.b, out.c});
            break;
        case ProblemKind::Join:
            inputs.push_back({0, out.a, out.b});
            inputs.push_back({1, out.b, out.c});
            break;
        case ProblemKind::GroupBy:
            inputs.reserve(p.nb);
            for (std::uint64_t b = 0; b < p.nb; ++b) inputs.push_back({0, out.a, b});
            break;
    }
    return inputs;
}

std::vector<OutputId> enumerate_outputs(const Problem& p, std::uint64_t cap) {
    std::uint64_t in_count = input_count(p);
    std::uint64_t out_count = output_count(p);
    if (in_count > cap || out_count > cap)
        throw UniverseTooLarge("universe too large for enumeration: " +
                               std::to_string(std::max(in_count, out_count)) +
                               " elements (cap " + std::to_string(cap) + ")");
    std::vector<OutputId> outputs;
    outputs.reserve(out_count);
    switch (p.kind) {
        case ProblemKind::HD1:
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << p.b); ++w)
                for (int i = 0; i < p.b; ++i)
                    if (!(w & (std::uint64_t{1} << i)))
                        outputs.push_back({w, static_cast<std::uint64_t>(i), 0});
            break;
        case ProblemKind::Triangle:
            for (std::uint64_t u = 0; u + 2 < static_cast<std::uint64_t>(p.n); ++u)
                for (std::uint64_t v = u + 1; v + 1 < static_cast<std::uint64_t>(p.n); ++v)
                    for (std::uint64_t w = v + 1; w < static_cast<std::uint64_t>(p.n); ++w)
                        outputs.push_back({u, v, w});
            break;
        case ProblemKind::Join:
            for (std::uint64_t a = 0; a < p.na; ++a)
                for (std::uint64_t b = 0; b < p.nb; ++b)
                    for (std::uint64_t c = 0; c < p.nc; ++c)
                        outputs.push_back({a, b, c});
            break;
        case ProblemKind::GroupBy:
            for (std::uint64_t a = 0; a < p.na; ++a) outputs.push_back({a, 0, 0});
            break;
    }
    return outputs;
}

std::string format_input(const Problem& p, const InputId& in) {
    switch (p.kind) {
        case ProblemKind::HD1: {
            std::string s(p.b, '0');
            for (int i = 0; i < p.b; ++i)
                if (in.a & (std::uint64_t{1} << (p.b - 1 - i))) s[i] = '1';
            return s;
        }
        case ProblemKind::Triangle:
            return std::to_string(in.a) + " " + std::to_string(in.b);
        case ProblemKind::Join:
            return std::string(in.tag == 0 ? "R " : "S ") + std::to_string(in.a) +
                   " " + std::to_string(in.b);
        case ProblemKind::GroupBy:
            return std::to_string(in.a) + " " + std::to_string(in.b);
    }
    return "";
}

InputId parse_input(const Problem& p, const std::string& line) {
    InputId in;
    std::istringstream ss(line);
    switch (p.kind) {
        case ProblemKind::HD1: {
            std::string s;
            ss >> s;
            if (static_cast<int>(s.size()) != p.b)
                throw ParseError("hd1 input '" + line + "' is not " +
                                 std::to_string(p.b) + " bits");
            for (char c : s) {
                if (c != '0' && c != '1')
                    throw ParseError("hd1 input '" + line + "' is not binary");
                in.a = (in.a << 1) | static_cast<std::uint64_t>(c - '0');
            }
            return in;
        }
        case ProblemKind::Triangle: {
            if (!(ss >> in.a >> in.b) || in.a >= in.b ||
                in.b >= static_cast<std::uint64_t>(p.n))
                throw ParseError("bad triangle edge '" + line + "'");
            return in;
        }
        case ProblemKind::Join: {
            std::string rel;
            if (!(ss >> rel >> in.a >> in.b) || (rel != "R" && rel != "S"))
                throw ParseError("bad join tuple '" + line + "'");
            in.tag = rel == "R" ? 0 : 1;
            std::uint64_t lim_a = in.tag == 0 ? p.na : p.nb;
            std::uint64_t lim_b = in.tag == 0 ? p.nb : p.nc;
            if (in.a >= lim_a || in.b >= lim_b)
                throw ParseError("join tuple '" + line + "' out of domain");
            return in;
        }
        case ProblemKind::GroupBy: {
            if (!(ss >> in.a >> in.b) || in.a >= p.na || in.b >= p.nb)
                throw ParseError("bad groupby tuple '" + line + "'");
            return in;
        }
    }
    throw ParseError("bad input line '" + line + "'");
}

std::string format_output(const Problem& p, const OutputId& out) {
    switch (p.kind) {
        case ProblemKind::HD1: {
            InputId lo{0, out.a, 0};
            InputId hi{0, out.a | (std::uint64_t{1} << out.b), 0};
            return format_input(p, lo) + " " + format_input(p, hi);
        }
        case ProblemKind::Triangle:
            return std::to_string(out.a) + " " + std::to_string(out.b) + " " +
                   std::to_string(out.c);
        case ProblemKind::Join:
            return std::to_string(out.a) + " " + std::to_string(out.b) + " " +
                   std::to_string(out.c);
        case ProblemKind::GroupBy:
            return std::to_string(out.a);
    }
    return "";
}

}  // namespace replim
