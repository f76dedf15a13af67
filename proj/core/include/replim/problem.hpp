#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace replim {

// Thrown when a CLI spec string (problem, schema, instance line) cannot
// be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the requested input universe exceeds the enumeration cap.
struct UniverseTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ProblemKind : std::uint8_t { HD1, Triangle, Join, GroupBy };

std::string to_string(ProblemKind kind);

// A finite problem family instance: the size parameters that pin down the
// input universe, the output universe, and the provenance mapping.
struct Problem {
    ProblemKind kind = ProblemKind::HD1;
    int b = 0;          // HD1: bit-string length
    int n = 0;          // Triangle: node count
    std::uint64_t na = 0, nb = 0, nc = 0;  // Join / GroupBy domain sizes

    static Problem hd1(int b);
    static Problem triangle(int n);
    static Problem join(std::uint64_t na, std::uint64_t nb, std::uint64_t nc);
    static Problem group_by(std::uint64_t na, std::uint64_t nb);
};

// Canonical identity of one input.
//   HD1:      a = the string as an integer in [0, 2^b)
//   Triangle: {a, b} with a < b, nodes in [0, n)
//   Join:     tag 0 = R-tuple with (a, b) over A x B;
//             tag 1 = S-tuple with (a, b) holding the (B, C) values
//   GroupBy:  (a, b) over A x B
struct InputId {
    std::uint8_t tag = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    auto operator<=>(const InputId&) const = default;
};

// Canonical identity of one output.
//   HD1:      (a, b) = lower string and the index of the differing bit
//   Triangle: sorted node triple a < b < c
//   Join:     tuple (a, b, c)
//   GroupBy:  the group key a (the sum is instance data, not identity)
struct OutputId {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
    auto operator<=>(const OutputId&) const = default;
};

// Parse "hd1:b=12", "tri:n=30", "join:na=2,nb=3,nc=4", "groupby:na=2,nb=3".
Problem parse_problem(const std::string& spec);
std::string format_problem(const Problem& problem);

// Exact sizes of the input and output universes.
std::uint64_t input_count(const Problem& problem);
std::uint64_t output_count(const Problem& problem);

// Position of an input in canonical enumeration order, in [0, input_count).
std::uint64_t input_rank(const Problem& problem, const InputId& input);
InputId input_at_rank(const Problem& problem, std::uint64_t rank);

constexpr std::uint64_t kDefaultUniverseCap = std::uint64_t{1} << 26;

// Every input exactly once, canonical ascending order.
std::vector<InputId> enumerate_inputs(const Problem& problem,
                                      std::uint64_t cap = kDefaultUniverseCap);

// Provenance: the input set an output depends on. HD1 and Join yield 2
// inputs, Triangle 3, GroupBy nb.
std::vector<InputId> provenance(const Problem& problem, const OutputId& output);

// Every output exactly once, canonical ascending order.
std::vector<OutputId> enumerate_outputs(const Problem& problem,
                                        std::uint64_t cap = kDefaultUniverseCap);

// Line encodings used by instance files.
// HD1: fixed-width binary string; Triangle: "u v"; Join: "R a b" / "S b c";
// GroupBy: "a b".
std::string format_input(const Problem& problem, const InputId& input);
InputId parse_input(const Problem& problem, const std::string& line);

std::string format_output(const Problem& problem, const OutputId& output);

}  // namespace replim
