#pragma once

#include "replim/schema.hpp"

namespace replim {

// One reducer per output; every string goes to its b incident pair
// reducers. q = 2, rate = b.
MappingSchema hd1_pairwise(int b);

// Everything at one reducer. q = 2^b, rate = 1.
MappingSchema hd1_single(int b);

// r groups of 2^(b - b/r) reducers; a string reaches the group-i reducer
// keyed by the string with piece i deleted. q = 2^(b/r), rate = r exactly.
// Requires r >= 2 and r | b.
MappingSchema hd1_splitting(int b, int r);

// d-dimensional weight-cell schema with k weights per group. A string's
// home cell is its per-piece weight group vector; a piece sitting on the
// lowest weight of a group above the first is also replicated to the cell
// with that coordinate decremented. Declared rate estimate 1 + d/k; the
// declared q is the exact census of the heaviest cell including replicas.
MappingSchema hd1_weight(int b, int d, int k);

// Triangle finding with nodes grouped by node mod rho. One reducer per
// sorted group multiset {g1 <= g2 <= g3}; an edge goes to every multiset
// containing its group pair as a submultiset (exactly rho reducers). A
// responsibility rule emits each triangle only at its own group multiset.
MappingSchema triangle_partition(int n, int rho);

// Range-partition the join attribute B (resp. group key A) into p pieces.
// Rate 1; both provenance tuples of an output share the partition value.
MappingSchema join_hash_b(const Problem& problem, int p);
MappingSchema groupby_hash_a(const Problem& problem, int p);

// Parse a CLI schema spec against a problem: `pairwise`, `single`,
// `splitting:r=3`, `weight:d=2,k=2`, `tri:rho=5`, `hashb:p=4`, `hasha:p=4`.
MappingSchema parse_schema(const Problem& problem, const std::string& spec);

}  // namespace replim
