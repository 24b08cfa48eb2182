#pragma once

#include <optional>
#include <vector>

#include "facetlab/incidence.hpp"

namespace facetlab {

// The family of vertex sets of nontrivial faces: all nonempty intersections
// of nonempty subsets of the rows of A, in canonical order (ascending
// cardinality, then lexicographic). Each member also carries its row
// support, the set of rows containing it; members are exactly the fixed
// points of S -> intersection(support(S)), and
//   S < T in the family  <=>  support(S) > support(T),
// which turns subset tests into (usually one-word) facet-set tests.
struct VertexSetFamily {
    int n = 0;
    int m = 0;
    std::vector<Bits> members;      // universe n, canonical order
    std::vector<Bits> supports;     // universe m, supports[i] = rows containing members[i]
    std::vector<bool> origin_rows;  // members[i] equals some row of A

    std::optional<int> index_of(const Bits& member) const;
};

VertexSetFamily vertex_set_closure(const IncidenceMatrix& A, size_t member_cap = Limits{}.member_cap);

struct ChainWitness {
    int size = 0;                // element count of a maximum chain
    std::vector<Bits> chain;     // strictly increasing
};

ChainWitness longest_chain(const VertexSetFamily& F);

// Members contained in S (S itself included); S must be a member.
VertexSetFamily sub_family_below(const VertexSetFamily& F, const Bits& S);

}  // namespace facetlab
