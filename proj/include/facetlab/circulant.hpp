#pragma once

#include <optional>
#include <vector>

#include "facetlab/graph.hpp"

namespace facetlab {

// The (n,d)-circulant: n x n matrix whose row i has ones exactly on the
// cyclic interval {i, i+1, ..., i+d-1} mod n.
IncidenceMatrix circulant(int n, int d);

// Applying the permutations to the input reproduces M(n,d) entrywise:
//   input.rows[row_perm[i]].test(col_perm[j]) == M(n,d)[i][j].
struct CirculantWitness {
    int n = 0, d = 0;
    std::vector<int> row_perm, col_perm;
};

// Recognition up to row/column permutation. Absent unless the matrix is
// square with constant row/column sum d; the returned witness is always
// verified entrywise before being reported.
std::optional<CirculantWitness> recognize_circulant(const IncidenceMatrix& A);

// A polyhedron is simple and simplicial iff it has a circulant incidence
// matrix, in which case dim(P) = d. Reports the circulant parameter with no
// polyhedrality claim of its own.
std::optional<int> is_simple_simplicial(const IncidenceMatrix& A);

enum class Realizability { Simplex, Polygon, Segment, Ray, NotPolyhedral };

// Which circulants are incidence matrices of polyhedra: the d-simplex
// (n = d+1), the n-gon (d = 2, n >= 3), the segment (2,1) and the ray (1,1);
// nothing else.
Realizability circulant_realizability(int n, int d);

const char* to_string(Realizability r);

}  // namespace facetlab
