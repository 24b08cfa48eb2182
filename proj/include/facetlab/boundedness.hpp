#pragma once

#include <optional>
#include <vector>

#include "facetlab/moebius.hpp"

namespace facetlab {

struct BoundedVerdict {
    bool bounded = false;
    long long mobius = 0;
};

// P is bounded iff the Moebius number of its closure family is nonzero. On
// matrices that are not genuine polyhedron incidences the value is still
// returned but carries no geometric meaning.
BoundedVerdict is_bounded(const IncidenceMatrix& A, size_t member_cap = Limits{}.member_cap);
BoundedVerdict is_bounded(const VertexSetFamily& F);

// Facet f is bounded iff mu(top) != 0 over the interval below its row: with
// an artificial top when some other facet contains the row (the row is then
// the vertex set of a nontrivial face), otherwise with the row itself as top.
bool facet_bounded(const IncidenceMatrix& A, int f, size_t member_cap = Limits{}.member_cap);
bool facet_bounded(const IncidenceMatrix& A, const VertexSetFamily& F, int f);
std::vector<bool> facets_bounded(const IncidenceMatrix& A, const VertexSetFamily& F);

enum class Dim3 { Three, AtLeastFour, ConeAmbiguous };

// Decides d == 3 vs d >= 4 for inputs the caller asserts to have d >= 3.
// Cone-shaped inputs (n == 1) are ambiguous beyond three facets.
Dim3 detect_dim3(const IncidenceMatrix& A, size_t member_cap = Limits{}.member_cap);
Dim3 detect_dim3(const IncidenceMatrix& A, const VertexSetFamily& F);

// Present iff some facet is bounded; then equal to the element count of a
// maximum chain in the closure family, which is the dimension.
std::optional<int> dimension_from_bounded_facet(const IncidenceMatrix& A,
                                                size_t member_cap = Limits{}.member_cap);
std::optional<int> dimension_from_bounded_facet(const IncidenceMatrix& A, const VertexSetFamily& F);

struct BoundednessReport {
    bool bounded = false;
    long long mobius = 0;
    std::vector<bool> facet_bounded;
    std::optional<Dim3> dim3;  // absent for n <= 2 (d=1 edge cases short-circuit)
    std::optional<int> dim_from_bounded_facet;
};

BoundednessReport boundedness_report(const IncidenceMatrix& A, const Limits& limits = {});

}  // namespace facetlab
