#pragma once

#include <vector>

#include "facetlab/boundedness.hpp"
#include "facetlab/graph.hpp"

namespace facetlab {

// Extremal ray of a pointed polyhedron, identified by its unique base vertex
// together with the set of facets containing it.
struct Ray {
    int base_vertex = -1;
    Bits facet_set;  // universe m, nonempty

    bool operator==(const Ray& o) const {
        return base_vertex == o.base_vertex && facet_set == o.facet_set;
    }
};

bool ray_less(const Ray& a, const Ray& b);

// Faces as (vertex set, ray set) pairs ordered by inclusion of the combined
// atom sets. The improper face P is excluded unless includes_top is set.
struct ReconstructedFacePoset {
    int n = 0;
    std::vector<Ray> rays;          // canonical order
    struct Face {
        Bits verts;                 // universe n, nonempty
        Bits ray_set;               // universe |rays|
        bool operator==(const Face& o) const { return verts == o.verts && ray_set == o.ray_set; }
    };
    std::vector<Face> faces;        // deduplicated, canonical order
    bool includes_top = false;

    // canonical face order: total atom count, then vertex part, then rays
    static bool face_canon_less(const Face& a, const Face& b);

    bool face_leq(int a, int b) const;
    std::vector<std::pair<int, int>> cover_relations() const;

    bool operator==(const ReconstructedFacePoset& o) const {
        return n == o.n && rays == o.rays && faces == o.faces && includes_top == o.includes_top;
    }
};

// For a simple polyhedron: at each vertex v on facets F_1..F_d, the edges and
// extremal rays at v are the intersections over the (d-1)-subsets of
// {F_1..F_d}; the singleton intersections are the rays.
std::vector<Ray> rays_simple(const IncidenceMatrix& A);

// Full face poset of a simple polyhedron from its incidences: every face is
// an intersection of facets over the extended atom set (vertices + rays).
ReconstructedFacePoset face_poset_simple(const IncidenceMatrix& A, bool with_top = false);

// Face poset of a 3-polyhedron with 2-connected vertex graph: unbounded
// facets induce paths whose unique cyclic arrangement determines the rays.
ReconstructedFacePoset face_poset_dim3(const IncidenceMatrix& A, bool with_top = false);

}  // namespace facetlab
