#pragma once

#include <optional>
#include <string>

#include "facetlab/reconstruct.hpp"

namespace facetlab {

// Instance with known answers, used as test ground truth. dim is an interval
// [dim_lo, dim_hi]; exact dimensions have dim_lo == dim_hi, cones and cone
// products carry their genuine ambiguity range.
struct GroundTruth {
    IncidenceMatrix matrix;
    bool polyhedral = true;  // false only for non-realizable circulants
    int dim_lo = 0, dim_hi = 0;
    bool bounded = false;
    std::vector<bool> facet_bounded;
    std::optional<ReconstructedFacePoset> face_poset;
    std::string provenance;

    bool exact_dim() const { return dim_lo == dim_hi; }
};

GroundTruth polygon(int k);                    // M(k,2), k >= 3
GroundTruth simplex(int d);                    // M(d+1,d), d >= 1
GroundTruth segment();                         // simplex(1)
GroundTruth ray_fixture();                     // M(1,1), unbounded

GroundTruth product(const GroundTruth& a, const GroundTruth& b);
GroundTruth pyramid(const GroundTruth& a);

// Far-face truncation: remove the vertices of S; faces of the result are the
// faces of Q not contained in S. Ground-truth facet boundedness and the face
// poset (vertex parts T \ S, rays from edges crossing S) come with it.
GroundTruth far_face_truncation(const GroundTruth& q, const Bits& far,
                                const VertexSetFamily* closure_of_q = nullptr,
                                bool with_poset = true);

GroundTruth unbounded_prism(const GroundTruth& a);  // prepend an all-ones row
GroundTruth cone(int m);                            // m x 1 all-ones, m >= 3
GroundTruth cone_product(const GroundTruth& q, int m);  // rows of Q + m all-ones rows

// Fills face_poset for bounded instances (closure members, no rays).
void attach_closure_poset(GroundTruth& g, const VertexSetFamily* closure = nullptr);

// Expression grammar for the CLI:
//   polygon(5) simplex(3) segment ray cone(5) circulant(6,2)
//   prism(X) pyramid(X) product(X,Y) coneprod(X,4) truncate(X, far=[v,...])
GroundTruth parse_generator_expr(const std::string& expr, bool one_indexed = false);

}  // namespace facetlab
