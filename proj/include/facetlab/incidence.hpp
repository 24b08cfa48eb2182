#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facetlab/bits.hpp"
#include "facetlab/errors.hpp"

namespace facetlab {

// Vertex-facet incidence matrix of a pointed polyhedron: rows are facets,
// columns are vertices, rows[f].test(v) == (vertex v lies on facet f).
// Row order and duplicate rows are preserved exactly as given (cones have
// duplicate rows). Every row contains at least one vertex.
struct IncidenceMatrix {
    int m = 0;
    int n = 0;
    std::vector<Bits> rows;

    // Validates the type invariants (m,n >= 1; no all-zero row).
    static IncidenceMatrix from_rows(int n_cols, std::vector<Bits> rows);

    bool operator==(const IncidenceMatrix& o) const { return n == o.n && rows == o.rows; }

    // column v as a set of rows
    Bits column(int v) const;
};

enum class WireFormat { Vfi, Json };

// `.vfi` text: header "m n", then m lines of n characters from {0,1};
// lines starting with '#' are comments.
IncidenceMatrix parse_incidence(std::string_view text);
// JSON form {"m":..,"n":..,"rows":[[vertex ids]...]}.
IncidenceMatrix parse_incidence_json(std::string_view text);
// Sniffs JSON ('{' first non-space char) vs vfi.
IncidenceMatrix parse_incidence_any(std::string_view text);

std::string serialize_incidence(const IncidenceMatrix& A, WireFormat format);

// All facets whose row contains S; S = {} gives all facets.
Bits facets_containing(const IncidenceMatrix& A, const Bits& S);
Bits facets_containing(const IncidenceMatrix& A, const std::vector<int>& S);

struct ValidationCheck {
    std::string id;
    bool pass = false;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool overall = false;
};

// Necessary (not sufficient) conditions for A to be a vertex-facet incidence
// matrix of a pointed polyhedron:
//   C1 no all-zero row, C2 pairwise distinct columns, C3 the vertex graph is
//   connected (vacuous for n <= 2), C4 every closure member induces a
//   connected subgraph. Failures are reported, never thrown.
ValidationReport validate(const IncidenceMatrix& A, const Limits& limits = {});

struct VertexSetFamily;
ValidationReport validate(const IncidenceMatrix& A, const VertexSetFamily& F);

}  // namespace facetlab
