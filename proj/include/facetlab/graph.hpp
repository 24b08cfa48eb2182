#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "facetlab/poset.hpp"

namespace facetlab {

struct VertexGraph {
    int node_count = 0;
    std::vector<Bits> adj;  // symmetric, irreflexive

    bool edge(int a, int b) const { return adj[a].test(b); }
    int degree(int v) const { return adj[v].count(); }
};

// Graph on vertices: v ~ w iff {v,w} is a closure member. For n == 2 the two
// vertices are adjacent by convention (a segment's only edge is the trivial
// face, so no 2-element member exists).
VertexGraph vertex_graph(const VertexSetFamily& F);

// Subgraph induced on a member's vertex set, relabeled to 0..|S|-1 in
// ascending vertex order.
VertexGraph facet_subgraph(const VertexSetFamily& F, const VertexGraph& G, const Bits& f_row);

enum class GraphClass { Cycle, Complete, Path, Other };

// Complete wins only at node_count >= 3 (K3 resolves to Complete); K1 and K2
// classify as Path.
GraphClass classify_graph(const VertexGraph& G);

// Shape predicates used by reconstruction and property tests. A facet cycle
// includes K3; a facet path includes a single node and a single edge.
bool is_connected(const VertexGraph& G);
bool connected_within(const VertexGraph& G, const Bits& S);  // induced connectivity
bool is_complete(const VertexGraph& G);
bool is_cycle_shape(const VertexGraph& G);  // connected, all degrees 2, >= 3 nodes
bool is_path_shape(const VertexGraph& G);   // connected, acyclic, max degree <= 2

// Graph on the columns of a square matrix with constant row and column sums
// d: columns adjacent iff they share exactly d-1 ones. Absent otherwise.
std::optional<std::pair<VertexGraph, int>> column_graph(const IncidenceMatrix& A);

// Connected, >= 3 nodes, no cut vertex.
bool is_two_connected(const VertexGraph& G);

}  // namespace facetlab
