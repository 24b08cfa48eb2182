#include "facetlab/graph.hpp"

namespace facetlab {

VertexGraph vertex_graph(const VertexSetFamily& F) {
    VertexGraph G;
    G.node_count = F.n;
    G.adj.assign(size_t(F.n), Bits(F.n));
    if (F.n == 2) {
        G.adj[0].set(1);
        G.adj[1].set(0);
        return G;
    }
    for (const Bits& s : F.members) {
        if (s.count() == 2) {
            int v = s.first();
            int w = s.next(v);
            G.adj[size_t(v)].set(w);
            G.adj[size_t(w)].set(v);
        }
    }
    return G;
}

VertexGraph facet_subgraph(const VertexSetFamily& F, const VertexGraph& G, const Bits& f_row) {
    if (!F.index_of(f_row))
        throw Error(Errc::NotAMember, "facet row is not a member of the family");
    std::vector<int> nodes = f_row.elements();
    VertexGraph H;
    H.node_count = int(nodes.size());
    H.adj.assign(nodes.size(), Bits(H.node_count));
    for (size_t a = 0; a < nodes.size(); ++a)
        for (size_t b = a + 1; b < nodes.size(); ++b)
            if (G.edge(nodes[a], nodes[b])) {
                H.adj[a].set(int(b));
                H.adj[b].set(int(a));
            }
    return H;
}

bool is_connected(const VertexGraph& G) {
    if (G.node_count == 0) return false;
    return connected_within(G, Bits::full(G.node_count));
}

bool connected_within(const VertexGraph& G, const Bits& S) {
    int start = S.first();
    if (start < 0) return false;
    Bits reached = Bits::single(G.node_count, start);
    Bits frontier = reached;
    Bits next(G.node_count);
    int have = 1;
    while (frontier.any()) {
        next.reset_all();
        frontier.for_each([&](int v) { next |= G.adj[size_t(v)]; });
        next &= S;
        next.subtract(reached);
        have += next.count();
        reached |= next;
        std::swap(frontier, next);
    }
    return have == S.count();
}

bool is_complete(const VertexGraph& G) {
    if (G.node_count < 1) return false;
    for (int v = 0; v < G.node_count; ++v)
        if (G.degree(v) != G.node_count - 1) return false;
    return true;
}

bool is_cycle_shape(const VertexGraph& G) {
    if (G.node_count < 3) return false;
    for (int v = 0; v < G.node_count; ++v)
        if (G.degree(v) != 2) return false;
    return is_connected(G);
}

bool is_path_shape(const VertexGraph& G) {
    if (G.node_count < 1) return false;
    if (!is_connected(G)) return false;
    int edges = 0;
    for (int v = 0; v < G.node_count; ++v) {
        if (G.degree(v) > 2) return false;
        edges += G.degree(v);
    }
    edges /= 2;
    return edges == G.node_count - 1;  // connected and acyclic
}

GraphClass classify_graph(const VertexGraph& G) {
    if (G.node_count >= 3 && is_complete(G)) return GraphClass::Complete;
    if (is_cycle_shape(G)) return GraphClass::Cycle;
    if (is_path_shape(G)) return GraphClass::Path;
    return GraphClass::Other;
}

std::optional<std::pair<VertexGraph, int>> column_graph(const IncidenceMatrix& A) {
    if (A.m != A.n) return std::nullopt;
    int d = A.rows[0].count();
    for (const Bits& row : A.rows)
        if (row.count() != d) return std::nullopt;
    std::vector<Bits> cols;
    cols.reserve(size_t(A.n));
    for (int v = 0; v < A.n; ++v) {
        cols.push_back(A.column(v));
        if (cols.back().count() != d) return std::nullopt;
    }
    VertexGraph G;
    G.node_count = A.n;
    G.adj.assign(size_t(A.n), Bits(A.n));
    for (int v = 0; v < A.n; ++v)
        for (int w = v + 1; w < A.n; ++w)
            if ((cols[size_t(v)] & cols[size_t(w)]).count() == d - 1) {
                G.adj[size_t(v)].set(w);
                G.adj[size_t(w)].set(v);
            }
    return std::make_pair(std::move(G), d);
}

bool is_two_connected(const VertexGraph& G) {
    if (G.node_count < 3) return false;
    if (!is_connected(G)) return false;
    Bits all = Bits::full(G.node_count);
    for (int v = 0; v < G.node_count; ++v) {
        Bits rest = all;
        rest.reset(v);
        if (!connected_within(G, rest)) return false;
    }
    return true;
}

}  // namespace facetlab
