#include "facetlab/circulant.hpp"

#include <algorithm>
#include <numeric>

namespace facetlab {

IncidenceMatrix circulant(int n, int d) {
    if (n < 1 || d < 1 || d > n)
        throw Error(Errc::BadParameters, "circulant needs 1 <= d <= n");
    std::vector<Bits> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Bits row(n);
        for (int k = 0; k < d; ++k) row.set((i + k) % n);
        rows.push_back(std::move(row));
    }
    return IncidenceMatrix::from_rows(n, std::move(rows));
}

namespace {

bool verify_witness(const IncidenceMatrix& A, const CirculantWitness& w) {
    IncidenceMatrix M = circulant(w.n, w.d);
    for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j)
            if (A.rows[size_t(w.row_perm[size_t(i)])].test(w.col_perm[size_t(j)]) !=
                M.rows[size_t(i)].test(j))
                return false;
    return true;
}

std::optional<CirculantWitness> finish(const IncidenceMatrix& A, CirculantWitness w) {
    if (!verify_witness(A, w)) return std::nullopt;
    return w;
}

// Column order along the cycle, then every row must be a cyclic interval of
// length d whose starts form a permutation of the rows.
std::optional<CirculantWitness> try_cycle_order(const IncidenceMatrix& A, int d,
                                                const std::vector<int>& col_order) {
    const int n = A.n;
    std::vector<int> pos(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) pos[size_t(col_order[size_t(k)])] = k;

    std::vector<int> start_row(size_t(n), -1);  // start position -> row
    for (int f = 0; f < n; ++f) {
        Bits at(n);  // positions of the ones of row f in cycle order
        A.rows[size_t(f)].for_each([&](int v) { at.set(pos[size_t(v)]); });
        int start = -1;
        for (int p = at.first(); p >= 0; p = at.next(p)) {
            if (!at.test((p + n - 1) % n)) {
                if (start >= 0) return std::nullopt;  // ones not consecutive
                start = p;
            }
        }
        if (start < 0) return std::nullopt;  // d == n is handled before
        for (int k = 0; k < d; ++k)
            if (!at.test((start + k) % n)) return std::nullopt;
        if (start_row[size_t(start)] >= 0) return std::nullopt;  // s must be a bijection
        start_row[size_t(start)] = f;
    }

    CirculantWitness w;
    w.n = n;
    w.d = d;
    w.col_perm = col_order;
    w.row_perm.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w.row_perm[size_t(i)] = start_row[size_t(i)];
    return finish(A, w);
}

}  // namespace

std::optional<CirculantWitness> recognize_circulant(const IncidenceMatrix& A) {
    const int n = A.n;
    if (A.m != n) return std::nullopt;

    int d = A.rows[0].count();
    for (const Bits& row : A.rows)
        if (row.count() != d) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (A.column(v).count() != d) return std::nullopt;

    auto identity = [n] {
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return p;
    };

    if (d == n) {
        // constant sums force the all-ones matrix
        CirculantWitness w{n, d, identity(), identity()};
        return finish(A, w);
    }

    if (d == 1) {
        // permutation matrix: row_perm[i] = the row whose single one is column i
        CirculantWitness w{n, d, std::vector<int>(static_cast<size_t>(n)), identity()};
        for (int f = 0; f < n; ++f) w.row_perm[size_t(A.rows[size_t(f)].first())] = f;
        return finish(A, w);
    }

    auto cg = column_graph(A);
    if (!cg) return std::nullopt;
    const VertexGraph& G = cg->first;

    if (is_complete(G)) {
        if (n != d + 1) return std::nullopt;
        // complement of a permutation matrix: M(n,n-1) row i has its zero at
        // column i-1 mod n
        std::vector<int> row_of_zero(size_t(n), -1);
        for (int f = 0; f < n; ++f) {
            int z = -1;
            for (int v = 0; v < n; ++v)
                if (!A.rows[size_t(f)].test(v)) {
                    if (z >= 0) return std::nullopt;
                    z = v;
                }
            if (z < 0) return std::nullopt;
            if (row_of_zero[size_t(z)] >= 0) return std::nullopt;
            row_of_zero[size_t(z)] = f;
        }
        CirculantWitness w{n, d, std::vector<int>(static_cast<size_t>(n)), identity()};
        for (int i = 0; i < n; ++i) w.row_perm[size_t(i)] = row_of_zero[size_t((i + n - 1) % n)];
        return finish(A, w);
    }

    if (is_cycle_shape(G)) {
        // anchor at column 0, walk the cycle in both orientations
        std::vector<int> nb = G.adj[0].elements();
        for (int first : {nb[0], nb[1]}) {
            std::vector<int> order;
            order.reserve(static_cast<size_t>(n));
            order.push_back(0);
            int prev = 0, cur = first;
            while (cur != 0 && int(order.size()) < n) {
                order.push_back(cur);
                std::vector<int> cn = G.adj[size_t(cur)].elements();
                int nxt = (cn[0] == prev) ? cn[1] : cn[0];
                prev = cur;
                cur = nxt;
            }
            if (int(order.size()) != n || cur != 0) continue;
            if (auto w = try_cycle_order(A, d, order)) return w;
        }
        return std::nullopt;
    }

    return std::nullopt;
}

std::optional<int> is_simple_simplicial(const IncidenceMatrix& A) {
    auto w = recognize_circulant(A);
    if (!w) return std::nullopt;
    return w->d;
}

Realizability circulant_realizability(int n, int d) {
    if (n < 1 || d < 1 || d > n)
        throw Error(Errc::BadParameters, "realizability needs 1 <= d <= n");
    if (n == 1 && d == 1) return Realizability::Ray;
    if (n == 2 && d == 1) return Realizability::Segment;
    if (n == d + 1) return Realizability::Simplex;
    if (d == 2 && n >= 3) return Realizability::Polygon;
    return Realizability::NotPolyhedral;
}

const char* to_string(Realizability r) {
    switch (r) {
        case Realizability::Simplex: return "Simplex";
        case Realizability::Polygon: return "Polygon";
        case Realizability::Segment: return "Segment";
        case Realizability::Ray: return "Ray";
        case Realizability::NotPolyhedral: return "NotPolyhedral";
    }
    return "?";
}

}  // namespace facetlab
