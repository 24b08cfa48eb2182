#include "facetlab/reconstruct.hpp"

#include <algorithm>
#include <unordered_map>

namespace facetlab {

bool ray_less(const Ray& a, const Ray& b) {
    if (a.base_vertex != b.base_vertex) return a.base_vertex < b.base_vertex;
    return Bits::canon_less(a.facet_set, b.facet_set);
}

bool ReconstructedFacePoset::face_canon_less(const Face& a, const Face& b) {
    int ca = a.verts.count() + a.ray_set.count();
    int cb = b.verts.count() + b.ray_set.count();
    if (ca != cb) return ca < cb;
    if (a.verts != b.verts) return Bits::lex_less(a.verts, b.verts);
    return Bits::lex_less(a.ray_set, b.ray_set);
}

bool ReconstructedFacePoset::face_leq(int a, int b) const {
    return faces[size_t(a)].verts.subset_of(faces[size_t(b)].verts) &&
           faces[size_t(a)].ray_set.subset_of(faces[size_t(b)].ray_set);
}

std::vector<std::pair<int, int>> ReconstructedFacePoset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    const int F = int(faces.size());
    for (int a = 0; a < F; ++a)
        for (int b = 0; b < F; ++b) {
            if (a == b || !face_leq(a, b) || face_leq(b, a)) continue;
            bool strict_between = false;
            for (int c = 0; c < F && !strict_between; ++c) {
                if (c == a || c == b) continue;
                if (face_leq(a, c) && face_leq(c, b) && !face_leq(c, a) && !face_leq(b, c))
                    strict_between = true;
            }
            if (!strict_between) covers.emplace_back(a, b);
        }
    return covers;
}

namespace {

// Simplicity parameter: the common column sum, or NotSimple.
int simple_degree(const IncidenceMatrix& A) {
    int d = A.column(0).count();
    for (int v = 1; v < A.n; ++v)
        if (A.column(v).count() != d)
            throw Error(Errc::NotSimple, "column sums differ; input is not simple");
    return d;
}

// Assemble the face poset from the extended atom-incidence matrix over
// vertices and rays: faces are the intersections of nonempty row subsets
// whose vertex part is nonempty (every nonempty face of a pointed polyhedron
// has a vertex, and the face poset is co-atomic).
ReconstructedFacePoset assemble_face_poset(const IncidenceMatrix& A, std::vector<Ray> rays,
                                           bool with_top) {
    std::sort(rays.begin(), rays.end(), ray_less);
    const int n = A.n;
    const int R = int(rays.size());
    const int universe = n + R;

    std::vector<Bits> ext_rows;
    ext_rows.reserve(size_t(A.m));
    for (int f = 0; f < A.m; ++f) {
        Bits row(universe);
        A.rows[size_t(f)].for_each([&](int v) { row.set(v); });
        for (int r = 0; r < R; ++r)
            if (rays[size_t(r)].facet_set.test(f)) row.set(n + r);
        ext_rows.push_back(std::move(row));
    }

    auto vertex_part_empty = [n](const Bits& s) {
        int fst = s.first();
        return fst < 0 || fst >= n;
    };

    std::unordered_map<Bits, int, BitsHash> seen;
    std::vector<Bits> atoms;
    auto push = [&](const Bits& s) {
        if (seen.find(s) != seen.end()) return;
        seen.emplace(s, int(atoms.size()));
        atoms.push_back(s);
    };
    for (const Bits& row : ext_rows)
        if (!vertex_part_empty(row)) push(row);
    Bits scratch(universe);
    for (size_t head = 0; head < atoms.size(); ++head) {
        Bits s = atoms[head];
        for (const Bits& row : ext_rows) {
            Bits::and_into(scratch, s, row);
            if (!vertex_part_empty(scratch)) push(scratch);
        }
    }

    ReconstructedFacePoset P;
    P.n = n;
    P.rays = std::move(rays);
    P.includes_top = with_top;
    for (const Bits& s : atoms) {
        ReconstructedFacePoset::Face face;
        face.verts = Bits(n);
        face.ray_set = Bits(R);
        s.for_each([&](int a) {
            if (a < n)
                face.verts.set(a);
            else
                face.ray_set.set(a - n);
        });
        P.faces.push_back(std::move(face));
    }
    std::sort(P.faces.begin(), P.faces.end(), ReconstructedFacePoset::face_canon_less);
    if (with_top) {
        ReconstructedFacePoset::Face top;
        top.verts = Bits::full(n);
        top.ray_set = Bits::full(R);
        bool already = false;
        for (const auto& f : P.faces) already = already || (f == top);
        if (!already) P.faces.push_back(std::move(top));
    }
    return P;
}

// Closure-members-only poset (bounded case, and the d = 1 special case).
ReconstructedFacePoset closure_poset(const IncidenceMatrix& A, bool with_top) {
    VertexSetFamily F = vertex_set_closure(A);
    ReconstructedFacePoset P;
    P.n = A.n;
    P.includes_top = with_top;
    for (const Bits& s : F.members) P.faces.push_back({s, Bits(0)});
    if (with_top) {
        ReconstructedFacePoset::Face top{Bits::full(A.n), Bits(0)};
        bool already = false;
        for (const auto& f : P.faces) already = already || (f == top);
        if (!already) P.faces.push_back(std::move(top));
    }
    return P;
}

}  // namespace

std::vector<Ray> rays_simple(const IncidenceMatrix& A) {
    int d = simple_degree(A);
    if (d < 2)
        throw Error(Errc::NotSimple, "ray extraction needs column sums d >= 2");
    std::vector<Ray> rays;
    for (int v = 0; v < A.n; ++v) {
        std::vector<int> fs = A.column(v).elements();  // |fs| == d
        for (int skip = 0; skip < d; ++skip) {
            Bits w = Bits::full(A.n);
            Bits fset(A.m);
            for (int k = 0; k < d; ++k) {
                if (k == skip) continue;
                w &= A.rows[size_t(fs[size_t(k)])];
                fset.set(fs[size_t(k)]);
            }
            int c = w.count();  // v is always in w, so c >= 1
            if (c == 1) {
                rays.push_back({v, std::move(fset)});
            } else if (c != 2) {
                throw Error(Errc::Degenerate,
                            "facet subset at vertex " + std::to_string(v) + " meets " +
                                std::to_string(c) + " vertices; inconsistent with simplicity");
            }
        }
    }
    std::sort(rays.begin(), rays.end(), ray_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

ReconstructedFacePoset face_poset_simple(const IncidenceMatrix& A, bool with_top) {
    int d = simple_degree(A);
    if (d == 1) return closure_poset(A, with_top);  // segment / ray
    return assemble_face_poset(A, rays_simple(A), with_top);
}

namespace {

struct PathInfo {
    int facet = -1;
    int end_a = -1, end_b = -1;  // path endpoints; equal for a single vertex
};

// Backtracking over cyclic arrangements of the unbounded-facet paths, gluing
// consecutive paths at shared endpoint vertices. Every complete arrangement
// yields one ray per gluing; distinct resulting posets mean ambiguity.
struct ArrangementSearch {
    const std::vector<PathInfo>& paths;
    int m = 0;
    std::vector<bool> used;
    std::vector<std::pair<int, int>> seq;  // (path index, entry endpoint vertex)
    std::vector<std::vector<Ray>> found;   // canonical ray lists

    ArrangementSearch(const std::vector<PathInfo>& p, int m_rows) : paths(p), m(m_rows) {
        used.assign(paths.size(), false);
    }

    void emit() {
        std::vector<Ray> rays;
        const size_t k = seq.size();
        for (size_t i = 0; i < k; ++i) {
            size_t j = (i + 1) % k;
            Bits fset(m);
            fset.set(paths[size_t(seq[i].first)].facet);
            fset.set(paths[size_t(seq[j].first)].facet);
            // gluing vertex between path i and path j is path j's entry
            rays.push_back({seq[j].second, std::move(fset)});
        }
        std::sort(rays.begin(), rays.end(), ray_less);
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        for (const auto& r : found)
            if (r == rays) return;
        found.push_back(std::move(rays));
    }

    // open: the vertex the next path must start at; target: the vertex the
    // last path must end at (the fixed first path's entry endpoint).
    void extend(int open, int target) {
        if (seq.size() == paths.size()) {
            if (open == target) emit();
            return;
        }
        for (size_t p = 0; p < paths.size(); ++p) {
            if (used[p]) continue;
            used[p] = true;
            if (paths[p].end_a == open) {
                seq.emplace_back(int(p), paths[p].end_a);
                extend(paths[p].end_b, target);
                seq.pop_back();
            }
            if (paths[p].end_b != paths[p].end_a && paths[p].end_b == open) {
                seq.emplace_back(int(p), paths[p].end_b);
                extend(paths[p].end_a, target);
                seq.pop_back();
            }
            used[p] = false;
        }
    }

    void run() {
        // fix the first path and one orientation; reversals give the same rays
        used[0] = true;
        seq.emplace_back(0, paths[0].end_a);
        extend(paths[0].end_b, paths[0].end_a);
        seq.pop_back();
        used[0] = false;
    }
};

}  // namespace

ReconstructedFacePoset face_poset_dim3(const IncidenceMatrix& A, bool with_top) {
    VertexSetFamily F = vertex_set_closure(A);
    if (detect_dim3(A, F) != Dim3::Three)
        throw Error(Errc::PreconditionFailed, "input does not test as a 3-polyhedron");
    VertexGraph G = vertex_graph(F);
    if (!is_two_connected(G))
        throw Error(Errc::PreconditionFailed, "vertex graph is not 2-connected");

    // classify facet subgraphs: cycles (bounded facets, K3 included) vs paths
    std::vector<PathInfo> paths;
    for (int f = 0; f < A.m; ++f) {
        const Bits& row = A.rows[size_t(f)];
        std::vector<int> nodes = row.elements();
        std::vector<int> deg(nodes.size(), 0);
        int edges = 0;
        for (size_t a = 0; a < nodes.size(); ++a)
            for (size_t b = a + 1; b < nodes.size(); ++b)
                if (G.edge(nodes[a], nodes[b])) {
                    ++deg[a];
                    ++deg[b];
                    ++edges;
                }
        bool connected = connected_within(G, row);
        int maxdeg = 0;
        for (int x : deg) maxdeg = std::max(maxdeg, x);
        bool cyc = connected && nodes.size() >= 3 && maxdeg == 2 &&
                   edges == int(nodes.size());
        bool path = connected && maxdeg <= 2 && edges == int(nodes.size()) - 1;
        if (cyc) continue;
        if (!path)
            throw Error(Errc::PreconditionFailed,
                        "facet " + std::to_string(f) + " induces neither a cycle nor a path");
        PathInfo p;
        p.facet = f;
        if (nodes.size() == 1) {
            p.end_a = p.end_b = nodes[0];
        } else {
            for (size_t a = 0; a < nodes.size(); ++a)
                if (deg[a] == 1) (p.end_a < 0 ? p.end_a : p.end_b) = nodes[a];
        }
        paths.push_back(p);
    }

    if (paths.empty()) return closure_poset(A, with_top);  // bounded

    ArrangementSearch search(paths, A.m);
    search.run();
    if (search.found.empty())
        throw Error(Errc::NoArrangement, "unbounded facet paths admit no cyclic arrangement");

    std::vector<ReconstructedFacePoset> posets;
    for (const auto& rays : search.found) {
        ReconstructedFacePoset P = assemble_face_poset(A, rays, with_top);
        bool dup = false;
        for (const auto& q : posets) dup = dup || (q == P);
        if (!dup) posets.push_back(std::move(P));
    }
    if (posets.size() > 1)
        throw Error(Errc::Ambiguous,
                    "two consistent path arrangements yield different face posets");
    return posets[0];
}

}  // namespace facetlab
