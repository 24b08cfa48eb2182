#include "facetlab/generators.hpp"

#include <algorithm>
#include <cctype>

#include "facetlab/circulant.hpp"

namespace facetlab {

void attach_closure_poset(GroundTruth& g, const VertexSetFamily* closure) {
    VertexSetFamily local;
    if (!closure) {
        local = vertex_set_closure(g.matrix);
        closure = &local;
    }
    ReconstructedFacePoset P;
    P.n = g.matrix.n;
    for (const Bits& s : closure->members) P.faces.push_back({s, Bits(0)});
    g.face_poset = std::move(P);
}

GroundTruth polygon(int k) {
    if (k < 3) throw Error(Errc::BadParameters, "polygon needs k >= 3");
    GroundTruth g;
    g.matrix = circulant(k, 2);
    g.dim_lo = g.dim_hi = 2;
    g.bounded = true;
    g.facet_bounded.assign(size_t(k), true);
    g.provenance = "polygon(" + std::to_string(k) + ")";
    return g;
}

GroundTruth simplex(int d) {
    if (d < 1) throw Error(Errc::BadParameters, "simplex needs d >= 1");
    GroundTruth g;
    g.matrix = circulant(d + 1, d);
    g.dim_lo = g.dim_hi = d;
    g.bounded = true;
    g.facet_bounded.assign(size_t(d + 1), true);
    g.provenance = "simplex(" + std::to_string(d) + ")";
    return g;
}

GroundTruth segment() {
    GroundTruth g = simplex(1);
    g.provenance = "segment";
    return g;
}

GroundTruth ray_fixture() {
    GroundTruth g;
    g.matrix = circulant(1, 1);
    g.dim_lo = g.dim_hi = 1;
    g.bounded = false;
    // the ray's only facet is its vertex, a bounded face
    g.facet_bounded.assign(1, true);
    g.provenance = "ray";
    return g;
}

GroundTruth product(const GroundTruth& a, const GroundTruth& b) {
    if (!a.bounded || !b.bounded)
        throw Error(Errc::UnboundedInput, "product needs bounded factors");
    const int na = a.matrix.n, nb = b.matrix.n;
    const int n = na * nb;
    std::vector<Bits> rows;
    rows.reserve(size_t(a.matrix.m + b.matrix.m));
    for (const Bits& ra : a.matrix.rows) {
        Bits row(n);
        ra.for_each([&](int i) {
            for (int j = 0; j < nb; ++j) row.set(i * nb + j);
        });
        rows.push_back(std::move(row));
    }
    for (const Bits& rb : b.matrix.rows) {
        Bits row(n);
        rb.for_each([&](int j) {
            for (int i = 0; i < na; ++i) row.set(i * nb + j);
        });
        rows.push_back(std::move(row));
    }
    GroundTruth g;
    g.matrix = IncidenceMatrix::from_rows(n, std::move(rows));
    g.dim_lo = g.dim_hi = a.dim_lo + b.dim_lo;
    g.bounded = true;
    g.facet_bounded.assign(size_t(g.matrix.m), true);
    g.provenance = "product(" + a.provenance + "," + b.provenance + ")";
    return g;
}

GroundTruth pyramid(const GroundTruth& a) {
    if (!a.bounded) throw Error(Errc::UnboundedInput, "pyramid needs a bounded base");
    const int n = a.matrix.n + 1;
    const int apex = a.matrix.n;
    std::vector<Bits> rows;
    rows.reserve(size_t(a.matrix.m + 1));
    Bits base(n);
    for (int v = 0; v < a.matrix.n; ++v) base.set(v);
    rows.push_back(std::move(base));
    for (const Bits& r : a.matrix.rows) {
        Bits row(n);
        r.for_each([&](int v) { row.set(v); });
        row.set(apex);
        rows.push_back(std::move(row));
    }
    GroundTruth g;
    g.matrix = IncidenceMatrix::from_rows(n, std::move(rows));
    g.dim_lo = g.dim_hi = a.dim_lo + 1;
    g.bounded = true;
    g.facet_bounded.assign(size_t(g.matrix.m), true);
    g.provenance = "pyramid(" + a.provenance + ")";
    return g;
}

GroundTruth far_face_truncation(const GroundTruth& q, const Bits& far,
                                const VertexSetFamily* closure_of_q, bool with_poset) {
    if (!q.bounded) throw Error(Errc::BadFarFace, "far-face truncation needs a bounded input");
    VertexSetFamily local;
    if (!closure_of_q) {
        local = vertex_set_closure(q.matrix);
        closure_of_q = &local;
    }
    const VertexSetFamily& FQ = *closure_of_q;
    const int nq = q.matrix.n;
    Bits S = far;
    if (S.universe() != nq) {
        for (int v = S.first(); v >= 0; v = S.next(v))
            if (v >= nq) throw Error(Errc::BadFarFace, "far-face vertex out of range");
        S = Bits::from(nq, far.elements());
    }
    if (S.count() == nq) throw Error(Errc::BadFarFace, "far face cannot be every vertex");
    if (!FQ.index_of(S))
        throw Error(Errc::BadFarFace, "far face is not the vertex set of a face");

    // new vertex numbering: old vertices not in S, ascending
    std::vector<int> new_of(size_t(nq), -1);
    int n = 0;
    for (int v = 0; v < nq; ++v)
        if (!S.test(v)) new_of[size_t(v)] = n++;
    auto map_set = [&](const Bits& t) {
        Bits out(n);
        t.for_each([&](int v) {
            if (new_of[size_t(v)] >= 0) out.set(new_of[size_t(v)]);
        });
        return out;
    };

    std::vector<Bits> rows;
    std::vector<int> new_row_of(size_t(q.matrix.m), -1);
    std::vector<bool> fb;
    for (int f = 0; f < q.matrix.m; ++f) {
        Bits r = map_set(q.matrix.rows[size_t(f)]);
        if (r.none()) continue;  // the facet was S itself
        new_row_of[size_t(f)] = int(rows.size());
        fb.push_back(!q.matrix.rows[size_t(f)].intersects(S));
        rows.push_back(std::move(r));
    }

    GroundTruth g;
    g.matrix = IncidenceMatrix::from_rows(n, std::move(rows));
    g.dim_lo = g.dim_hi = q.dim_lo;
    g.bounded = false;
    g.facet_bounded = std::move(fb);
    g.provenance = "truncate(" + q.provenance + ", far=" + [&] {
        std::string s = "[";
        bool first = true;
        for (int v : S.elements()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "]";
    }() + ")";

    if (with_poset) {
        // faces of the truncation = faces of Q not contained in S; rays come
        // from the edges of Q with exactly one endpoint in S, and a ray lies
        // on face T iff its edge is contained in T
        struct EdgeRay {
            Bits edge;  // over Q's vertices
            Ray ray;
        };
        std::vector<EdgeRay> ers;
        for (const Bits& t : FQ.members) {
            if (t.count() != 2) continue;
            int v = t.first(), w = t.next(v);
            int inside = (S.test(v) ? 1 : 0) + (S.test(w) ? 1 : 0);
            if (inside != 1) continue;
            int base = S.test(v) ? w : v;
            Bits fset(g.matrix.m);
            for (int f = 0; f < q.matrix.m; ++f)
                if (new_row_of[size_t(f)] >= 0 && t.subset_of(q.matrix.rows[size_t(f)]))
                    fset.set(new_row_of[size_t(f)]);
            ers.push_back({t, Ray{new_of[size_t(base)], std::move(fset)}});
        }
        std::sort(ers.begin(), ers.end(),
                  [](const EdgeRay& a, const EdgeRay& b) { return ray_less(a.ray, b.ray); });
        for (size_t i = 1; i < ers.size(); ++i)
            if (ers[i].ray == ers[i - 1].ray)
                throw Error(Errc::Degenerate, "two distinct rays share a (vertex, facets) key");

        ReconstructedFacePoset P;
        P.n = n;
        const int R = int(ers.size());
        for (const auto& er : ers) P.rays.push_back(er.ray);
        for (const Bits& t : FQ.members) {
            if (t.subset_of(S)) continue;
            ReconstructedFacePoset::Face face;
            face.verts = map_set(t);
            face.ray_set = Bits(R);
            for (int r = 0; r < R; ++r)
                if (ers[size_t(r)].edge.subset_of(t)) face.ray_set.set(r);
            P.faces.push_back(std::move(face));
        }
        std::sort(P.faces.begin(), P.faces.end(), ReconstructedFacePoset::face_canon_less);
        for (size_t i = 1; i < P.faces.size(); ++i)
            if (P.faces[i] == P.faces[i - 1])
                throw Error(Errc::Degenerate, "two faces of Q collapse to the same atoms");
        g.face_poset = std::move(P);
    }
    return g;
}

GroundTruth unbounded_prism(const GroundTruth& a) {
    if (!a.bounded) throw Error(Errc::UnboundedInput, "unbounded prism needs a bounded input");
    std::vector<Bits> rows;
    rows.reserve(size_t(a.matrix.m + 1));
    rows.push_back(Bits::full(a.matrix.n));
    for (const Bits& r : a.matrix.rows) rows.push_back(r);
    GroundTruth g;
    g.matrix = IncidenceMatrix::from_rows(a.matrix.n, std::move(rows));
    g.dim_lo = g.dim_hi = a.dim_lo + 1;
    g.bounded = false;
    g.facet_bounded.assign(size_t(g.matrix.m), false);
    g.facet_bounded[0] = true;
    g.provenance = "prism_unbounded(" + a.provenance + ")";
    return g;
}

GroundTruth cone(int m) {
    if (m < 3) throw Error(Errc::BadParameters, "cone needs m >= 3");
    std::vector<Bits> rows(size_t(m), Bits::single(1, 0));
    GroundTruth g;
    g.matrix = IncidenceMatrix::from_rows(1, std::move(rows));
    g.dim_lo = 3;
    g.dim_hi = m;
    g.bounded = false;
    g.facet_bounded.assign(size_t(m), false);
    g.provenance = "cone(" + std::to_string(m) + ")";
    return g;
}

GroundTruth cone_product(const GroundTruth& q, int m) {
    if (!q.bounded) throw Error(Errc::UnboundedInput, "cone product needs a bounded polytope");
    if (m < 4) throw Error(Errc::BadParameters, "cone product needs m >= 4");
    std::vector<Bits> rows = q.matrix.rows;
    for (int i = 0; i < m; ++i) rows.push_back(Bits::full(q.matrix.n));
    GroundTruth g;
    g.matrix = IncidenceMatrix::from_rows(q.matrix.n, std::move(rows));
    g.dim_lo = q.dim_lo + 3;
    g.dim_hi = q.dim_lo + m;
    g.bounded = false;
    g.facet_bounded.assign(size_t(g.matrix.m), false);
    g.provenance = "coneprod(" + q.provenance + "," + std::to_string(m) + ")";
    return g;
}

namespace {

// Recursive-descent parser for the generator grammar. Errors carry the
// character position.
struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    bool one_indexed = false;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(Errc::Parse,
                    "generator expression, position " + std::to_string(pos) + ": " + what);
    }
    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a name");
        return s.substr(start, pos - start);
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(s.substr(start, pos - start));
    }

    GroundTruth expr() {
        std::string name = ident();
        if (name == "segment") {
            if (eat('(')) expect(')');
            return segment();
        }
        if (name == "ray") {
            if (eat('(')) expect(')');
            return ray_fixture();
        }
        expect('(');
        GroundTruth out;
        if (name == "polygon") {
            out = polygon(integer());
        } else if (name == "simplex") {
            out = simplex(integer());
        } else if (name == "cone") {
            out = cone(integer());
        } else if (name == "circulant") {
            int cn = integer();
            expect(',');
            int cd = integer();
            out = circulant_ground_truth(cn, cd);
        } else if (name == "prism") {
            out = product(segment(), expr());
        } else if (name == "pyramid") {
            out = pyramid(expr());
        } else if (name == "product") {
            GroundTruth a = expr();
            expect(',');
            GroundTruth b = expr();
            out = product(a, b);
        } else if (name == "coneprod") {
            GroundTruth a = expr();
            expect(',');
            out = cone_product(a, integer());
        } else if (name == "truncate") {
            GroundTruth q = expr();
            expect(',');
            skip_ws();
            std::string kw = ident();
            if (kw != "far") fail("expected far=[...]");
            expect('=');
            expect('[');
            Bits far(q.matrix.n);
            if (!eat(']')) {
                while (true) {
                    int v = integer();
                    if (one_indexed) --v;
                    if (v < 0 || v >= q.matrix.n) fail("far vertex out of range");
                    far.set(v);
                    if (eat(']')) break;
                    expect(',');
                }
            }
            out = far_face_truncation(q, far);
        } else {
            fail("unknown generator '" + name + "'");
        }
        expect(')');
        return out;
    }

    // ground truth for realizable circulants; bare matrix otherwise
    static GroundTruth circulant_ground_truth(int cn, int cd) {
        switch (circulant_realizability(cn, cd)) {
            case Realizability::Simplex: return simplex(cd);
            case Realizability::Polygon: return polygon(cn);
            case Realizability::Segment: return segment();
            case Realizability::Ray: return ray_fixture();
            case Realizability::NotPolyhedral: {
                GroundTruth g;
                g.matrix = circulant(cn, cd);
                g.polyhedral = false;
                g.provenance =
                    "circulant(" + std::to_string(cn) + "," + std::to_string(cd) + ")";
                return g;
            }
        }
        throw Error(Errc::BadParameters, "unreachable");
    }
};

}  // namespace

GroundTruth parse_generator_expr(const std::string& expr, bool one_indexed) {
    ExprParser p{expr, 0, one_indexed};
    GroundTruth g = p.expr();
    p.skip_ws();
    if (p.pos != expr.size()) p.fail("trailing input");
    return g;
}

}  // namespace facetlab

