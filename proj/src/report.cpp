#include "facetlab/report.hpp"

#include <json.hpp>

#include <sstream>

#include "facetlab/generators.hpp"

namespace facetlab {

using nlohmann::json;

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Cycle: return "Cycle";
        case GraphClass::Complete: return "Complete";
        case GraphClass::Path: return "Path";
        case GraphClass::Other: return "Other";
    }
    return "?";
}

const char* to_string(Dim3 d) {
    switch (d) {
        case Dim3::Three: return "Three";
        case Dim3::AtLeastFour: return "AtLeastFour";
        case Dim3::ConeAmbiguous: return "ConeAmbiguous";
    }
    return "?";
}

AnalysisReport analyze(const IncidenceMatrix& A, const AnalyzeOptions& opts) {
    AnalysisReport r;
    r.m = A.m;
    r.n = A.n;
    r.validation = validate(A, opts.limits);

    VertexSetFamily F = vertex_set_closure(A, opts.limits.member_cap);
    r.closure_size = F.members.size();

    BoundedVerdict bv = is_bounded(F);
    r.bounded = bv.bounded;
    r.mobius = bv.mobius;
    r.facet_bounded = facets_bounded(A, F);
    r.graph_class = classify_graph(vertex_graph(F));

    if (auto w = recognize_circulant(A)) {
        r.circulant = std::make_pair(w->n, w->d);
        r.simple_simplicial = w->d;
    }

    if (A.n > 2 || (A.n == 1 && A.m >= 3)) {
        try {
            r.dim3 = detect_dim3(A, F);
        } catch (const Error& e) {
            if (e.kind != Errc::NoEdgeFound) throw;
        }
    }
    if (A.n == 2 || (A.n == 1 && A.m < 3)) {
        r.low_dim_advisory = "n <= 2: dimension is 1 (segment or ray); dim3 not applicable";
    } else if (A.n > 2) {
        bool all_small = true;
        for (const Bits& row : A.rows) all_small = all_small && row.count() <= 2;
        if (all_small && r.graph_class == GraphClass::Cycle)
            r.low_dim_advisory = "all facets have <= 2 vertices and the vertex graph is a "
                                 "cycle: d = 2 candidate";
    }

    bool any_bounded_facet = false;
    for (bool b : r.facet_bounded) any_bounded_facet = any_bounded_facet || b;
    if (any_bounded_facet) r.dim_from_bounded_facet = longest_chain(F).size;

    r.reconstruct_mode = opts.reconstruct;
    if (opts.reconstruct == ReconstructMode::Simple)
        r.reconstruction = face_poset_simple(A, opts.with_top);
    else if (opts.reconstruct == ReconstructMode::Dim3)
        r.reconstruction = face_poset_dim3(A, opts.with_top);

    return r;
}

namespace {

json ids(const Bits& b, bool one_indexed) {
    json a = json::array();
    for (int v : b.elements()) a.push_back(one_indexed ? v + 1 : v);
    return a;
}

json poset_json(const ReconstructedFacePoset& p, bool one_indexed) {
    json j;
    j["includes_top"] = p.includes_top;
    json faces = json::array();
    for (const auto& f : p.faces) {
        json face;
        face["verts"] = ids(f.verts, one_indexed);
        json rays = json::array();
        for (int r : f.ray_set.elements()) {
            json ray;
            ray["vertex"] = one_indexed ? p.rays[size_t(r)].base_vertex + 1
                                        : p.rays[size_t(r)].base_vertex;
            ray["facets"] = ids(p.rays[size_t(r)].facet_set, one_indexed);
            rays.push_back(std::move(ray));
        }
        face["rays"] = std::move(rays);
        faces.push_back(std::move(face));
    }
    j["faces"] = std::move(faces);
    json covers = json::array();
    for (auto [a, b] : p.cover_relations()) covers.push_back({a, b});
    j["covers"] = std::move(covers);
    return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r, bool one_indexed) {
    json j;
    j["schema"] = "facetlab-report/1";
    j["m"] = r.m;
    j["n"] = r.n;
    json checks = json::array();
    for (const auto& c : r.validation.checks)
        checks.push_back({{"id", c.id}, {"pass", c.pass}, {"message", c.message}});
    j["validation"] = {{"overall", r.validation.overall}, {"checks", std::move(checks)}};
    j["geometric_guarantee"] = r.validation.overall;
    j["closure_size"] = r.closure_size;
    j["mobius"] = r.mobius;
    j["bounded"] = r.bounded;
    j["facet_bounded"] = r.facet_bounded;
    j["graph_class"] = to_string(r.graph_class);
    j["circulant"] =
        r.circulant ? json{{"n", r.circulant->first}, {"d", r.circulant->second}} : json(nullptr);
    j["simple_simplicial"] = r.simple_simplicial ? json(*r.simple_simplicial) : json(nullptr);
    j["dim3"] = r.dim3 ? json(to_string(*r.dim3)) : json(nullptr);
    j["dim_from_bounded_facet"] =
        r.dim_from_bounded_facet ? json(*r.dim_from_bounded_facet) : json(nullptr);
    j["low_dim_advisory"] = r.low_dim_advisory ? json(*r.low_dim_advisory) : json(nullptr);
    j["reconstruction"] =
        r.reconstruction ? poset_json(*r.reconstruction, one_indexed) : json(nullptr);
    return j.dump(2);
}

std::string report_to_text(const AnalysisReport& r, bool one_indexed) {
    std::ostringstream out;
    out << "matrix: " << r.m << " facets, " << r.n << " vertices\n";
    out << "validation: " << (r.validation.overall ? "pass" : "FAIL") << "\n";
    for (const auto& c : r.validation.checks)
        out << "  " << c.id << " " << (c.pass ? "pass" : "FAIL") << ": " << c.message << "\n";
    if (!r.validation.overall)
        out << "  note: no geometric guarantee; results below assume a genuine "
               "polyhedron incidence matrix\n";
    out << "closure members: " << r.closure_size << "\n";
    out << "mobius number: " << r.mobius << "\n";
    out << "bounded: " << (r.bounded ? "yes" : "no") << "\n";
    out << "facet bounded:";
    for (size_t f = 0; f < r.facet_bounded.size(); ++f)
        out << " " << (one_indexed ? f + 1 : f) << (r.facet_bounded[f] ? ":yes" : ":no");
    out << "\n";
    out << "vertex graph: " << to_string(r.graph_class) << "\n";
    if (r.circulant)
        out << "circulant: M(" << r.circulant->first << "," << r.circulant->second << ")\n";
    else
        out << "circulant: no\n";
    if (r.simple_simplicial)
        out << "simple+simplicial: yes, d = " << *r.simple_simplicial << "\n";
    else
        out << "simple+simplicial: not recognizable\n";
    if (r.dim3) out << "dim3 test: " << to_string(*r.dim3) << "\n";
    if (r.dim_from_bounded_facet)
        out << "dimension from bounded facet: " << *r.dim_from_bounded_facet << "\n";
    else
        out << "dimension from bounded facet: none bounded\n";
    if (r.low_dim_advisory) out << "advisory: " << *r.low_dim_advisory << "\n";
    if (r.reconstruction) {
        out << "reconstruction (" << (r.reconstruct_mode == ReconstructMode::Simple ? "simple" : "dim3")
            << "): " << r.reconstruction->faces.size() << " faces, "
            << r.reconstruction->rays.size() << " rays\n";
    }
    return out.str();
}

std::string family_to_json(const VertexSetFamily& F, bool one_indexed) {
    json j;
    j["n"] = F.n;
    json members = json::array();
    for (const Bits& s : F.members) members.push_back(ids(s, one_indexed));
    j["members"] = std::move(members);
    return j.dump();
}

std::string moebius_table_to_json(const VertexSetFamily& F, const MoebiusTable& t,
                                  bool one_indexed) {
    json j;
    j["bottom"] = t.bottom;
    json members = json::array();
    for (size_t i = 0; i < F.members.size(); ++i)
        members.push_back({{"set", ids(F.members[i], one_indexed)}, {"mu", t.mu[i]}});
    j["members"] = std::move(members);
    json top;
    top["mode"] = t.mode == TopMode::Artificial ? "artificial" : "member";
    if (t.mode == TopMode::Member) top["set"] = ids(F.members[size_t(t.top_member)], one_indexed);
    top["mu"] = t.top;
    j["top"] = std::move(top);
    return j.dump(2);
}

std::string poset_to_json(const ReconstructedFacePoset& p, bool one_indexed) {
    return poset_json(p, one_indexed).dump(2);
}

std::string ground_truth_to_json(const GroundTruth& g, bool one_indexed) {
    json j;
    j["provenance"] = g.provenance;
    j["m"] = g.matrix.m;
    j["n"] = g.matrix.n;
    j["vfi"] = serialize_incidence(g.matrix, WireFormat::Vfi);
    j["polyhedral"] = g.polyhedral;
    if (g.polyhedral) {
        j["dim_lo"] = g.dim_lo;
        j["dim_hi"] = g.dim_hi;
        j["bounded"] = g.bounded;
        j["facet_bounded"] = g.facet_bounded;
        j["face_poset"] = g.face_poset ? poset_json(*g.face_poset, one_indexed) : json(nullptr);
    }
    return j.dump(2);
}

std::string graph_to_dot(const VertexGraph& G, bool one_indexed) {
    std::ostringstream out;
    out << "graph gamma {\n";
    for (int v = 0; v < G.node_count; ++v)
        out << "  v" << (one_indexed ? v + 1 : v) << ";\n";
    for (int v = 0; v < G.node_count; ++v)
        for (int w = G.adj[size_t(v)].next(v); w >= 0; w = G.adj[size_t(v)].next(w))
            out << "  v" << (one_indexed ? v + 1 : v) << " -- v" << (one_indexed ? w + 1 : w)
                << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_to_adjacency_text(const VertexGraph& G, bool one_indexed) {
    std::ostringstream out;
    for (int v = 0; v < G.node_count; ++v) {
        out << (one_indexed ? v + 1 : v) << ":";
        for (int w : G.adj[size_t(v)].elements()) out << " " << (one_indexed ? w + 1 : w);
        out << "\n";
    }
    return out.str();
}

}  // namespace facetlab
