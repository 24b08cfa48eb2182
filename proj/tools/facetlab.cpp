// facetlab: analyze vertex-facet incidence matrices of pointed polyhedra.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "facetlab/report.hpp"

namespace fl = facetlab;

namespace {

// exit codes per the interface contract
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kValidationError = 2;   // with --strict
constexpr int kPreconditionError = 3; // reconstruction preconditions

struct GlobalOpts {
    bool json = false;
    bool one_indexed = false;
    bool strict = false;
    fl::Limits limits;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fl::Error(fl::Errc::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fl::IncidenceMatrix load(const std::string& path) { return fl::parse_incidence_any(slurp(path)); }

int classify_exit(const fl::Error& e) {
    switch (e.kind) {
        case fl::Errc::Parse:
        case fl::Errc::EmptyFacet:
            return kParseError;
        case fl::Errc::PreconditionFailed:
        case fl::Errc::NotSimple:
        case fl::Errc::Degenerate:
        case fl::Errc::Ambiguous:
        case fl::Errc::NoArrangement:
        case fl::Errc::NoEdgeFound:
            return kPreconditionError;
        default:
            return kParseError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-facet incidence analysis for pointed polyhedra"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_flag("--one-indexed", g.one_indexed, "print vertex/facet ids 1-based");
    app.add_flag("--strict", g.strict, "exit 2 when validation fails");
    app.add_option("--limit", g.limits.member_cap, "closure member cap");
    app.add_option("--chain-limit", g.limits.chain_cap, "oracle chain cap");

    // analyze
    std::string an_path;
    bool an_simple = false, an_dim3 = false, an_with_top = false;
    auto* analyze = app.add_subcommand("analyze", "full report on an incidence matrix");
    analyze->add_option("file", an_path, "input .vfi or .json ('-' for stdin)")->required();
    analyze->add_flag("--assume-simple", an_simple, "also reconstruct the face poset (simple rule)");
    analyze->add_flag("--dim3", an_dim3, "also reconstruct the face poset (3-polyhedron rule)");
    analyze->add_flag("--with-top", an_with_top, "include the improper top face");

    // mobius
    std::string mo_path;
    bool mo_table = false;
    auto* mobius = app.add_subcommand("mobius", "Moebius number of the closure lattice");
    mobius->add_option("file", mo_path)->required();
    mobius->add_flag("--table", mo_table, "dump the full table as JSON");

    // closure
    std::string cl_path;
    auto* closure_cmd = app.add_subcommand("closure", "vertex sets of faces as JSON");
    closure_cmd->add_option("file", cl_path)->required();

    // oracle euler
    std::string or_path;
    auto* oracle = app.add_subcommand("oracle", "independent oracles");
    auto* euler = oracle->add_subcommand("euler", "reduced Euler characteristic by chain count");
    euler->add_option("file", or_path)->required();

    // graph
    std::string gr_path;
    bool gr_dot = false;
    auto* graph = app.add_subcommand("graph", "vertex graph from the incidences");
    graph->add_option("file", gr_path)->required();
    graph->add_flag("--dot", gr_dot, "DOT output");

    // circulant recognize
    std::string ci_path;
    auto* circ = app.add_subcommand("circulant", "circulant matrix tools");
    auto* circ_rec = circ->add_subcommand("recognize", "recognize up to row/column permutation");
    circ_rec->add_option("file", ci_path)->required();

    // reconstruct
    std::string re_path;
    bool re_simple = false, re_dim3 = false, re_with_top = false;
    auto* rec = app.add_subcommand("reconstruct", "face poset reconstruction");
    rec->add_option("file", re_path)->required();
    rec->add_flag("--assume-simple", re_simple, "simple-polyhedron rule");
    rec->add_flag("--dim3", re_dim3, "3-polyhedron rule (2-connected graph)");
    rec->add_flag("--with-top", re_with_top, "include the improper top face");

    // generate
    std::vector<std::string> ge_args;
    std::string ge_out;
    bool ge_ground_truth = false;
    auto* gen = app.add_subcommand("generate",
                                   "write instances: an expression like "
                                   "'truncate(pyramid(polygon(4)), far=[4])', or 'circulant n d'");
    gen->add_option("expr", ge_args, "generator expression (or: circulant n d)")->required();
    gen->add_option("-o,--output", ge_out, "output file (default stdout)");
    gen->add_flag("--ground-truth", ge_ground_truth, "emit metadata JSON instead of .vfi");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            fl::IncidenceMatrix A = load(an_path);
            fl::AnalyzeOptions opts;
            opts.limits = g.limits;
            opts.with_top = an_with_top;
            if (an_simple) opts.reconstruct = fl::ReconstructMode::Simple;
            if (an_dim3) opts.reconstruct = fl::ReconstructMode::Dim3;
            fl::AnalysisReport r = fl::analyze(A, opts);
            std::cout << (g.json ? fl::report_to_json(r, g.one_indexed)
                                 : fl::report_to_text(r, g.one_indexed));
            if (g.json) std::cout << "\n";
            if (g.strict && !r.validation.overall) return kValidationError;
            return kOk;
        }
        if (*mobius) {
            fl::IncidenceMatrix A = load(mo_path);
            if (g.strict && !fl::validate(A, g.limits).overall) return kValidationError;
            fl::VertexSetFamily F = fl::vertex_set_closure(A, g.limits.member_cap);
            if (mo_table) {
                fl::MoebiusTable t = fl::moebius_table(F, fl::TopMode::Artificial);
                std::cout << fl::moebius_table_to_json(F, t, g.one_indexed) << "\n";
            } else {
                std::cout << fl::moebius_number(F) << "\n";
            }
            return kOk;
        }
        if (*closure_cmd) {
            fl::IncidenceMatrix A = load(cl_path);
            if (g.strict && !fl::validate(A, g.limits).overall) return kValidationError;
            fl::VertexSetFamily F = fl::vertex_set_closure(A, g.limits.member_cap);
            std::cout << fl::family_to_json(F, g.one_indexed) << "\n";
            return kOk;
        }
        if (*euler) {
            fl::IncidenceMatrix A = load(or_path);
            if (g.strict && !fl::validate(A, g.limits).overall) return kValidationError;
            fl::VertexSetFamily F = fl::vertex_set_closure(A, g.limits.member_cap);
            std::cout << fl::euler_oracle(F, g.limits.chain_cap) << "\n";
            return kOk;
        }
        if (*graph) {
            fl::IncidenceMatrix A = load(gr_path);
            if (g.strict && !fl::validate(A, g.limits).overall) return kValidationError;
            fl::VertexGraph G = fl::vertex_graph(fl::vertex_set_closure(A, g.limits.member_cap));
            std::cout << (gr_dot ? fl::graph_to_dot(G, g.one_indexed)
                                 : fl::graph_to_adjacency_text(G, g.one_indexed));
            return kOk;
        }
        if (*circ_rec) {
            fl::IncidenceMatrix A = load(ci_path);
            auto w = fl::recognize_circulant(A);
            if (g.json) {
                if (w) {
                    std::cout << "{\"n\":" << w->n << ",\"d\":" << w->d << "}\n";
                } else {
                    std::cout << "null\n";
                }
            } else if (w) {
                std::cout << "circulant M(" << w->n << "," << w->d << ")\n";
                std::cout << "row permutation:";
                for (int x : w->row_perm) std::cout << " " << (g.one_indexed ? x + 1 : x);
                std::cout << "\ncolumn permutation:";
                for (int x : w->col_perm) std::cout << " " << (g.one_indexed ? x + 1 : x);
                std::cout << "\nrealizability: "
                          << fl::to_string(fl::circulant_realizability(w->n, w->d)) << "\n";
            } else {
                std::cout << "not a circulant\n";
            }
            return kOk;
        }
        if (*rec) {
            fl::IncidenceMatrix A = load(re_path);
            if (g.strict && !fl::validate(A, g.limits).overall) return kValidationError;
            if (re_simple == re_dim3)
                throw fl::Error(fl::Errc::PreconditionFailed,
                                "choose exactly one of --assume-simple or --dim3");
            fl::ReconstructedFacePoset P = re_simple ? fl::face_poset_simple(A, re_with_top)
                                                     : fl::face_poset_dim3(A, re_with_top);
            std::cout << fl::poset_to_json(P, g.one_indexed) << "\n";
            return kOk;
        }
        if (*gen) {
            fl::GroundTruth gt;
            if (ge_args.size() == 3 && ge_args[0] == "circulant") {
                gt = fl::parse_generator_expr("circulant(" + ge_args[1] + "," + ge_args[2] + ")",
                                              g.one_indexed);
            } else if (ge_args.size() == 1) {
                gt = fl::parse_generator_expr(ge_args[0], g.one_indexed);
            } else {
                throw fl::Error(fl::Errc::Parse, "generate takes one expression or: circulant n d");
            }
            std::string out;
            if (ge_ground_truth) {
                if (gt.polyhedral && gt.bounded && !gt.face_poset) fl::attach_closure_poset(gt);
                out = fl::ground_truth_to_json(gt, g.one_indexed) + "\n";
            } else {
                out = fl::serialize_incidence(gt.matrix, fl::WireFormat::Vfi) + "\n";
            }
            if (ge_out.empty()) {
                std::cout << out;
            } else {
                std::ofstream f(ge_out, std::ios::binary);
                if (!f) throw fl::Error(fl::Errc::Parse, "cannot write '" + ge_out + "'");
                f << out;
            }
            return kOk;
        }
    } catch (const fl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}
