#pragma once

#include <optional>
#include <string>

#include "facetlab/boundedness.hpp"
#include "facetlab/circulant.hpp"
#include "facetlab/generators.hpp"
#include "facetlab/reconstruct.hpp"

namespace facetlab {

enum class ReconstructMode { None, Simple, Dim3 };

struct AnalyzeOptions {
    Limits limits;
    ReconstructMode reconstruct = ReconstructMode::None;
    bool with_top = false;
};

struct AnalysisReport {
    ValidationReport validation;
    int m = 0, n = 0;
    size_t closure_size = 0;
    long long mobius = 0;
    bool bounded = false;
    std::vector<bool> facet_bounded;
    GraphClass graph_class = GraphClass::Other;
    std::optional<std::pair<int, int>> circulant;  // (n, d)
    std::optional<int> simple_simplicial;
    std::optional<Dim3> dim3;
    std::optional<int> dim_from_bounded_facet;
    std::optional<std::string> low_dim_advisory;   // d in {1,2} hints, advisory only
    std::optional<ReconstructedFacePoset> reconstruction;
    ReconstructMode reconstruct_mode = ReconstructMode::None;
};

AnalysisReport analyze(const IncidenceMatrix& A, const AnalyzeOptions& opts = {});

// JSON renderings (schema "facetlab-report/1"); one_indexed shifts all
// vertex/facet ids in the output.
std::string report_to_json(const AnalysisReport& r, bool one_indexed = false);
std::string report_to_text(const AnalysisReport& r, bool one_indexed = false);
std::string family_to_json(const VertexSetFamily& F, bool one_indexed = false);
std::string moebius_table_to_json(const VertexSetFamily& F, const MoebiusTable& t,
                                  bool one_indexed = false);
std::string poset_to_json(const ReconstructedFacePoset& p, bool one_indexed = false);
std::string ground_truth_to_json(const GroundTruth& g, bool one_indexed = false);
std::string graph_to_dot(const VertexGraph& G, bool one_indexed = false);
std::string graph_to_adjacency_text(const VertexGraph& G, bool one_indexed = false);

const char* to_string(GraphClass c);
const char* to_string(Dim3 d);

}  // namespace facetlab
