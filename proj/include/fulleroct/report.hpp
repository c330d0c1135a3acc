#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fulleroct/certificate.hpp"
#include "fulleroct/graph.hpp"
#include "fulleroct/spectra.hpp"

namespace fulleroct {

struct AnalysisOptions {
    bool spectra = false;
    double eig_tolerance = default_eig_tolerance;
    /// Checked only against graphs whose hash matches.
    std::optional<Certificate> certificate;
    bool timings = false;
};

/// Keys of every analysis record, in output order.
const std::vector<std::string>& report_keys();

/// One analysis record. Analyses that were not requested or could not run are
/// null; a graph that is not a fullerene gets a message under "error".
nlohmann::ordered_json analyze_graph(const EmbeddedGraph& g, int index, const AnalysisOptions& options = {});

/// True if any proved bound in the record came out violated.
bool has_violation(const nlohmann::ordered_json& record);

}  // namespace fulleroct
