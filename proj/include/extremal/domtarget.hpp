#pragma once

#include <optional>
#include <vector>

#include "extremal/diameter.hpp"
#include "extremal/graph.hpp"

namespace extremal {

// Candidate cover family: closed path neighborhoods for every expanded
// vertex, plus one implicit closed vertex neighborhood per vertex. The
// greedy pick order and the chosen subfamily are recorded for inspection.
struct CoverFamily {
    std::vector<Vertex> expanded;                 // X, in discovery order
    std::vector<std::vector<Vertex>> paths;       // P_x per expanded vertex
    std::vector<int> chosen_paths;                // indices into expanded/paths (A)
    std::vector<Vertex> chosen_vertices;          // B
};

struct DomTargetResult {
    DiameterResult diameter;
    CoverFamily cover;
};

// Diameter for graphs promised to contain a dominating target of bounded
// cardinality: center from the double sweep, extremity rounds expanding
// whole neighborhoods, a greedy set cover over path/vertex neighborhoods,
// then local max-eccentricity scans on covered paths and direct
// eccentricities on covered vertex neighborhoods. Applies the quotient
// reduction internally. Without a hint the path cutoff falls back to the
// layering estimator.
DomTargetResult diameter_dominating_target(const Graph& g, std::optional<int> k_hint = {});

} // namespace extremal
