#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "collabnet/graph.hpp"

namespace collabnet {

// Per-node closeness Cc(i) = (N-1) / sum of shortest-path lengths to all
// other nodes, on a connected graph with N >= 2. Scores lie in (0, 1].
struct ClosenessVector {
    std::vector<double> scores;  // by node index
    NodeIndex max_node = 0;      // highest score, smallest index on ties
};

// Throws std::invalid_argument if the graph is disconnected; returns nullopt
// for N < 2.
std::optional<ClosenessVector> closeness_centrality(const GraphSnapshot& g);

// Freeman closeness centralization: sum of (Cc(n*) - Cc(i)) normalized by the
// star-network value (N-2)(N-1)/(2N-3). 1.0 on stars, 0.0 on
// vertex-transitive graphs. nullopt for N < 3.
std::optional<double> closeness_centralization(const GraphSnapshot& g);

struct ClusteringResult {
    std::vector<double> per_node;  // 0 for degree < 2
    double global = 0.0;           // mean over all nodes
};

ClusteringResult clustering_coefficient(const GraphSnapshot& g);

// Joint degree distribution over stub pairs: both orientations of every edge
// contribute one (degree_source, degree_target) pair, so e is symmetric and
// sums to 1.
struct DegreeCorrelationTable {
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> e;  // (i,j) -> fraction
    std::map<std::uint32_t, double> q;                            // marginal
    double sigma_q = 0.0;
};

DegreeCorrelationTable degree_correlation_table(const GraphSnapshot& g,
                                                bool remaining_degree = false);

// r = sum_ij i*j*(e_ij - q_i*q_j) / sigma(q)^2. nullopt when E = 0 or when
// every stub attaches to equal-degree nodes (sigma(q) = 0).
std::optional<double> degree_assortativity(const GraphSnapshot& g,
                                           bool remaining_degree = false);

// All per-window values. Metrics are computed on the LCC; nulls mark the
// documented degenerate cases, never errors.
struct MetricRecord {
    Day window_start = 0;
    std::size_t n_total = 0;  // window nodes before LCC restriction
    std::size_t n_lcc = 0;
    std::size_t edges_lcc = 0;
    std::optional<double> lcc_fraction;             // null only for empty windows
    std::optional<double> mean_degree;              // 2E/N on the LCC
    std::optional<double> closeness_centralization; // null for N < 3
    std::optional<double> clustering;               // null only for empty windows
    std::optional<double> assortativity;            // null when sigma(q) = 0
};

struct MetricOptions {
    bool remaining_degree = false;
};

MetricRecord compute_metric_record(std::span<const TemporalEdge> edges, Day window_start,
                                   const MetricOptions& opts = {});

}  // namespace collabnet
