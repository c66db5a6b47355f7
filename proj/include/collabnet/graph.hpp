#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "collabnet/event_log.hpp"
#include "collabnet/time.hpp"

namespace collabnet {

using NodeIndex = std::uint32_t;

// Undirected simple graph for one window. Node indices are dense and ordered
// by node id, so index comparisons double as lexicographic id comparisons.
struct GraphSnapshot {
    std::vector<std::string> node_ids;           // index -> id, sorted ascending
    std::vector<std::vector<NodeIndex>> adj;     // per-node sorted neighbor lists
    std::size_t edge_count = 0;
    Day window_start = 0;

    std::size_t node_count() const { return node_ids.size(); }
    std::size_t degree(NodeIndex i) const { return adj[i].size(); }
    bool empty() const { return node_ids.empty(); }
};

struct ComponentDecomposition {
    std::vector<NodeIndex> component_id;  // per node
    std::vector<std::size_t> component_sizes;
    std::vector<NodeIndex> lcc_nodes;  // sorted ascending
    double lcc_fraction = 0.0;
};

// Collapses directed multi-edges to undirected simple edges; the node set is
// the endpoints of surviving edges (isolated users never appear).
GraphSnapshot build_snapshot(std::span<const TemporalEdge> edges, Day window_start);

constexpr std::uint32_t kUnreached = 0xffffffffu;

// Unweighted shortest-path lengths from source; kUnreached marks nodes
// outside source's component.
std::vector<std::uint32_t> bfs_distances(const GraphSnapshot& g, NodeIndex source);

// LCC ties are broken by the smallest minimum node id (= smallest index).
ComponentDecomposition connected_components(const GraphSnapshot& g);

// Subgraph induced by `nodes` (sorted, unique, all valid in g).
GraphSnapshot induced_subgraph(const GraphSnapshot& g, std::span<const NodeIndex> nodes);

// Edge-list export: header comment with window_start, N, E, then one
// "u,v" line per edge.
void write_edge_list(std::ostream& out, const GraphSnapshot& g);

}  // namespace collabnet
