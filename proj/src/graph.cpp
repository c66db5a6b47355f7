#include "collabnet/graph.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace collabnet {

GraphSnapshot build_snapshot(std::span<const TemporalEdge> edges, Day window_start) {
    GraphSnapshot g;
    g.window_start = window_start;
    if (edges.empty()) return g;

    g.node_ids.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        g.node_ids.push_back(e.source_id);
        g.node_ids.push_back(e.target_id);
    }
    std::sort(g.node_ids.begin(), g.node_ids.end());
    g.node_ids.erase(std::unique(g.node_ids.begin(), g.node_ids.end()), g.node_ids.end());

    std::unordered_map<std::string_view, NodeIndex> index;
    index.reserve(g.node_ids.size());
    for (NodeIndex i = 0; i < g.node_ids.size(); ++i) index.emplace(g.node_ids[i], i);

    std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) {
        NodeIndex u = index.at(e.source_id);
        NodeIndex v = index.at(e.target_id);
        assert(u != v);  // self-loops dropped at derivation
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    g.adj.resize(g.node_ids.size());
    for (auto [u, v] : pairs) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    g.edge_count = pairs.size();
    return g;
}

std::vector<std::uint32_t> bfs_distances(const GraphSnapshot& g, NodeIndex source) {
    std::vector<std::uint32_t> dist(g.node_count(), kUnreached);
    std::vector<NodeIndex> frontier;  // queue realized as a growing vector
    frontier.reserve(g.node_count());
    dist[source] = 0;
    frontier.push_back(source);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        NodeIndex u = frontier[head];
        std::uint32_t du = dist[u];
        for (NodeIndex v : g.adj[u]) {
            if (dist[v] == kUnreached) {
                dist[v] = du + 1;
                frontier.push_back(v);
            }
        }
    }
    return dist;
}

ComponentDecomposition connected_components(const GraphSnapshot& g) {
    ComponentDecomposition cd;
    const std::size_t n = g.node_count();
    cd.component_id.assign(n, kUnreached);
    std::vector<NodeIndex> stack;
    for (NodeIndex s = 0; s < n; ++s) {
        if (cd.component_id[s] != kUnreached) continue;
        NodeIndex cid = static_cast<NodeIndex>(cd.component_sizes.size());
        std::size_t size = 0;
        cd.component_id[s] = cid;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeIndex u = stack.back();
            stack.pop_back();
            ++size;
            for (NodeIndex v : g.adj[u]) {
                if (cd.component_id[v] == kUnreached) {
                    cd.component_id[v] = cid;
                    stack.push_back(v);
                }
            }
        }
        cd.component_sizes.push_back(size);
    }
    if (n == 0) return cd;

    // Components are discovered in order of their minimum node index, so the
    // first maximal one realizes the smallest-minimum-id tie-break.
    NodeIndex lcc = 0;
    for (NodeIndex c = 1; c < cd.component_sizes.size(); ++c)
        if (cd.component_sizes[c] > cd.component_sizes[lcc]) lcc = c;

    for (NodeIndex i = 0; i < n; ++i)
        if (cd.component_id[i] == lcc) cd.lcc_nodes.push_back(i);
    cd.lcc_fraction = static_cast<double>(cd.lcc_nodes.size()) / static_cast<double>(n);
    return cd;
}

GraphSnapshot induced_subgraph(const GraphSnapshot& g, std::span<const NodeIndex> nodes) {
    GraphSnapshot sub;
    sub.window_start = g.window_start;
    std::vector<NodeIndex> remap(g.node_count(), kUnreached);
    for (NodeIndex new_i = 0; new_i < nodes.size(); ++new_i) {
        NodeIndex old_i = nodes[new_i];
        if (old_i >= g.node_count()) throw std::out_of_range("induced_subgraph: unknown node");
        remap[old_i] = new_i;
        sub.node_ids.push_back(g.node_ids[old_i]);
    }
    sub.adj.resize(nodes.size());
    std::size_t directed = 0;
    for (NodeIndex new_i = 0; new_i < nodes.size(); ++new_i) {
        for (NodeIndex v : g.adj[nodes[new_i]]) {
            if (remap[v] != kUnreached) {
                sub.adj[new_i].push_back(remap[v]);
                ++directed;
            }
        }
        // input nodes are ascending, so remapped neighbors stay sorted
    }
    sub.edge_count = directed / 2;
    return sub;
}

void write_edge_list(std::ostream& out, const GraphSnapshot& g) {
    out << "# window_start=" << format_date(g.window_start) << " N=" << g.node_count()
        << " E=" << g.edge_count << '\n';
    for (NodeIndex u = 0; u < g.node_count(); ++u)
        for (NodeIndex v : g.adj[u])
            if (u < v) out << g.node_ids[u] << ',' << g.node_ids[v] << '\n';
}

}  // namespace collabnet
