#include "collabnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "collabnet/kernels.hpp"

namespace collabnet {

std::optional<ClosenessVector> closeness_centrality(const GraphSnapshot& g) {
    const std::size_t n = g.node_count();
    if (n < 2) return std::nullopt;
    ClosenessVector cv;
    cv.scores.resize(n);
    for (NodeIndex i = 0; i < n; ++i) {
        std::vector<std::uint32_t> dist = bfs_distances(g, i);
        for (std::uint32_t d : dist)
            if (d == kUnreached)
                throw std::invalid_argument("closeness_centrality: graph is disconnected");
        std::uint64_t sum = kernels::sum_u32(dist);
        cv.scores[i] = static_cast<double>(n - 1) / static_cast<double>(sum);
        if (cv.scores[i] > cv.scores[cv.max_node]) cv.max_node = i;
    }
    return cv;
}

namespace {

using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr u128 kU128Max = ~static_cast<u128>(0);

bool mul_u128(u128 a, u128 b, u128& out) {
    if (a != 0 && b > kU128Max / a) return false;
    out = a * b;
    return true;
}

// Exact sum of (s_i - s_min)/s_i as a reduced fraction. Distance sums are
// integers, so a star normalizes to exactly 1 and transitive graphs to
// exactly 0. Returns false if the accumulator would overflow 128 bits.
bool rational_diff_sum(const std::vector<std::uint64_t>& sums, std::uint64_t s_min, u128& num,
                       u128& den) {
    num = 0;
    den = 1;
    for (std::uint64_t s : sums) {
        u128 tn = s - s_min;
        u128 td = s;
        u128 g = gcd_u128(tn == 0 ? td : tn, td);
        tn /= g;
        td /= g;
        u128 g2 = gcd_u128(den, td);
        u128 new_den, scaled_num, scaled_term;
        if (!mul_u128(den / g2, td, new_den)) return false;
        if (!mul_u128(num, td / g2, scaled_num)) return false;
        if (!mul_u128(tn, den / g2, scaled_term)) return false;
        if (scaled_num > kU128Max - scaled_term) return false;
        num = scaled_num + scaled_term;
        den = new_den;
        u128 g3 = gcd_u128(num == 0 ? den : num, den);
        num /= g3;
        den /= g3;
    }
    return true;
}

}  // namespace

std::optional<double> closeness_centralization(const GraphSnapshot& g) {
    const std::size_t n = g.node_count();
    if (n < 3) return std::nullopt;

    std::vector<std::uint64_t> sums(n);
    for (NodeIndex i = 0; i < n; ++i) {
        std::vector<std::uint32_t> dist = bfs_distances(g, i);
        for (std::uint32_t d : dist)
            if (d == kUnreached)
                throw std::invalid_argument("closeness_centralization: graph is disconnected");
        sums[i] = kernels::sum_u32(dist);
    }
    std::uint64_t s_min = *std::min_element(sums.begin(), sums.end());

    // Cc_global = (2N-3)/(s_min*(N-2)) * sum_i (s_i - s_min)/s_i
    u128 num, den;
    if (rational_diff_sum(sums, s_min, num, den)) {
        u128 final_num, final_den;
        if (mul_u128(num, 2 * static_cast<u128>(n) - 3, final_num) &&
            mul_u128(den, static_cast<u128>(s_min) * (n - 2), final_den))
            return static_cast<double>(final_num) / static_cast<double>(final_den);
    }
    // overflow fallback: plain floating-point accumulation
    double diff_sum = 0.0;
    for (std::uint64_t s : sums)
        diff_sum += static_cast<double>(s - s_min) / static_cast<double>(s);
    return diff_sum * (2.0 * static_cast<double>(n) - 3.0) /
           (static_cast<double>(s_min) * (static_cast<double>(n) - 2.0));
}

ClusteringResult clustering_coefficient(const GraphSnapshot& g) {
    const std::size_t n = g.node_count();
    ClusteringResult res;
    res.per_node.assign(n, 0.0);
    if (n == 0) return res;
    double total = 0.0;
    for (NodeIndex i = 0; i < n; ++i) {
        const auto& nbrs = g.adj[i];
        const std::size_t d = nbrs.size();
        if (d < 2) continue;
        // edges among neighbors; each counted twice across the v loop
        std::size_t twice_links = 0;
        for (NodeIndex v : nbrs)
            twice_links += kernels::count_common_sorted(nbrs, g.adj[v]);
        res.per_node[i] = static_cast<double>(twice_links) /
                          (static_cast<double>(d) * static_cast<double>(d - 1));
        total += res.per_node[i];
    }
    res.global = total / static_cast<double>(n);
    return res;
}

DegreeCorrelationTable degree_correlation_table(const GraphSnapshot& g, bool remaining_degree) {
    DegreeCorrelationTable t;
    if (g.edge_count == 0) return t;
    const double stubs = 2.0 * static_cast<double>(g.edge_count);
    const std::uint32_t shift = remaining_degree ? 1 : 0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> counts;
    for (NodeIndex u = 0; u < g.node_count(); ++u) {
        const auto du = static_cast<std::uint32_t>(g.degree(u)) - shift;
        for (NodeIndex v : g.adj[u]) {
            const auto dv = static_cast<std::uint32_t>(g.degree(v)) - shift;
            ++counts[{du, dv}];
        }
    }
    for (const auto& [pair, c] : counts) {
        double frac = static_cast<double>(c) / stubs;
        t.e[pair] = frac;
        t.q[pair.first] += frac;
    }
    double mean = 0.0, mean_sq = 0.0;
    for (const auto& [deg, frac] : t.q) {
        mean += deg * frac;
        mean_sq += static_cast<double>(deg) * deg * frac;
    }
    double var = mean_sq - mean * mean;
    t.sigma_q = var > 0.0 ? std::sqrt(var) : 0.0;
    return t;
}

std::optional<double> degree_assortativity(const GraphSnapshot& g, bool remaining_degree) {
    if (g.edge_count == 0) return std::nullopt;
    // sigma(q) = 0 exactly when all stub degrees coincide; detect that
    // combinatorially rather than by comparing floats to zero
    std::uint32_t min_d = kUnreached, max_d = 0;
    for (NodeIndex u = 0; u < g.node_count(); ++u) {
        if (g.adj[u].empty()) continue;
        auto d = static_cast<std::uint32_t>(g.degree(u));
        min_d = std::min(min_d, d);
        max_d = std::max(max_d, d);
    }
    if (min_d == max_d) return std::nullopt;

    DegreeCorrelationTable t = degree_correlation_table(g, remaining_degree);
    double mean = 0.0;
    for (const auto& [deg, frac] : t.q) mean += deg * frac;
    double cross = 0.0;
    for (const auto& [pair, frac] : t.e)
        cross += static_cast<double>(pair.first) * pair.second * frac;
    return (cross - mean * mean) / (t.sigma_q * t.sigma_q);
}

MetricRecord compute_metric_record(std::span<const TemporalEdge> edges, Day window_start,
                                   const MetricOptions& opts) {
    MetricRecord rec;
    rec.window_start = window_start;
    GraphSnapshot g = build_snapshot(edges, window_start);
    rec.n_total = g.node_count();
    if (g.empty()) return rec;

    ComponentDecomposition cd = connected_components(g);
    GraphSnapshot lcc = induced_subgraph(g, cd.lcc_nodes);
    rec.n_lcc = lcc.node_count();
    rec.edges_lcc = lcc.edge_count;
    rec.lcc_fraction = cd.lcc_fraction;
    rec.mean_degree = 2.0 * static_cast<double>(lcc.edge_count) /
                      static_cast<double>(lcc.node_count());
    rec.closeness_centralization = closeness_centralization(lcc);
    rec.clustering = clustering_coefficient(lcc).global;
    rec.assortativity = degree_assortativity(lcc, opts.remaining_degree);
    return rec;
}

}  // namespace collabnet
