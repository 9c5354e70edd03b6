#ifndef HCBENCH_REGION_ROUNDING_HPP
#define HCBENCH_REGION_ROUNDING_HPP

#include <vector>

#include "hcbench/graph.hpp"
#include "hcbench/spreading_lp.hpp"
#include "hcbench/tree.hpp"

namespace hcbench {

/// A connected subgraph prepared for ball growing: edge lengths, node-seeded
/// volume, a double-sweep diameter estimate, and single-source distances
/// from the chosen center (an endpoint of the sweep). Distances never
/// shortcut through removed vertices.
struct VolumeState {
    Graph sub;                    // local vertex ids 0..k-1
    std::vector<double> length;   // per edge of sub, aligned with sub.edges()
    double phi_seed = 0.0;        // node volume, fixed by the caller
    double phi_total = 0.0;       // edge volume + |V| * phi_seed
    double diameter = 0.0;        // double-sweep estimate (lower-bounds the true diameter)
    int center = 0;               // sweep endpoint
    std::vector<double> dist;     // shortest-path distance from center
};

/// Builds the state (Dijkstra double sweep). Requires a connected subgraph
/// with >= 2 vertices; diameter may come out zero, in which case
/// find_ball_cut must not be called.
VolumeState make_volume_state(Graph sub, std::vector<double> length, double phi_seed);

struct BallCut {
    int center = 0;
    double radius = 0.0;
    std::vector<int> side;     // ball vertices, local ids, ascending
    double cut_weight = 0.0;
    double ball_volume = 0.0;  // internal edge volume + boundary partials + node volume
};

/// Minimum cut_weight/ball_volume over all candidate radii in [0, diameter/4]
/// (vertex events, midpoints between consecutive events, and the endpoint).
/// The returned ball always satisfies
///   cut_weight <= 8 ln((phi_total + phi_seed |V|) / phi_seed) / diameter * ball_volume,
/// which is asserted at runtime; requires diameter > 0.
BallCut find_ball_cut(const VolumeState& state);

/// Full decomposition driven by one global metric: components split first
/// (zero cut), connected parts split by find_ball_cut with distances
/// recomputed inside each part, zero-diameter parts fall back to a halving
/// split by vertex id. phi_seed is fixed at the root call.
ClusterTree decompose(const Graph& g, const MetricSolution& metric);

struct RoundLpResult {
    ClusterTree tree;
    double lp_value = 0.0;
    double tree_cost = 0.0;
    MetricSolution metric;
};

/// solve_spreading_lp followed by decompose.
RoundLpResult round_lp(const Graph& g, int lp_max_n = 30);

} // namespace hcbench

#endif
