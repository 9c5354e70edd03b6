#ifndef HCBENCH_RSC_HPP
#define HCBENCH_RSC_HPP

#include <vector>

#include "hcbench/cost_function.hpp"
#include "hcbench/cut_oracles.hpp"
#include "hcbench/graph.hpp"
#include "hcbench/tree.hpp"

namespace hcbench {

/// One record per internal node of the recursive-sparsest-cut tree, in the
/// order clusters were split (pre-order, larger cluster first on ties is not
/// guaranteed; records carry the cluster size).
struct SplitRecord {
    int cluster_size = 0;    // r
    int small_side_size = 0; // s <= floor(r/2)
    double cut_weight = 0.0;
    double sparsity = 0.0;   // cut_weight / (s * (r - s))
    int charge_lo = 0;       // floor(r/4)
    int charge_hi = 0;       // floor(r/2)
    std::vector<int> small_side; // original vertex ids, ascending
};

struct RscResult {
    ClusterTree tree;
    std::vector<SplitRecord> trace;
};

/// Top-down recursive sparsest cut. Disconnected clusters are split along a
/// zero-weight component cut (largest component versus the rest) before the
/// oracle is consulted. Deterministic whenever the oracle is.
RscResult rsc_build(const Graph& g, const OracleSpec& oracle);

/// Generalized cost of the tree rsc_build produces (the tree itself does not
/// depend on f).
double rsc_cost(const Graph& g, const OracleSpec& oracle, const CostFunctionSpec& f);

} // namespace hcbench

#endif
