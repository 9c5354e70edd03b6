#ifndef HCBENCH_EXACT_OPT_HPP
#define HCBENCH_EXACT_OPT_HPP

#include "hcbench/cost_function.hpp"
#include "hcbench/graph.hpp"
#include "hcbench/tree.hpp"

namespace hcbench {

inline constexpr int kDefaultOptCap = 16;

/// Exact minimum of the generalized tree cost over all decomposition trees,
/// by dynamic programming over vertex subsets (every optimal tree has a
/// binary representative, so bipartition splits suffice). O(3^n) work;
/// refuses n above the cap.
double opt_cost(const Graph& g, const CostFunctionSpec& f = CostFunctionSpec::identity(),
                int cap = kDefaultOptCap);

/// A tree attaining opt_cost exactly. Ties in the DP go to the numerically
/// smallest first-split submask (the submask containing the subset's lowest
/// vertex), so the output is reproducible.
ClusterTree opt_tree(const Graph& g, const CostFunctionSpec& f = CostFunctionSpec::identity(),
                     int cap = kDefaultOptCap);

} // namespace hcbench

#endif
