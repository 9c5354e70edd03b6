#ifndef HCBENCH_HC_COST_HPP
#define HCBENCH_HC_COST_HPP

#include <vector>

#include "hcbench/cost_function.hpp"
#include "hcbench/graph.hpp"
#include "hcbench/tree.hpp"

namespace hcbench {

/// Sum over edges of w_ij * |leaves(T[i v j])|.
double tree_cost(const Graph& g, const ClusterTree& tree);

/// Sum over edges of w_ij * f(|leaves(T[i v j])|); equals tree_cost for the
/// identity function.
double tree_cost_general(const Graph& g, const ClusterTree& tree, const CostFunctionSpec& f);

/// E_T(t): edges whose endpoints lie in different maximal clusters of size
/// <= t. E_T(0) is all of E. Returns edge indices into g.edges().
std::vector<int> level_cut_edges(const Graph& g, const ClusterTree& tree, int t);

struct LevelIdentityResult {
    double lhs = 0.0; // sum over t of w(E_T(t)) * g(t)
    double rhs = 0.0; // tree_cost_general
    bool equal = false;
};

/// Charging identity: sum_t w(E_T(t)) * g(t) equals the generalized cost.
/// Exact for integer weights with the identity function; otherwise compared
/// at absolute tolerance 1e-9.
LevelIdentityResult check_level_identity(const Graph& g, const ClusterTree& tree,
                                         const CostFunctionSpec& f);

} // namespace hcbench

#endif
