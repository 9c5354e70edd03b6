#ifndef HCBENCH_CUT_ORACLES_HPP
#define HCBENCH_CUT_ORACLES_HPP

#include <string>
#include <vector>

#include "hcbench/graph.hpp"

namespace hcbench {

/// A bipartition (S, V\S) with its cross weight and uniform sparsity
/// w(S, V\S) / (|S| * |V\S|). The stored side is canonical: the smaller side,
/// with size ties broken toward the lexicographically smaller vertex list.
struct Cut {
    std::vector<int> side; // sorted ascending
    double cross_weight = 0.0;
    double sparsity = 0.0;
};

enum class OracleKind { exact, spectral_sweep, spectral_plus_local };

OracleKind oracle_kind_from_name(const std::string& name);
const char* oracle_kind_name(OracleKind kind);

struct OracleSpec {
    OracleKind kind = OracleKind::exact;
    int exact_cap = 20;        // enumeration refuses larger graphs
    double eig_tol = 1e-8;     // eigenpair residual tolerance
    int eig_max_iter = 10000;
    int local_max_passes = 0;  // 0 means 2n
};

/// w(S, V\S) / (|S| * |V\S|); S must be a nonempty proper subset.
double sparsity(const Graph& g, const std::vector<int>& side);

/// Globally minimum-sparsity cut by enumeration of all bipartitions. Ties go
/// to the smaller side, then the lexicographically smaller side.
Cut exact_sparsest_cut(const Graph& g, int exact_cap = 20);

/// Fiedler-style heuristic: second-smallest Laplacian eigenpair by shifted
/// power iteration with the all-ones direction projected out, then the best
/// of the n-1 sweep prefixes. Disconnected graphs yield a zero cut splitting
/// off the largest component.
Cut spectral_sweep_cut(const Graph& g, const OracleSpec& spec = {});

/// Greedy single-vertex moves while the sparsity strictly decreases; never
/// empties a side. The result is never worse than the input.
Cut local_search_improve(const Graph& g, const Cut& cut, int max_passes = 0);

/// Dispatch on spec.kind.
Cut oracle_cut(const Graph& g, const OracleSpec& spec);

/// Rebuilds a Cut (canonical side, cross weight, sparsity) from any nonempty
/// proper subset.
Cut make_cut(const Graph& g, std::vector<int> side);

} // namespace hcbench

#endif
