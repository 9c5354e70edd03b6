#ifndef HCBENCH_SDP_HC_HPP
#define HCBENCH_SDP_HC_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hcbench/cost_function.hpp"
#include "hcbench/graph.hpp"
#include "hcbench/pairs.hpp"
#include "hcbench/tree.hpp"

namespace hcbench {

/// Level-indexed relaxation of hierarchical clustering: variables x_ij^t in
/// [0,1] for levels t = 1..n-1 with implicit x_ij^0 = 1, refinement across
/// levels, per-level triangle inequalities, and per-level spreading rows
/// sum_j x_ij^t >= n - t. The triangle family is enumerated lazily during
/// validation and solving, never materialized.
struct SdpInstance {
    int n = 0;
    CostFunctionSpec f = CostFunctionSpec::identity();
    std::vector<Edge> edges;
    std::vector<double> g_mult; // g(t) for t = 1..n-1, all positive
    double total_weight = 0.0;

    int levels() const { return n - 1; }

    bool operator==(const SdpInstance& other) const;
};

SdpInstance build_instance(const Graph& g,
                           const CostFunctionSpec& f = CostFunctionSpec::identity());

/// Candidate point: x values for every (pair, level), plus optional per-level
/// Gram matrices carrying the unit vectors (x_ij^t = 1 - G^t_ij).
struct SdpAssignment {
    int n = 0;
    std::vector<double> x; // index: (t-1) * pair_count(n) + pair_index
    std::vector<std::vector<double>> gram; // per level, n*n row-major; may be empty

    double at(int t, int i, int j) const {
        if (i == j) return 0.0;
        if (t == 0) return 1.0;
        return x[static_cast<std::size_t>(t - 1) * pair_count(n) + pair_index(n, i, j)];
    }
    double& slot(int t, int i, int j) {
        return x[static_cast<std::size_t>(t - 1) * pair_count(n) + pair_index(n, i, j)];
    }

    static SdpAssignment zero(int n);
};

/// Integer point of a tree: x_ij^t = 1 exactly when t is below the size of
/// the smallest cluster containing i and j. Passes validation at tolerance 0
/// and satisfies objective = cost_general(G,T,f) - f(1) * w(E).
SdpAssignment induce_from_tree(const SdpInstance& instance, const ClusterTree& tree);

struct ValidationReport {
    struct Family {
        std::string name;
        double worst = 0.0; // largest violation, 0 when clean
        long count = 0;     // entries violating beyond the tolerance
    };
    std::vector<Family> families;
    double objective = 0.0;
    double tol = 0.0;
    bool pass = false;

    const Family* family(const std::string& name) const;
};

ValidationReport validate(const SdpInstance& instance, const SdpAssignment& a, double tol);

/// Objective value sum_t g(t) sum_{ij in E} w_ij x_ij^t.
double sdp_objective(const SdpInstance& instance, const SdpAssignment& a);

/// Text export with stable ordering (pairs lexicographic, levels ascending);
/// byte-identical across runs. import(export(I)) == I.
void export_instance(const SdpInstance& instance, std::ostream& out);
void export_instance_file(const SdpInstance& instance, const std::string& path);
SdpInstance import_instance(std::istream& in);
SdpInstance import_instance_file(const std::string& path);

/// Assignment file: one "i j t value" line per entry; '#' comments.
SdpAssignment parse_assignment(std::istream& in, int n);
SdpAssignment parse_assignment_file(const std::string& path, int n);

struct SdpLowerBound {
    double lp_value = 0.0;      // optimum of the linear relaxation
    double hc_lower_bound = 0.0; // lp_value + f(1) * w(E)
};

/// Linear relaxation dropping the vector (PSD) constraints: bounds,
/// refinement and spreading rows explicit, triangle rows by constraint
/// generation. A valid lower bound on cost_general - f(1) * w(E). When
/// `solution` is given it receives the optimal fractional point, ready for
/// round_levelwise.
SdpLowerBound sdp_lower_bound_lp(const Graph& g,
                                 const CostFunctionSpec& f = CostFunctionSpec::identity(),
                                 int max_n = 30, SdpAssignment* solution = nullptr);

/// Top-down rounding: a cluster A of size r is split by growing a ball on
/// the level-max(r/4,1) metric restricted to A; components and degenerate
/// metrics fall back to zero cuts and halving splits. The assignment must
/// validate at tolerance 1e-6.
ClusterTree round_levelwise(const Graph& g, const SdpAssignment& a);

} // namespace hcbench

#endif
