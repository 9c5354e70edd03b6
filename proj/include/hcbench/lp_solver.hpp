#ifndef HCBENCH_LP_SOLVER_HPP
#define HCBENCH_LP_SOLVER_HPP

#include <utility>
#include <vector>

namespace hcbench {

/// minimize c.x  subject to  A x >= b,  lower <= x <= upper.
/// All bounds must be finite with lower < upper; every row needs at least one
/// term. Row terms must be sorted by variable index.
struct LpProblem {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<double> lower;
    std::vector<double> upper;

    struct Row {
        std::vector<std::pair<int, double>> terms;
        double rhs = 0.0;
    };
    std::vector<Row> rows;

    int add_var(double c, double lo, double up) {
        objective.push_back(c);
        lower.push_back(lo);
        upper.push_back(up);
        return num_vars++;
    }
    void add_row(std::vector<std::pair<int, double>> terms, double rhs) {
        rows.push_back({std::move(terms), rhs});
    }
};

struct LpSolution {
    std::vector<double> x;
    double objective = 0.0;
    bool optimal = false;
    int iterations = 0;
};

/// Primal-dual interior-point solve (Mehrotra predictor-corrector). The
/// normal-equation matrix is factored with a banded Cholesky whose bandwidth
/// is read off the rows, so problems whose rows couple only nearby variables
/// stay cheap. Deterministic.
LpSolution solve_lp(const LpProblem& lp, int max_iter = 100, double tol = 1e-9);

} // namespace hcbench

#endif
