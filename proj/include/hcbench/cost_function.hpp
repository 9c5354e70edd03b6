#ifndef HCBENCH_COST_FUNCTION_HPP
#define HCBENCH_COST_FUNCTION_HPP

#include <string>
#include <vector>

namespace hcbench {

/// Scaling function f applied to cluster sizes in the generalized tree cost.
/// Restricted to a registered family plus user lookup tables so evaluation is
/// exact and serializable. Must be strictly increasing with f(0) = 0.
class CostFunctionSpec {
public:
    enum class Kind { identity, square, log1p, table };

    static CostFunctionSpec identity();
    static CostFunctionSpec square();
    static CostFunctionSpec log1p();
    /// values[t] = f(t); validated strictly increasing with values[0] == 0.
    static CostFunctionSpec table(std::vector<double> values);
    /// "identity" | "square" | "log1p".
    static CostFunctionSpec from_name(const std::string& name);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    /// f(t). Table kind requires t within the table domain.
    double f(int t) const;
    /// g(t) = f(t+1) - f(t); strictly positive.
    double g(int t) const;

    bool is_identity() const { return kind_ == Kind::identity; }

private:
    CostFunctionSpec(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    std::vector<double> table_;
};

enum class CfVariant { rsc, sdp };

/// Distortion constant: max over n' of f(n') / (f(floor(n'/2)) - f(floor(n'/4)))
/// for the rsc variant, and f(n') / (f(floor(n'/4)) - f(floor(n'/8))) for the
/// sdp variant. n' ranges over [4, n] (rsc) or [8, n] (sdp); values of n'
/// whose denominator is not strictly positive are skipped.
double compute_cf(const CostFunctionSpec& f, int n, CfVariant variant);

} // namespace hcbench

#endif
