#include "hcbench/cost_function.hpp"

#include <cmath>

#include "hcbench/errors.hpp"

namespace hcbench {

CostFunctionSpec CostFunctionSpec::identity() { return {Kind::identity, "identity"}; }
CostFunctionSpec CostFunctionSpec::square() { return {Kind::square, "square"}; }
CostFunctionSpec CostFunctionSpec::log1p() { return {Kind::log1p, "log1p"}; }

CostFunctionSpec CostFunctionSpec::table(std::vector<double> values) {
    if (values.empty() || values[0] != 0.0)
        throw input_error("cost function table must start with f(0) = 0");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1]))
            throw input_error("cost function table must be strictly increasing");
    }
    CostFunctionSpec spec(Kind::table, "table");
    spec.table_ = std::move(values);
    return spec;
}

CostFunctionSpec CostFunctionSpec::from_name(const std::string& name) {
    if (name == "identity") return identity();
    if (name == "square") return square();
    if (name == "log1p") return log1p();
    throw input_error("unknown cost function: " + name);
}

double CostFunctionSpec::f(int t) const {
    if (t < 0) throw contract_error("cost function argument must be nonnegative");
    switch (kind_) {
        case Kind::identity: return static_cast<double>(t);
        case Kind::square: return static_cast<double>(t) * static_cast<double>(t);
        case Kind::log1p: return std::log1p(static_cast<double>(t));
        case Kind::table:
            if (static_cast<std::size_t>(t) >= table_.size())
                throw contract_error("cost function table does not cover t=" + std::to_string(t));
            return table_[static_cast<std::size_t>(t)];
    }
    return 0.0;
}

double CostFunctionSpec::g(int t) const { return f(t + 1) - f(t); }

double compute_cf(const CostFunctionSpec& f, int n, CfVariant variant) {
    int lo = variant == CfVariant::rsc ? 4 : 8;
    if (n < lo)
        throw contract_error("compute_cf requires n >= " + std::to_string(lo) +
                             " for this variant");
    bool found = false;
    double best = 0.0;
    for (int np = lo; np <= n; ++np) {
        double denom = variant == CfVariant::rsc ? f.f(np / 2) - f.f(np / 4)
                                                 : f.f(np / 4) - f.f(np / 8);
        if (!(denom > 0.0)) continue;
        double ratio = f.f(np) / denom;
        if (!found || ratio > best) {
            best = ratio;
            found = true;
        }
    }
    if (!found) throw contract_error("compute_cf: no n' with positive denominator");
    return best;
}

} // namespace hcbench
