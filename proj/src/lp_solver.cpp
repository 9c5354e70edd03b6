#include "hcbench/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "hcbench/errors.hpp"

namespace hcbench {

namespace {

// Lower-band symmetric storage: entry(i, i-d) lives at band[i * stride + d].
struct BandMatrix {
    int n = 0;
    int bw = 0;
    std::vector<double> data;

    void reset(int n_, int bw_) {
        n = n_;
        bw = bw_;
        data.assign(static_cast<std::size_t>(n) * (bw + 1), 0.0);
    }
    double& at(int i, int d) { return data[static_cast<std::size_t>(i) * (bw + 1) + d]; }

    // In-place Cholesky; tiny diagonal bumps keep late interior-point
    // iterations from failing on near-singular scalings.
    void factor() {
        for (int j = 0; j < n; ++j) {
            double diag = at(j, 0);
            int lead = std::min(bw, j);
            for (int d = 1; d <= lead; ++d) {
                double l = at(j, d);
                diag -= l * l;
            }
            if (diag < 1e-30) diag = 1e-30;
            diag = std::sqrt(diag);
            at(j, 0) = diag;
            int last = std::min(n - 1, j + bw);
            for (int i = j + 1; i <= last; ++i) {
                double acc = at(i, i - j);
                int kmin = std::max({0, i - bw, j - bw});
                for (int k = kmin; k < j; ++k) acc -= at(i, i - k) * at(j, j - k);
                at(i, i - j) = acc / diag;
            }
        }
    }

    void solve(std::vector<double>& rhs) const {
        const double* a = data.data();
        auto entry = [&](int i, int d) { return a[static_cast<std::size_t>(i) * (bw + 1) + d]; };
        for (int i = 0; i < n; ++i) {
            double acc = rhs[i];
            int kmin = std::max(0, i - bw);
            for (int k = kmin; k < i; ++k) acc -= entry(i, i - k) * rhs[k];
            rhs[i] = acc / entry(i, 0);
        }
        for (int i = n - 1; i >= 0; --i) {
            double acc = rhs[i];
            int kmax = std::min(n - 1, i + bw);
            for (int k = i + 1; k <= kmax; ++k) acc -= entry(k, k - i) * rhs[k];
            rhs[i] = acc / entry(i, 0);
        }
    }
};

struct Vec {
    static double inf_norm(const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
};

} // namespace

LpSolution solve_lp(const LpProblem& lp, int max_iter, double tol) {
    const int P = lp.num_vars;
    const int m = static_cast<int>(lp.rows.size());
    LpSolution sol;
    if (P == 0) {
        sol.optimal = true;
        return sol;
    }

    // Shift to zero lower bounds.
    std::vector<double> ub(P), c(lp.objective);
    for (int i = 0; i < P; ++i) {
        ub[i] = lp.upper[i] - lp.lower[i];
        if (!(ub[i] > 0.0)) throw contract_error("lp variable with empty box");
    }
    std::vector<double> b(m);
    int bw = 0;
    for (int r = 0; r < m; ++r) {
        const auto& row = lp.rows[r];
        if (row.terms.empty()) throw contract_error("lp row without terms");
        double shift = 0.0;
        for (auto [j, a] : row.terms) shift += a * lp.lower[j];
        b[r] = row.rhs - shift;
        bw = std::max(bw, row.terms.back().first - row.terms.front().first);
    }

    auto mat_vec = [&](const std::vector<double>& y, std::vector<double>& out) {
        for (int r = 0; r < m; ++r) {
            double acc = 0.0;
            for (auto [j, a] : lp.rows[r].terms) acc += a * y[j];
            out[r] = acc;
        }
    };
    // Primal y, s (row slack), t (upper slack); dual lam, z (lower), w (upper).
    std::vector<double> y(P), t(P), z(P, 1.0), w(P, 1.0);
    std::vector<double> s(m), lam(m, 1.0);
    double cscale = std::max(1.0, Vec::inf_norm(c));
    for (int i = 0; i < P; ++i) {
        y[i] = 0.5 * ub[i];
        t[i] = ub[i] - y[i];
        z[i] = cscale;
        w[i] = cscale;
    }
    std::vector<double> ay(m);
    mat_vec(y, ay);
    for (int r = 0; r < m; ++r) {
        s[r] = std::max(1.0, ay[r] - b[r]);
        lam[r] = cscale;
    }

    std::vector<double> f1(m), f3(P), f4(P), f5(m), f6(P);
    std::vector<double> dl(m); // lam/s row scaling
    std::vector<double> rhs(P), dy(P), dz(P), dw(P), dt(P);
    std::vector<double> ds(m), dlam(m);
    std::vector<double> dy_a(P), dz_a(P), dw_a(P), dt_a(P), ds_a(m), dlam_a(m);
    BandMatrix normal;

    double bscale = 1.0 + Vec::inf_norm(b) + Vec::inf_norm(ub);

    auto compute_residuals = [&]() {
        mat_vec(y, ay);
        for (int r = 0; r < m; ++r) f1[r] = ay[r] - s[r] - b[r];
        for (int i = 0; i < P; ++i) f3[i] = c[i] - z[i] + w[i];
        for (int r = 0; r < m; ++r)
            for (auto [j, a] : lp.rows[r].terms) f3[j] -= a * lam[r];
    };

    auto solve_newton = [&](const std::vector<double>& r4, const std::vector<double>& r5,
                            const std::vector<double>& r6, std::vector<double>& out_dy,
                            std::vector<double>& out_dz, std::vector<double>& out_dw,
                            std::vector<double>& out_dt, std::vector<double>& out_ds,
                            std::vector<double>& out_dlam) {
        // M dy = -F3 - A^T(r5/s + dl*F1) - r4/y + r6/t  (F2 = 0: t is kept
        // exactly complementary to y on every update).
        for (int i = 0; i < P; ++i) rhs[i] = -f3[i] - r4[i] / y[i] + r6[i] / t[i];
        std::vector<double> rowv(m);
        for (int r = 0; r < m; ++r) rowv[r] = r5[r] / s[r] + dl[r] * f1[r];
        for (int r = 0; r < m; ++r)
            for (auto [j, a] : lp.rows[r].terms) rhs[j] -= a * rowv[r];
        out_dy = rhs;
        normal.solve(out_dy);
        for (int i = 0; i < P; ++i) {
            out_dt[i] = -out_dy[i];
            out_dz[i] = (-r4[i] - z[i] * out_dy[i]) / y[i];
            out_dw[i] = (-r6[i] - w[i] * out_dt[i]) / t[i];
        }
        mat_vec(out_dy, out_ds);
        for (int r = 0; r < m; ++r) {
            out_ds[r] += f1[r];
            out_dlam[r] = (-r5[r] - lam[r] * out_ds[r]) / s[r];
        }
    };

    auto max_step = [](const std::vector<double>& v, const std::vector<double>& dv) {
        double a = 1.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (dv[i] < 0.0) a = std::min(a, -v[i] / dv[i]);
        }
        return a;
    };

    int denom = 2 * P + m;
    for (int iter = 0; iter < max_iter; ++iter) {
        compute_residuals();
        double mu = 0.0;
        for (int i = 0; i < P; ++i) mu += y[i] * z[i] + t[i] * w[i];
        for (int r = 0; r < m; ++r) mu += s[r] * lam[r];
        mu /= denom;

        double obj = 0.0;
        for (int i = 0; i < P; ++i) obj += c[i] * y[i];
        double rel_p = Vec::inf_norm(f1) / bscale;
        double rel_d = Vec::inf_norm(f3) / cscale;
        if (rel_p <= tol && rel_d <= tol && mu <= tol * (1.0 + std::abs(obj))) {
            sol.optimal = true;
            sol.iterations = iter;
            break;
        }

        // Normal matrix.
        normal.reset(P, bw);
        for (int i = 0; i < P; ++i) normal.at(i, 0) = z[i] / y[i] + w[i] / t[i];
        for (int r = 0; r < m; ++r) {
            dl[r] = lam[r] / s[r];
            const auto& terms = lp.rows[r].terms;
            for (std::size_t a = 0; a < terms.size(); ++a) {
                for (std::size_t bidx = 0; bidx <= a; ++bidx) {
                    normal.at(terms[a].first, terms[a].first - terms[bidx].first) +=
                        dl[r] * terms[a].second * terms[bidx].second;
                }
            }
        }
        normal.factor();

        // Affine predictor.
        for (int i = 0; i < P; ++i) {
            f4[i] = y[i] * z[i];
            f6[i] = t[i] * w[i];
        }
        for (int r = 0; r < m; ++r) f5[r] = s[r] * lam[r];
        solve_newton(f4, f5, f6, dy_a, dz_a, dw_a, dt_a, ds_a, dlam_a);

        double ap = std::min(max_step(y, dy_a), std::min(max_step(t, dt_a), max_step(s, ds_a)));
        double ad =
            std::min(max_step(z, dz_a), std::min(max_step(w, dw_a), max_step(lam, dlam_a)));
        double mu_aff = 0.0;
        for (int i = 0; i < P; ++i)
            mu_aff += (y[i] + ap * dy_a[i]) * (z[i] + ad * dz_a[i]) +
                      (t[i] + ap * dt_a[i]) * (w[i] + ad * dw_a[i]);
        for (int r = 0; r < m; ++r) mu_aff += (s[r] + ap * ds_a[r]) * (lam[r] + ad * dlam_a[r]);
        mu_aff /= denom;
        double ratio = mu_aff / mu;
        double sigma = ratio * ratio * ratio;

        // Corrector.
        for (int i = 0; i < P; ++i) {
            f4[i] = y[i] * z[i] + dy_a[i] * dz_a[i] - sigma * mu;
            f6[i] = t[i] * w[i] + dt_a[i] * dw_a[i] - sigma * mu;
        }
        for (int r = 0; r < m; ++r) f5[r] = s[r] * lam[r] + ds_a[r] * dlam_a[r] - sigma * mu;
        solve_newton(f4, f5, f6, dy, dz, dw, dt, ds, dlam);

        double eta = 0.995;
        double step_p =
            std::min(1.0, eta * std::min(max_step(y, dy),
                                         std::min(max_step(t, dt), max_step(s, ds))));
        double step_d =
            std::min(1.0, eta * std::min(max_step(z, dz),
                                         std::min(max_step(w, dw), max_step(lam, dlam))));
        for (int i = 0; i < P; ++i) {
            y[i] += step_p * dy[i];
            t[i] += step_p * dt[i];
            z[i] += step_d * dz[i];
            w[i] += step_d * dw[i];
        }
        for (int r = 0; r < m; ++r) {
            s[r] += step_p * ds[r];
            lam[r] += step_d * dlam[r];
        }
        sol.iterations = iter + 1;
    }

    sol.x.resize(P);
    sol.objective = 0.0;
    for (int i = 0; i < P; ++i) {
        sol.x[i] = std::clamp(y[i] + lp.lower[i], lp.lower[i], lp.upper[i]);
        sol.objective += lp.objective[i] * sol.x[i];
    }
    return sol;
}

} // namespace hcbench
