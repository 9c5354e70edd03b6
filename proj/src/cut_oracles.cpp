#include "hcbench/cut_oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "hcbench/errors.hpp"
#include "hcbench/rng.hpp"

namespace hcbench {

OracleKind oracle_kind_from_name(const std::string& name) {
    if (name == "exact") return OracleKind::exact;
    if (name == "spectral_sweep") return OracleKind::spectral_sweep;
    if (name == "spectral_plus_local") return OracleKind::spectral_plus_local;
    throw input_error("unknown oracle kind: " + name);
}

const char* oracle_kind_name(OracleKind kind) {
    switch (kind) {
        case OracleKind::exact: return "exact";
        case OracleKind::spectral_sweep: return "spectral_sweep";
        case OracleKind::spectral_plus_local: return "spectral_plus_local";
    }
    return "?";
}

namespace {

double cross_weight_of(const Graph& g, const std::vector<char>& in_side) {
    double w = 0.0;
    for (const auto& e : g.edges()) {
        if (in_side[e.u] != in_side[e.v]) w += e.w;
    }
    return w;
}

std::vector<char> membership(int n, const std::vector<int>& side) {
    std::vector<char> in(n, 0);
    for (int v : side) {
        if (v < 0 || v >= n) throw contract_error("cut side vertex out of range");
        if (in[v]) throw contract_error("cut side has a duplicate vertex");
        in[v] = 1;
    }
    return in;
}

} // namespace

Cut make_cut(const Graph& g, std::vector<int> side) {
    int n = g.vertex_count();
    if (side.empty() || static_cast<int>(side.size()) >= n)
        throw contract_error("cut side must be a nonempty proper subset");
    auto in = membership(n, side);
    std::sort(side.begin(), side.end());
    std::vector<int> other;
    other.reserve(n - side.size());
    for (int v = 0; v < n; ++v)
        if (!in[v]) other.push_back(v);

    Cut cut;
    cut.cross_weight = cross_weight_of(g, in);
    double denom = static_cast<double>(side.size()) * static_cast<double>(other.size());
    cut.sparsity = cut.cross_weight / denom;
    if (other.size() < side.size() || (other.size() == side.size() && other < side)) {
        cut.side = std::move(other);
    } else {
        cut.side = std::move(side);
    }
    return cut;
}

double sparsity(const Graph& g, const std::vector<int>& side) {
    int n = g.vertex_count();
    if (side.empty() || static_cast<int>(side.size()) >= n)
        throw contract_error("sparsity needs a nonempty proper subset");
    auto in = membership(n, side);
    double denom =
        static_cast<double>(side.size()) * static_cast<double>(n - side.size());
    return cross_weight_of(g, in) / denom;
}

Cut exact_sparsest_cut(const Graph& g, int exact_cap) {
    int n = g.vertex_count();
    if (n < 2) throw contract_error("exact_sparsest_cut needs n >= 2");
    if (n > exact_cap)
        throw resource_cap_error("exact sparsest cut refuses n=" + std::to_string(n) +
                                 " > cap " + std::to_string(exact_cap));

    auto adj = g.adjacency();
    std::vector<double> degree(n, 0.0);
    for (int v = 0; v < n; ++v)
        for (auto [u, w] : adj[v]) {
            (void)u;
            degree[v] += w;
        }

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // cross[m] built incrementally: adding the lowest vertex v of m flips its
    // edges into m's remainder from crossing to internal.
    std::vector<double> cross(static_cast<std::size_t>(full) + 1, 0.0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        int v = std::countr_zero(m);
        std::uint32_t rest = m & (m - 1);
        double into_rest = 0.0;
        for (auto [u, w] : adj[v]) {
            if (rest & (1u << u)) into_rest += w;
        }
        cross[m] = cross[rest] + degree[v] - 2.0 * into_rest;
    }

    // Each bipartition appears once as the mask containing vertex 0. The
    // canonical reported side is the smaller one; for ties, sides have equal
    // size and the one with vertex 0 is lexicographically smaller.
    bool have = false;
    double best_sparsity = 0.0;
    std::uint32_t best_side = 0;
    int best_size = 0;
    for (std::uint32_t m = 1; m < full; ++m) {
        if (!(m & 1u)) continue;
        int pc = std::popcount(m);
        std::uint32_t side_mask = (2 * pc <= n) ? m : (full ^ m);
        int size = std::min(pc, n - pc);
        double denom = static_cast<double>(pc) * static_cast<double>(n - pc);
        double sp = cross[m] / denom;
        bool better = false;
        if (!have || sp < best_sparsity) {
            better = true;
        } else if (sp == best_sparsity) {
            if (size < best_size) {
                better = true;
            } else if (size == best_size && side_mask != best_side) {
                // Equal sizes: lexicographically smaller side owns the lowest
                // differing bit.
                std::uint32_t diff = side_mask ^ best_side;
                better = (side_mask >> std::countr_zero(diff)) & 1u;
            }
        }
        if (better) {
            have = true;
            best_sparsity = sp;
            best_side = side_mask;
            best_size = size;
        }
    }

    std::vector<int> side;
    for (int v = 0; v < n; ++v)
        if (best_side & (1u << v)) side.push_back(v);
    return make_cut(g, std::move(side));
}

namespace {

Cut component_zero_cut(const Graph& g, const std::vector<std::vector<int>>& comps) {
    // Largest component versus the rest; size ties go to the component with
    // the smallest vertex (components come ordered by smallest vertex).
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        if (comps[i].size() > comps[best].size()) best = i;
    }
    return make_cut(g, comps[best]);
}

} // namespace

Cut spectral_sweep_cut(const Graph& g, const OracleSpec& spec) {
    int n = g.vertex_count();
    if (n < 2) throw contract_error("spectral_sweep_cut needs n >= 2");
    auto comps = connected_components(g);
    if (comps.size() > 1) return component_zero_cut(g, comps);

    auto adj = g.adjacency();
    std::vector<double> degree(n, 0.0);
    for (int v = 0; v < n; ++v)
        for (auto [u, w] : adj[v]) {
            (void)u;
            degree[v] += w;
        }
    double max_degree = *std::max_element(degree.begin(), degree.end());
    // Gershgorin: all Laplacian eigenvalues lie in [0, 2*max_degree], so
    // B = shift*I - L is positive semidefinite and power iteration on B,
    // with the all-ones direction removed, converges to the second-smallest
    // Laplacian eigenpair.
    double shift = 2.0 * max_degree;

    std::vector<double> x(n), lap(n);
    Rng rng(0x5eedf1ed5eedULL);
    for (int v = 0; v < n; ++v) x[v] = rng.next_double() - 0.5;

    auto project_and_normalize = [&](std::vector<double>& v) {
        double mean = 0.0;
        for (double c : v) mean += c;
        mean /= n;
        double norm = 0.0;
        for (double& c : v) {
            c -= mean;
            norm += c * c;
        }
        norm = std::sqrt(norm);
        if (norm > 0) {
            for (double& c : v) c /= norm;
        }
        return norm;
    };
    auto apply_laplacian = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) {
            double acc = degree[i] * v[i];
            for (auto [j, w] : adj[i]) acc -= w * v[j];
            out[i] = acc;
        }
    };

    project_and_normalize(x);
    bool converged = false;
    for (int iter = 0; iter < spec.eig_max_iter; ++iter) {
        apply_laplacian(x, lap);
        double lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += x[i] * lap[i];
        double residual = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = lap[i] - lambda * x[i];
            residual += r * r;
        }
        if (std::sqrt(residual) <= spec.eig_tol) {
            converged = true;
            break;
        }
        for (int i = 0; i < n; ++i) x[i] = shift * x[i] - lap[i];
        if (project_and_normalize(x) == 0.0) {
            // Degenerate direction; restart from a fresh deterministic vector.
            for (int v = 0; v < n; ++v) x[v] = rng.next_double() - 0.5;
            project_and_normalize(x);
        }
    }
    if (!converged)
        throw contract_error("spectral eigenpair iteration did not reach tolerance " +
                             format_double(spec.eig_tol) + " within " +
                             std::to_string(spec.eig_max_iter) + " iterations");

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return a < b;
    });

    // Sweep all prefixes, maintaining the cross weight incrementally.
    std::vector<char> in(n, 0);
    double cross = 0.0;
    double best_sparsity = 0.0;
    int best_k = -1;
    for (int k = 1; k <= n - 1; ++k) {
        int v = order[k - 1];
        double into = 0.0;
        for (auto [u, w] : adj[v])
            if (in[u]) into += w;
        cross += degree[v] - 2.0 * into;
        in[v] = 1;
        double sp = cross / (static_cast<double>(k) * static_cast<double>(n - k));
        if (best_k < 0 || sp < best_sparsity) {
            best_sparsity = sp;
            best_k = k;
        }
    }
    std::vector<int> side(order.begin(), order.begin() + best_k);
    return make_cut(g, std::move(side));
}

Cut local_search_improve(const Graph& g, const Cut& cut, int max_passes) {
    int n = g.vertex_count();
    auto in = membership(n, cut.side);
    int size = static_cast<int>(cut.side.size());
    if (size == 0 || size >= n) throw contract_error("local search needs a proper cut");

    auto adj = g.adjacency();
    std::vector<double> degree(n, 0.0), into_side(n, 0.0);
    for (int v = 0; v < n; ++v) {
        for (auto [u, w] : adj[v]) {
            degree[v] += w;
            if (in[u]) into_side[v] += w;
        }
    }
    double cross = cross_weight_of(g, in);
    double current = cross / (static_cast<double>(size) * static_cast<double>(n - size));

    int limit = max_passes > 0 ? max_passes : 2 * n;
    for (int pass = 0; pass < limit; ++pass) {
        int best_v = -1;
        double best_sp = current, best_cross = cross;
        for (int v = 0; v < n; ++v) {
            int new_size = in[v] ? size - 1 : size + 1;
            if (new_size == 0 || new_size == n) continue;
            // Moving v swaps which of its edges cross the cut.
            double new_cross = in[v] ? cross - (degree[v] - into_side[v]) + into_side[v]
                                     : cross - into_side[v] + (degree[v] - into_side[v]);
            double sp =
                new_cross / (static_cast<double>(new_size) * static_cast<double>(n - new_size));
            // Strict improvement only; scanning v ascending makes the
            // smallest vertex id win ties.
            if (sp < best_sp) {
                best_v = v;
                best_sp = sp;
                best_cross = new_cross;
            }
        }
        if (best_v < 0) break;
        bool was_in = in[best_v];
        in[best_v] = !was_in;
        size += was_in ? -1 : 1;
        cross = best_cross;
        current = best_sp;
        for (auto [u, w] : adj[best_v]) into_side[u] += was_in ? -w : w;
    }

    std::vector<int> side;
    for (int v = 0; v < n; ++v)
        if (in[v]) side.push_back(v);
    return make_cut(g, std::move(side));
}

Cut oracle_cut(const Graph& g, const OracleSpec& spec) {
    switch (spec.kind) {
        case OracleKind::exact: return exact_sparsest_cut(g, spec.exact_cap);
        case OracleKind::spectral_sweep: return spectral_sweep_cut(g, spec);
        case OracleKind::spectral_plus_local:
            return local_search_improve(g, spectral_sweep_cut(g, spec), spec.local_max_passes);
    }
    throw contract_error("unknown oracle kind");
}

} // namespace hcbench
