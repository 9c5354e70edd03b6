#include "hcbench/sdp_hc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "hcbench/errors.hpp"
#include "hcbench/lp_solver.hpp"
#include "hcbench/region_rounding.hpp"

namespace hcbench {

bool SdpInstance::operator==(const SdpInstance& other) const {
    if (n != other.n || f.name() != other.f.name() || g_mult != other.g_mult ||
        total_weight != other.total_weight || edges.size() != other.edges.size())
        return false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u != other.edges[i].u || edges[i].v != other.edges[i].v ||
            edges[i].w != other.edges[i].w)
            return false;
    }
    return true;
}

SdpInstance build_instance(const Graph& g, const CostFunctionSpec& f) {
    if (g.vertex_count() < 2) throw contract_error("sdp instance needs n >= 2");
    SdpInstance inst;
    inst.n = g.vertex_count();
    inst.f = f;
    inst.edges = g.edges();
    inst.total_weight = g.total_weight();
    inst.g_mult.resize(inst.levels());
    for (int t = 1; t <= inst.levels(); ++t) {
        double gt = f.g(t);
        if (!(gt > 0.0)) throw contract_error("level multiplier g(t) must be positive");
        inst.g_mult[t - 1] = gt;
    }
    return inst;
}

SdpAssignment SdpAssignment::zero(int n) {
    SdpAssignment a;
    a.n = n;
    a.x.assign(static_cast<std::size_t>(n - 1) * pair_count(n), 0.0);
    return a;
}

SdpAssignment induce_from_tree(const SdpInstance& instance, const ClusterTree& tree) {
    tree.validate_for(instance.n);
    int n = instance.n;
    SdpAssignment a = SdpAssignment::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int cluster = tree.node(tree.lca(i, j)).leaf_count;
            for (int t = 1; t < cluster; ++t) a.slot(t, i, j) = 1.0;
        }
    }
    return a;
}

double sdp_objective(const SdpInstance& instance, const SdpAssignment& a) {
    double total = 0.0;
    for (int t = 1; t <= instance.levels(); ++t) {
        double level = 0.0;
        for (const auto& e : instance.edges) level += e.w * a.at(t, e.u, e.v);
        total += instance.g_mult[t - 1] * level;
    }
    return total;
}

namespace {

// Full eigenvalue range of a small symmetric matrix by cyclic Jacobi sweeps;
// used for the PSD check.
double smallest_eigenvalue(std::vector<double> m, int n) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += m[i * n + j] * m[i * n + j];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m[p * n + q];
                if (std::abs(apq) < 1e-18) continue;
                double app = m[p * n + p], aqq = m[q * n + q];
                double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
                double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    double akp = m[k * n + p], akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = m[p * n + k], aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    double lo = m[0];
    for (int i = 1; i < n; ++i) lo = std::min(lo, m[i * n + i]);
    return lo;
}

} // namespace

const ValidationReport::Family* ValidationReport::family(const std::string& name) const {
    for (const auto& fam : families)
        if (fam.name == name) return &fam;
    return nullptr;
}

ValidationReport validate(const SdpInstance& instance, const SdpAssignment& a, double tol) {
    int n = instance.n;
    if (a.n != n) throw contract_error("assignment size mismatch");
    if (a.x.size() != static_cast<std::size_t>(instance.levels()) * pair_count(n))
        throw contract_error("assignment is missing (pair, level) entries");
    if (!a.gram.empty() && a.gram.size() != static_cast<std::size_t>(instance.levels()))
        throw contract_error("gram matrices must cover every level");

    ValidationReport report;
    report.tol = tol;

    auto track = [&](ValidationReport::Family& fam, double violation) {
        if (violation > fam.worst) fam.worst = violation;
        if (violation > tol) ++fam.count;
    };

    ValidationReport::Family refinement{"refinement", 0.0, 0};
    ValidationReport::Family bounds{"bounds", 0.0, 0};
    ValidationReport::Family triangle{"triangle", 0.0, 0};
    ValidationReport::Family spreading{"spreading", 0.0, 0};
    for (int t = 1; t <= instance.levels(); ++t) {
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                row += a.at(t, i, j);
            }
            track(spreading, (n - t) - row);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double x = a.at(t, i, j);
                track(bounds, std::max(-x, x - 1.0));
                track(refinement, x - a.at(t - 1, i, j));
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    track(triangle, x - a.at(t, i, k) - a.at(t, j, k));
                }
            }
        }
    }
    report.families = {refinement, bounds, triangle, spreading};

    if (!a.gram.empty()) {
        ValidationReport::Family unit{"unit_anchor", 0.0, 0};
        ValidationReport::Family gram_match{"gram_match", 0.0, 0};
        ValidationReport::Family psd{"psd", 0.0, 0};
        for (int t = 1; t <= instance.levels(); ++t) {
            const auto& gm = a.gram[t - 1];
            if (gm.size() != static_cast<std::size_t>(n) * n)
                throw contract_error("gram matrix has wrong shape");
            for (int i = 0; i < n; ++i) {
                track(unit, std::abs(gm[i * n + i] - 1.0));
                for (int j = i + 1; j < n; ++j) {
                    track(gram_match, std::abs(gm[i * n + j] - gm[j * n + i]));
                    track(gram_match, std::abs(a.at(t, i, j) - (1.0 - gm[i * n + j])));
                }
            }
            track(psd, -smallest_eigenvalue(gm, n));
        }
        report.families.push_back(unit);
        report.families.push_back(gram_match);
        report.families.push_back(psd);
    }

    report.objective = sdp_objective(instance, a);
    report.pass = true;
    for (const auto& fam : report.families)
        if (fam.worst > tol) report.pass = false;
    return report;
}

void export_instance(const SdpInstance& instance, std::ostream& out) {
    out << "sdphc 1\n";
    out << "n " << instance.n << "\n";
    out << "levels " << instance.levels() << "\n";
    out << "f " << instance.f.name() << "\n";
    out << "edges " << instance.edges.size() << "\n";
    for (const auto& e : instance.edges)
        out << e.u << " " << e.v << " " << format_double(e.w) << "\n";
    for (int t = 1; t <= instance.levels(); ++t) {
        out << "level " << t << "\n";
        out << "g " << format_double(instance.g_mult[t - 1]) << "\n";
        for (const auto& e : instance.edges)
            out << "obj " << e.u << " " << e.v << " "
                << format_double(e.w * instance.g_mult[t - 1]) << "\n";
        for (int i = 0; i < instance.n; ++i)
            out << "row spreading " << i << " rhs " << instance.n - t << "\n";
        if (t > 1) {
            for (int i = 0; i < instance.n; ++i)
                for (int j = i + 1; j < instance.n; ++j)
                    out << "row refinement " << i << " " << j << "\n";
        }
        out << "row triangle all\n";
        out << "row bounds all\n";
    }
    out << "end\n";
}

void export_instance_file(const SdpInstance& instance, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open export file: " + path);
    export_instance(instance, out);
    if (!out) throw input_error("failed writing export file: " + path);
}

SdpInstance import_instance(std::istream& in) {
    auto expect = [&](const std::string& tag) {
        std::string word;
        if (!(in >> word) || word != tag)
            throw input_error("sdp import: expected '" + tag + "'");
    };
    expect("sdphc");
    int version;
    if (!(in >> version) || version != 1) throw input_error("sdp import: unsupported version");
    expect("n");
    int n;
    if (!(in >> n) || n < 2) throw input_error("sdp import: bad n");
    expect("levels");
    int levels;
    if (!(in >> levels) || levels != n - 1) throw input_error("sdp import: bad level count");
    expect("f");
    std::string fname;
    in >> fname;
    expect("edges");
    std::size_t m;
    if (!(in >> m)) throw input_error("sdp import: bad edge count");
    std::vector<Edge> edges(m);
    for (auto& e : edges) {
        if (!(in >> e.u >> e.v >> e.w)) throw input_error("sdp import: bad edge line");
    }
    Graph g(n, edges);
    SdpInstance inst = build_instance(g, CostFunctionSpec::from_name(fname));

    // The per-level blocks are redundant with (n, f, edges); verify the g
    // multipliers and skip the tagged rows.
    std::string tok;
    if (!(in >> tok)) throw input_error("sdp import: truncated file");
    for (int t = 1; t <= levels; ++t) {
        if (tok != "level") throw input_error("sdp import: expected 'level'");
        int lt;
        if (!(in >> lt) || lt != t) throw input_error("sdp import: levels out of order");
        if (!(in >> tok) || tok != "g") throw input_error("sdp import: expected 'g'");
        double gval;
        if (!(in >> gval)) throw input_error("sdp import: bad g value");
        if (gval != inst.g_mult[t - 1])
            throw input_error("sdp import: g multiplier mismatch at level " + std::to_string(t));
        while (in >> tok && (tok == "obj" || tok == "row")) {
            std::string rest;
            std::getline(in, rest);
        }
        if (!in) throw input_error("sdp import: truncated file");
    }
    if (tok != "end") throw input_error("sdp import: expected 'end'");
    return inst;
}

SdpInstance import_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open sdp instance file: " + path);
    return import_instance(in);
}

SdpAssignment parse_assignment(std::istream& in, int n) {
    SdpAssignment a = SdpAssignment::zero(n);
    std::vector<char> seen(a.x.size(), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream fields(stripped);
        int i, j, t;
        double value;
        if (!(fields >> i)) continue; // blank or comment line
        if (!(fields >> j >> t >> value))
            throw input_error("assignment line " + std::to_string(line_no) +
                              ": expected 'i j t value'");
        if (i == j || i < 0 || j < 0 || i >= n || j >= n)
            throw input_error("assignment line " + std::to_string(line_no) + ": bad pair");
        if (t < 1 || t > n - 1)
            throw input_error("assignment line " + std::to_string(line_no) + ": bad level");
        a.slot(t, i, j) = value;
        seen[static_cast<std::size_t>(t - 1) * pair_count(n) + pair_index(n, i, j)] = 1;
    }
    for (char s : seen) {
        if (!s) throw input_error("assignment does not cover all (pair, level) keys");
    }
    return a;
}

SdpAssignment parse_assignment_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open assignment file: " + path);
    return parse_assignment(in, n);
}

SdpLowerBound sdp_lower_bound_lp(const Graph& g, const CostFunctionSpec& f, int max_n,
                                 SdpAssignment* solution) {
    int n = g.vertex_count();
    if (n < 2) throw contract_error("sdp_lower_bound_lp needs n >= 2");
    if (n > max_n)
        throw resource_cap_error("sdp lower-bound LP refuses n=" + std::to_string(n) + " > cap " +
                                 std::to_string(max_n));
    SdpInstance inst = build_instance(g, f);
    int P = pair_count(n);
    int L = inst.levels();

    LpProblem lp;
    lp.num_vars = P * L;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.lower.assign(lp.num_vars, 0.0);
    lp.upper.assign(lp.num_vars, 1.0);
    auto var = [&](int t, int p) { return (t - 1) * P + p; };
    for (int t = 1; t <= L; ++t)
        for (const auto& e : g.edges())
            lp.objective[var(t, pair_index(n, e.u, e.v))] += inst.g_mult[t - 1] * e.w;

    // Spreading rows (n per level) and refinement rows (one per pair per
    // adjacent level pair) are explicit; level-major variable order keeps the
    // normal matrix banded with bandwidth P.
    for (int t = 1; t <= L; ++t) {
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<int, double>> terms;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                terms.push_back({var(t, pair_index(n, i, j)), 1.0});
            }
            std::sort(terms.begin(), terms.end());
            lp.add_row(std::move(terms), static_cast<double>(n - t));
        }
    }
    for (int t = 2; t <= L; ++t) {
        for (int p = 0; p < P; ++p) {
            lp.add_row({{var(t - 1, p), 1.0}, {var(t, p), -1.0}}, 0.0);
        }
    }

    LpSolution sol;
    int round_limit = 10 * n * n;
    bool clean = false;
    for (int round = 0; round < round_limit && !clean; ++round) {
        sol = solve_lp(lp);
        if (!sol.optimal) throw contract_error("sdp lower-bound LP did not converge");
        // Most violated triangle rows, bounded per round.
        struct Viol {
            double amount;
            int t, i, j, k; // x_ij > x_ik + x_jk
        };
        std::vector<Viol> viols;
        for (int t = 1; t <= L; ++t) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    double xij = sol.x[var(t, pair_index(n, i, j))];
                    for (int k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        double excess = xij - sol.x[var(t, pair_index(n, i, k))] -
                                        sol.x[var(t, pair_index(n, j, k))];
                        if (excess > 1e-9) viols.push_back({excess, t, i, j, k});
                    }
                }
        }
        if (viols.empty()) {
            clean = true;
            break;
        }
        std::stable_sort(viols.begin(), viols.end(),
                         [](const Viol& a, const Viol& b) { return a.amount > b.amount; });
        std::size_t batch = std::min<std::size_t>(viols.size(), 64 + 4 * static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < batch; ++i) {
            const Viol& v = viols[i];
            std::vector<std::pair<int, double>> terms{
                {var(v.t, pair_index(n, v.i, v.j)), -1.0},
                {var(v.t, pair_index(n, v.i, v.k)), 1.0},
                {var(v.t, pair_index(n, v.j, v.k)), 1.0},
            };
            std::sort(terms.begin(), terms.end());
            lp.add_row(std::move(terms), 0.0);
        }
    }
    if (!clean) throw contract_error("sdp lower-bound LP hit its round limit");

    if (solution) {
        *solution = SdpAssignment::zero(n);
        solution->x = sol.x;
    }
    SdpLowerBound bound;
    bound.lp_value = sol.objective;
    bound.hc_lower_bound = sol.objective + f.f(1) * inst.total_weight;
    return bound;
}

namespace {

struct LevelwiseRounder {
    const Graph& g;
    const SdpAssignment& a;
    TreeBuilder builder;

    int recurse(const std::vector<int>& cluster) {
        int r = static_cast<int>(cluster.size());
        if (r == 1) return builder.add_leaf(cluster[0]);
        Graph sub = induced_subgraph(g, cluster);
        auto comps = connected_components(sub);
        std::vector<int> local_side;
        if (comps.size() > 1) {
            std::size_t pick = 0;
            for (std::size_t i = 1; i < comps.size(); ++i)
                if (comps[i].size() > comps[pick].size()) pick = i;
            local_side = comps[pick];
        } else {
            int level = std::max(r / 4, 1);
            std::vector<double> length(sub.edges().size());
            double phi = 0.0;
            for (std::size_t i = 0; i < length.size(); ++i) {
                const auto& e = sub.edges()[i];
                length[i] = a.at(level, cluster[e.u], cluster[e.v]);
                phi += e.w * length[i];
            }
            VolumeState state = make_volume_state(std::move(sub), std::move(length), phi / r);
            if (phi > 0.0 && state.diameter > 0.0) {
                local_side = find_ball_cut(state).side;
            } else {
                for (int i = 0; i < r / 2; ++i) local_side.push_back(i);
            }
        }
        std::vector<char> in(cluster.size(), 0);
        for (int v : local_side) in[v] = 1;
        std::vector<int> side, rest;
        for (std::size_t i = 0; i < cluster.size(); ++i)
            (in[i] ? side : rest).push_back(cluster[i]);
        int left = recurse(side);
        int right = recurse(rest);
        return builder.add_internal({left, right});
    }
};

} // namespace

ClusterTree round_levelwise(const Graph& g, const SdpAssignment& a) {
    SdpInstance inst = build_instance(g, CostFunctionSpec::identity());
    ValidationReport report = validate(inst, a, 1e-6);
    if (!report.pass) {
        std::string worst;
        for (const auto& fam : report.families)
            if (fam.worst > report.tol) worst += (worst.empty() ? "" : ", ") + fam.name;
        throw contract_error("assignment fails validation (" + worst + ")");
    }
    LevelwiseRounder rounder{g, a, {}};
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    int root = rounder.recurse(all);
    return rounder.builder.finish(root);
}

} // namespace hcbench
