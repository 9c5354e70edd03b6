#include "hcbench/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "hcbench/errors.hpp"
#include "hcbench/rng.hpp"

namespace hcbench {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    for (auto& e : edges_) {
        if (e.u == e.v) throw input_error("self-loop on vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") out of range for n=" + std::to_string(n_));
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has non-positive weight");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw input_error("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                              std::to_string(edges_[i].v) + ")");
    }
}

double Graph::total_weight() const {
    double sum = 0.0;
    for (const auto& e : edges_) sum += e.w;
    return sum;
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    return adj;
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw input_error("edge list line " + std::to_string(line_no) + ": " + what);
}

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    // Duplicate detection keyed on the unordered pair, reported with the
    // offending line number before Graph's constructor runs.
    std::vector<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0) parse_fail(line_no, "expected vertex count");
            std::string rest;
            if (fields >> rest) parse_fail(line_no, "trailing tokens after vertex count");
            continue;
        }
        long long u, v;
        double w;
        if (!(fields >> u >> v >> w)) parse_fail(line_no, "expected 'u v w'");
        std::string rest;
        if (fields >> rest) parse_fail(line_no, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line_no, "vertex index out of range");
        if (u == v) parse_fail(line_no, "self-loop");
        if (!(w > 0.0) || !std::isfinite(w)) parse_fail(line_no, "non-positive weight");
        int a = static_cast<int>(std::min(u, v));
        int b = static_cast<int>(std::max(u, v));
        if (std::find(seen.begin(), seen.end(), std::pair(a, b)) != seen.end())
            parse_fail(line_no, "duplicate edge");
        seen.emplace_back(a, b);
        edges.push_back({a, b, w});
    }
    if (n < 0) throw input_error("edge list: missing vertex count");
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out.push_back('\n');
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u);
        out.push_back(' ');
        out += std::to_string(e.v);
        out.push_back(' ');
        out += format_double(e.w);
        out.push_back('\n');
    }
    return out;
}

const char* family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::clique: return "clique";
        case GraphFamily::path: return "path";
        case GraphFamily::star: return "star";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::disjoint_cliques: return "disjoint_cliques";
        case GraphFamily::planted_partition: return "planted_partition";
        case GraphFamily::erdos_renyi: return "erdos_renyi";
    }
    return "?";
}

GraphFamily family_from_name(const std::string& name) {
    for (auto f : {GraphFamily::clique, GraphFamily::path, GraphFamily::star, GraphFamily::cycle,
                   GraphFamily::disjoint_cliques, GraphFamily::planted_partition,
                   GraphFamily::erdos_renyi}) {
        if (name == family_name(f)) return f;
    }
    throw input_error("unknown graph family: " + name);
}

std::string GeneratorSpec::to_string() const {
    std::string s = family_name(family);
    s.push_back('(');
    switch (family) {
        case GraphFamily::clique:
        case GraphFamily::path:
        case GraphFamily::star:
        case GraphFamily::cycle:
            s += "n=" + std::to_string(n);
            break;
        case GraphFamily::disjoint_cliques:
            s += "k=" + std::to_string(blocks) + ",s=" + std::to_string(block_size);
            break;
        case GraphFamily::planted_partition:
            s += "k=" + std::to_string(blocks) + ",s=" + std::to_string(block_size) +
                 ",p_in=" + format_double(p_in) + ",p_out=" + format_double(p_out);
            break;
        case GraphFamily::erdos_renyi:
            s += "n=" + std::to_string(n) + ",p=" + format_double(p);
            break;
    }
    s += ",seed=" + std::to_string(seed) + ")";
    return s;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw input_error("invalid generator params: " + what);
}

void check_probability(double p, const char* name) {
    require(p >= 0.0 && p <= 1.0 && std::isfinite(p), std::string(name) + " must be in [0,1]");
}

} // namespace

Graph generate(const GeneratorSpec& spec) {
    std::vector<Edge> edges;
    switch (spec.family) {
        case GraphFamily::clique: {
            require(spec.n >= 1, "clique needs n >= 1");
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) edges.push_back({u, v, 1.0});
            return Graph(spec.n, std::move(edges));
        }
        case GraphFamily::path: {
            require(spec.n >= 1, "path needs n >= 1");
            for (int u = 0; u + 1 < spec.n; ++u) edges.push_back({u, u + 1, 1.0});
            return Graph(spec.n, std::move(edges));
        }
        case GraphFamily::star: {
            require(spec.n >= 1, "star needs n >= 1");
            for (int v = 1; v < spec.n; ++v) edges.push_back({0, v, 1.0});
            return Graph(spec.n, std::move(edges));
        }
        case GraphFamily::cycle: {
            require(spec.n >= 3, "cycle needs n >= 3");
            for (int u = 0; u + 1 < spec.n; ++u) edges.push_back({u, u + 1, 1.0});
            edges.push_back({0, spec.n - 1, 1.0});
            return Graph(spec.n, std::move(edges));
        }
        case GraphFamily::disjoint_cliques: {
            require(spec.blocks >= 1 && spec.block_size >= 1, "disjoint_cliques needs k,s >= 1");
            int n = spec.blocks * spec.block_size;
            for (int b = 0; b < spec.blocks; ++b) {
                int base = b * spec.block_size;
                for (int u = 0; u < spec.block_size; ++u)
                    for (int v = u + 1; v < spec.block_size; ++v)
                        edges.push_back({base + u, base + v, 1.0});
            }
            return Graph(n, std::move(edges));
        }
        case GraphFamily::planted_partition: {
            require(spec.blocks >= 1 && spec.block_size >= 1, "planted_partition needs k,s >= 1");
            check_probability(spec.p_in, "p_in");
            check_probability(spec.p_out, "p_out");
            int n = spec.blocks * spec.block_size;
            Rng rng(spec.seed);
            // One draw per unordered pair, in canonical (u,v) order, so the
            // output depends only on (spec, seed).
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    bool same = (u / spec.block_size) == (v / spec.block_size);
                    double p = same ? spec.p_in : spec.p_out;
                    double draw = rng.next_double();
                    if (p >= 1.0 || draw < p) edges.push_back({u, v, 1.0});
                }
            }
            return Graph(n, std::move(edges));
        }
        case GraphFamily::erdos_renyi: {
            require(spec.n >= 1, "erdos_renyi needs n >= 1");
            check_probability(spec.p, "p");
            Rng rng(spec.seed);
            for (int u = 0; u < spec.n; ++u) {
                for (int v = u + 1; v < spec.n; ++v) {
                    double draw = rng.next_double();
                    if (spec.p >= 1.0 || draw < spec.p) edges.push_back({u, v, 1.0});
                }
            }
            return Graph(spec.n, std::move(edges));
        }
    }
    throw input_error("unknown graph family");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (auto [u, w] : adj[v]) {
                (void)w;
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        int lu = local[e.u], lv = local[e.v];
        if (lu >= 0 && lv >= 0) edges.push_back({lu, lv, e.w});
    }
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

} // namespace hcbench
