#ifndef HCBENCH_GRAPH_HPP
#define HCBENCH_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hcbench {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

/// Weighted undirected simple graph. Vertices are 0..n-1; the edge list is
/// canonical: u < v per edge, sorted lexicographically, no duplicates,
/// strictly positive weights. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    double total_weight() const;

    /// adj[v] = list of (neighbor, weight).
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;

    bool operator==(const Graph& other) const {
        if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v ||
                edges_[i].w != other.edges_[i].w)
                return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Parses the edge-list text format: first non-comment line is the vertex
/// count, then one "u v w" line per edge. '#' starts a comment line.
/// Duplicate pairs are errors, not merges; every error carries a line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

/// Emits the same format; weights use shortest round-trip decimals.
std::string serialize_edge_list(const Graph& g);

enum class GraphFamily {
    clique,
    path,
    star,
    cycle,
    disjoint_cliques,
    planted_partition,
    erdos_renyi,
};

const char* family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);

/// Deterministic generator request: identical spec + seed yields an identical
/// graph, bit for bit. Unused fields are ignored by the family.
struct GeneratorSpec {
    GraphFamily family = GraphFamily::clique;
    int n = 0;              // clique/path/star/cycle/erdos_renyi
    int blocks = 0;         // disjoint_cliques/planted_partition
    int block_size = 0;     // disjoint_cliques/planted_partition
    double p_in = 1.0;      // planted_partition
    double p_out = 0.0;     // planted_partition
    double p = 0.5;         // erdos_renyi
    std::uint64_t seed = 0;

    std::string to_string() const;
};

Graph generate(const GeneratorSpec& spec);

/// Connected components; each component sorted ascending, components ordered
/// by smallest contained vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Subgraph induced by `vertices` (must be sorted ascending, distinct, in
/// range). Local vertex i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Shortest round-trip decimal for a double ("2.5", "1", "0.05").
std::string format_double(double x);

} // namespace hcbench

#endif
