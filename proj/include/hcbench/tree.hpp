#ifndef HCBENCH_TREE_HPP
#define HCBENCH_TREE_HPP

#include <string>
#include <vector>

namespace hcbench {

/// Rooted decomposition tree: every leaf carries a distinct vertex id, every
/// internal node has at least two children, and each node caches its leaf
/// count. Trees are immutable after construction; build with TreeBuilder.
class ClusterTree {
public:
    struct Node {
        int parent = -1;
        std::vector<int> children; // empty for leaves
        int vertex = -1;           // leaf label, -1 for internal nodes
        int leaf_count = 0;
        int depth = 0;
    };

    ClusterTree() = default;

    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const { return nodes_.empty() ? 0 : nodes_[root_].leaf_count; }
    const Node& node(int id) const { return nodes_[id]; }
    bool is_leaf(int id) const { return nodes_[id].children.empty(); }

    /// Node id of the leaf labeled with `vertex`.
    int leaf_of(int vertex) const;

    /// Leaf set = {0, ..., n-1} exactly; throws contract_error otherwise.
    void validate_for(int n) const;

    int lca(int u, int v) const;

    /// Vertices below `id`, ascending.
    std::vector<int> leaves_below(int id) const;

    /// Block index per vertex for the partition of V into maximal clusters of
    /// size <= t (t = 0 gives singletons). Block ids are dense, assigned in
    /// DFS order from the root.
    std::vector<int> level_blocks(int t) const;

    /// Binary version: each k-way split becomes a left-to-right chain of
    /// two-way splits. Never increases the standard tree cost.
    ClusterTree binarize() const;

    std::string to_parens() const;
    std::string to_json() const;

    bool operator==(const ClusterTree& other) const;

private:
    friend class TreeBuilder;

    std::vector<Node> nodes_;
    std::vector<int> leaf_node_; // vertex -> node id
    int root_ = -1;
    int max_vertex_ = -1;
};

class TreeBuilder {
public:
    int add_leaf(int vertex);
    /// children: previously returned node ids, each used exactly once.
    int add_internal(const std::vector<int>& children);
    ClusterTree finish(int root);

private:
    std::vector<ClusterTree::Node> nodes_;
};

/// Nested-parentheses form, e.g. "((0,1),2)". Internal nodes may have any
/// arity >= 2.
ClusterTree parse_tree_parens(const std::string& text);

/// JSON form: a leaf is an integer, an internal node an array of children.
ClusterTree parse_tree_json(const std::string& text);

/// Dispatches on the first non-space character ('[' selects JSON).
ClusterTree parse_tree_auto(const std::string& text);
ClusterTree parse_tree_file(const std::string& path);

} // namespace hcbench

#endif
