#include "hcbench/tree.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "hcbench/errors.hpp"

namespace hcbench {

int ClusterTree::leaf_of(int vertex) const {
    if (vertex < 0 || vertex > max_vertex_ || leaf_node_[vertex] < 0)
        throw contract_error("vertex " + std::to_string(vertex) + " is not a leaf of the tree");
    return leaf_node_[vertex];
}

void ClusterTree::validate_for(int n) const {
    if (leaf_count() != n || max_vertex_ != n - 1)
        throw contract_error("tree leaves do not match vertex set of size " + std::to_string(n));
    for (int v = 0; v < n; ++v) {
        if (leaf_node_[v] < 0)
            throw contract_error("tree is missing leaf for vertex " + std::to_string(v));
    }
}

int ClusterTree::lca(int u, int v) const {
    int a = leaf_of(u), b = leaf_of(v);
    while (nodes_[a].depth > nodes_[b].depth) a = nodes_[a].parent;
    while (nodes_[b].depth > nodes_[a].depth) b = nodes_[b].parent;
    while (a != b) {
        a = nodes_[a].parent;
        b = nodes_[b].parent;
    }
    return a;
}

std::vector<int> ClusterTree::leaves_below(int id) const {
    std::vector<int> out;
    std::vector<int> stack{id};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (is_leaf(x)) {
            out.push_back(nodes_[x].vertex);
        } else {
            for (int c : nodes_[x].children) stack.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ClusterTree::level_blocks(int t) const {
    int n = leaf_count();
    std::vector<int> block(n, -1);
    if (t <= 0) {
        for (int v = 0; v < n; ++v) block[v] = v;
        return block;
    }
    int next_block = 0;
    // DFS; a node is a maximal cluster when its size fits but its parent's
    // does not (the root never fits since t <= n-1 in all callers).
    std::function<void(int, int)> walk = [&](int id, int inherited) {
        const Node& nd = nodes_[id];
        int mine = inherited;
        if (mine < 0) {
            int parent_count = nd.parent < 0 ? n + 1 : nodes_[nd.parent].leaf_count;
            if (nd.leaf_count <= t && parent_count > t) mine = next_block++;
        }
        if (nd.children.empty()) {
            block[nd.vertex] = mine >= 0 ? mine : next_block++;
        } else {
            for (int c : nd.children) walk(c, mine);
        }
    };
    walk(root_, nodes_[root_].leaf_count <= t ? next_block++ : -1);
    return block;
}

ClusterTree ClusterTree::binarize() const {
    TreeBuilder builder;
    std::function<int(int)> build = [&](int id) -> int {
        const Node& nd = nodes_[id];
        if (nd.children.empty()) return builder.add_leaf(nd.vertex);
        int acc = build(nd.children[0]);
        for (std::size_t i = 1; i < nd.children.size(); ++i) {
            int rhs = build(nd.children[i]);
            acc = builder.add_internal({acc, rhs});
        }
        return acc;
    };
    int root = build(root_);
    return builder.finish(root);
}

std::string ClusterTree::to_parens() const {
    std::string out;
    std::function<void(int)> emit = [&](int id) {
        const Node& nd = nodes_[id];
        if (nd.children.empty()) {
            out += std::to_string(nd.vertex);
            return;
        }
        out.push_back('(');
        for (std::size_t i = 0; i < nd.children.size(); ++i) {
            if (i > 0) out.push_back(',');
            emit(nd.children[i]);
        }
        out.push_back(')');
    };
    emit(root_);
    return out;
}

std::string ClusterTree::to_json() const {
    using nlohmann::json;
    std::function<json(int)> emit = [&](int id) -> json {
        const Node& nd = nodes_[id];
        if (nd.children.empty()) return json(nd.vertex);
        json arr = json::array();
        for (int c : nd.children) arr.push_back(emit(c));
        return arr;
    };
    return emit(root_).dump();
}

bool ClusterTree::operator==(const ClusterTree& other) const {
    return to_parens() == other.to_parens();
}

int TreeBuilder::add_leaf(int vertex) {
    if (vertex < 0) throw contract_error("leaf vertex must be nonnegative");
    ClusterTree::Node nd;
    nd.vertex = vertex;
    nd.leaf_count = 1;
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size()) - 1;
}

int TreeBuilder::add_internal(const std::vector<int>& children) {
    if (children.size() < 2) throw contract_error("internal tree node needs >= 2 children");
    ClusterTree::Node nd;
    nd.children = children;
    for (int c : children) {
        if (c < 0 || c >= static_cast<int>(nodes_.size()))
            throw contract_error("unknown child node id");
        if (nodes_[c].parent != -1) throw contract_error("tree node used twice");
        nodes_[c].parent = static_cast<int>(nodes_.size());
        nd.leaf_count += nodes_[c].leaf_count;
    }
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size()) - 1;
}

ClusterTree TreeBuilder::finish(int root) {
    if (root < 0 || root >= static_cast<int>(nodes_.size()))
        throw contract_error("unknown root node id");
    ClusterTree tree;
    tree.nodes_ = std::move(nodes_);
    tree.root_ = root;
    if (tree.nodes_[root].parent != -1) throw contract_error("root must not have a parent");

    // Depths, leaf map, duplicate-leaf check.
    std::vector<int> stack{root};
    int reachable = 0;
    tree.nodes_[root].depth = 0;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        ++reachable;
        const auto& nd = tree.nodes_[id];
        if (nd.children.empty()) tree.max_vertex_ = std::max(tree.max_vertex_, nd.vertex);
        for (int c : nd.children) {
            tree.nodes_[c].depth = nd.depth + 1;
            stack.push_back(c);
        }
    }
    if (reachable != tree.node_count())
        throw contract_error("dangling nodes outside the tree");
    tree.leaf_node_.assign(tree.max_vertex_ + 1, -1);
    for (int id = 0; id < tree.node_count(); ++id) {
        const auto& nd = tree.nodes_[id];
        if (!nd.children.empty()) continue;
        if (tree.leaf_node_[nd.vertex] != -1)
            throw contract_error("duplicate leaf vertex " + std::to_string(nd.vertex));
        tree.leaf_node_[nd.vertex] = id;
    }
    return tree;
}

namespace {

struct ParenParser {
    const std::string& text;
    std::size_t pos = 0;
    TreeBuilder builder;

    explicit ParenParser(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw input_error("tree parse error at offset " + std::to_string(pos) + ": " + what);
    }

    int parse_node() {
        skip_space();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] == '(') {
            ++pos;
            std::vector<int> children;
            children.push_back(parse_node());
            skip_space();
            while (pos < text.size() && text[pos] == ',') {
                ++pos;
                children.push_back(parse_node());
                skip_space();
            }
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            if (children.size() < 2) fail("internal node needs >= 2 children");
            return builder.add_internal(children);
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected vertex id or '('");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return builder.add_leaf(std::stoi(text.substr(start, pos - start)));
    }
};

} // namespace

ClusterTree parse_tree_parens(const std::string& text) {
    ParenParser parser(text);
    int root = parser.parse_node();
    parser.skip_space();
    if (parser.pos != text.size()) parser.fail("trailing characters");
    return parser.builder.finish(root);
}

ClusterTree parse_tree_json(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("tree JSON parse error: ") + e.what());
    }
    TreeBuilder builder;
    std::function<int(const json&)> build = [&](const json& node) -> int {
        if (node.is_number_integer()) return builder.add_leaf(node.get<int>());
        if (node.is_array()) {
            if (node.size() < 2) throw input_error("tree JSON: internal node needs >= 2 children");
            std::vector<int> children;
            for (const auto& child : node) children.push_back(build(child));
            return builder.add_internal(children);
        }
        throw input_error("tree JSON: node must be an integer or an array");
    };
    return builder.finish(build(doc));
}

ClusterTree parse_tree_auto(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[') return parse_tree_json(text);
        return parse_tree_parens(text);
    }
    throw input_error("empty tree text");
}

ClusterTree parse_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open tree file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tree_auto(buf.str());
}

} // namespace hcbench
