#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <splitenum/graphs.hpp>

namespace splitenum {

enum class NodeKind { clique, star };

// One endpoint of a tree edge: either a leaf (0..n_leaves-1) or a slot of
// an internal node. Slots number the edges incident to a node 0..deg-1.
struct TreeEnd {
    int leaf = -1;
    int node = -1;
    int slot = -1;
    bool is_leaf() const { return leaf >= 0; }
};

inline TreeEnd leaf_end(int leaf) { return TreeEnd{leaf, -1, -1}; }
inline TreeEnd node_end(int node, int slot) { return TreeEnd{-1, node, slot}; }

struct TreeNode {
    NodeKind kind = NodeKind::clique;
    int center = -1;  // slot index; star nodes only
};

// A tree whose internal nodes carry clique or star labels and whose leaves
// are the vertices 0..n_leaves-1 of the graph the tree encodes. Each
// internal node of degree d exposes slots 0..d-1, one per incident edge
// (the marker vertices of its label); a star designates one slot as its
// center, and that designation matters even at degree 3.
struct GraphLabeledTree {
    int n_leaves = 0;
    std::vector<TreeNode> nodes;
    std::vector<std::pair<TreeEnd, TreeEnd>> edges;

    int node_degree(int node) const;

    // Throws std::invalid_argument unless the structure is a tree, every
    // leaf has degree exactly one, every node's slots are a bijection with
    // its incident edges, and star centers name valid slots.
    void check() const;
};

// True iff every internal node has degree >= 3, no edge joins two clique
// nodes, and no edge joins a star center to another star's extremity.
bool is_reduced(const GraphLabeledTree& t);

// The graph on the leaves: two leaves are adjacent iff along the unique
// tree path between them, the entry and exit slots at every traversed
// internal node are adjacent in that node's label (clique: any two
// distinct slots; star: center vs extremity only).
Graph accessibility_graph(const GraphLabeledTree& t);

enum class TreePattern {
    center_center_path,             // alternated path joining two star centers
    clique_center_path,             // alternated path from a star center to a clique
    clique_degree_ge,               // some clique node of degree >= arg
    star_center_and_extremity_leaf, // one star with a leaf on its center and on an extremity
    star_star_extremity_bridge,     // extremity-extremity star edge, both centers on leaves
    clique_clique_alternated,       // alternated path joining two distinct cliques
};

// Path patterns require the connecting tree path to be alternated at every
// intermediate node and to use no interior edge of either endpoint label.
// arg is the degree bound for clique_degree_ge and ignored otherwise.
// Throws std::domain_error if the tree is not reduced.
bool has_pattern(const GraphLabeledTree& t, TreePattern pattern, int arg = 0);

// Every leaf that ends some maximal alternated path starting at the given
// slot of the given node and avoiding the interior edges of that node's
// label. On a reduced tree such a path can never get stuck at an internal
// node; if it does, this throws internal_error.
std::vector<int> maximal_path_ends(const GraphLabeledTree& t, int node, int slot);

// Leaf-label-independent encoding, computed by rooting at the tree center:
// two trees get equal strings iff they are isomorphic as labeled trees.
std::string canonical_encoding(const GraphLabeledTree& t);

// All reduced clique-star trees on n_leaves leaves meeting the structural
// conditions of the given class, one representative per isomorphism class.
// Accepts the five enumerated families plus distance_hereditary (which
// imposes nothing beyond reducedness). n_leaves must be at least 3; above
// 8 throws std::length_error.
std::vector<GraphLabeledTree> generate_trees(int n_leaves, GraphClass cls);

nlohmann::json tree_to_json(const GraphLabeledTree& t);
GraphLabeledTree tree_from_json(const nlohmann::json& j);

}  // namespace splitenum
