#pragma once

// Small dense graphs (up to 16 vertices): distances, induced-pattern
// detectors, membership predicates for the graph classes under study,
// canonicalization for unlabeled dedup, graph6 and edge-list JSON codecs.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace splitenum {

inline constexpr int kMaxGraphVertices = 16;

// distance value for vertex pairs with no connecting path
inline constexpr int kUnreachable = -1;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    bool edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    uint16_t neighbors(int v) const;
    int degree(int v) const;
    int edge_count() const;

    // subgraph induced by the vertex bitmask, relabeled in increasing
    // bit-position order
    Graph induced(uint16_t mask) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::array<uint16_t, kMaxGraphVertices> adj_{};
    void check_vertex(int v) const;
};

// perm[old] = new position; perm must be a permutation of 0..n-1
Graph relabel(const Graph& g, const std::vector<int>& perm);

std::vector<std::vector<int>> distances(const Graph& g);
bool is_connected(const Graph& g);

enum class Pattern { c4, diamond, k4plus };

// true iff some vertex subset induces the pattern (k4plus: any 4 mutually
// adjacent vertices)
bool has_induced(const Graph& g, Pattern p);

// pre: g connected (std::domain_error otherwise)
bool has_pendant_edge(const Graph& g);
bool has_bridge(const Graph& g);

// vertex masks of the biconnected components (blocks); bridges give
// two-vertex blocks, isolated vertices belong to no block
std::vector<uint16_t> blocks(const Graph& g);

enum class GraphClass {
    block,
    ptolemaic,
    cactus23,
    cactus3,
    cactus4,
    distance_hereditary,
    chordal,
    weakly_geodetic,
};

// Membership by the class's defining property, computed directly on the
// graph. pre: g connected and nonempty (std::domain_error otherwise).
//
// ptolemaic is decided twice on every call (chordal + distance-hereditary,
// and the four-point inequality over all 4-subsets) and the two verdicts are
// cross-asserted. The cactus classes are likewise decided both through the
// block decomposition and through direct cycle enumeration.
bool is_member(const Graph& g, GraphClass c);

// Minimum adjacency bitstring over all vertex relabelings. Byte 0 holds the
// vertex count; the remaining bytes pack the upper-triangle adjacency bits
// column by column ((0,1), (0,2), (1,2), (0,3), ...), most significant bit
// first, zero-padded. Equal strings iff isomorphic. pre: n <= 9
// (std::length_error otherwise).
std::string canonical_form(const Graph& g);

// a relabeling of g whose adjacency bitstring is the canonical form
Graph canonical_graph(const Graph& g);

// graph6 text codec (n <= 62), same column-major bit order as above
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// {"n": ..., "edges": [[u, v], ...]} with u < v, sorted
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace splitenum
