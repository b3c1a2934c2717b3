#include <splitenum/glt.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include <splitenum/series.hpp>

namespace splitenum {

namespace {

struct view_edge {
    int va, sa;  // vertex id and slot (-1 for leaves)
    int vb, sb;
};

// Unified vertex ids: leaves are 0..n-1, internal node j is n+j.
struct tree_view {
    int n = 0;
    int m = 0;
    std::vector<view_edge> es;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (edge, neighbor)
    std::vector<std::vector<int>> slot_edge;            // node -> slot -> edge

    int other(int e, int v) const { return es[e].va == v ? es[e].vb : es[e].va; }
    int slot_at(int e, int v) const { return es[e].va == v ? es[e].sa : es[e].sb; }
};

void fail_tree(const std::string& why) { throw std::invalid_argument("graph-labeled tree: " + why); }

tree_view make_view(const GraphLabeledTree& t) {
    tree_view vw;
    vw.n = t.n_leaves;
    vw.m = static_cast<int>(t.nodes.size());
    if (vw.n < 1) fail_tree("needs at least one leaf");
    int total = vw.n + vw.m;
    if (static_cast<int>(t.edges.size()) != total - 1) fail_tree("edge count is not vertices minus one");

    vw.adj.assign(total, {});
    vw.slot_edge.assign(vw.m, {});
    std::vector<int> deg(vw.m, 0);
    for (const auto& [a, b] : t.edges) {
        for (const TreeEnd* e : {&a, &b}) {
            if (e->is_leaf()) {
                if (e->node >= 0 || e->leaf >= vw.n) fail_tree("bad leaf endpoint");
            } else {
                if (e->node < 0 || e->node >= vw.m || e->slot < 0) fail_tree("bad node endpoint");
                ++deg[e->node];
            }
        }
    }
    for (int j = 0; j < vw.m; ++j) vw.slot_edge[j].assign(deg[j], -1);

    int ei = 0;
    for (const auto& [a, b] : t.edges) {
        view_edge e{};
        e.va = a.is_leaf() ? a.leaf : vw.n + a.node;
        e.sa = a.is_leaf() ? -1 : a.slot;
        e.vb = b.is_leaf() ? b.leaf : vw.n + b.node;
        e.sb = b.is_leaf() ? -1 : b.slot;
        if (e.va == e.vb) fail_tree("edge joins a vertex to itself");
        for (const TreeEnd* p : {&a, &b}) {
            if (!p->is_leaf()) {
                if (p->slot >= deg[p->node]) fail_tree("slot index exceeds node degree");
                if (vw.slot_edge[p->node][p->slot] != -1) fail_tree("slot used by two edges");
                vw.slot_edge[p->node][p->slot] = ei;
            }
        }
        vw.adj[e.va].push_back({ei, e.vb});
        vw.adj[e.vb].push_back({ei, e.va});
        vw.es.push_back(e);
        ++ei;
    }

    for (int l = 0; l < vw.n; ++l) {
        int want = (total == 1) ? 0 : 1;
        if (static_cast<int>(vw.adj[l].size()) != want) fail_tree("leaf degree must be one");
    }
    for (int j = 0; j < vw.m; ++j) {
        const TreeNode& nd = t.nodes[j];
        if (nd.kind == NodeKind::star) {
            if (nd.center < 0 || nd.center >= deg[j]) fail_tree("star center must name a slot");
        } else if (nd.center != -1) {
            fail_tree("clique nodes carry no center");
        }
        if (deg[j] == 0) fail_tree("internal node with no edges");
    }

    // connectivity (edge count already pins the rest of treeness)
    std::vector<char> seen(total, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [e, w] : vw.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != total) fail_tree("not connected");
    return vw;
}

// Within one label, slots s and u are adjacent: cliques connect all distinct
// slots, stars connect the center to each extremity and nothing else.
bool label_adjacent(const TreeNode& nd, int s, int u) {
    if (s == u) return false;
    if (nd.kind == NodeKind::clique) return true;
    return s == nd.center || u == nd.center;
}

// Parent edges of a BFS rooted at vertex `from`.
std::vector<int> bfs_parents(const tree_view& vw, int from) {
    std::vector<int> parent_edge(vw.n + vw.m, -2);
    parent_edge[from] = -1;
    std::queue<int> q;
    q.push(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [e, w] : vw.adj[v])
            if (parent_edge[w] == -2) {
                parent_edge[w] = e;
                q.push(w);
            }
    }
    return parent_edge;
}

// The unique tree path a -> b as the edge sequence it crosses.
std::vector<int> path_edges(const tree_view& vw, const std::vector<int>& parents_of_a, int b) {
    std::vector<int> es;
    int v = b;
    while (parents_of_a[v] != -1) {
        int e = parents_of_a[v];
        es.push_back(e);
        v = vw.other(e, v);
    }
    std::reverse(es.begin(), es.end());  // now runs a -> b
    return es;
}

// True iff at every vertex strictly inside the path, the entry and exit
// slots are adjacent in that node's label.
bool interior_alternated(const GraphLabeledTree& t, const tree_view& vw, const std::vector<int>& es) {
    for (size_t i = 0; i + 1 < es.size(); ++i) {
        const view_edge& e = vw.es[es[i]];
        int v = (vw.es[es[i + 1]].va == e.va || vw.es[es[i + 1]].vb == e.va) ? e.va : e.vb;
        int entry = vw.slot_at(es[i], v);
        int exit = vw.slot_at(es[i + 1], v);
        if (!label_adjacent(t.nodes[v - vw.n], entry, exit)) return false;
    }
    return true;
}

bool leads_to_leaf(const tree_view& vw, int node, int slot) {
    int e = vw.slot_edge[node][slot];
    return vw.other(e, vw.n + node) < vw.n;
}

}  // namespace

int GraphLabeledTree::node_degree(int node) const {
    if (node < 0 || node >= static_cast<int>(nodes.size()))
        throw std::invalid_argument("node index out of range");
    int d = 0;
    for (const auto& [a, b] : edges) d += (a.node == node) + (b.node == node);
    return d;
}

void GraphLabeledTree::check() const { make_view(*this); }

bool is_reduced(const GraphLabeledTree& t) {
    tree_view vw = make_view(t);
    for (int j = 0; j < vw.m; ++j)
        if (static_cast<int>(vw.slot_edge[j].size()) < 3) return false;
    for (const view_edge& e : vw.es) {
        if (e.va < vw.n || e.vb < vw.n) continue;
        const TreeNode& a = t.nodes[e.va - vw.n];
        const TreeNode& b = t.nodes[e.vb - vw.n];
        if (a.kind == NodeKind::clique && b.kind == NodeKind::clique) return false;
        if (a.kind == NodeKind::star && b.kind == NodeKind::star) {
            bool ca = e.sa == a.center;
            bool cb = e.sb == b.center;
            if (ca != cb) return false;  // a center tied to another star's extremity
        }
    }
    return true;
}

Graph accessibility_graph(const GraphLabeledTree& t) {
    tree_view vw = make_view(t);
    Graph g(t.n_leaves);
    for (int a = 0; a < vw.n; ++a) {
        auto parents = bfs_parents(vw, a);
        for (int b = a + 1; b < vw.n; ++b) {
            auto es = path_edges(vw, parents, b);
            if (interior_alternated(t, vw, es)) g.add_edge(a, b);
        }
    }
    return g;
}

bool has_pattern(const GraphLabeledTree& t, TreePattern pattern, int arg) {
    if (!is_reduced(t)) throw std::domain_error("pattern search requires a reduced tree");
    tree_view vw = make_view(t);

    auto is_star = [&](int j) { return t.nodes[j].kind == NodeKind::star; };

    // Checks the unique path between two internal nodes: alternated at every
    // intermediate node, leaving u at exit_wanted (-1: any slot) and entering
    // v at entry_wanted. The endpoints' own interior edges are never used
    // because the path leaves u, and reaches v, by single tree edges.
    auto path_matches = [&](int u, int v, int exit_wanted, int entry_wanted) {
        auto parents = bfs_parents(vw, vw.n + u);
        auto es = path_edges(vw, parents, vw.n + v);
        if (exit_wanted >= 0 && vw.slot_at(es.front(), vw.n + u) != exit_wanted) return false;
        if (entry_wanted >= 0 && vw.slot_at(es.back(), vw.n + v) != entry_wanted) return false;
        return interior_alternated(t, vw, es);
    };

    switch (pattern) {
        case TreePattern::center_center_path:
            for (int u = 0; u < vw.m; ++u)
                for (int v = u + 1; v < vw.m; ++v)
                    if (is_star(u) && is_star(v) &&
                        path_matches(u, v, t.nodes[u].center, t.nodes[v].center))
                        return true;
            return false;
        case TreePattern::clique_center_path:
            for (int u = 0; u < vw.m; ++u)
                for (int v = 0; v < vw.m; ++v)
                    if (is_star(u) && !is_star(v) && path_matches(u, v, t.nodes[u].center, -1))
                        return true;
            return false;
        case TreePattern::clique_clique_alternated:
            for (int u = 0; u < vw.m; ++u)
                for (int v = u + 1; v < vw.m; ++v)
                    if (!is_star(u) && !is_star(v) && path_matches(u, v, -1, -1)) return true;
            return false;
        case TreePattern::clique_degree_ge:
            if (arg < 1) throw std::invalid_argument("clique_degree_ge needs a positive bound");
            for (int j = 0; j < vw.m; ++j)
                if (!is_star(j) && static_cast<int>(vw.slot_edge[j].size()) >= arg) return true;
            return false;
        case TreePattern::star_center_and_extremity_leaf:
            for (int j = 0; j < vw.m; ++j) {
                if (!is_star(j) || !leads_to_leaf(vw, j, t.nodes[j].center)) continue;
                for (int s = 0; s < static_cast<int>(vw.slot_edge[j].size()); ++s)
                    if (s != t.nodes[j].center && leads_to_leaf(vw, j, s)) return true;
            }
            return false;
        case TreePattern::star_star_extremity_bridge:
            for (const view_edge& e : vw.es) {
                if (e.va < vw.n || e.vb < vw.n) continue;
                int ja = e.va - vw.n, jb = e.vb - vw.n;
                if (!is_star(ja) || !is_star(jb)) continue;
                if (e.sa == t.nodes[ja].center || e.sb == t.nodes[jb].center) continue;
                if (leads_to_leaf(vw, ja, t.nodes[ja].center) &&
                    leads_to_leaf(vw, jb, t.nodes[jb].center))
                    return true;
            }
            return false;
    }
    throw std::invalid_argument("unknown tree pattern");
}

namespace {

void extend_alternated(const GraphLabeledTree& t, const tree_view& vw, int edge, int from,
                       std::set<int>& ends) {
    int to = vw.other(edge, from);
    if (to < vw.n) {
        ends.insert(to);
        return;
    }
    int node = to - vw.n;
    int entry = vw.slot_at(edge, to);
    bool moved = false;
    for (int s = 0; s < static_cast<int>(vw.slot_edge[node].size()); ++s) {
        if (!label_adjacent(t.nodes[node], entry, s)) continue;
        moved = true;
        extend_alternated(t, vw, vw.slot_edge[node][s], to, ends);
    }
    if (!moved) throw internal_error("maximal alternated path stopped at an internal node");
}

}  // namespace

std::vector<int> maximal_path_ends(const GraphLabeledTree& t, int node, int slot) {
    tree_view vw = make_view(t);
    if (node < 0 || node >= vw.m) throw std::invalid_argument("node index out of range");
    if (slot < 0 || slot >= static_cast<int>(vw.slot_edge[node].size()))
        throw std::invalid_argument("slot index out of range");
    std::set<int> ends;
    extend_alternated(t, vw, vw.slot_edge[node][slot], vw.n + node, ends);
    return std::vector<int>(ends.begin(), ends.end());
}

namespace {

std::string encode_from(const GraphLabeledTree& t, const tree_view& vw, int vertex, int parent_edge) {
    if (vertex < vw.n) return "L";
    const TreeNode& nd = t.nodes[vertex - vw.n];
    std::string center_child;
    std::vector<std::string> rest;
    for (auto [e, w] : vw.adj[vertex]) {
        if (e == parent_edge) continue;
        std::string s = encode_from(t, vw, w, e);
        if (nd.kind == NodeKind::star && vw.slot_at(e, vertex) == nd.center)
            center_child = std::move(s);
        else
            rest.push_back(std::move(s));
    }
    std::sort(rest.begin(), rest.end());
    bool center_up = nd.kind == NodeKind::star && parent_edge >= 0 &&
                     vw.slot_at(parent_edge, vertex) == nd.center;
    std::string out = nd.kind == NodeKind::clique ? "K(" : (center_up ? "S^(" : "S(");
    bool first = true;
    if (!center_child.empty()) {
        out += "c" + center_child;
        first = false;
    }
    for (const std::string& s : rest) {
        if (!first) out += ",";
        out += s;
        first = false;
    }
    out += ")";
    return out;
}

std::vector<int> tree_centers(const tree_view& vw) {
    int total = vw.n + vw.m;
    if (total <= 2) {
        std::vector<int> all(total);
        for (int v = 0; v < total; ++v) all[v] = v;
        return all;
    }
    std::vector<int> deg(total);
    std::vector<char> dead(total, 0);
    std::vector<int> frontier;
    for (int v = 0; v < total; ++v) {
        deg[v] = static_cast<int>(vw.adj[v].size());
        if (deg[v] <= 1) frontier.push_back(v);
    }
    int remaining = total;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            dead[v] = 1;
            --remaining;
            for (auto [e, w] : vw.adj[v])
                if (!dead[w] && --deg[w] == 1) next.push_back(w);
        }
        frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < total; ++v)
        if (!dead[v]) centers.push_back(v);
    return centers;
}

}  // namespace

std::string canonical_encoding(const GraphLabeledTree& t) {
    tree_view vw = make_view(t);
    auto centers = tree_centers(vw);
    if (centers.size() == 1) return "V(" + encode_from(t, vw, centers[0], -1) + ")";
    int e = -1;
    for (auto [ei, w] : vw.adj[centers[0]])
        if (w == centers[1]) e = ei;
    std::string a = encode_from(t, vw, centers[0], e);
    std::string b = encode_from(t, vw, centers[1], e);
    if (b < a) std::swap(a, b);
    return "E(" + a + "," + b + ")";
}

// ---------------------------------------------------------------------------
// Constrained generation. Rooted at a leaf, every subtree hangs off its top
// node in one of a few entry shapes: a clique entered at any slot, a star
// entered at its center (remaining slots are all extremities), a star entered
// at an extremity (one remaining slot is the center), and for the squares of
// 4-cactus trees the two halves of a center-to-center pair of degree-3 stars.
// Per-class tables say which shapes may fill which slots; unlabeled shapes
// are enumerated once via non-decreasing child multisets, instantiated, and
// deduplicated through the canonical encoding.

namespace {

enum gen_sym : int {
    g_leaf,
    g_clique,
    g_star_c,  // star entered at its center
    g_star_x,  // star entered at an extremity
    g_quad_c,  // square half entered at its center (from its partner star)
    g_quad_x,  // square half entered at an extremity
};

struct gen_node {
    gen_sym sym;
    std::vector<const gen_node*> kids;  // g_star_x / g_quad_x: kids[0] fills the center
};

constexpr int kManyKids = 1 << 20;

struct slot_rule {
    std::vector<gen_sym> opts;
    int lo = 0;
    int hi = kManyKids;
};

struct sym_rule {
    std::vector<gen_sym> center_opts;  // nonempty iff entered at an extremity
    slot_rule rest;
};

struct gen_tables {
    std::vector<gen_sym> roots;
    std::map<gen_sym, sym_rule> rules;
};

gen_tables tables_for(GraphClass cls) {
    gen_tables t;
    switch (cls) {
        case GraphClass::distance_hereditary:
        case GraphClass::ptolemaic:
            // ptolemaic trees are filtered afterwards: they are exactly the
            // unconstrained reduced trees without center-center paths
            t.roots = {g_clique, g_star_c, g_star_x};
            t.rules[g_clique] = {{}, {{g_leaf, g_star_c, g_star_x}, 2, kManyKids}};
            t.rules[g_star_c] = {{}, {{g_leaf, g_clique, g_star_x}, 2, kManyKids}};
            t.rules[g_star_x] = {{g_leaf, g_clique, g_star_c}, {{g_leaf, g_clique, g_star_x}, 1, kManyKids}};
            return t;
        case GraphClass::block:
        case GraphClass::cactus23: {
            // star centers attach to leaves; 2,3-cactus additionally pins
            // every clique node to degree 3 (two children plus the entry)
            int hi = cls == GraphClass::cactus23 ? 2 : kManyKids;
            t.roots = {g_clique, g_star_c, g_star_x};
            t.rules[g_clique] = {{}, {{g_leaf, g_star_x}, 2, hi}};
            t.rules[g_star_c] = {{}, {{g_leaf, g_clique, g_star_x}, 2, kManyKids}};
            t.rules[g_star_x] = {{g_leaf}, {{g_leaf, g_clique, g_star_x}, 1, kManyKids}};
            return t;
        }
        case GraphClass::cactus3:
            // additionally, star extremities attach only to clique nodes
            t.roots = {g_clique, g_star_c};
            t.rules[g_clique] = {{}, {{g_leaf, g_star_x}, 2, 2}};
            t.rules[g_star_c] = {{}, {{g_clique}, 2, kManyKids}};
            t.rules[g_star_x] = {{g_leaf}, {{g_clique}, 1, kManyKids}};
            return t;
        case GraphClass::cactus4:
            // no clique nodes; every square is a center-to-center pair of
            // degree-3 stars, and regular star extremities attach to squares
            t.roots = {g_quad_x, g_star_c};
            t.rules[g_quad_c] = {{}, {{g_leaf, g_star_x}, 2, 2}};
            t.rules[g_quad_x] = {{g_quad_c}, {{g_leaf, g_star_x}, 1, 1}};
            t.rules[g_star_c] = {{}, {{g_quad_x}, 2, kManyKids}};
            t.rules[g_star_x] = {{g_leaf}, {{g_quad_x}, 1, kManyKids}};
            return t;
        default:
            throw std::invalid_argument("class has no tree characterization");
    }
}

class tree_generator {
  public:
    explicit tree_generator(gen_tables tab) : tab_(std::move(tab)) {}

    const std::vector<const gen_node*>& options(gen_sym s, int leaves) {
        auto key = std::make_pair(static_cast<int>(s), leaves);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<const gen_node*> out;
        if (s == g_leaf) {
            if (leaves == 1) out.push_back(intern(g_leaf, {}));
        } else {
            const sym_rule& r = tab_.rules.at(s);
            if (r.center_opts.empty()) {
                for (auto& kids : multisets(r.rest, leaves)) out.push_back(intern(s, std::move(kids)));
            } else {
                for (int lc = 1; lc < leaves; ++lc)
                    for (gen_sym cs : r.center_opts)
                        for (const gen_node* c : options(cs, lc))
                            for (auto& kids : multisets(r.rest, leaves - lc)) {
                                std::vector<const gen_node*> all;
                                all.reserve(kids.size() + 1);
                                all.push_back(c);
                                all.insert(all.end(), kids.begin(), kids.end());
                                out.push_back(intern(s, std::move(all)));
                            }
            }
        }
        return memo_[key] = std::move(out);
    }

  private:
    const gen_node* intern(gen_sym s, std::vector<const gen_node*> kids) {
        pool_.push_back(gen_node{s, std::move(kids)});
        return &pool_.back();
    }

    // Child multisets drawing from rule options, non-decreasing in the key
    // (leaf count, option list, position) so each multiset appears once.
    std::vector<std::vector<const gen_node*>> multisets(const slot_rule& r, int leaves) {
        std::vector<std::vector<const gen_node*>> out;
        std::vector<const gen_node*> cur;
        fill(r, leaves, 1, 0, 0, cur, out);
        return out;
    }

    void fill(const slot_rule& r, int leaves, int min_l, int min_s, int min_o,
              std::vector<const gen_node*>& cur, std::vector<std::vector<const gen_node*>>& out) {
        if (leaves == 0) {
            if (static_cast<int>(cur.size()) >= r.lo) out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= r.hi) return;
        // leave one leaf for every sibling still required, which also keeps
        // every child strictly smaller than its parent
        int reserve = std::max(0, r.lo - static_cast<int>(cur.size()) - 1);
        for (int l = min_l; l <= leaves - reserve; ++l) {
            int s0 = l == min_l ? min_s : 0;
            for (int si = s0; si < static_cast<int>(r.opts.size()); ++si) {
                const auto& opts = options(r.opts[si], l);
                int o0 = (l == min_l && si == min_s) ? min_o : 0;
                for (int oi = o0; oi < static_cast<int>(opts.size()); ++oi) {
                    cur.push_back(opts[oi]);
                    fill(r, leaves - l, l, si, oi, cur, out);
                    cur.pop_back();
                }
            }
        }
    }

    gen_tables tab_;
    std::deque<gen_node> pool_;
    std::map<std::pair<int, int>, std::vector<const gen_node*>> memo_;
};

class tree_builder {
  public:
    GraphLabeledTree build(const gen_node* head, int expect_leaves) {
        t_ = GraphLabeledTree{};
        next_leaf_ = 0;
        int root = next_leaf_++;
        TreeEnd h = emit(head);
        t_.edges.push_back({leaf_end(root), h});
        t_.n_leaves = next_leaf_;
        if (t_.n_leaves != expect_leaves) throw internal_error("tree generator lost leaves");
        return std::move(t_);
    }

  private:
    TreeEnd emit(const gen_node* g) {
        if (g->sym == g_leaf) return leaf_end(next_leaf_++);
        int idx = static_cast<int>(t_.nodes.size());
        TreeNode nd;
        nd.kind = g->sym == g_clique ? NodeKind::clique : NodeKind::star;
        if (nd.kind == NodeKind::star)
            nd.center = (g->sym == g_star_c || g->sym == g_quad_c) ? 0 : 1;
        t_.nodes.push_back(nd);
        for (int i = 0; i < static_cast<int>(g->kids.size()); ++i) {
            TreeEnd child = emit(g->kids[i]);  // slot 0 is the entry edge
            t_.edges.push_back({node_end(idx, i + 1), child});
        }
        return node_end(idx, 0);
    }

    GraphLabeledTree t_;
    int next_leaf_ = 0;
};

}  // namespace

std::vector<GraphLabeledTree> generate_trees(int n_leaves, GraphClass cls) {
    if (n_leaves < 3) throw std::invalid_argument("tree generation needs at least 3 leaves");
    if (n_leaves > 8) throw std::length_error("tree generation supports at most 8 leaves");
    bool drop_center_center = cls == GraphClass::ptolemaic;
    tree_generator gen(tables_for(cls));
    tree_builder builder;
    std::vector<GraphLabeledTree> out;
    std::set<std::string> seen;
    for (gen_sym head : tables_for(cls).roots)
        for (const gen_node* g : gen.options(head, n_leaves - 1)) {
            GraphLabeledTree t = builder.build(g, n_leaves);
            t.check();
            if (!is_reduced(t)) throw internal_error("generator produced a non-reduced tree");
            if (drop_center_center && has_pattern(t, TreePattern::center_center_path)) continue;
            if (seen.insert(canonical_encoding(t)).second) out.push_back(std::move(t));
        }
    return out;
}

namespace {

nlohmann::json end_to_json(const TreeEnd& e) {
    if (e.is_leaf()) return nlohmann::json{{"leaf", e.leaf}};
    return nlohmann::json{{"node", e.node}, {"slot", e.slot}};
}

TreeEnd end_from_json(const nlohmann::json& j) {
    if (j.contains("leaf")) return leaf_end(j.at("leaf").get<int>());
    return node_end(j.at("node").get<int>(), j.at("slot").get<int>());
}

}  // namespace

nlohmann::json tree_to_json(const GraphLabeledTree& t) {
    t.check();
    nlohmann::json nodes = nlohmann::json::array();
    for (const TreeNode& nd : t.nodes) {
        nlohmann::json n{{"kind", nd.kind == NodeKind::clique ? "clique" : "star"}};
        if (nd.kind == NodeKind::star) n["center"] = nd.center;
        nodes.push_back(std::move(n));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : t.edges)
        edges.push_back(nlohmann::json::array({end_to_json(a), end_to_json(b)}));
    return nlohmann::json{{"n_leaves", t.n_leaves}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

GraphLabeledTree tree_from_json(const nlohmann::json& j) {
    GraphLabeledTree t;
    t.n_leaves = j.at("n_leaves").get<int>();
    for (const auto& n : j.at("nodes")) {
        TreeNode nd;
        std::string kind = n.at("kind").get<std::string>();
        if (kind == "clique") {
            nd.kind = NodeKind::clique;
        } else if (kind == "star") {
            nd.kind = NodeKind::star;
            nd.center = n.at("center").get<int>();
        } else {
            throw std::invalid_argument("unknown node kind: " + kind);
        }
        t.nodes.push_back(nd);
    }
    for (const auto& e : j.at("edges"))
        t.edges.push_back({end_from_json(e.at(0)), end_from_json(e.at(1))});
    t.check();
    return t;
}

}  // namespace splitenum
