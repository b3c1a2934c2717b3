#include "splitenum/graphs.hpp"

#include "splitenum/series.hpp"  // internal_error

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace splitenum {

namespace {

uint16_t bit(int v) { return static_cast<uint16_t>(1u << v); }

uint16_t full_mask(int n) { return static_cast<uint16_t>((1u << n) - 1u); }

int popcount(uint16_t m) { return std::popcount(static_cast<unsigned>(m)); }

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxGraphVertices)
        throw std::invalid_argument("vertex count must be between 0 and 16");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

bool Graph::edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u] >> v & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= static_cast<uint16_t>(~bit(v));
    adj_[v] &= static_cast<uint16_t>(~bit(u));
}

uint16_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const { return popcount(neighbors(v)); }

int Graph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

Graph Graph::induced(uint16_t mask) const {
    std::array<int, kMaxGraphVertices> newpos{};
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if (mask >> v & 1) newpos[v] = m++;
    Graph h(m);
    for (int u = 0; u < n_; ++u) {
        if (!(mask >> u & 1)) continue;
        for (int v = u + 1; v < n_; ++v)
            if ((mask >> v & 1) && edge(u, v)) h.add_edge(newpos[u], newpos[v]);
    }
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.size();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("bad permutation size");
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

std::vector<std::vector<int>> distances(const Graph& g) {
    int n = g.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (int s = 0; s < n; ++s) {
        d[s][s] = 0;
        uint16_t seen = bit(s), frontier = bit(s);
        int depth = 0;
        while (frontier) {
            ++depth;
            uint16_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= g.neighbors(v);
            next &= static_cast<uint16_t>(~seen);
            for (int v = 0; v < n; ++v)
                if (next >> v & 1) d[s][v] = depth;
            seen |= next;
            frontier = next;
        }
    }
    return d;
}

bool is_connected(const Graph& g) {
    int n = g.size();
    if (n <= 1) return true;
    uint16_t seen = bit(0), frontier = bit(0);
    while (frontier) {
        uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= g.neighbors(v);
        next &= static_cast<uint16_t>(~seen);
        seen |= next;
        frontier = next;
    }
    return seen == full_mask(n);
}

bool has_induced(const Graph& g, Pattern p) {
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int v[4] = {a, b, c, d};
                    int edges = 0;
                    int deg[4] = {};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.edge(v[i], v[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    switch (p) {
                        case Pattern::c4:
                            if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 &&
                                deg[3] == 2)
                                return true;
                            break;
                        case Pattern::diamond:
                            if (edges == 5) return true;
                            break;
                        case Pattern::k4plus:
                            if (edges == 6) return true;
                            break;
                    }
                }
    return false;
}

namespace {

void require_connected(const Graph& g) {
    if (g.size() == 0) throw std::domain_error("empty graph");
    if (!is_connected(g)) throw std::domain_error("graph is not connected");
}

}  // namespace

bool has_pendant_edge(const Graph& g) {
    require_connected(g);
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == 1) return true;
    return false;
}

bool has_bridge(const Graph& g) {
    require_connected(g);
    Graph h = g;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (!g.edge(u, v)) continue;
            h.remove_edge(u, v);
            bool still = is_connected(h);
            h.add_edge(u, v);
            if (!still) return true;
        }
    return false;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::array<int, kMaxGraphVertices> disc{}, low{};
    int timer = 0;
    std::vector<std::pair<int, int>> estack;
    std::vector<uint16_t> out;

    explicit BlockFinder(const Graph& gg) : g(gg) { disc.fill(-1); }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int v = 0; v < g.size(); ++v) {
            if (!g.edge(u, v) || v == parent) continue;
            if (disc[v] == -1) {
                estack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    uint16_t mask = 0;
                    while (true) {
                        auto [a, b] = estack.back();
                        estack.pop_back();
                        mask |= bit(a) | bit(b);
                        if (a == u && b == v) break;
                    }
                    out.push_back(mask);
                }
            } else if (disc[v] < disc[u]) {
                estack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

std::vector<uint16_t> blocks(const Graph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.size(); ++v)
        if (bf.disc[v] == -1) bf.dfs(v, -1);
    return bf.out;
}

// ---------------------------------------------------------------------------
// class predicates

namespace {

bool chordal_by_elimination(const Graph& g) {
    int n = g.size();
    uint16_t alive = full_mask(n);
    while (alive) {
        int found = -1;
        for (int v = 0; v < n && found < 0; ++v) {
            if (!(alive >> v & 1)) continue;
            uint16_t nb = g.neighbors(v) & alive;
            bool simplicial = true;
            for (int u = 0; u < n && simplicial; ++u)
                if ((nb >> u & 1) && (nb & ~(g.neighbors(u) | bit(u))) != 0) simplicial = false;
            if (simplicial) found = v;
        }
        if (found < 0) return false;
        alive &= static_cast<uint16_t>(~bit(found));
    }
    return true;
}

bool has_induced_cycle_4plus(const Graph& g) {
    int n = g.size();
    for (uint16_t m = 0; m <= full_mask(n); ++m) {
        if (popcount(m) < 4) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v)
            if ((m >> v & 1) && popcount(g.neighbors(v) & m) != 2) two_regular = false;
        if (two_regular && is_connected(g.induced(m))) return true;
    }
    return false;
}

// distances inside the subgraph induced by mask, compared against whole-graph
// distances; disconnected masks are skipped
bool distance_hereditary_def(const Graph& g) {
    int n = g.size();
    auto D = distances(g);
    for (uint16_t m = 0; m <= full_mask(n); ++m) {
        if (popcount(m) < 3) continue;
        for (int s = 0; s < n; ++s) {
            if (!(m >> s & 1)) continue;
            uint16_t seen = bit(s), frontier = bit(s);
            int depth = 0;
            while (frontier) {
                ++depth;
                uint16_t next = 0;
                for (int v = 0; v < n; ++v)
                    if (frontier >> v & 1) next |= g.neighbors(v);
                next &= m & static_cast<uint16_t>(~seen);
                for (int v = 0; v < n; ++v)
                    if ((next >> v & 1) && D[s][v] != depth) return false;
                seen |= next;
                frontier = next;
            }
            if (seen != m) break;  // induced subgraph disconnected, mask exempt
        }
    }
    return true;
}

bool weakly_geodetic_def(const Graph& g) {
    int n = g.size();
    auto D = distances(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (D[u][v] == 2 && popcount(g.neighbors(u) & g.neighbors(v)) != 1) return false;
    return true;
}

bool four_point_inequality(const Graph& g) {
    int n = g.size();
    auto D = distances(g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    long p1 = static_cast<long>(D[a][b]) * D[c][d];
                    long p2 = static_cast<long>(D[a][c]) * D[b][d];
                    long p3 = static_cast<long>(D[a][d]) * D[b][c];
                    if (p1 > p2 + p3 || p2 > p1 + p3 || p3 > p1 + p2) return false;
                }
    return true;
}

bool blocks_are_cliques(const Graph& g) {
    for (uint16_t m : blocks(g)) {
        for (int v = 0; v < g.size(); ++v)
            if ((m >> v & 1) && (g.neighbors(v) & m) != (m & static_cast<uint16_t>(~bit(v))))
                return false;
    }
    return true;
}

// every simple cycle, reported once; the start vertex is the cycle's
// smallest, and orientation is fixed by the second-vs-last comparison
template <class Fn>
void for_each_cycle(const Graph& g, Fn fn) {
    int n = g.size();
    std::vector<int> path;
    uint16_t inpath = 0;
    std::function<void()> extend = [&]() {
        int u = path.back(), s = path.front();
        for (int w = 0; w < n; ++w) {
            if (!g.edge(u, w)) continue;
            if (w == s && path.size() >= 3 && path[1] < u) fn(path);
            if (w > s && !(inpath >> w & 1)) {
                path.push_back(w);
                inpath |= bit(w);
                extend();
                path.pop_back();
                inpath &= static_cast<uint16_t>(~bit(w));
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        inpath = bit(s);
        extend();
    }
}

// allowed_mask: bit m set = cycles of length m allowed; bit 2 = single-edge
// blocks allowed (otherwise every edge must lie on a cycle, which also rules
// out the one-vertex graph)
bool cactus_by_blocks(const Graph& g, unsigned allowed_mask) {
    bool edges_allowed = allowed_mask >> 2 & 1;
    if (!edges_allowed && g.edge_count() == 0) return false;
    for (uint16_t m : blocks(g)) {
        int sz = popcount(m);
        if (sz == 2) {
            if (!edges_allowed) return false;
            continue;
        }
        Graph b = g.induced(m);
        if (b.edge_count() != sz) return false;
        for (int v = 0; v < b.size(); ++v)
            if (b.degree(v) != 2) return false;
        if (sz > 31 || !(allowed_mask >> sz & 1)) return false;
    }
    return true;
}

bool cactus_by_cycles(const Graph& g, unsigned allowed_mask) {
    bool edges_allowed = allowed_mask >> 2 & 1;
    bool ok = true;
    std::array<int, 256> on_cycles{};
    for_each_cycle(g, [&](const std::vector<int>& path) {
        size_t len = path.size();
        if (len > 31 || !(allowed_mask >> len & 1)) ok = false;
        for (size_t i = 0; i < len; ++i) {
            int u = path[i], v = path[(i + 1) % len];
            ++on_cycles[std::min(u, v) * 16 + std::max(u, v)];
        }
    });
    if (!ok) return false;
    if (!edges_allowed && g.edge_count() == 0) return false;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (!g.edge(u, v)) continue;
            int c = on_cycles[u * 16 + v];
            if (c > 1) return false;
            if (!edges_allowed && c == 0) return false;
        }
    return true;
}

bool cactus_member(const Graph& g, unsigned allowed_mask) {
    bool primary = cactus_by_blocks(g, allowed_mask);
    if (g.size() <= 10) {
        bool secondary = cactus_by_cycles(g, allowed_mask);
        if (primary != secondary) throw internal_error("cactus routes disagree");
    }
    return primary;
}

}  // namespace

bool is_member(const Graph& g, GraphClass c) {
    require_connected(g);
    switch (c) {
        case GraphClass::chordal: {
            bool primary = chordal_by_elimination(g);
            if (g.size() <= 7) {
                bool secondary = !has_induced_cycle_4plus(g);
                if (primary != secondary) throw internal_error("chordality routes disagree");
            }
            return primary;
        }
        case GraphClass::distance_hereditary:
            return distance_hereditary_def(g);
        case GraphClass::weakly_geodetic:
            return weakly_geodetic_def(g);
        case GraphClass::ptolemaic: {
            bool via_classes = chordal_by_elimination(g) && distance_hereditary_def(g);
            bool via_inequality = four_point_inequality(g);
            if (via_classes != via_inequality) throw internal_error("ptolemaic routes disagree");
            return via_classes;
        }
        case GraphClass::block: {
            bool primary = blocks_are_cliques(g);
            if (g.size() <= 7) {
                bool secondary = distance_hereditary_def(g) && !has_induced(g, Pattern::c4) &&
                                 !has_induced(g, Pattern::diamond);
                if (primary != secondary) throw internal_error("block-graph routes disagree");
            }
            return primary;
        }
        case GraphClass::cactus23:
            return cactus_member(g, (1u << 2) | (1u << 3));
        case GraphClass::cactus3:
            return cactus_member(g, 1u << 3);
        case GraphClass::cactus4:
            return cactus_member(g, 1u << 4);
    }
    throw internal_error("unhandled graph class");
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

struct Canonicalizer {
    const Graph& g;
    int n;
    std::vector<int> order;
    std::array<int, 9> perm{};
    std::array<int, 9> best_perm{};
    std::vector<uint8_t> cur, best;
    bool have_best = false;
    uint16_t used = 0;

    explicit Canonicalizer(const Graph& gg) : g(gg), n(gg.size()), cur(n > 0 ? n - 1 : 0) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        // low-degree vertices first: small columns early, better pruning
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) < g.degree(b); });
    }

    void rec(int pos, bool tight) {
        if (pos == n) {
            if (!have_best || cur < best) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        for (int v : order) {
            if (used >> v & 1) continue;
            bool t = tight && have_best;
            if (pos > 0) {
                uint8_t col = 0;
                for (int i = 0; i < pos; ++i)
                    col = static_cast<uint8_t>((col << 1) | (g.edge(perm[i], v) ? 1 : 0));
                if (t) {
                    if (col > best[pos - 1]) continue;
                    t = col == best[pos - 1];
                }
                cur[pos - 1] = col;
            }
            perm[pos] = v;
            used |= bit(v);
            rec(pos + 1, t);
            used &= static_cast<uint16_t>(~bit(v));
        }
    }
};

// column bytes -> packed bitstring, column-major colex order, MSB first
std::string pack_columns(int n, const std::vector<uint8_t>& cols) {
    std::string out(1, static_cast<char>(n));
    int acc = 0, nbits = 0;
    for (int p = 1; p < n; ++p)
        for (int i = 0; i < p; ++i) {
            acc = (acc << 1) | (cols[p - 1] >> (p - 1 - i) & 1);
            if (++nbits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
}

Canonicalizer run_canon(const Graph& g) {
    if (g.size() > 9) throw std::length_error("canonical form limited to 9 vertices");
    Canonicalizer c(g);
    c.rec(0, true);
    return c;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    auto c = run_canon(g);
    return pack_columns(g.size(), c.best);
}

Graph canonical_graph(const Graph& g) {
    auto c = run_canon(g);
    std::vector<int> new_of_old(g.size());
    for (int pos = 0; pos < g.size(); ++pos) new_of_old[c.best_perm[pos]] = pos;
    return relabel(g, new_of_old);
}

// ---------------------------------------------------------------------------
// codecs

std::string to_graph6(const Graph& g) {
    int n = g.size();
    std::string s(1, static_cast<char>(n + 63));
    int total = n * (n - 1) / 2;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (total % 6 != 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return s;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("bad graph6 vertex count");
    Graph g(n);  // rejects n > 16
    int total = n * (n - 1) / 2;
    int expected = 1 + (total + 5) / 6;
    if (static_cast<int>(s.size()) != expected) throw std::invalid_argument("bad graph6 length");
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx) {
            int c = s[1 + idx / 6] - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 character");
            if (c >> (5 - idx % 6) & 1) g.add_edge(i, j);
        }
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.edge(u, v)) edges.push_back({u, v});
    return nlohmann::json{{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

}  // namespace splitenum
