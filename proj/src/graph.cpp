#include "recon/graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace recon {

void Graph::add_edge_unchecked(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw BadParameter("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadParameter("edge endpoint out of range");
        if (u == v) throw SelfLoop("self-loop in edge list");
        g.add_edge_unchecked(u, v);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (const auto& nb : adj) deg_sum += static_cast<int>(nb.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(vs.size()));
    for (int u : vs)
        for (int v : adj[u])
            if (u < v && index[v] >= 0) g.add_edge_unchecked(index[u], index[v]);
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

void Graph::check_invariants() const {
    if (static_cast<int>(adj.size()) != n) throw BadParameter("adjacency size mismatch");
    for (int u = 0; u < n; ++u) {
        int prev = -1;
        for (int v : adj[u]) {
            if (v < 0 || v >= n) throw BadParameter("neighbor index out of range");
            if (v == u) throw SelfLoop("self-loop");
            if (v <= prev) throw BadParameter("neighbor list not sorted/unique");
            if (!has_edge(v, u)) throw BadParameter("asymmetric adjacency");
            prev = v;
        }
    }
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

namespace {

// Shared articulation-point / biconnected-component DFS (Hopcroft-Tarjan).
struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockDfs(const Graph& g_)
        : g(g_), disc(g_.n, -1), low(g_.n, 0), is_cut(g_.n, 0) {}

    void pop_block(const std::pair<int, int>& until) {
        std::vector<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.adj[u]) {
            if (v == parent) {
                parent = -2;  // skip the tree edge once; parallel edges cannot occur
                continue;
            }
            if (disc[v] == -1) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (disc[u] > 0) is_cut[u] = 1;
                    pop_block({u, v});
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (disc[u] == 0 && children > 1) is_cut[u] = 1;
    }
};

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedInput();
    BlockDfs d(g);
    d.dfs(0, -1);
    std::vector<int> result;
    for (int v = 0; v < g.n; ++v)
        if (d.is_cut[v]) result.push_back(v);
    return result;
}

BlockTree block_tree(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedInput();
    BlockTree bt;
    if (g.n == 1) {
        bt.blocks = {{0}};
        return bt;
    }
    BlockDfs d(g);
    d.dfs(0, -1);
    for (int v = 0; v < g.n; ++v)
        if (d.is_cut[v]) bt.cut_vertices.push_back(v);
    bt.blocks = std::move(d.blocks);
    std::sort(bt.blocks.begin(), bt.blocks.end());
    // Star-join the blocks around each cut vertex from the lowest-indexed
    // block; the resulting block adjacency is connected and acyclic.
    for (int c : bt.cut_vertices) {
        int first = -1;
        for (std::size_t b = 0; b < bt.blocks.size(); ++b) {
            if (!std::binary_search(bt.blocks[b].begin(), bt.blocks[b].end(), c)) continue;
            if (first < 0)
                first = static_cast<int>(b);
            else
                bt.edges.emplace_back(first, static_cast<int>(b));
        }
    }
    return bt;
}

std::vector<int> BlockTree::leaf_blocks() const {
    std::vector<int> result;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (joining_vertices(static_cast<int>(b)).size() <= 1)
            result.push_back(static_cast<int>(b));
    return result;
}

std::vector<int> BlockTree::joining_vertices(int block) const {
    std::vector<int> result;
    for (int v : blocks[block])
        if (is_cut(v)) result.push_back(v);
    return result;
}

std::vector<int> BlockTree::interior_vertices(int block) const {
    std::vector<int> result;
    for (int v : blocks[block])
        if (!is_cut(v)) result.push_back(v);
    return result;
}

bool BlockTree::is_cut(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockTree::blocks_containing(int v) const {
    std::vector<int> result;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), v))
            result.push_back(static_cast<int>(b));
    return result;
}

namespace {

// Max flow in the split-vertex digraph with unit vertex capacities.
// Nodes: 2*v (in) and 2*v+1 (out); s and t are not split.
int vertex_flow(const Graph& g, int s, int t) {
    int nn = 2 * g.n;
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    const int inf = g.n + 1;
    for (int v = 0; v < g.n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) cap[2 * u + 1][2 * v] = inf;
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> parent(nn, -1);
        parent[source] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent[sink] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < nn; ++v)
                if (cap[u][v] > 0 && parent[v] == -1) {
                    parent[v] = u;
                    q.push(v);
                }
        }
        if (parent[sink] == -1) break;
        for (int v = sink; v != source; v = parent[v]) {
            cap[parent[v]][v] -= 1;
            cap[v][parent[v]] += 1;
        }
        ++flow;
        if (flow > g.n) break;  // cannot happen; guards against a cycle bug
    }
    return flow;
}

}  // namespace

int max_disjoint_paths(const Graph& g, int s, int t) {
    if (s == t) throw BadParameter("max_disjoint_paths requires s != t");
    return vertex_flow(g, s, t);
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw BadParameter("connectivity level must be positive");
    if (g.n < k + 1) return false;
    if (!is_connected(g)) return false;
    // Menger: enough to check non-adjacent pairs; a complete graph has no
    // such pair and is (n-1)-connected.
    bool complete = true;
    for (int u = 0; u < g.n && complete; ++u)
        if (g.degree(u) != g.n - 1) complete = false;
    if (complete) return true;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v) && max_disjoint_paths(g, u, v) < k) return false;
    return true;
}

Graph split_vertex(const Graph& g, int v, const std::vector<int>& part1,
                   const std::vector<int>& part2) {
    if (v < 0 || v >= g.n) throw BadParameter("split vertex out of range");
    std::vector<int> p1 = part1, p2 = part2;
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    std::vector<int> merged;
    std::merge(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(merged));
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw InvalidPartition("parts overlap");
    if (merged != g.adj[v])
        throw InvalidPartition("parts do not cover the neighborhood of v");
    if (p1.size() + 1 < 3 || p2.size() + 1 < 3)
        throw InvalidPartition("split would create a vertex of degree < 3");
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) es.emplace_back(a, b);
    int v2 = g.n;
    for (int w : p1) es.emplace_back(v, w);
    for (int w : p2) es.emplace_back(v2, w);
    es.emplace_back(v, v2);
    return Graph::from_edges(g.n + 1, es);
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw BadParameter("vertex out of range");
    if (u == v) throw SelfLoop("cannot add a self-loop");
    if (g.has_edge(u, v)) throw EdgeExists("edge already present");
    auto es = g.edges();
    es.emplace_back(u, v);
    return Graph::from_edges(g.n, es);
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v || !g.has_edge(u, v))
        throw NoSuchEdge("contract_edge requires an existing edge");
    int keep = std::min(u, v), drop = std::max(u, v);
    auto remap = [&](int w) {
        if (w == drop) return keep;
        return w > drop ? w - 1 : w;
    };
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges()) {
        int a2 = remap(a), b2 = remap(b);
        if (a2 != b2) es.emplace_back(a2, b2);
    }
    return Graph::from_edges(g.n - 1, es);
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    Graph lg(m);
    std::vector<std::pair<int, int>> ledges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) ledges.emplace_back(i, j);
        }
    return Graph::from_edges(m, ledges);
}

bool is_internally_4_connected_cubic(const Graph& g) {
    if (g.n < 6) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 3) return false;
    return is_k_connected(line_graph(g), 4);
}

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"");
    if (n < 0 || m < 0) throw ParseError("edge list: negative counts");
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: truncated edge lines");
        es.emplace_back(u, v);
    }
    try {
        return Graph::from_edges(n, es);
    } catch (const Error& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    auto es = g.edges();
    out << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw ParseError("graph6: empty string");
    std::size_t pos = 0;
    int n;
    if (s[0] == '~') throw ParseError("graph6: n > 62 not supported");
    n = s[0] - 63;
    pos = 1;
    if (n < 0) throw ParseError("graph6: bad size byte");
    int bits_needed = n * (n - 1) / 2;
    int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(s.size()) - 1 < bytes_needed)
        throw ParseError("graph6: truncated data");
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int byte = s[pos + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw ParseError("graph6: bad data byte");
            if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
            ++bit;
        }
    return Graph::from_edges(n, es);
}

std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw BadParameter("graph6: n > 62 not supported");
    std::string s(1, static_cast<char>(63 + g.n));
    int bits = g.n * (g.n - 1) / 2;
    std::string data((bits + 5) / 6, 0);
    int bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) data[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
            ++bit;
        }
    for (char& c : data) c = static_cast<char>(c + 63);
    return s + data;
}

}  // namespace recon
