#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "recon/errors.hpp"

namespace recon {

// Simple undirected graph on vertices 0..n-1.  Neighbor lists are kept
// sorted and duplicate-free; there are no self-loops.  Graph values are
// immutable once built, so all operations below are pure functions.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    // Edge list with u < v, lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    // True iff v is adjacent to every other vertex.
    bool is_universal(int v) const { return degree(v) == n - 1; }

    // Induced subgraph on `vertices` (need not be sorted).  Vertex i of the
    // result corresponds to vertices[i] after sorting.
    Graph induced(const std::vector<int>& vertices) const;

    bool operator==(const Graph& other) const = default;

    // Throws BadParameter if the adjacency structure violates an invariant
    // (asymmetry, self-loop, out-of-range index, duplicate).
    void check_invariants() const;

private:
    void add_edge_unchecked(int u, int v);
};

bool is_connected(const Graph& g);

// Vertices whose removal disconnects g.  Requires g connected.
std::vector<int> cut_vertices(const Graph& g);

// Blocks (maximal 2-connected subgraphs / bridge endpoint pairs, plus an
// isolated vertex for the one-vertex graph), the cut vertices, and a tree
// of block adjacencies.  Blocks sharing a cut vertex are joined star-wise
// from the lowest-indexed block so the edge set forms a genuine tree.
struct BlockTree {
    std::vector<std::vector<int>> blocks;    // sorted vertex lists, lex order
    std::vector<int> cut_vertices;           // sorted
    std::vector<std::pair<int, int>> edges;  // block index pairs

    // A block is a leaf block iff it contains at most one cut vertex.
    std::vector<int> leaf_blocks() const;
    std::vector<int> joining_vertices(int block) const;
    std::vector<int> interior_vertices(int block) const;
    bool is_cut(int v) const;
    // Blocks containing vertex v (indices into `blocks`).
    std::vector<int> blocks_containing(int v) const;
};

BlockTree block_tree(const Graph& g);

// Standard k-connectivity: n >= k+1 and no cut set of fewer than k
// vertices.  Computed via unit-vertex-capacity max flow over non-adjacent
// pairs; a brute-force cut-set enumerator backs this as a test oracle.
bool is_k_connected(const Graph& g, int k);

// Maximum number of internally-vertex-disjoint s-t paths (s != t).
int max_disjoint_paths(const Graph& g, int s, int t);

// Replace v by adjacent vertices v1 = v and v2 = n (old vertex count),
// attaching part1 to v1 and part2 to v2.  Both new degrees must be >= 3,
// so |part1| >= 2 and |part2| >= 2.
Graph split_vertex(const Graph& g, int v, const std::vector<int>& part1,
                   const std::vector<int>& part2);

Graph add_edge(const Graph& g, int u, int v);

// Contract edge uv; the merged vertex takes index min(u,v), vertices above
// max(u,v) shift down by one, and the result is simplified.
Graph contract_edge(const Graph& g, int u, int v);

// One vertex per edge of g (edges in lexicographic order); two vertices
// adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

// Cubic, at least six vertices, and the line graph is 4-connected.
bool is_internally_4_connected_cubic(const Graph& g);

// Edge-list text format: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// graph6 codec for ingesting standard small-graph corpora (n <= 62).
Graph from_graph6(const std::string& s);
std::string to_graph6(const Graph& g);

}  // namespace recon
