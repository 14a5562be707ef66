#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

// Wheel W_k: hub vertex 0 adjacent to the rim cycle 1..k.
Graph gen_wheel(int k);

// Squared cycle C_k^2: cycle plus all distance-2 chords.
Graph gen_squared_cycle(int k);

// Vertex layout of a generalized wheel: hub vertices 0..ell-1, then the
// subgraph vertices s(i,j) = ell + i*n + j for part i and part-vertex j.
struct GenWheelLayout {
    int ell = 1;
    int n = 1;
    int m = 3;

    int hub(int i) const { return i; }
    int s(int i, int j) const { return ell + i * n + j; }
    int special() const { return s(0, 0); }
    int special_next() const { return s(1, 0); }
    int vertex_count() const { return ell + m * n; }
    bool is_hub(int v) const { return v < ell; }
};

// ell hub vertices forming a clique and joined to everything, m parts of n
// vertices each carrying their own edges, and rim matchings joining
// consecutive parts.
Graph gen_generalized_wheel(const std::vector<Graph>& parts, int n, int ell, int m);

// Seeded random walk of edge additions and vertex splits starting from a
// wheel; every intermediate graph is 3-connected.
Graph gen_random_3connected(int target_n, unsigned seed);

enum class ChainOp { removal, contraction };

// Search for a sequence of 4-connected graphs from g to a graph isomorphic
// to C6^2 or K5, each formed from its predecessor by one application of
// the operation.  nullopt when the bounded search space is exhausted.
// Contraction is the default: edge removal alone cannot shrink the vertex
// count, so removal chains cannot reach K5 from larger hosts.
std::optional<std::vector<Graph>> find_chain(const Graph& g,
                                             ChainOp op = ChainOp::contraction,
                                             std::uint64_t budget = 200'000);

// All isomorphism classes on n vertices meeting the connectivity
// requirement (0 admits disconnected graphs).  n <= 8.
std::vector<Graph> enumerate_small_graphs(int n, int connectivity);

// Canonical adjacency mask (minimum over degree-refined relabelings);
// equal masks exactly characterize isomorphism.  n <= 8.
std::uint64_t canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Compact family descriptors: "wheel:5", "c2:6", "k:5", "cycle:6",
// "path:3", "star:3", "genwheel:l=2,m=3,n=3,part=triangle",
// "rand3:n=8,seed=42".
struct FamilySpec {
    std::string family;
    std::map<std::string, int> params;
    std::string part;  // genwheel part shape

    // Layout when the family is a (generalized) wheel.
    std::optional<GenWheelLayout> layout() const;
};

FamilySpec parse_family_spec(const std::string& text);
Graph build_family(const FamilySpec& spec);

}  // namespace recon
