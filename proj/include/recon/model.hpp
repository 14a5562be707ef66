#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

// A total labeling of the host's vertices by target vertices.  Branch set
// a is the subgraph induced on the vertices labeled a.
struct HModel {
    Graph host;
    Graph target;
    std::vector<int> labels;

    int label(int v) const { return labels[v]; }
    std::vector<int> branch(int a) const;
    int branch_size(int a) const;
    HModel with_label(int v, int b) const;

    bool operator==(const HModel& other) const { return labels == other.labels; }
};

struct ValidationResult {
    bool ok = true;
    std::string violation;  // first violated condition, empty when ok
};

// Checks the three model conditions: every label used, every branch set
// connected, every target edge covered by a connecting edge.
ValidationResult validate_model(const HModel& m);

struct EnumerationOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    // Optional incremental connectivity pruning; results are identical with
    // it on or off, it only cuts the search tree.
    bool connectivity_pruning = false;
};

// All valid H-models of g, in lexicographic label-array order.
std::vector<std::vector<int>> enumerate_model_labels(const Graph& g, const Graph& h,
                                                     const EnumerationOptions& opts = {});
std::vector<HModel> enumerate_models(const Graph& g, const Graph& h,
                                     const EnumerationOptions& opts = {});

// Edges of G with one endpoint labeled a and the other labeled b; pairs
// are returned (a-endpoint, b-endpoint).
std::vector<std::pair<int, int>> connecting_edges(const HModel& m, int a, int b);

struct EssentialEdge {
    int label_a, label_b;          // label_a < label_b
    std::pair<int, int> edge;      // (vertex in a, vertex in b)
};

// For each target edge with exactly one connecting edge, that edge.
std::vector<EssentialEdge> essential_edges(const HModel& m);

// Vertices of branch a through which every a-b connecting edge passes on
// the a side (at most one such vertex can exist).
std::vector<int> essential_vertices(const HModel& m, int a, int b);

// Labels b for which v is an essential vertex.
std::vector<int> essential_for_labels(const HModel& m, int v);

// Vertices essential for two distinct labels.
std::vector<int> crucial_vertices(const HModel& m);

// v is essential for some label c != b while having a neighbour labeled b.
bool is_b_crucial(const HModel& m, int v, int b);

struct WeakConnection {
    int label_a, label_b;                            // label_a < label_b
    std::vector<int> witnesses_a;                    // essential vertices in a for b
    std::vector<int> witnesses_b;                    // essential vertices in b for a
    std::optional<std::pair<int, int>> essential_edge;

    // Feasible lynchpins: the two essential-edge endpoints, or the single
    // essential vertex.
    std::vector<int> lynchpin_choices() const;
};

std::vector<WeakConnection> weak_connections(const HModel& m);

// One lynchpin per weak connection, parallel to weak_connections(m).
struct LynchpinDesignation {
    std::vector<int> lynchpins;
};

std::vector<LynchpinDesignation> lynchpin_designations(const HModel& m,
                                                       int max_free_choices = 20);

// Block tree of the branch set for label a (vertices in host indices).
BlockTree branch_block_tree(const HModel& m, int a);

// Subtree of branch a's block tree induced by the blocks meeting A.
BlockTree restricted_block_subtree(const HModel& m, int a, const std::vector<int>& A);

// Crucial vertices that are interior vertices of leaf blocks of their
// branch set's block tree.
std::vector<int> leaf_crucial_vertices(const HModel& m);
bool is_leaf_crucial_model(const HModel& m);
std::vector<int> leaf_l_crucial_vertices(const HModel& m, int ell);
bool is_leaf_l_crucial_model(const HModel& m, int ell);

// True iff a leaf-crucial model is reachable from m via legal single steps
// confined to the vertices of A (equivalently: every A-confined relabeling
// extends, within A, to a leaf-crucial model).
bool hits_leaf_crucial(const HModel& m, const std::vector<int>& A,
                       std::uint64_t budget = kDefaultSearchBudget);
bool hits_leaf_l_crucial(const HModel& m, const std::vector<int>& A, int ell,
                         std::uint64_t budget = kDefaultSearchBudget);

struct StructuralLemmaReport {
    std::vector<std::string> violations;
    int checks_run = 0;
    bool ok() const { return violations.empty(); }
};

// Verifies, on a k-connected host, the structural consequences the theory
// guarantees for every valid model: leaf-block connecting capacity, the
// two-weak interior-vertex conditions, the forbidden lynchpin patterns
// (all-weak, and the four-cycle pattern for K4 models on 4-connected
// hosts), and the absence of crucial vertices in branch sets of size >= 2
// for K3 models of 2-connected hosts.
StructuralLemmaReport check_structural_lemmas(const HModel& m, int k);

}  // namespace recon
