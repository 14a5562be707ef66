#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "recon/model.hpp"

namespace recon {

enum class StepCondition { nonempty, notcut, nbr, edges };

std::string to_string(StepCondition c);

// Verdict for relabeling one vertex; when illegal, `failed` names the
// lowest-numbered violated condition.
struct StepVerdict {
    bool legal = false;
    std::optional<StepCondition> failed;
};

// The four single-step conditions: the branch set keeps a vertex, v is not
// a cut vertex of its branch set, v has a neighbour with the new label,
// and v is not crucial for a third label.
StepVerdict legal_step(const HModel& m, int v, int b);

// Sufficient-condition shortcut: legal whenever the old branch set has a
// universal vertex other than v and v has a neighbour with the new label.
// A false verdict only means the shortcut does not apply.
StepVerdict legal_step_universal(const HModel& m, int v, int b);

// All models one legal step away, ordered by (vertex, label).
std::vector<HModel> neighbors(const HModel& m);
std::vector<std::vector<int>> neighbor_labelings(const HModel& m);

// Explicit reconfiguration graph: one node per model, nodes adjacent when
// they differ in exactly one vertex's label (both valid).
struct ReconGraph {
    Graph host;
    Graph target;
    std::vector<std::vector<int>> models;    // lexicographic label arrays
    std::vector<std::vector<int>> adjacency; // per node, sorted
    std::vector<int> component_id;           // ids in order of first appearance
    int component_count = 0;

    std::size_t node_count() const { return models.size(); }
    std::size_t edge_count() const;
    std::optional<int> index_of(const std::vector<int>& labels) const;

private:
    friend ReconGraph build_recon_graph(const Graph&, const Graph&, const EnumerationOptions&);
    std::unordered_map<std::uint64_t, int> index_;
};

ReconGraph build_recon_graph(const Graph& g, const Graph& h,
                             const EnumerationOptions& opts = {});

// True iff the reconfiguration graph of (g, h) is connected.  Throws
// NotAMinor when g has no h-model at all.
bool is_host(const Graph& g, const Graph& h, const EnumerationOptions& opts = {});

// Max eccentricity over the whole graph; nullopt when disconnected.
std::optional<int> diameter(const ReconGraph& rg);

// Nodes of degree zero.
std::vector<int> frozen_models(const ReconGraph& rg);

struct ReconStep {
    int vertex;
    int new_label;
    bool operator==(const ReconStep&) const = default;
};

// A replayable sequence of single-label steps from a start model.
struct ReconSequence {
    HModel start;
    std::vector<ReconStep> steps;
};

// Shortest path between two models of rg, or nullopt when unreachable.
std::optional<ReconSequence> find_path(const ReconGraph& rg, const HModel& from,
                                       const HModel& to);

// For a host with a cut vertex, a pair of K2-models guaranteed to lie in
// distinct components of the reconfiguration graph; nullopt when the host
// is 2-connected.
std::optional<std::pair<HModel, HModel>> disconnection_witness(const Graph& g);

struct ReconSummary {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    int components = 0;
    std::optional<int> diameter;
    std::size_t frozen = 0;
};

ReconSummary summarize(const ReconGraph& rg);

// DOT export; node labels are the label arrays.
void write_dot(const ReconGraph& rg, std::ostream& out);

}  // namespace recon
