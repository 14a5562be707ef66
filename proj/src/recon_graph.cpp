#include "recon/recon_graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <ostream>
#include <queue>

namespace recon {

std::string to_string(StepCondition c) {
    switch (c) {
        case StepCondition::nonempty: return "nonempty";
        case StepCondition::notcut: return "notcut";
        case StepCondition::nbr: return "nbr";
        case StepCondition::edges: return "edges";
    }
    return "?";
}

namespace {

bool is_branch_cut_vertex(const HModel& m, int v) {
    // v is a cut vertex of its branch set iff removing it disconnects the
    // remaining same-labeled vertices.
    int a = m.labels[v];
    int start = -1, size = 0;
    for (int u = 0; u < m.host.n; ++u)
        if (u != v && m.labels[u] == a) {
            if (start < 0) start = u;
            ++size;
        }
    if (size <= 1) return false;
    std::vector<char> seen(m.host.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : m.host.adj[u])
            if (w != v && m.labels[w] == a && !seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited != size;
}

}  // namespace

StepVerdict legal_step(const HModel& m, int v, int b) {
    int a = m.labels[v];
    if (b == a) throw SameLabel("legal_step requires a new label");
    if (b < 0 || b >= m.target.n) throw ShapeMismatch("label out of range");
    if (m.branch_size(a) <= 1) return {false, StepCondition::nonempty};
    if (is_branch_cut_vertex(m, v)) return {false, StepCondition::notcut};
    bool has_b_neighbor = false;
    for (int w : m.host.adj[v])
        if (m.labels[w] == b) {
            has_b_neighbor = true;
            break;
        }
    if (!has_b_neighbor) return {false, StepCondition::nbr};
    for (int c : essential_for_labels(m, v))
        if (c != b) return {false, StepCondition::edges};
    return {true, std::nullopt};
}

StepVerdict legal_step_universal(const HModel& m, int v, int b) {
    int a = m.labels[v];
    if (b == a) throw SameLabel("legal_step_universal requires a new label");
    if (b < 0 || b >= m.target.n) throw ShapeMismatch("label out of range");
    bool has_universal = false;
    for (int u = 0; u < m.host.n; ++u)
        if (u != v && m.labels[u] == a && m.host.is_universal(u)) {
            has_universal = true;
            break;
        }
    if (!has_universal) return {false, StepCondition::notcut};
    for (int w : m.host.adj[v])
        if (m.labels[w] == b) return {true, std::nullopt};
    return {false, StepCondition::nbr};
}

std::vector<std::vector<int>> neighbor_labelings(const HModel& m) {
    std::vector<std::vector<int>> result;
    for (int v = 0; v < m.host.n; ++v)
        for (int b = 0; b < m.target.n; ++b) {
            if (b == m.labels[v]) continue;
            if (legal_step(m, v, b).legal) {
                auto labels = m.labels;
                labels[v] = b;
                result.push_back(std::move(labels));
            }
        }
    return result;
}

std::vector<HModel> neighbors(const HModel& m) {
    std::vector<HModel> result;
    for (auto& labels : neighbor_labelings(m))
        result.push_back(HModel{m.host, m.target, std::move(labels)});
    return result;
}

namespace {

std::uint64_t encode(const std::vector<int>& labels, int base) {
    std::uint64_t code = 0;
    for (int lbl : labels) code = code * static_cast<std::uint64_t>(base) + lbl;
    return code;
}

}  // namespace

std::size_t ReconGraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adjacency) deg_sum += nb.size();
    return deg_sum / 2;
}

std::optional<int> ReconGraph::index_of(const std::vector<int>& labels) const {
    auto it = index_.find(encode(labels, target.n));
    return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
}

ReconGraph build_recon_graph(const Graph& g, const Graph& h, const EnumerationOptions& opts) {
    if (h.n >= 2 && g.n * std::bit_width(static_cast<unsigned>(h.n - 1)) > 62)
        throw StateSpaceExceeded("label arrays too long to index");
    ReconGraph rg;
    rg.host = g;
    rg.target = h;
    rg.models = enumerate_model_labels(g, h, opts);
    rg.index_.reserve(rg.models.size() * 2);
    for (std::size_t i = 0; i < rg.models.size(); ++i)
        rg.index_[encode(rg.models[i], h.n)] = static_cast<int>(i);
    rg.adjacency.resize(rg.models.size());
    HModel work{g, h, {}};
    for (std::size_t i = 0; i < rg.models.size(); ++i) {
        work.labels = rg.models[i];
        for (auto& nb : neighbor_labelings(work)) {
            auto it = rg.index_.find(encode(nb, h.n));
            if (it == rg.index_.end())
                throw Error("legal step reached a labeling outside the enumerated models");
            rg.adjacency[i].push_back(it->second);
        }
        std::sort(rg.adjacency[i].begin(), rg.adjacency[i].end());
    }
    rg.component_id.assign(rg.models.size(), -1);
    for (std::size_t s = 0; s < rg.models.size(); ++s) {
        if (rg.component_id[s] != -1) continue;
        int id = rg.component_count++;
        std::vector<int> stack{static_cast<int>(s)};
        rg.component_id[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : rg.adjacency[u])
                if (rg.component_id[w] == -1) {
                    rg.component_id[w] = id;
                    stack.push_back(w);
                }
        }
    }
    return rg;
}

bool is_host(const Graph& g, const Graph& h, const EnumerationOptions& opts) {
    ReconGraph rg = build_recon_graph(g, h, opts);
    if (rg.models.empty()) throw NotAMinor("target is not a minor of the host");
    return rg.component_count == 1;
}

std::optional<int> diameter(const ReconGraph& rg) {
    if (rg.component_count != 1) return std::nullopt;
    if (rg.models.empty()) return std::nullopt;
    int best = 0;
    std::vector<int> dist(rg.models.size());
    for (std::size_t s = 0; s < rg.models.size(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{static_cast<int>(s)};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            best = std::max(best, dist[u]);
            for (int w : rg.adjacency[u])
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
    }
    return best;
}

std::vector<int> frozen_models(const ReconGraph& rg) {
    std::vector<int> result;
    for (std::size_t i = 0; i < rg.models.size(); ++i)
        if (rg.adjacency[i].empty()) result.push_back(static_cast<int>(i));
    return result;
}

std::optional<ReconSequence> find_path(const ReconGraph& rg, const HModel& from,
                                       const HModel& to) {
    auto si = rg.index_of(from.labels);
    auto ti = rg.index_of(to.labels);
    if (!si || !ti) throw UnknownModel("model is not a node of the reconfiguration graph");
    std::vector<int> parent(rg.models.size(), -2);
    parent[*si] = -1;
    std::deque<int> queue{*si};
    while (!queue.empty() && parent[*ti] == -2) {
        int u = queue.front();
        queue.pop_front();
        for (int w : rg.adjacency[u])
            if (parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (parent[*ti] == -2) return std::nullopt;
    std::vector<int> nodes;
    for (int u = *ti; u != -1; u = parent[u]) nodes.push_back(u);
    std::reverse(nodes.begin(), nodes.end());
    ReconSequence seq{HModel{rg.host, rg.target, rg.models[*si]}, {}};
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const auto& prev = rg.models[nodes[i - 1]];
        const auto& next = rg.models[nodes[i]];
        for (int v = 0; v < rg.host.n; ++v)
            if (prev[v] != next[v]) {
                seq.steps.push_back({v, next[v]});
                break;
            }
    }
    return seq;
}

std::optional<std::pair<HModel, HModel>> disconnection_witness(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedInput();
    auto cuts = cut_vertices(g);
    if (cuts.empty()) return std::nullopt;
    int x = cuts[0];
    // First two components of g minus x, in order of smallest vertex.
    std::vector<int> comp(g.n, -1);
    int comp_count = 0;
    for (int s = 0; s < g.n; ++s) {
        if (s == x || comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = comp_count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (w != x && comp[w] == -1) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    // f labels C2 with 1 and everything else (C1, x, further components)
    // with 0; g swaps the roles of C1 and C2.
    std::vector<int> fl(g.n, 0), gl(g.n, 1);
    for (int v = 0; v < g.n; ++v)
        if (comp[v] == 1) {
            fl[v] = 1;
            gl[v] = 0;
        }
    // x keeps the bulk label on each side.
    HModel f{g, k2, fl}, h{g, k2, gl};
    assert(validate_model(f).ok && validate_model(h).ok);
    return std::make_pair(f, h);
}

ReconSummary summarize(const ReconGraph& rg) {
    ReconSummary s;
    s.nodes = rg.node_count();
    s.edges = rg.edge_count();
    s.components = rg.component_count;
    s.diameter = diameter(rg);
    s.frozen = frozen_models(rg).size();
    return s;
}

void write_dot(const ReconGraph& rg, std::ostream& out) {
    out << "graph recon {\n";
    for (std::size_t i = 0; i < rg.models.size(); ++i) {
        out << "  n" << i << " [label=\"";
        for (std::size_t j = 0; j < rg.models[i].size(); ++j) {
            if (j) out << ' ';
            out << rg.models[i][j];
        }
        out << "\"];\n";
    }
    for (std::size_t i = 0; i < rg.models.size(); ++i)
        for (int j : rg.adjacency[i])
            if (static_cast<int>(i) < j) out << "  n" << i << " -- n" << j << ";\n";
    out << "}\n";
}

}  // namespace recon
