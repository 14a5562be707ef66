#include "recon/model.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "recon/recon_graph.hpp"

namespace recon {

std::vector<int> HModel::branch(int a) const {
    std::vector<int> result;
    for (int v = 0; v < host.n; ++v)
        if (labels[v] == a) result.push_back(v);
    return result;
}

int HModel::branch_size(int a) const {
    int count = 0;
    for (int lbl : labels)
        if (lbl == a) ++count;
    return count;
}

HModel HModel::with_label(int v, int b) const {
    HModel copy = *this;
    copy.labels[v] = b;
    return copy;
}

namespace {

void check_shape(const HModel& m) {
    if (static_cast<int>(m.labels.size()) != m.host.n)
        throw ShapeMismatch("labels array length does not match host vertex count");
    for (int lbl : m.labels)
        if (lbl < 0 || lbl >= m.target.n)
            throw ShapeMismatch("label out of range");
}

bool branch_connected(const Graph& g, const std::vector<int>& labels, int a) {
    int start = -1, size = 0;
    for (int v = 0; v < g.n; ++v)
        if (labels[v] == a) {
            if (start < 0) start = v;
            ++size;
        }
    if (size == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (labels[v] == a && !seen[v]) {
                seen[v] = 1;
                ++visited;
                stack.push_back(v);
            }
    }
    return visited == size;
}

bool pair_covered(const Graph& g, const std::vector<int>& labels, int a, int b) {
    for (int u = 0; u < g.n; ++u) {
        if (labels[u] != a) continue;
        for (int v : g.adj[u])
            if (labels[v] == b) return true;
    }
    return false;
}

}  // namespace

ValidationResult validate_model(const HModel& m) {
    check_shape(m);
    std::vector<int> sizes(m.target.n, 0);
    for (int lbl : m.labels) ++sizes[lbl];
    for (int a = 0; a < m.target.n; ++a)
        if (sizes[a] == 0) return {false, "branch set " + std::to_string(a) + " empty"};
    for (int a = 0; a < m.target.n; ++a)
        if (!branch_connected(m.host, m.labels, a))
            return {false, "branch set " + std::to_string(a) + " disconnected"};
    for (auto [a, b] : m.target.edges())
        if (!pair_covered(m.host, m.labels, a, b))
            return {false, "no connecting edge for target edge " + std::to_string(a) + "-" +
                               std::to_string(b)};
    return {true, ""};
}

namespace {

struct Enumerator {
    const Graph& g;
    const Graph& h;
    const EnumerationOptions& opts;
    std::vector<int> labels;
    std::vector<int> used;  // vertices assigned per label so far
    std::uint64_t visited = 0;
    std::vector<std::vector<int>> out;

    Enumerator(const Graph& g_, const Graph& h_, const EnumerationOptions& o)
        : g(g_), h(h_), opts(o), labels(g_.n, -1), used(h_.n, 0) {}

    bool complete_valid() const {
        for (int a = 0; a < h.n; ++a)
            if (used[a] == 0 || !branch_connected(g, labels, a)) return false;
        for (auto [a, b] : h.edges())
            if (!pair_covered(g, labels, a, b)) return false;
        return true;
    }

    // A sealed partial branch set that is already disconnected can never
    // become connected: no unassigned vertex touches it.
    bool prunable(int next) const {
        for (int a = 0; a < h.n; ++a) {
            if (used[a] < 2) continue;
            bool sealed = true;
            for (int v = next; v < g.n && sealed; ++v)
                for (int w : g.adj[v])
                    if (w < next && labels[w] == a) {
                        sealed = false;
                        break;
                    }
            if (!sealed) continue;
            if (!branch_connected(g, labels, a)) return true;
        }
        return false;
    }

    void rec(int v) {
        if (++visited > opts.budget) throw StateSpaceExceeded("model enumeration budget exceeded");
        if (v == g.n) {
            if (complete_valid()) out.push_back(labels);
            return;
        }
        int unused = 0;
        for (int a = 0; a < h.n; ++a)
            if (used[a] == 0) ++unused;
        if (unused > g.n - v) return;  // not enough vertices left for the unused labels
        if (opts.connectivity_pruning && prunable(v)) return;
        for (int a = 0; a < h.n; ++a) {
            labels[v] = a;
            ++used[a];
            rec(v + 1);
            --used[a];
            labels[v] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_model_labels(const Graph& g, const Graph& h,
                                                     const EnumerationOptions& opts) {
    if (h.n < 1) throw BadParameter("target graph must have at least one vertex");
    Enumerator e(g, h, opts);
    if (g.n > 0) e.rec(0);
    return std::move(e.out);
}

std::vector<HModel> enumerate_models(const Graph& g, const Graph& h,
                                     const EnumerationOptions& opts) {
    std::vector<HModel> result;
    for (auto& labels : enumerate_model_labels(g, h, opts))
        result.push_back(HModel{g, h, std::move(labels)});
    return result;
}

std::vector<std::pair<int, int>> connecting_edges(const HModel& m, int a, int b) {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < m.host.n; ++u) {
        if (m.labels[u] != a) continue;
        for (int v : m.host.adj[u])
            if (m.labels[v] == b) result.emplace_back(u, v);
    }
    return result;
}

std::vector<EssentialEdge> essential_edges(const HModel& m) {
    std::vector<EssentialEdge> result;
    for (auto [a, b] : m.target.edges()) {
        auto ce = connecting_edges(m, a, b);
        if (ce.size() == 1) result.push_back({a, b, ce[0]});
    }
    return result;
}

std::vector<int> essential_vertices(const HModel& m, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= m.target.n || b >= m.target.n ||
        !m.target.has_edge(a, b))
        throw NotAnHEdge("essential_vertices requires a target edge ab");
    auto ce = connecting_edges(m, a, b);
    if (ce.empty()) return {};
    int first = ce[0].first;
    for (auto& e : ce)
        if (e.first != first) return {};
    return {first};
}

std::vector<int> essential_for_labels(const HModel& m, int v) {
    int a = m.labels[v];
    std::vector<int> result;
    for (int b = 0; b < m.target.n; ++b) {
        if (b == a || !m.target.has_edge(a, b)) continue;
        auto ev = essential_vertices(m, a, b);
        if (!ev.empty() && ev[0] == v) result.push_back(b);
    }
    return result;
}

std::vector<int> crucial_vertices(const HModel& m) {
    std::vector<int> result;
    for (int v = 0; v < m.host.n; ++v)
        if (essential_for_labels(m, v).size() >= 2) result.push_back(v);
    return result;
}

bool is_b_crucial(const HModel& m, int v, int b) {
    int a = m.labels[v];
    if (b == a) throw SameLabel("is_b_crucial requires b != label(v)");
    bool has_b_neighbor = false;
    for (int w : m.host.adj[v])
        if (m.labels[w] == b) {
            has_b_neighbor = true;
            break;
        }
    if (!has_b_neighbor) return false;
    for (int c : essential_for_labels(m, v))
        if (c != b) return true;
    return false;
}

std::vector<int> WeakConnection::lynchpin_choices() const {
    if (essential_edge) return {essential_edge->first, essential_edge->second};
    if (!witnesses_a.empty()) return {witnesses_a[0]};
    return {witnesses_b[0]};
}

std::vector<WeakConnection> weak_connections(const HModel& m) {
    std::vector<WeakConnection> result;
    for (auto [a, b] : m.target.edges()) {
        WeakConnection wc;
        wc.label_a = a;
        wc.label_b = b;
        wc.witnesses_a = essential_vertices(m, a, b);
        wc.witnesses_b = essential_vertices(m, b, a);
        if (wc.witnesses_a.empty() && wc.witnesses_b.empty()) continue;
        auto ce = connecting_edges(m, a, b);
        if (ce.size() == 1) wc.essential_edge = ce[0];
        result.push_back(std::move(wc));
    }
    return result;
}

std::vector<LynchpinDesignation> lynchpin_designations(const HModel& m, int max_free_choices) {
    auto wcs = weak_connections(m);
    int free = 0;
    for (const auto& wc : wcs)
        if (wc.lynchpin_choices().size() == 2) ++free;
    if (free > max_free_choices)
        throw StateSpaceExceeded("too many essential-edge weak connections to enumerate");
    std::vector<LynchpinDesignation> result;
    std::size_t count = 1ULL << free;
    for (std::size_t mask = 0; mask < count; ++mask) {
        LynchpinDesignation d;
        std::size_t bit = 0;
        for (const auto& wc : wcs) {
            auto choices = wc.lynchpin_choices();
            if (choices.size() == 1) {
                d.lynchpins.push_back(choices[0]);
            } else {
                d.lynchpins.push_back(choices[(mask >> bit) & 1]);
                ++bit;
            }
        }
        result.push_back(std::move(d));
    }
    return result;
}

BlockTree branch_block_tree(const HModel& m, int a) {
    auto verts = m.branch(a);
    if (verts.empty()) throw BadParameter("branch set is empty");
    Graph sub = m.host.induced(verts);
    BlockTree bt = block_tree(sub);
    // Map subgraph indices back to host indices (induced() sorts them).
    for (auto& block : bt.blocks)
        for (int& v : block) v = verts[v];
    for (int& v : bt.cut_vertices) v = verts[v];
    return bt;
}

BlockTree restricted_block_subtree(const HModel& m, int a, const std::vector<int>& A) {
    BlockTree bt = branch_block_tree(m, a);
    std::set<int> in_a(A.begin(), A.end());
    std::vector<int> keep;
    std::vector<int> new_index(bt.blocks.size(), -1);
    for (std::size_t b = 0; b < bt.blocks.size(); ++b) {
        bool meets = false;
        for (int v : bt.blocks[b])
            if (in_a.count(v)) {
                meets = true;
                break;
            }
        if (meets) {
            new_index[b] = static_cast<int>(keep.size());
            keep.push_back(static_cast<int>(b));
        }
    }
    BlockTree sub;
    for (int b : keep) sub.blocks.push_back(bt.blocks[b]);
    for (auto [x, y] : bt.edges)
        if (new_index[x] >= 0 && new_index[y] >= 0)
            sub.edges.emplace_back(new_index[x], new_index[y]);
    // Joining structure within the subtree: vertices in >= 2 kept blocks.
    std::map<int, int> appearances;
    for (const auto& block : sub.blocks)
        for (int v : block) ++appearances[v];
    for (auto [v, cnt] : appearances)
        if (cnt >= 2) sub.cut_vertices.push_back(v);
    return sub;
}

namespace {

// Interior vertices of leaf blocks, across all branch sets.
std::vector<char> interior_leaf_mask(const HModel& m) {
    std::vector<char> mask(m.host.n, 0);
    for (int a = 0; a < m.target.n; ++a) {
        if (m.branch_size(a) == 0) continue;
        BlockTree bt = branch_block_tree(m, a);
        for (int b : bt.leaf_blocks())
            for (int v : bt.interior_vertices(b)) mask[v] = 1;
    }
    return mask;
}

}  // namespace

std::vector<int> leaf_crucial_vertices(const HModel& m) {
    auto mask = interior_leaf_mask(m);
    std::vector<int> result;
    for (int v : crucial_vertices(m))
        if (mask[v]) result.push_back(v);
    return result;
}

bool is_leaf_crucial_model(const HModel& m) { return !leaf_crucial_vertices(m).empty(); }

std::vector<int> leaf_l_crucial_vertices(const HModel& m, int ell) {
    auto mask = interior_leaf_mask(m);
    std::vector<int> result;
    for (int v = 0; v < m.host.n; ++v) {
        if (m.labels[v] == ell || !mask[v]) continue;
        if (is_b_crucial(m, v, ell)) result.push_back(v);
    }
    return result;
}

bool is_leaf_l_crucial_model(const HModel& m, int ell) {
    return !leaf_l_crucial_vertices(m, ell).empty();
}

namespace {

// Models reachable from m via legal steps confined to A, tested against a
// predicate.  Step adjacency is symmetric, so the reachable set is the
// component of m, and "every A-confined relabeling extends within A to a
// model satisfying the predicate" holds exactly when that component
// contains a satisfying model.
template <typename Pred>
bool restricted_search(const HModel& m, const std::vector<int>& A, std::uint64_t budget,
                       Pred pred) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{m.labels};
    seen.insert(m.labels);
    HModel work = m;
    std::uint64_t visited = 0;
    while (!frontier.empty()) {
        auto labels = frontier.back();
        frontier.pop_back();
        if (++visited > budget) throw StateSpaceExceeded("restricted relabeling search budget");
        work.labels = labels;
        if (pred(work)) return true;
        for (int v : A) {
            int old = labels[v];
            for (int b = 0; b < m.target.n; ++b) {
                if (b == old) continue;
                work.labels = labels;
                if (!legal_step(work, v, b).legal) continue;
                work.labels[v] = b;
                if (!seen.count(work.labels)) {
                    seen.insert(work.labels);
                    frontier.push_back(work.labels);
                }
            }
            work.labels = labels;
        }
    }
    return false;
}

}  // namespace

bool hits_leaf_crucial(const HModel& m, const std::vector<int>& A, std::uint64_t budget) {
    return restricted_search(m, A, budget,
                             [](const HModel& g) { return is_leaf_crucial_model(g); });
}

bool hits_leaf_l_crucial(const HModel& m, const std::vector<int>& A, int ell,
                         std::uint64_t budget) {
    return restricted_search(m, A, budget,
                             [ell](const HModel& g) { return is_leaf_l_crucial_model(g, ell); });
}

namespace {

bool target_is_complete(const Graph& h) {
    return h.edge_count() == h.n * (h.n - 1) / 2;
}

int connecting_degree(const HModel& m, int v) {
    int count = 0;
    for (int w : m.host.adj[v])
        if (m.labels[w] != m.labels[v]) ++count;
    return count;
}

// Can x and y simultaneously avoid every lynchpin role?  Per weak
// connection the lynchpin comes from a choice set of one or two vertices,
// so a designation avoiding both exists iff every choice set has an
// element outside {x, y}.
bool pair_avoidable(const std::vector<WeakConnection>& wcs, int x, int y) {
    for (const auto& wc : wcs) {
        bool escapes = false;
        for (int c : wc.lynchpin_choices())
            if (c != x && c != y) {
                escapes = true;
                break;
            }
        if (!escapes) return false;
    }
    return true;
}

bool vertex_avoidable(const std::vector<WeakConnection>& wcs, int x) {
    for (const auto& wc : wcs) {
        auto choices = wc.lynchpin_choices();
        if (choices.size() == 1 && choices[0] == x) return false;
    }
    return true;
}

bool weakly_connected(const std::vector<WeakConnection>& wcs, int a, int b) {
    for (const auto& wc : wcs)
        if ((wc.label_a == a && wc.label_b == b) || (wc.label_a == b && wc.label_b == a))
            return true;
    return false;
}

bool has_connecting_edge_to(const HModel& m, int v, int b) {
    for (int w : m.host.adj[v])
        if (m.labels[w] == b) return true;
    return false;
}

}  // namespace

StructuralLemmaReport check_structural_lemmas(const HModel& m, int k) {
    auto vr = validate_model(m);
    if (!vr.ok)
        throw BadParameter("check_structural_lemmas requires a valid model: " + vr.violation);
    if (!is_k_connected(m.host, k))
        throw HypothesisNotMet("host is not " + std::to_string(k) + "-connected");

    StructuralLemmaReport report;
    auto violate = [&](const std::string& msg) { report.violations.push_back(msg); };
    auto wcs = weak_connections(m);

    // (i) Leaf-block connecting capacity: the k disjoint paths from an
    // interior vertex u of a leaf block to another branch set exit through
    // the joining vertex, through u's own connecting edges, or through
    // distinct other connecting interior vertices of the block.
    if (m.target.n >= 2) {
        ++report.checks_run;
        for (int a = 0; a < m.target.n; ++a) {
            BlockTree bt = branch_block_tree(m, a);
            for (int lb : bt.leaf_blocks()) {
                auto interior = bt.interior_vertices(lb);
                int joining = static_cast<int>(bt.joining_vertices(lb).size());
                int connecting_interiors = 0;
                for (int w : interior)
                    if (connecting_degree(m, w) > 0) ++connecting_interiors;
                for (int u : interior) {
                    int others = connecting_interiors - (connecting_degree(m, u) > 0 ? 1 : 0);
                    int capacity = joining + connecting_degree(m, u) + others;
                    if (capacity < k) {
                        std::ostringstream os;
                        os << "leafblock: branch " << a << " leaf block at vertex " << u
                           << " has exit capacity " << capacity << " < " << k;
                        violate(os.str());
                    }
                }
            }
        }
    }

    // (ii) Two-weak: |V(H)| = k, target edge l-m, and weak connections
    // from branch l to every branch other than m.
    if (m.target.n == k) {
        ++report.checks_run;
        for (int l = 0; l < m.target.n; ++l) {
            for (int mm = 0; mm < m.target.n; ++mm) {
                if (l == mm || !m.target.has_edge(l, mm)) continue;
                bool hypothesis = true;
                for (int c = 0; c < m.target.n && hypothesis; ++c) {
                    if (c == l || c == mm) continue;
                    if (!m.target.has_edge(l, c) || !weakly_connected(wcs, l, c))
                        hypothesis = false;
                }
                if (!hypothesis) continue;
                BlockTree btl = branch_block_tree(m, l);
                for (int lb : btl.leaf_blocks()) {
                    bool found = false;
                    for (int u : btl.interior_vertices(lb))
                        if (has_connecting_edge_to(m, u, mm)) {
                            found = true;
                            break;
                        }
                    if (!found) {
                        std::ostringstream os;
                        os << "two-weak(1): branch " << l << " leaf block lacks an interior "
                           << "vertex connecting to branch " << mm;
                        violate(os.str());
                    }
                }
                bool l_has_nonlynchpin = false;
                for (int v : m.branch(l))
                    if (vertex_avoidable(wcs, v)) {
                        l_has_nonlynchpin = true;
                        break;
                    }
                if (l_has_nonlynchpin) {
                    BlockTree btm = branch_block_tree(m, mm);
                    for (int lb : btm.leaf_blocks()) {
                        bool found = false;
                        for (int u : btm.interior_vertices(lb))
                            if (has_connecting_edge_to(m, u, l)) {
                                found = true;
                                break;
                            }
                        if (!found) {
                            std::ostringstream os;
                            os << "two-weak(2): branch " << mm << " leaf block lacks an interior "
                               << "vertex connecting to branch " << l;
                            violate(os.str());
                        }
                    }
                }
            }
        }
    }

    // (iii) All-weak: a K_k-model branch weakly connected to all others
    // cannot leave non-lynchpins both inside and outside of it.
    if (m.target.n == k && target_is_complete(m.target)) {
        ++report.checks_run;
        for (int b = 0; b < m.target.n; ++b) {
            bool all_weak = true;
            for (int c = 0; c < m.target.n && all_weak; ++c)
                if (c != b && !weakly_connected(wcs, b, c)) all_weak = false;
            if (!all_weak) continue;
            for (int x : m.branch(b)) {
                for (int y = 0; y < m.host.n; ++y) {
                    if (m.labels[y] == b) continue;
                    if (pair_avoidable(wcs, x, y)) {
                        std::ostringstream os;
                        os << "all-weak: branch " << b << " non-lynchpin " << x
                           << " coexists with non-lynchpin " << y;
                        violate(os.str());
                    }
                }
            }
        }
    }

    // (iv) Four-weak: K4 models on 4-connected hosts; a weak four-cycle
    // a-b-c-d cannot leave non-lynchpins in both end branches a and d.
    if (k == 4 && m.target.n == 4 && target_is_complete(m.target)) {
        ++report.checks_run;
        std::vector<int> perm{0, 1, 2, 3};
        do {
            int a = perm[0], b = perm[1], c = perm[2], d = perm[3];
            if (!weakly_connected(wcs, a, b) || !weakly_connected(wcs, b, c) ||
                !weakly_connected(wcs, c, d) || !weakly_connected(wcs, d, a))
                continue;
            for (int x : m.branch(a))
                for (int y : m.branch(d))
                    if (pair_avoidable(wcs, x, y)) {
                        std::ostringstream os;
                        os << "four-weak: cycle " << a << "-" << b << "-" << c << "-" << d
                           << " leaves non-lynchpins " << x << " and " << y;
                        violate(os.str());
                    }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // (v) K3 models of 2-connected hosts: branch sets of size >= 2 have no
    // crucial vertex.
    if (k >= 2 && m.target.n == 3 && target_is_complete(m.target)) {
        ++report.checks_run;
        for (int v : crucial_vertices(m))
            if (m.branch_size(m.labels[v]) >= 2) {
                std::ostringstream os;
                os << "no-crucial: vertex " << v << " is crucial in branch " << m.labels[v]
                   << " of size " << m.branch_size(m.labels[v]);
                violate(os.str());
            }
    }

    return report;
}

}  // namespace recon
