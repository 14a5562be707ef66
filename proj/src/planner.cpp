#include "recon/planner.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace recon {

HModel replay(const ReconSequence& seq) {
    HModel cur = seq.start;
    auto vr = validate_model(cur);
    if (!vr.ok) throw ReplayError(0, "start is not a valid model: " + vr.violation);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        auto [v, b] = seq.steps[i];
        if (v < 0 || v >= cur.host.n || b < 0 || b >= cur.target.n)
            throw ReplayError(i, "step out of range");
        auto verdict = legal_step(cur, v, b);
        if (!verdict.legal)
            throw ReplayError(i, "illegal step (" + to_string(*verdict.failed) + ")");
        cur.labels[v] = b;
    }
    return cur;
}

bool replay_valid(const ReconSequence& seq) {
    try {
        replay(seq);
        return true;
    } catch (const ReplayError&) {
        return false;
    }
}

namespace {

bool contains(const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

bool has_neighbor_labeled(const HModel& m, int v, int b) {
    for (int w : m.host.adj[v])
        if (m.labels[w] == b) return true;
    return false;
}

int out_degree(const HModel& m, int v) {
    int count = 0;
    for (int w : m.host.adj[v])
        if (m.labels[w] != m.labels[v]) ++count;
    return count;
}

// Applies steps to a working model, asserting legality of each one; every
// planner funnels its moves through here.
struct PlanBuilder {
    HModel current;
    std::vector<ReconStep> steps;

    explicit PlanBuilder(const HModel& start) : current(start) {}

    void apply(int v, int b) {
        auto verdict = legal_step(current, v, b);
        if (!verdict.legal)
            throw Error("planner emitted an illegal step at vertex " + std::to_string(v) +
                        " -> " + std::to_string(b) + " (" + to_string(*verdict.failed) + ")");
        current.labels[v] = b;
        steps.push_back({v, b});
    }

    // Appends the reversal of (start, fwd); current must sit at its end.
    void append_reversed(const HModel& start, const std::vector<ReconStep>& fwd) {
        std::vector<ReconStep> undo;
        HModel walk = start;
        for (auto [v, b] : fwd) {
            undo.push_back({v, walk.labels[v]});
            walk.labels[v] = b;
        }
        if (walk.labels != current.labels)
            throw Error("reversed segment does not start at the current model");
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) apply(it->vertex, it->new_label);
    }

    ReconSequence finish(const HModel& start) const { return {start, steps}; }
};

// Components of branch(a) minus x, each sorted, ordered by least vertex.
std::vector<std::vector<int>> branch_components_without(const HModel& m, int a, int x) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(m.host.n, 0);
    for (int s = 0; s < m.host.n; ++s) {
        if (s == x || m.labels[s] != a || seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : m.host.adj[u])
                if (w != x && m.labels[w] == a && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Drains the pool (interior vertices of one leaf block, all labeled a) out
// of branch a.  target >= 0 forces every relabeling to that label; -1
// takes the smallest legal out-neighbour label, which realizes the
// non-crucial fallback.  After each step the next vertex is preferably a
// neighbour of the previous one.
void drain_block_interior(PlanBuilder& pb, int a, const std::vector<int>& pool, int target) {
    std::vector<int> sorted_pool = pool;
    std::sort(sorted_pool.begin(), sorted_pool.end());
    int prev = -1;
    while (true) {
        std::vector<int> remaining;
        for (int v : sorted_pool)
            if (pb.current.labels[v] == a) remaining.push_back(v);
        if (remaining.empty()) break;
        BlockTree bt = branch_block_tree(pb.current, a);
        auto leaves = bt.leaf_blocks();
        std::vector<int> cands;
        for (int v : remaining) {
            if (bt.is_cut(v)) continue;
            auto vb = bt.blocks_containing(v);
            if (vb.size() != 1 || !contains(leaves, vb[0])) continue;
            if (target >= 0 ? !has_neighbor_labeled(pb.current, v, target)
                            : out_degree(pb.current, v) == 0)
                continue;
            cands.push_back(v);
        }
        if (cands.empty()) throw Error("leaf block drain stalled");
        int chosen = -1;
        if (prev >= 0)
            for (int v : cands)
                if (pb.current.host.has_edge(prev, v)) {
                    chosen = v;
                    break;
                }
        if (chosen < 0) chosen = cands[0];
        if (target >= 0) {
            pb.apply(chosen, target);
        } else {
            bool done = false;
            for (int b = 0; b < pb.current.target.n && !done; ++b) {
                if (b == a || !has_neighbor_labeled(pb.current, chosen, b)) continue;
                if (legal_step(pb.current, chosen, b).legal) {
                    pb.apply(chosen, b);
                    done = true;
                }
            }
            if (!done) throw Error("no legal label for drained vertex");
        }
        prev = chosen;
    }
}

// Slurps component C of branch a minus x, block by block from the leaves
// toward x; blocks with an interior b-neighbour are relabeled to b so the
// adjacency propagates to x.
void slurp_component_core(PlanBuilder& pb, int a, int b, int x, const std::vector<int>& C) {
    std::set<int> cset(C.begin(), C.end());
    while (true) {
        bool pending = false;
        for (int v : cset)
            if (pb.current.labels[v] == a) pending = true;
        if (!pending) break;
        BlockTree bt = branch_block_tree(pb.current, a);
        std::vector<std::vector<int>> eligible;
        for (int lb : bt.leaf_blocks()) {
            std::vector<int> pool;
            bool inside = true;
            for (int v : bt.interior_vertices(lb)) {
                if (v == x) continue;
                if (!cset.count(v)) {
                    inside = false;
                    break;
                }
                pool.push_back(v);
            }
            if (inside && !pool.empty()) eligible.push_back(std::move(pool));
        }
        if (eligible.empty()) throw Error("slurp found no drainable leaf block");
        std::sort(eligible.begin(), eligible.end());
        const auto& pool = eligible.front();
        bool case_two = false;
        for (int v : pool)
            if (has_neighbor_labeled(pb.current, v, b)) case_two = true;
        drain_block_interior(pb, a, pool, case_two ? b : -1);
    }
}

void require(bool ok, const std::string& condition, const std::string& detail) {
    if (!ok) throw PreconditionFailed(condition, condition + ": " + detail);
}

void require_valid(const HModel& m) {
    auto vr = validate_model(m);
    if (!vr.ok) throw PreconditionFailed("valid-model", vr.violation);
}

}  // namespace

ReconSequence plan_relabel_leafblock(const HModel& m, int a, const std::vector<int>& L) {
    require_valid(m);
    require(a >= 0 && a < m.target.n, "label-range", "label out of range");
    BlockTree bt = branch_block_tree(m, a);
    std::vector<int> lverts = L;
    std::sort(lverts.begin(), lverts.end());
    int block_index = -1;
    for (std::size_t i = 0; i < bt.blocks.size(); ++i)
        if (bt.blocks[i] == lverts) block_index = static_cast<int>(i);
    require(block_index >= 0 && contains(bt.leaf_blocks(), block_index), "leaf-block",
            "L is not a leaf block of branch " + std::to_string(a));
    require(m.branch_size(a) > static_cast<int>(lverts.size()), "branch-remainder",
            "branch must keep a vertex outside L");
    auto interior = bt.interior_vertices(block_index);
    bool connecting = false;
    for (int v : interior)
        if (out_degree(m, v) > 0) connecting = true;
    require(connecting, "connecting-interior", "no interior vertex has a connecting edge");
    require(!hits_leaf_crucial(m, lverts), "hits-leaf-crucial",
            "relabelings of L reach a leaf-crucial model");

    PlanBuilder pb(m);
    drain_block_interior(pb, a, interior, -1);
    return pb.finish(m);
}

ReconSequence plan_slurp_component(const HModel& m, int a, int b, int x,
                                   const std::vector<int>& C) {
    require_valid(m);
    require(is_k_connected(m.host, 2), "host-2-connected", "host must be 2-connected");
    require(a != b && a >= 0 && b >= 0 && a < m.target.n && b < m.target.n &&
                m.target.has_edge(a, b),
            "target-edge", "ab must be a target edge");
    require(x >= 0 && x < m.host.n && m.labels[x] == a, "x-in-branch",
            "x must carry label a");
    std::vector<int> cverts = C;
    std::sort(cverts.begin(), cverts.end());
    auto comps = branch_components_without(m, a, x);
    require(std::find(comps.begin(), comps.end(), cverts) != comps.end(), "component",
            "C must be a connected component of branch a minus x");
    bool has_b = false;
    for (int v : cverts)
        if (has_neighbor_labeled(m, v, b)) has_b = true;
    require(has_b, "b-neighbour", "C must contain a vertex with a b-neighbour");
    require(!hits_leaf_crucial(m, cverts), "hits-leaf-crucial",
            "relabelings of C reach a leaf-crucial model");
    require(!hits_leaf_l_crucial(m, cverts, b), "hits-leaf-b-crucial",
            "relabelings of C reach a leaf-b-crucial model");

    PlanBuilder pb(m);
    slurp_component_core(pb, a, b, x, cverts);
    if (!has_neighbor_labeled(pb.current, x, b))
        throw Error("slurp finished without giving x a b-neighbour");
    return pb.finish(m);
}

ReconSequence plan_slurp_siphon(const HModel& m, int a, int b, int x) {
    require_valid(m);
    require(m.target.n == 3 && m.target.edge_count() == 3, "target-k3", "target must be K3");
    require(is_k_connected(m.host, 3), "host-3-connected", "host must be 3-connected");
    require(a != b && a >= 0 && b >= 0 && a < 3 && b < 3, "label-range", "bad labels");
    require(x >= 0 && x < m.host.n && m.labels[x] == a, "x-in-branch", "x must carry label a");
    require(has_neighbor_labeled(m, x, b), "x-b-neighbour", "x needs a neighbour labeled b");
    int c = 3 - a - b;
    require(!contains(essential_for_labels(m, x), c), "x-not-essential-c",
            "x must not be essential for the third label");

    // D: the component holding the smallest vertex with a c-neighbour.
    auto comps = branch_components_without(m, a, x);
    int keep = -1;
    for (std::size_t i = 0; i < comps.size() && keep < 0; ++i)
        for (int v : comps[i])
            if (has_neighbor_labeled(m, v, c)) {
                keep = static_cast<int>(i);
                break;
            }
    require(keep >= 0, "retained-component",
            "no component of branch a minus x has a c-neighbour");

    PlanBuilder pb(m);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (static_cast<int>(i) == keep) continue;
        bool comp_b = false;
        for (int v : comps[i])
            if (has_neighbor_labeled(m, v, b)) comp_b = true;
        slurp_component_core(pb, a, comp_b ? b : c, x, comps[i]);
    }
    pb.apply(x, b);
    return pb.finish(m);
}

namespace {

// Drains branch(labels[0]) down to the special vertex 0: the canonical
// model keeping 0's label.
void k2_reduce(PlanBuilder& pb) {
    int a = pb.current.labels[0];
    int b = 1 - a;
    while (pb.current.branch_size(a) > 1) {
        BlockTree bt = branch_block_tree(pb.current, a);
        int chosen = -1;
        for (int u = 1; u < pb.current.host.n && chosen < 0; ++u)
            if (pb.current.labels[u] == a && !bt.is_cut(u) &&
                has_neighbor_labeled(pb.current, u, b))
                chosen = u;
        if (chosen < 0) throw Error("k2 reduction stalled");
        pb.apply(chosen, b);
    }
}

// From the canonical model around 0, step to the opposite orientation:
// relabel a non-cut neighbour w of 0, then 0 itself, then re-reduce.
void k2_cross(PlanBuilder& pb) {
    int a = pb.current.labels[0];
    int b = 1 - a;
    BlockTree bt = branch_block_tree(pb.current, b);
    int w = -1;
    for (int u : pb.current.host.adj[0]) {
        if (pb.current.labels[u] == b && !bt.is_cut(u)) {
            w = u;
            break;
        }
    }
    if (w < 0) throw Error("k2 crossing found no movable neighbour");
    pb.apply(w, a);
    pb.apply(0, b);
    k2_reduce(pb);
}

void check_k2_instance(const HModel& m) {
    if (!(m.target.n == 2 && m.target.edge_count() == 1))
        throw BadParameter("plan_k2 requires target K2");
    require_valid(m);
    if (!is_k_connected(m.host, 2)) throw NotTwoConnected();
}

}  // namespace

ReconSequence plan_k2(const HModel& from, const HModel& to) {
    check_k2_instance(from);
    check_k2_instance(to);
    if (from.host.adj != to.host.adj) throw BadParameter("models live on different hosts");
    if (from.labels == to.labels) return {from, {}};

    PlanBuilder pb(from);
    k2_reduce(pb);
    // Independently reduce the target; replay it backwards afterwards.
    PlanBuilder target_side(to);
    k2_reduce(target_side);
    if (pb.current.labels != target_side.current.labels) k2_cross(pb);
    if (pb.current.labels != target_side.current.labels)
        throw Error("k2 canonical models failed to meet");
    pb.append_reversed(to, target_side.steps);
    return pb.finish(from);
}

namespace {

void check_clique_instance(const HModel& m) {
    int n = m.host.n, l = m.target.n;
    if (m.host.edge_count() != n * (n - 1) / 2) throw NotComplete();
    if (m.target.edge_count() != l * (l - 1) / 2)
        throw BadParameter("plan_clique requires a complete target");
    if (n <= l) throw SizeMismatch("host must be strictly larger than the target");
    require_valid(m);
}

// Reconfigures a K_l model of K_m to the canonical model: vertex i gets
// label i for i < l, every later vertex gets label l-1.
void clique_canonicalize(PlanBuilder& pb) {
    int n = pb.current.host.n, l = pb.current.target.n;
    int last = l - 1;
    // Tail normalization; a singleton branch is first refilled from the
    // lowest prefix vertex whose branch can spare one.
    for (int i = l; i < n; ++i) {
        if (pb.current.labels[i] == last) continue;
        if (pb.current.branch_size(pb.current.labels[i]) == 1) {
            int j = -1;
            for (int u = 0; u < l && j < 0; ++u)
                if (pb.current.branch_size(pb.current.labels[u]) >= 2) j = u;
            if (j < 0) throw Error("clique tail repair found no spare vertex");
            pb.apply(j, pb.current.labels[i]);
        }
        pb.apply(i, last);
    }
    // The prefix now covers labels 0..l-2; duplicates displace into the
    // tail label until the prefix is a permutation.
    while (true) {
        std::vector<int> owner(l, -1);
        int dup = -1;
        for (int i = 0; i < l && dup < 0; ++i) {
            int lbl = pb.current.labels[i];
            if (owner[lbl] >= 0)
                dup = i;
            else
                owner[lbl] = i;
        }
        if (dup < 0) break;
        pb.apply(dup, last);
    }
    // Selection sort of the prefix permutation via the tail vertex l.
    int helper = l;
    for (int i = 0; i < l; ++i) {
        if (pb.current.labels[i] == i) continue;
        int j = -1;
        for (int u = i + 1; u < l && j < 0; ++u)
            if (pb.current.labels[u] == i) j = u;
        if (j < 0) throw Error("clique prefix lost a label");
        int s = pb.current.labels[i], t = pb.current.labels[j];
        if (s == last) {
            // The helper already carries s; two steps suffice.
            pb.apply(i, t);
            pb.apply(j, s);
        } else {
            pb.apply(helper, s);
            pb.apply(i, t);
            pb.apply(j, s);
            pb.apply(helper, last);
        }
    }
}

}  // namespace

ReconSequence plan_clique(const HModel& from, const HModel& to) {
    check_clique_instance(from);
    check_clique_instance(to);
    if (from.host.n != to.host.n || from.target.n != to.target.n)
        throw SizeMismatch("models live on different instances");

    PlanBuilder pb(from);
    clique_canonicalize(pb);
    PlanBuilder target_side(to);
    clique_canonicalize(target_side);
    pb.append_reversed(to, target_side.steps);
    return pb.finish(from);
}

namespace {

void check_genwheel_instance(const HModel& m, const GenWheelLayout& lay) {
    if (lay.m < 3) throw NotAGeneralizedWheel("generalized wheels need m >= 3");
    if (lay.vertex_count() != m.host.n)
        throw NotAGeneralizedWheel("layout does not match the host size");
    if (m.target.n != lay.ell + 2 ||
        m.target.edge_count() != m.target.n * (m.target.n - 1) / 2)
        throw NotAGeneralizedWheel("target must be the complete graph on ell+2 labels");
    for (int h = 0; h < lay.ell; ++h)
        if (!m.host.is_universal(h)) throw NotAGeneralizedWheel("hub vertices must be universal");
    std::vector<int> rim;
    for (int v = lay.ell; v < m.host.n; ++v) rim.push_back(v);
    if (!is_k_connected(m.host.induced(rim), 2))
        throw NotAGeneralizedWheel("non-hub subgraph must be 2-connected");
    require_valid(m);
}

// Reduces the two-label rim submodel so that only the special vertex keeps
// its label; mirrors the K2 reduction on the induced rim subgraph.
void genwheel_rim_reduce(PlanBuilder& pb, const GenWheelLayout& lay) {
    int s = lay.special();
    int p = pb.current.labels[s];
    int q = -1;
    for (int v = lay.ell; v < pb.current.host.n; ++v)
        if (pb.current.labels[v] != p) q = pb.current.labels[v];
    if (q < 0) throw Error("rim carries a single label");
    while (true) {
        int chosen = -1;
        // Branch p restricted to the rim equals the whole branch, since
        // hub labels are distinct from rim labels at this point.
        BlockTree bt = branch_block_tree(pb.current, p);
        for (int v = lay.ell; v < pb.current.host.n && chosen < 0; ++v)
            if (v != s && pb.current.labels[v] == p && !bt.is_cut(v) &&
                has_neighbor_labeled(pb.current, v, q))
                chosen = v;
        if (chosen < 0) break;
        pb.apply(chosen, q);
    }
    if (pb.current.branch_size(p) != 1) throw Error("rim reduction stalled");
}

void genwheel_rim_cross(PlanBuilder& pb, const GenWheelLayout& lay) {
    int s = lay.special();
    int p = pb.current.labels[s];
    int q = -1;
    for (int v = lay.ell; v < pb.current.host.n; ++v)
        if (pb.current.labels[v] != p) q = pb.current.labels[v];
    BlockTree bt = branch_block_tree(pb.current, q);
    int w = -1;
    for (int u : pb.current.host.adj[s])
        if (u >= lay.ell && pb.current.labels[u] == q && !bt.is_cut(u)) {
            w = u;
            break;
        }
    if (w < 0) throw Error("rim crossing found no movable neighbour");
    pb.apply(w, p);
    pb.apply(s, q);
    genwheel_rim_reduce(pb, lay);
}

// Routes any model to a canonical one: hubs distinct, rim free of hub
// labels, rim reduced around the special vertex.
void genwheel_canonicalize(PlanBuilder& pb, const GenWheelLayout& lay) {
    int labels_n = pb.current.target.n;
    // Distinct hub labels.
    while (true) {
        int dup = -1;
        std::vector<int> seen(labels_n, -1);
        for (int h = 0; h < lay.ell && dup < 0; ++h) {
            int lbl = pb.current.labels[h];
            if (seen[lbl] >= 0)
                dup = h;
            else
                seen[lbl] = h;
        }
        if (dup < 0) break;
        int fresh = -1;
        for (int a = 0; a < labels_n && fresh < 0; ++a) {
            bool on_hub = false;
            for (int h = 0; h < lay.ell; ++h)
                if (pb.current.labels[h] == a) on_hub = true;
            if (!on_hub) fresh = a;
        }
        pb.apply(dup, fresh);
    }
    // Purge hub labels from the rim: a hub-labeled rim vertex next to a
    // rim-labeled one adopts that label.
    while (true) {
        std::vector<char> hub_label(labels_n, 0);
        for (int h = 0; h < lay.ell; ++h) hub_label[pb.current.labels[h]] = 1;
        bool pending = false;
        int v = -1, dest = -1;
        for (int u = lay.ell; u < pb.current.host.n && v < 0; ++u) {
            if (!hub_label[pb.current.labels[u]]) continue;
            pending = true;
            int best = labels_n;
            for (int w : pb.current.host.adj[u])
                if (w >= lay.ell && !hub_label[pb.current.labels[w]])
                    best = std::min(best, pb.current.labels[w]);
            if (best < labels_n) {
                v = u;
                dest = best;
            }
        }
        if (v < 0) {
            if (pending) throw Error("hub-label purge stalled");
            break;
        }
        pb.apply(v, dest);
    }
    genwheel_rim_reduce(pb, lay);
}

// Slot view of a canonical model: labels of the hubs, the special vertex,
// and the rim bulk.
std::vector<int> genwheel_slots(const HModel& m, const GenWheelLayout& lay) {
    std::vector<int> slots;
    for (int h = 0; h < lay.ell; ++h) slots.push_back(m.labels[h]);
    slots.push_back(m.labels[lay.special()]);
    slots.push_back(m.labels[lay.special_next()]);
    return slots;
}

void genwheel_swap_hub_hub(PlanBuilder& pb, const GenWheelLayout& lay, int hi, int hj) {
    int sp = lay.special_next();
    int rest = pb.current.labels[sp];
    int a = pb.current.labels[hi], b = pb.current.labels[hj];
    pb.apply(sp, a);
    pb.apply(hi, b);
    pb.apply(hj, a);
    pb.apply(sp, rest);
}

void genwheel_swap_hub_special(PlanBuilder& pb, const GenWheelLayout& lay, int hi) {
    int sp = lay.special_next();
    int s = lay.special();
    int rest = pb.current.labels[sp];
    int a = pb.current.labels[hi], b = pb.current.labels[s];
    pb.apply(sp, a);
    pb.apply(hi, b);
    pb.apply(s, a);
    pb.apply(sp, rest);
}

}  // namespace

ReconSequence plan_genwheel(const HModel& from, const HModel& to, const GenWheelLayout& lay) {
    check_genwheel_instance(from, lay);
    check_genwheel_instance(to, lay);
    if (from.host.adj != to.host.adj) throw BadParameter("models live on different hosts");

    PlanBuilder pb(from);
    genwheel_canonicalize(pb, lay);
    PlanBuilder target_side(to);
    genwheel_canonicalize(target_side, lay);

    auto tgt = genwheel_slots(target_side.current, lay);
    // Hub slots first: fetch each target label from wherever it sits.
    for (int i = 0; i < lay.ell; ++i) {
        if (pb.current.labels[i] == tgt[i]) continue;
        int holder = -1;
        for (int h = 0; h < lay.ell; ++h)
            if (pb.current.labels[h] == tgt[i]) holder = h;
        if (holder >= 0) {
            genwheel_swap_hub_hub(pb, lay, i, holder);
            continue;
        }
        if (pb.current.labels[lay.special()] != tgt[i]) {
            // The label sits on the rim bulk; rotate it into the special
            // slot first.
            genwheel_rim_cross(pb, lay);
        }
        genwheel_swap_hub_special(pb, lay, i);
    }
    if (pb.current.labels[lay.special()] != tgt[lay.ell]) genwheel_rim_cross(pb, lay);
    if (pb.current.labels != target_side.current.labels)
        throw Error("generalized-wheel canonical models failed to meet");
    pb.append_reversed(to, target_side.steps);
    return pb.finish(from);
}

ReconSequence lift_sequence_through_split(const ReconSequence& seq, const SplitSpec& split) {
    const Graph& g = seq.start.host;
    if (!is_k_connected(g, 2))
        throw PreconditionFailed("host-2-connected", "split lifting needs a 2-connected host");
    int l = seq.start.target.n;
    if (l < 3 || seq.start.target.edge_count() != l * (l - 1) / 2)
        throw PreconditionFailed("target-clique", "split lifting needs target K_l with l > 2");
    Graph lifted_host = split_vertex(g, split.v, split.part1, split.part2);
    int x = split.v, y = g.n;

    HModel g_side = seq.start;
    auto vr = validate_model(g_side);
    if (!vr.ok) throw PreconditionFailed("valid-model", vr.violation);

    auto lifted_labels = seq.start.labels;
    lifted_labels.push_back(seq.start.labels[split.v]);
    HModel lifted_start{lifted_host, seq.start.target, lifted_labels};
    vr = validate_model(lifted_start);
    if (!vr.ok) throw PreconditionFailed("lifted-model", vr.violation);

    PlanBuilder pb(lifted_start);
    for (std::size_t idx = 0; idx < seq.steps.size(); ++idx) {
        auto [u, b] = seq.steps[idx];
        auto verdict = legal_step(g_side, u, b);
        if (!verdict.legal) throw ReplayError(idx, "input sequence is not replay-valid");
        try {
            if (u != x) {
                pb.apply(u, b);
            } else {
                int a = pb.current.labels[x];
                bool xb = has_neighbor_labeled(pb.current, x, b);
                bool yb = has_neighbor_labeled(pb.current, y, b);
                if (!xb && !yb) throw Error("neither split half sees the new label");
                int p = xb ? x : y;
                int q = xb ? y : x;
                BlockTree bt = branch_block_tree(pb.current, a);
                if (!bt.is_cut(p)) {
                    pb.apply(p, b);
                    pb.apply(q, b);
                } else if (has_neighbor_labeled(pb.current, q, b)) {
                    pb.apply(q, b);
                    pb.apply(p, b);
                } else {
                    int c = -1;
                    for (int cand = 0; cand < pb.current.target.n && c < 0; ++cand)
                        if (cand != a && cand != b &&
                            has_neighbor_labeled(pb.current, q, cand))
                            c = cand;
                    if (c < 0) throw Error("no auxiliary label for the isolated half");
                    pb.apply(q, c);
                    pb.apply(p, b);
                    pb.apply(q, b);
                }
            }
        } catch (const Error& e) {
            throw LiftFailed(idx, std::string("lift failed at step ") + std::to_string(idx) +
                                      ": " + e.what());
        }
        g_side.labels[u] = b;
    }
    return pb.finish(lifted_start);
}

void write_sequence(const ReconSequence& seq, std::ostream& out) {
    out << seq.steps.size() << " steps\n";
    for (auto [v, b] : seq.steps) out << v << ' ' << b << '\n';
}

std::vector<ReconStep> read_sequence(std::istream& in) {
    std::size_t count;
    std::string word;
    if (!(in >> count >> word) || word != "steps")
        throw ParseError("sequence file: expected header \"<n> steps\"");
    std::vector<ReconStep> steps;
    for (std::size_t i = 0; i < count; ++i) {
        int v, b;
        if (!(in >> v >> b)) throw ParseError("sequence file: truncated steps");
        steps.push_back({v, b});
    }
    return steps;
}

}  // namespace recon
