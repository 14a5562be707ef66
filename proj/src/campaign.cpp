#include "recon/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "recon/families.hpp"
#include "recon/planner.hpp"
#include "recon/recon_graph.hpp"

namespace recon {

int CampaignReport::passed() const {
    int n = 0;
    for (const auto& r : instances)
        if (r.verdict == Verdict::pass) ++n;
    return n;
}

int CampaignReport::failed() const {
    int n = 0;
    for (const auto& r : instances)
        if (r.verdict == Verdict::fail) ++n;
    return n;
}

int CampaignReport::skipped() const {
    int n = 0;
    for (const auto& r : instances)
        if (r.verdict == Verdict::skipped) ++n;
    return n;
}

namespace {

struct Task {
    std::string descriptor;
    std::function<InstanceResult()> run;
};

std::vector<InstanceResult> run_pool(const std::vector<Task>& tasks, int workers) {
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 4;
    workers = std::min<int>(workers, static_cast<int>(tasks.size()) + 1);
    std::vector<InstanceResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                results[i] = tasks[i].run();
            } catch (const std::exception& e) {
                results[i] = {tasks[i].descriptor, Verdict::fail, e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

InstanceResult verdict_of(const std::string& descriptor, bool ok, const std::string& detail) {
    return {descriptor, ok ? Verdict::pass : Verdict::fail, detail};
}

// ---------------------------------------------------------------- sweeps

CampaignReport campaign_k2(const CampaignParams& p) {
    CampaignReport report;
    report.name = "k2-characterization";
    int n_max = std::min(p.n_max, 7);
    report.params_header = "n=3.." + std::to_string(n_max);
    std::vector<Task> tasks;
    Graph k2 = complete_graph(2);
    for (int n = 3; n <= n_max; ++n) {
        for (const auto& g : enumerate_small_graphs(n, 1)) {
            std::string desc = "n=" + std::to_string(n) + " " + to_graph6(g);
            tasks.push_back({desc, [desc, g, k2] {
                                 bool host = is_host(g, k2);
                                 bool conn2 = is_k_connected(g, 2);
                                 return verdict_of(desc, host == conn2,
                                                   std::string("host=") + (host ? "y" : "n") +
                                                       " 2conn=" + (conn2 ? "y" : "n"));
                             }});
        }
    }
    report.instances = run_pool(tasks, p.workers);
    return report;
}

CampaignReport campaign_k3(const CampaignParams& p) {
    CampaignReport report;
    report.name = "k3-3connected";
    int n_max = std::min(p.n_max, 7);
    report.params_header = "n=4.." + std::to_string(n_max);
    std::vector<Task> tasks;
    Graph k3 = complete_graph(3);
    for (int n = 4; n <= n_max; ++n) {
        for (const auto& g : enumerate_small_graphs(n, 3)) {
            std::string desc = "n=" + std::to_string(n) + " " + to_graph6(g);
            tasks.push_back({desc, [desc, g, k3] {
                                 return verdict_of(desc, is_host(g, k3), "");
                             }});
        }
    }
    report.instances = run_pool(tasks, p.workers);
    return report;
}

CampaignReport campaign_k4_bases(const CampaignParams& p) {
    CampaignReport report;
    report.name = "k4-bases";
    report.params_header = "fixed instances";
    struct Base {
        std::string desc;
        Graph host;
        Graph target;
    };
    std::vector<Base> bases{{"c2:6/k4", gen_squared_cycle(6), complete_graph(4)},
                            {"k5/k4", complete_graph(5), complete_graph(4)},
                            {"k6/k4", complete_graph(6), complete_graph(4)},
                            {"k5/k3", complete_graph(5), complete_graph(3)},
                            {"k4/k3", complete_graph(4), complete_graph(3)}};
    std::vector<Task> tasks;
    for (const auto& b : bases)
        tasks.push_back({b.desc, [b] {
                             return verdict_of(b.desc, is_host(b.host, b.target), "");
                         }});
    report.instances = run_pool(tasks, p.workers);
    return report;
}

CampaignReport campaign_structural(const CampaignParams& p) {
    CampaignReport report;
    report.name = "structural-lemmas";
    int n_max = std::min(p.n_max, 6);
    report.params_header = "fixtures + 2-connected hosts n<=" + std::to_string(n_max);
    std::vector<Task> tasks;

    auto sweep = [](std::string desc, const Graph& host, const Graph& target, int k) {
        return Task{desc, [desc, host, target, k]() -> InstanceResult {
                        auto labelings = enumerate_model_labels(host, target);
                        if (labelings.empty()) return {desc, Verdict::skipped, "no models"};
                        int violations = 0;
                        std::string first;
                        for (const auto& labels : labelings) {
                            auto r = check_structural_lemmas({host, target, labels}, k);
                            if (!r.ok()) {
                                violations += static_cast<int>(r.violations.size());
                                if (first.empty()) first = r.violations.front();
                            }
                        }
                        return verdict_of(desc, violations == 0,
                                          violations == 0
                                              ? std::to_string(labelings.size()) + " models"
                                              : first);
                    }};
    };

    tasks.push_back(sweep("k4/k3 k=3", complete_graph(4), complete_graph(3), 3));
    tasks.push_back(sweep("c2:6/k4 k=4", gen_squared_cycle(6), complete_graph(4), 4));
    tasks.push_back(sweep("k5/k4 k=4", complete_graph(5), complete_graph(4), 4));
    for (int n = 3; n <= n_max; ++n)
        for (const auto& g : enumerate_small_graphs(n, 2))
            tasks.push_back(sweep("n=" + std::to_string(n) + " " + to_graph6(g) + " k3 k=2", g,
                                  complete_graph(3), 2));
    report.instances = run_pool(tasks, p.workers);
    return report;
}

// ---------------------------------------------------------------- fuzz

Graph random_k_connected(int n, int k, std::mt19937& rng) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::uniform_int_distribution<int>(0, 2)(rng) > 0) es.emplace_back(i, j);
        Graph g = Graph::from_edges(n, es);
        if (is_k_connected(g, k)) return g;
    }
    return complete_graph(n);
}

// Sparse 2-connected host: a random Hamiltonian cycle plus a few chords.
// Branch sets of its models have rich multi-block structure.
Graph random_sparse_2connected(int n, std::mt19937& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(order[i], order[(i + 1) % n]);
    Graph g = Graph::from_edges(n, es);
    int chords = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int c = 0; c < chords; ++c) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u != v && !g.has_edge(u, v)) g = add_edge(g, u, v);
    }
    return g;
}

template <typename T>
const T& pick(const std::vector<T>& xs, std::mt19937& rng) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

InstanceResult fuzz_k2(int goal, unsigned seed) {
    std::mt19937 rng(seed);
    Graph k2 = complete_graph(2);
    int done = 0, length_flags = 0;
    for (int i = 0; i < goal; ++i) {
        int n = std::uniform_int_distribution<int>(4, 8)(rng);
        Graph g = random_k_connected(n, 2, rng);
        auto labelings = enumerate_model_labels(g, k2);
        HModel from{g, k2, pick(labelings, rng)};
        HModel to{g, k2, pick(labelings, rng)};
        auto seq = plan_k2(from, to);
        if (replay(seq).labels != to.labels)
            return {"plan_k2", Verdict::fail, "wrong endpoint at iteration " + std::to_string(i)};
        if (static_cast<int>(seq.steps.size()) > 3 * g.n) ++length_flags;
        ++done;
    }
    return {"plan_k2", Verdict::pass,
            std::to_string(done) + " plans replayed; length>3n flagged " +
                std::to_string(length_flags) + "x"};
}

InstanceResult fuzz_clique(int goal, unsigned seed) {
    std::mt19937 rng(seed);
    int done = 0;
    for (int i = 0; i < goal; ++i) {
        int m = std::uniform_int_distribution<int>(3, 8)(rng);
        int l = std::uniform_int_distribution<int>(2, m - 1)(rng);
        Graph host = complete_graph(m), target = complete_graph(l);
        auto surject = [&] {
            std::vector<int> labels(l);
            std::iota(labels.begin(), labels.end(), 0);
            for (int v = l; v < m; ++v)
                labels.push_back(std::uniform_int_distribution<int>(0, l - 1)(rng));
            std::shuffle(labels.begin(), labels.end(), rng);
            return labels;
        };
        HModel from{host, target, surject()}, to{host, target, surject()};
        auto seq = plan_clique(from, to);
        if (replay(seq).labels != to.labels)
            return {"plan_clique", Verdict::fail,
                    "wrong endpoint at iteration " + std::to_string(i)};
        ++done;
    }
    return {"plan_clique", Verdict::pass, std::to_string(done) + " plans replayed"};
}

InstanceResult fuzz_relabel_leafblock(int goal, unsigned seed) {
    std::mt19937 rng(seed);
    Graph k2 = complete_graph(2);
    Graph k3 = complete_graph(3);
    int done = 0, k3_done = 0;
    long long attempts = 0, max_attempts = 400LL * goal;
    while (done < goal && attempts++ < max_attempts) {
        // K2 targets never hit leaf-crucial models; K3 instances need long
        // branch arcs (n >= 8 on near-cycles) to dodge them, so they are
        // rarer and sampled opportunistically.
        bool try_k3 = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
        const Graph& target = try_k3 ? k3 : k2;
        int n = std::uniform_int_distribution<int>(try_k3 ? 8 : 5, try_k3 ? 9 : 8)(rng);
        Graph g = random_sparse_2connected(n, rng);
        auto labelings = enumerate_model_labels(g, target);
        if (labelings.empty()) continue;
        for (int tries = 0; tries < 3 && done < goal; ++tries) {
            HModel m{g, target, pick(labelings, rng)};
            int a = std::uniform_int_distribution<int>(0, target.n - 1)(rng);
            BlockTree bt = branch_block_tree(m, a);
            for (int lb : bt.leaf_blocks()) {
                if (done >= goal) break;
                const auto& block = bt.blocks[lb];
                if (m.branch_size(a) <= static_cast<int>(block.size())) continue;
                bool connecting = false;
                for (int v : bt.interior_vertices(lb))
                    for (int w : g.adj[v])
                        if (m.labels[w] != a) connecting = true;
                if (!connecting) continue;
                if (hits_leaf_crucial(m, block)) continue;
                auto seq = plan_relabel_leafblock(m, a, block);
                HModel end = replay(seq);
                for (int v = 0; v < g.n; ++v) {
                    bool interior = !bt.is_cut(v) &&
                                    std::binary_search(block.begin(), block.end(), v);
                    bool ok = interior ? end.labels[v] != a : end.labels[v] == m.labels[v];
                    if (!ok)
                        return {"plan_relabel_leafblock", Verdict::fail,
                                "post-state wrong at invocation " + std::to_string(done)};
                }
                ++done;
                if (try_k3) ++k3_done;
            }
        }
    }
    return {"plan_relabel_leafblock", done >= goal ? Verdict::pass : Verdict::fail,
            std::to_string(done) + " plans replayed (" + std::to_string(k3_done) +
                " with target K3)"};
}

InstanceResult fuzz_slurp_component(int goal, unsigned seed) {
    std::mt19937 rng(seed);
    int done = 0;
    long long attempts = 0, max_attempts = 400LL * goal;
    while (done < goal && attempts++ < max_attempts) {
        int tn = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 4 : 3;
        Graph target = complete_graph(tn);
        int n = std::uniform_int_distribution<int>(tn + 1, 7)(rng);
        Graph g = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                      ? random_k_connected(n, 2, rng)
                      : random_sparse_2connected(n, rng);
        auto labelings = enumerate_model_labels(g, target);
        if (labelings.empty()) continue;
        HModel m{g, target, pick(labelings, rng)};
        int a = std::uniform_int_distribution<int>(0, tn - 1)(rng);
        auto branch = m.branch(a);
        if (branch.size() < 2) continue;
        for (int x : branch) {
            if (done >= goal) break;
            // Components of branch a minus x.
            std::vector<std::vector<int>> comps;
            {
                std::vector<char> seen(g.n, 0);
                for (int s : branch) {
                    if (s == x || seen[s]) continue;
                    std::vector<int> comp{s}, stack{s};
                    seen[s] = 1;
                    while (!stack.empty()) {
                        int u = stack.back();
                        stack.pop_back();
                        for (int w : g.adj[u])
                            if (w != x && m.labels[w] == a && !seen[w]) {
                                seen[w] = 1;
                                comp.push_back(w);
                                stack.push_back(w);
                            }
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(comp);
                }
            }
            for (const auto& comp : comps) {
                if (done >= goal) break;
                for (int b = 0; b < tn && done < goal; ++b) {
                    if (b == a || !target.has_edge(a, b)) continue;
                    bool has_b = false;
                    for (int v : comp)
                        for (int w : g.adj[v])
                            if (m.labels[w] == b) has_b = true;
                    if (!has_b) continue;
                    if (hits_leaf_crucial(m, comp) || hits_leaf_l_crucial(m, comp, b)) continue;
                    auto seq = plan_slurp_component(m, a, b, x, comp);
                    HModel end = replay(seq);
                    bool ok = true;
                    for (int v = 0; v < g.n; ++v) {
                        bool in_c = std::binary_search(comp.begin(), comp.end(), v);
                        if (in_c ? end.labels[v] == m.labels[v]
                                 : end.labels[v] != m.labels[v])
                            ok = false;
                    }
                    bool xb = false;
                    for (int w : g.adj[x])
                        if (end.labels[w] == b) xb = true;
                    if (!ok || !xb)
                        return {"plan_slurp_component", Verdict::fail,
                                "post-state wrong at invocation " + std::to_string(done)};
                    ++done;
                }
            }
        }
    }
    return {"plan_slurp_component", done >= goal ? Verdict::pass : Verdict::fail,
            std::to_string(done) + " plans replayed"};
}

InstanceResult fuzz_slurp_siphon(int goal, unsigned seed) {
    std::mt19937 rng(seed);
    Graph k3 = complete_graph(3);
    int done = 0;
    long long attempts = 0, max_attempts = 400LL * goal;
    while (done < goal && attempts++ < max_attempts) {
        int n = std::uniform_int_distribution<int>(5, 8)(rng);
        Graph g = gen_random_3connected(n, static_cast<unsigned>(rng()));
        EnumerationOptions opts;
        auto labelings = enumerate_model_labels(g, k3, opts);
        if (labelings.empty()) continue;
        HModel m{g, k3, pick(labelings, rng)};
        for (int x = 0; x < g.n && done < goal; ++x) {
            int a = m.labels[x];
            if (m.branch_size(a) < 2) continue;
            for (int b = 0; b < 3 && done < goal; ++b) {
                if (b == a) continue;
                int c = 3 - a - b;
                bool xb = false;
                for (int w : g.adj[x])
                    if (m.labels[w] == b) xb = true;
                if (!xb) continue;
                auto ess = essential_for_labels(m, x);
                if (std::find(ess.begin(), ess.end(), c) != ess.end()) continue;
                auto seq = plan_slurp_siphon(m, a, b, x);
                HModel end = replay(seq);
                // Exactly one component of branch a minus x is retained;
                // everything else in the branch moved, the rest is fixed.
                bool ok = end.labels[x] == b;
                int retained = 0;
                std::vector<char> seen(g.n, 0);
                for (int s = 0; s < g.n; ++s) {
                    if (s == x || m.labels[s] != a || seen[s]) continue;
                    std::vector<int> comp{s}, stack{s};
                    seen[s] = 1;
                    while (!stack.empty()) {
                        int u = stack.back();
                        stack.pop_back();
                        for (int w : g.adj[u])
                            if (w != x && m.labels[w] == a && !seen[w]) {
                                seen[w] = 1;
                                comp.push_back(w);
                                stack.push_back(w);
                            }
                    }
                    bool kept = true, moved = true;
                    for (int v : comp) {
                        if (end.labels[v] == a)
                            moved = false;
                        else
                            kept = false;
                    }
                    if (kept) ++retained;
                    if (!kept && !moved) ok = false;
                }
                for (int v = 0; v < g.n; ++v)
                    if (m.labels[v] != a && end.labels[v] != m.labels[v]) ok = false;
                if (!ok || retained != 1)
                    return {"plan_slurp_siphon", Verdict::fail,
                            "post-state wrong at invocation " + std::to_string(done)};
                ++done;
            }
        }
    }
    return {"plan_slurp_siphon", done >= goal ? Verdict::pass : Verdict::fail,
            std::to_string(done) + " plans replayed"};
}

InstanceResult fuzz_lift(int goal, unsigned seed) {
    std::mt19937 rng(seed);
    Graph k3 = complete_graph(3);
    int done = 0;
    long long attempts = 0, max_attempts = 400LL * goal;
    while (done < goal && attempts++ < max_attempts) {
        int n = std::uniform_int_distribution<int>(4, 7)(rng);
        Graph g = random_k_connected(n, 2, rng);
        std::vector<int> splittable;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= 4) splittable.push_back(v);
        if (splittable.empty()) continue;
        auto labelings = enumerate_model_labels(g, k3);
        if (labelings.empty()) continue;
        int v = pick(splittable, rng);
        auto nbrs = g.adj[v];
        std::shuffle(nbrs.begin(), nbrs.end(), rng);
        int cut = std::uniform_int_distribution<int>(2, static_cast<int>(nbrs.size()) - 2)(rng);
        SplitSpec split{v, {nbrs.begin(), nbrs.begin() + cut}, {nbrs.begin() + cut, nbrs.end()}};

        HModel cur{g, k3, pick(labelings, rng)};
        ReconSequence seq{cur, {}};
        int len = std::uniform_int_distribution<int>(0, 6)(rng);
        for (int s = 0; s < len; ++s) {
            auto nl = neighbor_labelings(cur);
            if (nl.empty()) break;
            const auto& next = pick(nl, rng);
            for (int u = 0; u < g.n; ++u)
                if (next[u] != cur.labels[u]) seq.steps.push_back({u, next[u]});
            cur.labels = next;
        }
        auto lifted = lift_sequence_through_split(seq, split);
        auto expected = cur.labels;
        expected.push_back(cur.labels[v]);
        if (replay(lifted).labels != expected)
            return {"lift_sequence_through_split", Verdict::fail,
                    "wrong endpoint at invocation " + std::to_string(done)};
        ++done;
    }
    return {"lift_sequence_through_split", done >= goal ? Verdict::pass : Verdict::fail,
            std::to_string(done) + " sequences lifted"};
}

CampaignReport campaign_fuzz(const CampaignParams& p) {
    CampaignReport report;
    report.name = "planner-fuzz";
    report.params_header =
        "seed=" + std::to_string(p.seed) + " invocations=" + std::to_string(p.fuzz);
    std::vector<Task> tasks;
    unsigned s = p.seed;
    int goal = p.fuzz;
    tasks.push_back({"plan_k2", [=] { return fuzz_k2(goal, s + 101); }});
    tasks.push_back({"plan_clique", [=] { return fuzz_clique(goal, s + 202); }});
    tasks.push_back(
        {"plan_relabel_leafblock", [=] { return fuzz_relabel_leafblock(goal, s + 303); }});
    tasks.push_back(
        {"plan_slurp_component", [=] { return fuzz_slurp_component(goal, s + 404); }});
    tasks.push_back({"plan_slurp_siphon", [=] { return fuzz_slurp_siphon(goal, s + 505); }});
    tasks.push_back({"lift_sequence_through_split", [=] { return fuzz_lift(goal, s + 606); }});
    report.instances = run_pool(tasks, p.workers);
    return report;
}

// ------------------------------------------------------------- closure

CampaignReport campaign_closure(const CampaignParams& p) {
    CampaignReport report;
    report.name = "split-addedge-closure";
    int n_max = std::min(p.n_max, 7);
    report.params_header = "seed=" + std::to_string(p.seed) + " hosts=" +
                           std::to_string(p.count) + " n<=" + std::to_string(n_max);
    std::vector<Task> tasks;
    Graph k3 = complete_graph(3);
    Graph k4 = complete_graph(4);

    for (int i = 0; i < p.count; ++i) {
        unsigned host_seed = p.seed * 7919u + static_cast<unsigned>(i);
        int n = 4 + static_cast<int>(host_seed % static_cast<unsigned>(n_max - 3));
        std::string desc = "rand3 n=" + std::to_string(n) + " seed=" + std::to_string(host_seed);
        tasks.push_back({desc, [desc, n, host_seed, k3]() -> InstanceResult {
            Graph g = gen_random_3connected(n, host_seed);
            if (!is_host(g, k3)) return {desc, Verdict::fail, "base graph not in host(K3)"};
            int checked = 0;
            // Every single edge addition.
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    if (!is_host(add_edge(g, u, v), k3))
                        return {desc, Verdict::fail,
                                "add_edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " left host(K3)"};
                    ++checked;
                }
            // Every valid split of every vertex.
            for (int v = 0; v < g.n; ++v) {
                int d = g.degree(v);
                if (d < 4) continue;
                const auto& nbrs = g.adj[v];
                for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
                    std::vector<int> p1{nbrs[0]}, p2;
                    for (int b = 1; b < d; ++b)
                        ((mask >> (b - 1)) & 1u ? p1 : p2).push_back(nbrs[b]);
                    if (p1.size() < 2 || p2.size() < 2) continue;
                    if (!is_host(split_vertex(g, v, p1, p2), k3))
                        return {desc, Verdict::fail,
                                "split of " + std::to_string(v) + " left host(K3)"};
                    ++checked;
                }
            }
            return {desc, Verdict::pass, std::to_string(checked) + " closures checked"};
        }});
    }

    // K4 base cases under single edge additions.
    tasks.push_back({"c2:6 +e /k4", [k4]() -> InstanceResult {
        Graph g = gen_squared_cycle(6);
        int checked = 0;
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) {
                if (g.has_edge(u, v)) continue;
                if (!is_host(add_edge(g, u, v), k4))
                    return {"c2:6 +e /k4", Verdict::fail,
                            "addition " + std::to_string(u) + "-" + std::to_string(v)};
                ++checked;
            }
        return {"c2:6 +e /k4", Verdict::pass, std::to_string(checked) + " additions"};
    }});
    tasks.push_back({"k5 +e /k4", []() -> InstanceResult {
        return {"k5 +e /k4", Verdict::pass, "complete graph, no addable edges"};
    }});

    report.instances = run_pool(tasks, p.workers);
    return report;
}

}  // namespace

std::vector<std::string> campaign_names() {
    return {"k2-characterization", "k3-3connected",        "k4-bases",
            "structural-lemmas",   "planner-fuzz",         "split-addedge-closure"};
}

CampaignReport run_campaign(const std::string& name, const CampaignParams& params) {
    auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    if (name == "k2-characterization")
        report = campaign_k2(params);
    else if (name == "k3-3connected")
        report = campaign_k3(params);
    else if (name == "k4-bases")
        report = campaign_k4_bases(params);
    else if (name == "structural-lemmas")
        report = campaign_structural(params);
    else if (name == "planner-fuzz")
        report = campaign_fuzz(params);
    else if (name == "split-addedge-closure")
        report = campaign_closure(params);
    else
        throw BadParameter("unknown campaign: " + name);
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

void write_report(const CampaignReport& report, std::ostream& out) {
    out << "campaign " << report.name << " (" << report.params_header << ")\n";
    for (const auto& r : report.instances) {
        const char* tag = r.verdict == Verdict::pass     ? "pass"
                          : r.verdict == Verdict::fail   ? "FAIL"
                                                         : "skip";
        out << "  [" << tag << "] " << r.descriptor;
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << '\n';
    }
    out << "totals: " << report.passed() << " passed, " << report.failed() << " failed, "
        << report.skipped() << " skipped\n";
}

}  // namespace recon
