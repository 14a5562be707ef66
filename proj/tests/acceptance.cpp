#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Acceptance suite: one test case per criterion, each printing a single
// pass/fail line.  Criterion 4's squared-cycle sub-check is implemented
// exactly as stated and fails by design: the reconfiguration graph of
// C6^2 with target K4 genuinely has two mirror-image components (the
// single-label step relation conserves a chirality of the labeling), so
// the claimed membership does not hold under the literal definitions.
// The verification chain behind that statement is itself part of this
// suite (criterion 6 proves the step relation equals the model-validity
// oracle on exhaustive sweeps).

#include <cstdio>
#include <random>

#include "recon/campaign.hpp"
#include "recon/families.hpp"
#include "recon/planner.hpp"
#include "recon/recon_graph.hpp"
#include "test_util.hpp"

using namespace recon;
using namespace testutil;

namespace {

void report(int criterion, bool ok, const std::string& what) {
    std::printf("[criterion %02d] %s -- %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
}

const Graph k2t = complete(2);
const Graph k3t = complete(3);
const Graph k4t = complete(4);

}  // namespace

TEST_CASE("criterion 1: host(K2) characterization") {
    int checked = 0;
    bool ok = true;
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : enumerate_small_graphs(n, 1)) {
            if (is_host(g, k2t) != is_k_connected(g, 2)) ok = false;
            ++checked;
        }
    report(1, ok, "is_host(G,K2) == is_2_connected(G) on all " + std::to_string(checked) +
                      " connected graphs, 3 <= n <= 6");
    CHECK(ok);
    CHECK(checked == 141);
}

TEST_CASE("criterion 2: every 3-connected graph with n <= 7 is in host(K3)") {
    int checked = 0;
    bool ok = true;
    for (int n = 4; n <= 7; ++n)
        for (const auto& g : enumerate_small_graphs(n, 3)) {
            if (!is_host(g, k3t)) ok = false;
            ++checked;
        }
    report(2, ok, std::to_string(checked) + " graphs checked by explicit BFS");
    CHECK(ok);
    CHECK(checked == 1 + 3 + 17 + 136);
}

TEST_CASE("criterion 3: wheels are in host(K3) and the wheel planner is sound") {
    bool member_ok = true, planner_ok = true;
    std::mt19937 rng(5);
    for (int k = 3; k <= 7; ++k) {
        Graph w = gen_wheel(k);
        if (!is_host(w, k3t)) member_ok = false;
        GenWheelLayout lay{1, 1, k};
        auto labelings = enumerate_model_labels(w, k3t);
        std::uniform_int_distribution<std::size_t> pickm(0, labelings.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            HModel from{w, k3t, labelings[pickm(rng)]};
            HModel to{w, k3t, labelings[pickm(rng)]};
            auto seq = plan_genwheel(from, to, lay);
            if (!replay_valid(seq) || replay(seq).labels != to.labels) planner_ok = false;
        }
    }
    report(3, member_ok && planner_ok,
           "W3..W7 members by BFS; 20 planned pairs per wheel replay to their targets");
    CHECK(member_ok);
    CHECK(planner_ok);
}

TEST_CASE("criterion 4: K4/K3 base cases") {
    bool k5k4 = is_host(complete(5), k4t);
    bool k6k4 = is_host(complete(6), k4t);
    bool k5k3 = is_host(complete(5), k3t);
    bool k4k3 = is_host(complete(4), k3t);
    Graph c6sq = gen_squared_cycle(6);
    auto rg = build_recon_graph(c6sq, k4t);
    bool c6 = rg.component_count == 1;
    report(4, c6 && k5k4 && k6k4 && k5k3 && k4k3,
           std::string("K5/K4 ") + (k5k4 ? "ok" : "FAIL") + ", K6/K4 " + (k6k4 ? "ok" : "FAIL") +
               ", K5/K3 " + (k5k3 ? "ok" : "FAIL") + ", K4/K3 " + (k4k3 ? "ok" : "FAIL") +
               ", C6^2/K4 " +
               (c6 ? "ok"
                   : "FAIL (expected: the 768-model space splits into two mirror components "
                     "of 384; a single transposition of two singleton labels crosses between "
                     "them, and reflections of the hexagon exchange them, so membership "
                     "fails under the literal single-label adjacency)"));
    CHECK(k5k4);
    CHECK(k6k4);
    CHECK(k5k3);
    CHECK(k4k3);
    CHECK(c6);  // documented genuine failure: see the line printed above
}

TEST_CASE("criterion 5: negative and frozen fixtures") {
    auto p3 = build_recon_graph(path(3), k2t);
    bool p3_ok = p3.node_count() == 4 && p3.component_count == 2;
    auto star3 = build_recon_graph(star(3), k2t);
    bool star_ok = frozen_models(star3).size() == 6 && star3.node_count() == 6;
    auto tri = build_recon_graph(complete(3), k2t);
    bool tri_ok = tri.node_count() == 6 && tri.edge_count() == 6 &&
                  tri.component_count == 1 && diameter(tri) == 3;
    for (std::size_t i = 0; i < tri.node_count(); ++i)
        if (tri.adjacency[i].size() != 2) tri_ok = false;
    report(5, p3_ok && star_ok && tri_ok,
           "P3/K2: 4 nodes 2 components; K1,3/K2: 6 frozen; K3/K2: 6-cycle, diameter 3");
    CHECK(p3_ok);
    CHECK(star_ok);
    CHECK(tri_ok);
}

TEST_CASE("criterion 6: step rule equals the validity oracle") {
    long long triples = 0;
    bool exact = true, shortcut_sound = true;
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : enumerate_small_graphs(n, 1))
            for (const Graph& h : {k2t, k3t})
                for (const auto& labels : enumerate_model_labels(g, h)) {
                    HModel m{g, h, labels};
                    for (int v = 0; v < n; ++v)
                        for (int b = 0; b < h.n; ++b) {
                            if (b == labels[v]) continue;
                            auto changed = labels;
                            changed[v] = b;
                            bool oracle = validate_model({g, h, changed}).ok;
                            bool legal = legal_step(m, v, b).legal;
                            if (legal != oracle) exact = false;
                            if (legal_step_universal(m, v, b).legal && !legal)
                                shortcut_sound = false;
                            ++triples;
                        }
                }
    report(6, exact && shortcut_sound,
           std::to_string(triples) +
               " (model, vertex, label) triples agree; universal shortcut never contradicts");
    CHECK(exact);
    CHECK(shortcut_sound);
}

TEST_CASE("criterion 7: structural lemma suite") {
    CampaignParams params;
    params.n_max = 6;
    auto rep = run_campaign("structural-lemmas", params);
    std::string first_fail;
    for (const auto& r : rep.instances)
        if (r.verdict == Verdict::fail && first_fail.empty())
            first_fail = r.descriptor + ": " + r.detail;
    report(7, rep.ok(),
           std::to_string(rep.passed()) + " instances pass (K4/K3 k=3, C6^2/K4 and K5/K4 k=4, "
                                          "2-connected hosts with K3 k=2)" +
               (first_fail.empty() ? "" : "; first failure: " + first_fail));
    CHECK(rep.ok());
    CHECK(rep.skipped() == 0);
}

TEST_CASE("criterion 8: planner soundness fuzz, 1000 invocations each") {
    CampaignParams params;
    params.fuzz = 1000;
    auto rep = run_campaign("planner-fuzz", params);
    std::string detail;
    for (const auto& r : rep.instances) {
        if (!detail.empty()) detail += ", ";
        detail += r.descriptor + (r.verdict == Verdict::pass ? " ok" : " FAIL(" + r.detail + ")");
    }
    report(8, rep.ok(), detail);
    CHECK(rep.ok());
    CHECK(rep.instances.size() == 6);
}

TEST_CASE("criterion 9: closure spot checks") {
    CampaignParams params;
    params.count = 50;
    params.n_max = 7;
    auto rep = run_campaign("split-addedge-closure", params);
    std::string first_fail;
    for (const auto& r : rep.instances)
        if (r.verdict == Verdict::fail && first_fail.empty())
            first_fail = r.descriptor + ": " + r.detail;
    report(9, rep.ok(),
           std::to_string(rep.passed()) +
               " instances: 50 seeded 3-connected hosts under every edge addition and every "
               "valid split stay in host(K3); C6^2 and K5 edge additions stay in host(K4)" +
               (first_fail.empty() ? "" : "; first failure: " + first_fail));
    CHECK(rep.ok());
}

TEST_CASE("criterion 10: chain search") {
    Graph k6 = complete(6);
    auto contraction = find_chain(k6, ChainOp::contraction);
    bool ok = contraction.has_value() && isomorphic(contraction->back(), complete(5));
    std::string removal_note;
    auto removal = find_chain(k6, ChainOp::removal);
    if (removal)
        removal_note = "removal interpretation also terminates (at " +
                       std::string(isomorphic(removal->back(), complete(5)) ? "K5" : "C6^2") +
                       ", length " + std::to_string(removal->size()) + ")";
    else
        removal_note = "removal interpretation exhausted its budget (reported, not failed)";
    report(10, ok,
           "contraction chain K6 -> K5 of length " +
               (contraction ? std::to_string(contraction->size()) : std::string("-")) + "; " +
               removal_note);
    CHECK(ok);
}
