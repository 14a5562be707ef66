#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "recon/planner.hpp"
#include "test_util.hpp"

using namespace recon;
using namespace testutil;

namespace {

const Graph k2 = complete(2);
const Graph k3 = complete(3);

HModel model(const Graph& g, const Graph& h, std::vector<int> labels) {
    return HModel{g, h, std::move(labels)};
}

// Planner soundness: replays fully and cheap BFS agrees on reachability.
void check_sound(const ReconSequence& seq, const HModel& expected_end) {
    HModel end = replay(seq);
    CHECK(end.labels == expected_end.labels);
    if (seq.start.host.n <= 6) {
        auto rg = build_recon_graph(seq.start.host, seq.start.target);
        auto path = find_path(rg, seq.start, expected_end);
        CHECK(path.has_value());
    }
}

}  // namespace

TEST_CASE("replay validates each step") {
    auto start = model(complete(3), k2, {0, 1, 1});
    ReconSequence good{start, {{1, 0}, {2, 0}}};
    // Step 1 empties branch 1: illegal at index 1.
    CHECK(replay_valid({start, {{1, 0}}}));
    CHECK_FALSE(replay_valid(good));
    try {
        replay(good);
        CHECK(false);
    } catch (const ReplayError& e) {
        CHECK(e.step_index == 1);
    }
    ReconSequence bad_start{model(path(3), k2, {0, 1, 0}), {}};
    CHECK_FALSE(replay_valid(bad_start));
}

TEST_CASE("plan_relabel_leafblock drains a leaf block") {
    // Host: K4 on {0,1,2,3} minus edges to keep it small, plus pendant 4.
    Graph host = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 4}, {1, 3}, {2, 3}});
    // Branch 0 = {0,1,2,4}: triangle {0,1,2} plus bridge {0,4}.
    auto m = model(host, k2, {0, 0, 0, 1, 0});
    REQUIRE(validate_model(m).ok);
    auto seq = plan_relabel_leafblock(m, 0, {0, 1, 2});
    CHECK(seq.steps == std::vector<ReconStep>{{1, 1}, {2, 1}});
    HModel end = replay(seq);
    CHECK(end.labels == std::vector<int>{0, 1, 1, 1, 0});

    // Single-interior-vertex leaf block on a path host.
    auto pm = model(path(4), k2, {0, 0, 0, 1});
    auto pseq = plan_relabel_leafblock(pm, 0, {1, 2});
    CHECK(pseq.steps == std::vector<ReconStep>{{2, 1}});
    CHECK(replay(pseq).labels == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("plan_relabel_leafblock preconditions") {
    auto m = model(bowtie(), k2, {0, 0, 0, 1, 1});
    // L is the entire branch: nothing would remain labeled 0.
    CHECK_THROWS_AS(plan_relabel_leafblock(m, 0, {0, 1, 2}), PreconditionFailed);
    // Not a block at all.
    CHECK_THROWS_AS(plan_relabel_leafblock(m, 0, {0, 1}), PreconditionFailed);
    // No interior vertex with a connecting edge.
    Graph tri_tail = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    auto tm = model(tri_tail, k2, {0, 0, 0, 0, 1});
    try {
        plan_relabel_leafblock(tm, 0, {0, 1, 2});
        CHECK(false);
    } catch (const PreconditionFailed& e) {
        CHECK(e.condition == "connecting-interior");
    }
    // Leaf-crucial models are guarded against.
    auto cm = model(cycle(5), k3, {0, 0, 0, 1, 2});
    try {
        plan_relabel_leafblock(cm, 0, {0, 1});
        CHECK(false);
    } catch (const PreconditionFailed& e) {
        CHECK(e.condition == "hits-leaf-crucial");
    }
}

TEST_CASE("plan_slurp_component single vertex") {
    auto m = model(cycle(4), k2, {0, 0, 0, 1});
    auto seq = plan_slurp_component(m, 0, 1, 1, {0});
    CHECK(seq.steps == std::vector<ReconStep>{{0, 1}});
    HModel end = replay(seq);
    CHECK(end.labels == std::vector<int>{1, 0, 0, 1});
    // x = 1 gained a neighbour labeled 1 (vertex 0).
    CHECK(end.labels[0] == 1);
}

TEST_CASE("plan_slurp_component multi-block component") {
    // Host: path of triangles so branch 0 has a chain of blocks.
    Graph host = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
                                       {4, 5}, {0, 6}, {5, 6}});
    auto m = model(host, k2, {0, 0, 0, 0, 0, 0, 1});
    REQUIRE(validate_model(m).ok);
    // x = 4; the component {0,1,2,3} must drain so that 4 sees label 1.
    auto seq = plan_slurp_component(m, 0, 1, 4, {0, 1, 2, 3});
    HModel end = replay(seq);
    for (int v : {0, 1, 2, 3}) CHECK(end.labels[v] == 1);
    CHECK(end.labels[4] == 0);
    CHECK(end.labels[5] == 0);
    bool x_sees_b = false;
    for (int w : host.adj[4])
        if (end.labels[w] == 1) x_sees_b = true;
    CHECK(x_sees_b);
    CHECK(validate_model(end).ok);
}

TEST_CASE("plan_slurp_component preconditions") {
    auto m = model(cycle(4), k2, {0, 0, 0, 1});
    // Not a component.
    CHECK_THROWS_AS(plan_slurp_component(m, 0, 1, 1, {0, 2}), PreconditionFailed);
    // Not a target edge: use a path target on a 2-connected host.
    Graph p3t = path(3);
    auto pm = model(cycle(5), p3t, {0, 0, 1, 2, 2});
    REQUIRE(validate_model(pm).ok);
    try {
        plan_slurp_component(pm, 0, 2, 1, {0});
        CHECK(false);
    } catch (const PreconditionFailed& e) {
        CHECK(e.condition == "target-edge");
    }
    // Host with a cut vertex is rejected.
    auto bm = model(path(3), k2, {0, 0, 1});
    try {
        plan_slurp_component(bm, 0, 1, 1, {0});
        CHECK(false);
    } catch (const PreconditionFailed& e) {
        CHECK(e.condition == "host-2-connected");
    }
}

TEST_CASE("plan_slurp_siphon") {
    // K5 minus edge 3-4: branch 0 = {0,3,4} is a path around cut vertex 0.
    Graph host = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                       {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    auto m = model(host, k3, {0, 1, 2, 0, 0});
    REQUIRE(validate_model(m).ok);
    REQUIRE(is_k_connected(host, 3));
    auto seq = plan_slurp_siphon(m, 0, 1, 0);
    HModel end = replay(seq);
    CHECK(end.labels == std::vector<int>{1, 1, 2, 0, 1});  // D = {3} retained
    CHECK(validate_model(end).ok);

    // Single-component case: one step.
    Graph w4 = gen_wheel(4);
    auto sm = model(w4, k3, {0, 0, 1, 2, 2});
    REQUIRE(validate_model(sm).ok);
    // x = 1: branch 0 minus 1 is {0}, connected; x not essential for 2.
    auto sseq = plan_slurp_siphon(sm, 0, 1, 1);
    CHECK(sseq.steps.size() == 1);
    CHECK(replay(sseq).labels == std::vector<int>{0, 1, 1, 2, 2});
}

TEST_CASE("plan_slurp_siphon preconditions") {
    Graph w4 = gen_wheel(4);
    // x essential for the third label.
    auto m = model(w4, k3, {0, 1, 1, 2, 1});
    REQUIRE(validate_model(m).ok);
    // Vertex 0 is the hub; (0,2)-edges: hub-3 only, so 0 is essential for 2.
    try {
        plan_slurp_siphon(m, 0, 1, 0);
        CHECK(false);
    } catch (const PreconditionFailed& e) {
        CHECK(e.condition == "x-not-essential-c");
    }
    // 3-connectivity required.
    auto cm = model(cycle(5), k3, {0, 0, 1, 1, 2});
    CHECK_THROWS_AS(plan_slurp_siphon(cm, 0, 1, 1), PreconditionFailed);
}

TEST_CASE("plan_k2 fixtures") {
    Graph c4 = cycle(4);
    auto a = model(c4, k2, {0, 0, 1, 1});
    auto canon = model(c4, k2, {0, 1, 1, 1});
    auto seq = plan_k2(a, canon);
    CHECK(seq.steps.size() == 1);
    check_sound(seq, canon);

    auto b = model(c4, k2, {1, 0, 0, 0});
    auto cross = plan_k2(canon, b);
    CHECK(cross.steps.size() == 4);
    check_sound(cross, b);

    CHECK(plan_k2(a, a).steps.empty());
    CHECK_THROWS_AS(plan_k2(model(path(3), k2, {0, 0, 1}), model(path(3), k2, {0, 1, 1})),
                    NotTwoConnected);
}

TEST_CASE("plan_k2 over every model pair of small 2-connected hosts") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& g : all_connected_graphs(n)) {
            if (!is_k_connected(g, 2)) continue;
            auto labelings = enumerate_model_labels(g, k2);
            for (const auto& from : labelings)
                for (const auto& to : labelings) {
                    auto seq = plan_k2(model(g, k2, from), model(g, k2, to));
                    HModel end = replay(seq);
                    CHECK(end.labels == to);
                    CHECK(static_cast<int>(seq.steps.size()) <= 3 * g.n);
                }
        }
}

TEST_CASE("plan_clique fixtures") {
    Graph k5 = complete(5);
    Graph k4t = complete(4);
    auto canonical = model(k5, k4t, {0, 1, 2, 3, 3});
    CHECK(plan_clique(canonical, canonical).steps.empty());

    auto scrambled = model(k5, k4t, {3, 1, 2, 0, 3});
    auto seq = plan_clique(scrambled, canonical);
    check_sound(seq, canonical);

    CHECK_THROWS_AS(plan_clique(model(k4t, k4t, {0, 1, 2, 3}), model(k4t, k4t, {0, 1, 2, 3})),
                    SizeMismatch);
    CHECK_THROWS_AS(plan_clique(model(cycle(4), k2, {0, 0, 1, 1}),
                                model(cycle(4), k2, {0, 1, 1, 0})),
                    NotComplete);
}

TEST_CASE("plan_clique over random surjections") {
    std::mt19937 rng(7);
    for (int m = 3; m <= 7; ++m)
        for (int l = 2; l < m; ++l) {
            Graph host = complete(m);
            Graph target = complete(l);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<int> from(m), to(m);
                auto surject = [&](std::vector<int>& labels) {
                    std::vector<int> base(l);
                    std::iota(base.begin(), base.end(), 0);
                    for (int i = l; i < m; ++i)
                        base.push_back(std::uniform_int_distribution<int>(0, l - 1)(rng));
                    std::shuffle(base.begin(), base.end(), rng);
                    labels = base;
                };
                surject(from);
                surject(to);
                auto seq = plan_clique(model(host, target, from), model(host, target, to));
                CHECK(replay(seq).labels == to);
            }
        }
}

TEST_CASE("plan_genwheel on wheels") {
    GenWheelLayout lay{1, 1, 4};
    Graph w4 = gen_wheel(4);
    auto from = model(w4, k3, {0, 1, 2, 1, 1});
    auto to = model(w4, k3, {2, 0, 0, 1, 0});
    REQUIRE(validate_model(from).ok);
    REQUIRE(validate_model(to).ok);
    auto seq = plan_genwheel(from, to, lay);
    check_sound(seq, to);

    CHECK_THROWS_AS(plan_genwheel(model(complete(3), k3, {0, 1, 2}),
                                  model(complete(3), k3, {0, 1, 2}), GenWheelLayout{1, 1, 2}),
                    NotAGeneralizedWheel);
}

TEST_CASE("plan_genwheel routes every W3 model pair") {
    // W3 is K4; the degenerate wheel exercises the hub machinery.
    GenWheelLayout lay{1, 1, 3};
    Graph w3 = gen_wheel(3);
    auto labelings = enumerate_model_labels(w3, k3);
    CHECK(labelings.size() == 36);
    for (const auto& from : labelings)
        for (const auto& to : labelings) {
            auto seq = plan_genwheel(model(w3, k3, from), model(w3, k3, to), lay);
            CHECK(replay(seq).labels == to);
        }
}

TEST_CASE("plan_genwheel over all W4 and W5 model pairs, sampled") {
    for (int k : {4, 5}) {
        GenWheelLayout lay{1, 1, k};
        Graph w = gen_wheel(k);
        auto labelings = enumerate_model_labels(w, k3);
        std::mt19937 rng(11);
        std::uniform_int_distribution<std::size_t> pick(0, labelings.size() - 1);
        for (int trial = 0; trial < 60; ++trial) {
            const auto& from = labelings[pick(rng)];
            const auto& to = labelings[pick(rng)];
            auto seq = plan_genwheel(model(w, k3, from), model(w, k3, to), lay);
            CHECK(replay(seq).labels == to);
        }
    }
}

TEST_CASE("plan_genwheel with two hubs and triangle parts") {
    std::vector<Graph> parts(3, complete(3));
    Graph host = gen_generalized_wheel(parts, 3, 2, 3);
    GenWheelLayout lay{2, 3, 3};
    Graph k4t = complete(4);
    // Canonical-shaped model and a scrambled one.
    std::vector<int> canon(host.n, 3);
    canon[0] = 0;
    canon[1] = 1;
    canon[lay.special()] = 2;
    std::vector<int> other(host.n, 2);
    other[0] = 3;
    other[1] = 0;
    other[lay.s(1, 1)] = 1;
    auto from = model(host, k4t, canon);
    auto to = model(host, k4t, other);
    REQUIRE(validate_model(from).ok);
    REQUIRE(validate_model(to).ok);
    auto seq = plan_genwheel(from, to, lay);
    CHECK(replay(seq).labels == to.labels);
}

TEST_CASE("lift_sequence_through_split") {
    Graph w4 = gen_wheel(4);
    SplitSpec split{0, {1, 2}, {3, 4}};

    // No step touches the split vertex: the lift is verbatim.
    auto quiet = model(w4, k3, {0, 0, 1, 2, 2});
    ReconSequence idseq{quiet, {{1, 1}}};
    REQUIRE(replay_valid(idseq));
    auto lifted = lift_sequence_through_split(idseq, split);
    CHECK(lifted.steps == idseq.steps);
    CHECK(lifted.start.labels == std::vector<int>{0, 0, 1, 2, 2, 0});
    CHECK(validate_model(replay(lifted)).ok);

    // One step relabels the hub; the isolated half needs the detour.
    auto hub = model(w4, k3, {0, 0, 1, 2, 2});
    ReconSequence hubseq{hub, {{0, 1}}};
    REQUIRE(replay_valid(hubseq));
    auto hlift = lift_sequence_through_split(hubseq, split);
    CHECK(hlift.steps.size() >= 2);
    HModel end = replay(hlift);
    CHECK(end.labels[0] == 1);
    CHECK(end.labels[5] == 1);
    for (int v = 1; v <= 4; ++v) CHECK(end.labels[v] == hub.labels[v]);

    // K2 targets are out of scope for the lift.
    auto k2m = model(w4, k2, {0, 0, 0, 0, 1});
    CHECK_THROWS_AS(lift_sequence_through_split({k2m, {}}, split), PreconditionFailed);
}

TEST_CASE("lift random wheel-hub sequences") {
    Graph w5 = gen_wheel(5);
    SplitSpec split{0, {1, 2, 3}, {4, 5}};
    auto labelings = enumerate_model_labels(w5, k3);
    auto rg = build_recon_graph(w5, k3);
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, labelings.size() - 1);
    int lifted_count = 0;
    for (int trial = 0; trial < 200 && lifted_count < 60; ++trial) {
        const auto& from = labelings[pick(rng)];
        // Random legal walk of length <= 6.
        HModel cur = model(w5, k3, from);
        std::vector<ReconStep> steps;
        for (int s = 0; s < 6; ++s) {
            auto nbrs = neighbor_labelings(cur);
            if (nbrs.empty()) break;
            const auto& next = nbrs[std::uniform_int_distribution<std::size_t>(
                0, nbrs.size() - 1)(rng)];
            for (int v = 0; v < w5.n; ++v)
                if (next[v] != cur.labels[v]) steps.push_back({v, next[v]});
            cur.labels = next;
        }
        ReconSequence seq{model(w5, k3, from), steps};
        auto lifted = lift_sequence_through_split(seq, split);
        HModel end = replay(lifted);
        // Lifted endpoint agrees with the plain endpoint, doubled at x,y.
        auto expected = cur.labels;
        expected.push_back(cur.labels[0]);
        CHECK(end.labels == expected);
        ++lifted_count;
    }
    CHECK(lifted_count >= 60);
}

TEST_CASE("sequence file round trip") {
    auto start = model(complete(3), k2, {0, 1, 1});
    ReconSequence seq{start, {{1, 0}, {0, 1}}};
    std::stringstream ss;
    write_sequence(seq, ss);
    CHECK(ss.str() == "2 steps\n1 0\n0 1\n");
    auto steps = read_sequence(ss);
    CHECK(steps == seq.steps);
    std::stringstream bad("2 steps\n1 0\n");
    CHECK_THROWS_AS(read_sequence(bad), ParseError);
}
