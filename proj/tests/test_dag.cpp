#include "causalbench/dag.hpp"

#include <algorithm>
#include <set>

#include "causalbench/rng.hpp"
#include "doctest.h"

using namespace causalbench;

namespace {

// Independent oracle: DFS cycle detection, separate from the Kahn-based
// validation used by the library.
bool oracle_has_cycle(NodeId n, const std::vector<Edge>& edges) {
    std::vector<std::vector<NodeId>> out(n);
    for (const auto& [u, v] : edges) out[u].push_back(v);
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<NodeId, std::size_t>> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < out[u].size()) {
                NodeId v = out[u][i++];
                if (state[v] == 1) return true;
                if (state[v] == 0) {
                    state[v] = 1;
                    stack.push_back({v, 0});
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

// Independent oracle: BFS over the undirected skeleton.
bool oracle_connected(NodeId n, const std::vector<Edge>& edges) {
    if (n == 0) return true;
    std::vector<std::vector<NodeId>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(n, false);
    std::vector<NodeId> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        NodeId u = queue.back();
        queue.pop_back();
        for (NodeId v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                queue.push_back(v);
            }
    }
    return count == n;
}

Dag chain3() { return Dag::make(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("sample_dag: chain motif on 3 nodes is a directed path") {
    Dag dag = sample_dag(1, 3, Motif::chain);
    REQUIRE(dag.edges.size() == 2);
    CHECK(validate(dag).empty());
    // path shape: the topo order visits the two edges consecutively
    std::vector<Edge> expected{{dag.topo[0], dag.topo[1]}, {dag.topo[1], dag.topo[2]}};
    std::sort(expected.begin(), expected.end());
    CHECK(dag.edges == expected);
}

TEST_CASE("sample_dag: node_count outside [3,7] is rejected") {
    CHECK_THROWS_AS(sample_dag(1, 2, Motif::chain), Error);
    CHECK_THROWS_AS(sample_dag(1, 8, Motif::mixed), Error);
    try {
        sample_dag(1, 2, Motif::chain);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_size);
    }
}

TEST_CASE("sample_dag: mixed motif passes the independent oracles") {
    Dag dag = sample_dag(7, 5, Motif::mixed);
    CHECK(validate(dag).empty());
    CHECK_FALSE(oracle_has_cycle(dag.node_count, dag.edges));
    CHECK(oracle_connected(dag.node_count, dag.edges));
}

TEST_CASE("sample_dag: fork has a node with >=2 children, collider >=2 parents") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Dag fork = sample_dag(seed, 4, Motif::fork);
        std::vector<int> outdeg(fork.node_count, 0);
        for (const auto& [u, v] : fork.edges) ++outdeg[u];
        CHECK(*std::max_element(outdeg.begin(), outdeg.end()) >= 2);

        Dag coll = sample_dag(seed, 4, Motif::collider);
        std::vector<int> indeg(coll.node_count, 0);
        for (const auto& [u, v] : coll.edges) ++indeg[v];
        CHECK(*std::max_element(indeg.begin(), indeg.end()) >= 2);

        Dag mp = sample_dag(seed, 5, Motif::multi_parent);
        std::vector<int> indeg2(mp.node_count, 0);
        for (const auto& [u, v] : mp.edges) ++indeg2[v];
        CHECK(*std::max_element(indeg2.begin(), indeg2.end()) >= 2);
    }
}

TEST_CASE("sample_dag: deterministic and always valid across seeds/sizes/motifs") {
    for (auto motif : {Motif::chain, Motif::fork, Motif::collider, Motif::multi_parent,
                       Motif::mixed}) {
        for (NodeId n = 3; n <= 7; ++n) {
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                Dag a = sample_dag(seed, n, motif);
                Dag b = sample_dag(seed, n, motif);
                CHECK(a.edges == b.edges);
                CHECK(a.topo == b.topo);
                CHECK(validate(a).empty());
                CHECK_FALSE(oracle_has_cycle(a.node_count, a.edges));
                CHECK(oracle_connected(a.node_count, a.edges));
            }
        }
    }
}

TEST_CASE("validate: reports cycles, disconnection, self-loops, duplicates") {
    Dag ok = chain3();
    CHECK(validate(ok).empty());

    Dag cyclic;
    cyclic.node_count = 2;
    cyclic.edges = {{0, 1}, {1, 0}};
    cyclic.topo = {0, 1};
    auto v1 = validate(cyclic);
    REQUIRE_FALSE(v1.empty());
    CHECK(std::any_of(v1.begin(), v1.end(),
                      [](const std::string& s) { return s.find("cycle") != std::string::npos; }));

    Dag disconnected;
    disconnected.node_count = 3;
    disconnected.edges = {{0, 1}};
    disconnected.topo = {0, 1, 2};
    auto v2 = validate(disconnected);
    CHECK(std::any_of(v2.begin(), v2.end(), [](const std::string& s) {
        return s.find("disconnected") != std::string::npos;
    }));

    Dag selfloop;
    selfloop.node_count = 3;
    selfloop.edges = {{0, 0}, {0, 1}, {0, 2}};
    selfloop.topo = {0, 1, 2};
    auto v3 = validate(selfloop);
    CHECK(std::any_of(v3.begin(), v3.end(), [](const std::string& s) {
        return s.find("self-loop") != std::string::npos;
    }));

    Dag dup;
    dup.node_count = 3;
    dup.edges = {{0, 1}, {0, 1}, {1, 2}};
    dup.topo = {0, 1, 2};
    auto v4 = validate(dup);
    CHECK(std::any_of(v4.begin(), v4.end(), [](const std::string& s) {
        return s.find("duplicate") != std::string::npos;
    }));
}

TEST_CASE("topo_order: tie-break ascending, cycle throws") {
    CHECK(topo_order(chain3()) == std::vector<NodeId>{0, 1, 2});

    Dag collider;
    collider.node_count = 3;
    collider.edges = {{0, 2}, {1, 2}};
    CHECK(topo_order(collider) == std::vector<NodeId>{0, 1, 2});

    Dag cyclic;
    cyclic.node_count = 3;
    cyclic.edges = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(topo_order(cyclic), Error);
}

TEST_CASE("perturb_graph: single deletion/reversal on a chain") {
    Dag dag = chain3();

    bool saw_01 = false;
    for (std::uint64_t seed = 0; seed < 16 && !saw_01; ++seed) {
        auto [out, records] = perturb_graph(dag, PerturbKind::edge_deletion, 1, seed);
        REQUIRE(records.size() == 1);
        CHECK(out.edges.size() == 1);
        if (records[0].edge == Edge{0, 1}) {
            saw_01 = true;
            CHECK(out.edges == std::vector<Edge>{{1, 2}});
            CHECK(records[0].disconnected_after);  // deleting (0,1) strands node 0
        }
    }
    CHECK(saw_01);

    bool saw_12 = false;
    for (std::uint64_t seed = 0; seed < 16 && !saw_12; ++seed) {
        auto [out, records] = perturb_graph(dag, PerturbKind::direction_reversal, 1, seed);
        REQUIRE(records.size() == 1);
        CHECK_FALSE(oracle_has_cycle(out.node_count, out.edges));
        if (records[0].edge == Edge{1, 2}) {
            saw_12 = true;
            CHECK(out.has_edge(0, 1));
            CHECK(out.has_edge(2, 1));
        }
    }
    CHECK(saw_12);
}

TEST_CASE("perturb_graph: triangle reversal avoids the cycle-closing edge") {
    // reversing (0,2) would close the cycle 0->1->2->0
    Dag tri = Dag::make(3, {{0, 1}, {1, 2}, {0, 2}});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto [out, records] = perturb_graph(tri, PerturbKind::direction_reversal, 1, seed);
        REQUIRE(records.size() == 1);
        CHECK(records[0].edge != Edge{0, 2});
        CHECK_FALSE(oracle_has_cycle(out.node_count, out.edges));
    }
}

TEST_CASE("perturb_graph: preconditions and impossible requests") {
    Dag dag = chain3();
    CHECK_THROWS_AS(perturb_graph(dag, PerturbKind::edge_deletion, 0, 1), Error);
    CHECK_THROWS_AS(perturb_graph(dag, PerturbKind::edge_deletion, 3, 1), Error);

    // A complete DAG on 3 nodes admits no false edge.
    Dag full = Dag::make(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(perturb_graph(full, PerturbKind::false_edge, 1, 1), Error);
    try {
        perturb_graph(full, PerturbKind::false_edge, 1, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::no_valid_perturbation);
    }
}

TEST_CASE("perturb_graph: metric algebra over random graphs") {
    Rng rng(2024);
    for (int i = 0; i < 300; ++i) {
        Dag dag = sample_dag(rng.next(), 3 + static_cast<NodeId>(rng.below(5)), Motif::mixed);
        const double e = static_cast<double>(dag.edge_count());

        auto [deleted, dr] = perturb_graph(dag, PerturbKind::edge_deletion, 1, rng.next());
        EdgeMetrics md = edge_metrics(deleted, dag);
        CHECK(md.precision == doctest::Approx(1.0));
        CHECK(md.recall == doctest::Approx((e - 1.0) / e));

        try {
            auto [added, ar] = perturb_graph(dag, PerturbKind::false_edge, 1, rng.next());
            EdgeMetrics ma = edge_metrics(added, dag);
            CHECK(ma.precision == doctest::Approx(e / (e + 1.0)));
            CHECK(ma.recall == doctest::Approx(1.0));
        } catch (const Error& err) {
            CHECK(err.code() == ErrorCode::no_valid_perturbation);
        }

        try {
            auto [flipped, fr] = perturb_graph(dag, PerturbKind::direction_reversal, 1, rng.next());
            CHECK_FALSE(oracle_has_cycle(flipped.node_count, flipped.edges));
        } catch (const Error& err) {
            CHECK(err.code() == ErrorCode::no_valid_perturbation);
        }
    }
}

TEST_CASE("edge_metrics: identity, subset, reversal, unknown node") {
    Dag truth = chain3();

    EdgeMetrics ident = edge_metrics(truth, truth);
    CHECK(ident.precision == 1.0);
    CHECK(ident.recall == 1.0);
    CHECK(ident.f1 == 1.0);

    EdgeMetrics sub = edge_metrics(std::vector<Edge>{{0, 1}}, truth);
    CHECK(sub.precision == 1.0);
    CHECK(sub.recall == doctest::Approx(0.5));
    CHECK(sub.f1 == doctest::Approx(2.0 / 3.0));

    EdgeMetrics rev = edge_metrics(std::vector<Edge>{{1, 0}, {1, 2}}, truth);
    CHECK(rev.precision == doctest::Approx(0.5));
    CHECK(rev.recall == doctest::Approx(0.5));
    CHECK(rev.f1 == doctest::Approx(0.5));
    CHECK(rev.false_positives == 1);
    CHECK(rev.false_negatives == 1);

    CHECK_THROWS_AS(edge_metrics(std::vector<Edge>{{0, 9}}, truth), Error);
}

TEST_CASE("edge_metrics: empty prediction yields zero recall without crashing") {
    EdgeMetrics m = edge_metrics(std::vector<Edge>{}, chain3());
    CHECK(m.recall == 0.0);
    CHECK(m.f1 == 0.0);
}
