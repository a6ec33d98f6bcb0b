#include "causalbench/dag.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "causalbench/rng.hpp"

namespace causalbench {

namespace {

constexpr int kMaxAttempts = 10000;  // rejection-sampling cap per graph

void sort_edges(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool is_acyclic(NodeId n, const std::vector<Edge>& edges) {
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<NodeId>> out(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) return false;
        ++indegree[v];
        out[u].push_back(v);
    }
    std::vector<NodeId> ready;
    for (NodeId i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push_back(i);
    std::size_t seen = 0;
    while (!ready.empty()) {
        NodeId u = ready.back();
        ready.pop_back();
        ++seen;
        for (NodeId v : out[u])
            if (--indegree[v] == 0) ready.push_back(v);
    }
    return seen == n;
}

bool is_weakly_connected(NodeId n, const std::vector<Edge>& edges) {
    if (n == 0) return true;
    std::vector<NodeId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) continue;
        parent[find(u)] = find(v);
    }
    NodeId root = find(0);
    for (NodeId i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

std::vector<NodeId> random_permutation(NodeId n, Rng& rng) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (NodeId i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

std::vector<Edge> sample_mixed_edges(NodeId n, Rng& rng) {
    // Each unordered pair gets one of three states (absent, u->v, v->u) with
    // equal probability; rejection of cyclic/disconnected candidates then
    // yields the uniform distribution over connected DAGs.
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            switch (rng.below(3)) {
                case 0: break;
                case 1: edges.emplace_back(u, v); break;
                case 2: edges.emplace_back(v, u); break;
            }
        }
    }
    return edges;
}

}  // namespace

bool Dag::has_edge(NodeId parent, NodeId child) const {
    return std::binary_search(edges.begin(), edges.end(), Edge{parent, child});
}

std::vector<NodeId> Dag::parents_of(NodeId child) const {
    std::vector<NodeId> out;
    for (const auto& [u, v] : edges)
        if (v == child) out.push_back(u);
    return out;
}

std::vector<NodeId> Dag::children_of(NodeId parent) const {
    std::vector<NodeId> out;
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{parent, 0});
    for (; it != edges.end() && it->first == parent; ++it) out.push_back(it->second);
    return out;
}

Dag Dag::make(NodeId node_count, std::vector<Edge> edges) {
    Dag dag;
    dag.node_count = node_count;
    sort_edges(edges);
    dag.edges = std::move(edges);
    dag.topo = topo_order(dag);
    return dag;
}

Dag sample_dag(std::uint64_t seed, NodeId node_count, Motif motif) {
    if (node_count < 3 || node_count > 7)
        fail(ErrorCode::invalid_size,
             "node_count must be in [3,7], got " + std::to_string(node_count));
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(motif)));
    const NodeId n = node_count;

    std::vector<Edge> edges;
    switch (motif) {
        case Motif::chain: {
            auto perm = random_permutation(n, rng);
            for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(perm[i], perm[i + 1]);
            break;
        }
        case Motif::fork: {
            NodeId hub = static_cast<NodeId>(rng.below(n));
            for (NodeId v = 0; v < n; ++v)
                if (v != hub) edges.emplace_back(hub, v);
            break;
        }
        case Motif::collider: {
            NodeId sink = static_cast<NodeId>(rng.below(n));
            for (NodeId v = 0; v < n; ++v)
                if (v != sink) edges.emplace_back(v, sink);
            break;
        }
        case Motif::multi_parent: {
            // Random connected DAG conditioned on at least one node having
            // two or more parents.
            for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
                edges = sample_mixed_edges(n, rng);
                if (!is_acyclic(n, edges) || !is_weakly_connected(n, edges)) continue;
                std::vector<int> indegree(n, 0);
                for (const auto& [u, v] : edges) ++indegree[v];
                if (std::any_of(indegree.begin(), indegree.end(), [](int d) { return d >= 2; }))
                    return Dag::make(n, std::move(edges));
            }
            fail(ErrorCode::no_valid_perturbation, "multi_parent sampling exhausted attempts");
        }
        case Motif::mixed: {
            for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
                edges = sample_mixed_edges(n, rng);
                if (is_acyclic(n, edges) && is_weakly_connected(n, edges))
                    return Dag::make(n, std::move(edges));
            }
            fail(ErrorCode::no_valid_perturbation, "mixed sampling exhausted attempts");
        }
    }
    return Dag::make(n, std::move(edges));
}

std::vector<std::string> validate(const Dag& dag) {
    std::vector<std::string> violations;
    const NodeId n = dag.node_count;
    if (n == 0) violations.push_back("graph has no nodes");

    std::set<Edge> seen;
    for (const auto& e : dag.edges) {
        if (e.first == e.second)
            violations.push_back("self-loop on node " + std::to_string(e.first));
        if (e.first >= n || e.second >= n)
            violations.push_back("edge references node outside 0.." + std::to_string(n - 1));
        if (!seen.insert(e).second)
            violations.push_back("duplicate edge (" + std::to_string(e.first) + "," +
                                 std::to_string(e.second) + ")");
    }
    bool acyclic = is_acyclic(n, dag.edges);
    if (!acyclic) violations.push_back("cycle detected");
    if (!is_weakly_connected(n, dag.edges)) violations.push_back("graph is disconnected");

    if (dag.topo.size() != n) {
        violations.push_back("topo_order is not a permutation of the nodes");
    } else {
        std::vector<std::size_t> pos(n, 0);
        std::vector<bool> present(n, false);
        bool perm = true;
        for (std::size_t i = 0; i < dag.topo.size(); ++i) {
            NodeId v = dag.topo[i];
            if (v >= n || present[v]) {
                perm = false;
                break;
            }
            present[v] = true;
            pos[v] = i;
        }
        if (!perm) {
            violations.push_back("topo_order is not a permutation of the nodes");
        } else if (acyclic) {
            for (const auto& [u, v] : dag.edges)
                if (u < n && v < n && pos[u] >= pos[v]) {
                    violations.push_back("topo_order places a child before its parent");
                    break;
                }
        }
    }
    return violations;
}

std::vector<NodeId> topo_order(const Dag& dag) {
    const NodeId n = dag.node_count;
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<NodeId>> out(n);
    for (const auto& [u, v] : dag.edges) {
        if (u >= n || v >= n) fail(ErrorCode::unknown_node, "edge outside node range");
        ++indegree[v];
        out[u].push_back(v);
    }
    // Min-heap gives the ascending-NodeId tie-break.
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push(i);
    std::vector<NodeId> order;
    order.reserve(n);
    while (!ready.empty()) {
        NodeId u = ready.top();
        ready.pop();
        order.push_back(u);
        for (NodeId v : out[u])
            if (--indegree[v] == 0) ready.push(v);
    }
    if (order.size() != n) fail(ErrorCode::cycle_detected, "graph contains a cycle");
    return order;
}

std::pair<Dag, std::vector<PerturbRecord>> perturb_graph(const Dag& dag, PerturbKind kind,
                                                         std::size_t count, std::uint64_t seed) {
    if (count < 1) fail(ErrorCode::precondition, "perturbation count must be >= 1");
    if (kind != PerturbKind::false_edge && dag.edge_count() < count)
        fail(ErrorCode::precondition, "graph has fewer edges than requested perturbations");

    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(kind) + 17));
    const NodeId n = dag.node_count;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Edge> edges = dag.edges;
        std::vector<PerturbRecord> records;
        bool ok = true;

        for (std::size_t step = 0; step < count && ok; ++step) {
            switch (kind) {
                case PerturbKind::edge_deletion: {
                    std::size_t pick = rng.below(edges.size());
                    Edge removed = edges[pick];
                    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
                    records.push_back({kind, removed, !is_weakly_connected(n, edges)});
                    break;
                }
                case PerturbKind::false_edge: {
                    std::vector<Edge> candidates;
                    for (NodeId u = 0; u < n; ++u)
                        for (NodeId v = 0; v < n; ++v) {
                            if (u == v) continue;
                            Edge e{u, v};
                            if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
                            edges.push_back(e);
                            if (is_acyclic(n, edges)) candidates.push_back(e);
                            edges.pop_back();
                        }
                    if (candidates.empty()) {
                        ok = false;
                        break;
                    }
                    Edge added = candidates[rng.below(candidates.size())];
                    edges.push_back(added);
                    records.push_back({kind, added, false});
                    break;
                }
                case PerturbKind::direction_reversal: {
                    std::vector<std::size_t> candidates;
                    for (std::size_t i = 0; i < edges.size(); ++i) {
                        bool already = false;
                        for (const auto& r : records)
                            if (r.edge == Edge{edges[i].second, edges[i].first}) already = true;
                        if (already) continue;  // never flip the same edge back
                        Edge flipped{edges[i].second, edges[i].first};
                        Edge original = edges[i];
                        edges[i] = flipped;
                        if (is_acyclic(n, edges)) candidates.push_back(i);
                        edges[i] = original;
                    }
                    if (candidates.empty()) {
                        ok = false;
                        break;
                    }
                    std::size_t pick = candidates[rng.below(candidates.size())];
                    Edge original = edges[pick];
                    edges[pick] = {original.second, original.first};
                    records.push_back({kind, original, false});
                    break;
                }
            }
        }
        if (!ok) continue;

        std::sort(edges.begin(), edges.end());
        Dag out;
        out.node_count = n;
        out.edges = std::move(edges);
        out.topo = topo_order(out);
        return {std::move(out), std::move(records)};
    }
    fail(ErrorCode::no_valid_perturbation,
         "no acyclic choice of edges for " + std::string(to_string(kind)));
}

EdgeMetrics edge_metrics(const std::vector<Edge>& predicted, const Dag& truth) {
    std::set<Edge> pred;
    for (const auto& e : predicted) {
        if (e.first >= truth.node_count || e.second >= truth.node_count)
            fail(ErrorCode::unknown_node,
                 "predicted edge references node " +
                     std::to_string(std::max(e.first, e.second)) +
                     " outside the truth vocabulary");
        pred.insert(e);
    }
    std::set<Edge> gold(truth.edges.begin(), truth.edges.end());

    EdgeMetrics m;
    for (const auto& e : pred)
        gold.count(e) ? ++m.true_positives : ++m.false_positives;
    for (const auto& e : gold)
        if (!pred.count(e)) ++m.false_negatives;

    const auto tp = static_cast<double>(m.true_positives);
    if (m.true_positives + m.false_positives > 0)
        m.precision = tp / static_cast<double>(m.true_positives + m.false_positives);
    if (m.true_positives + m.false_negatives > 0)
        m.recall = tp / static_cast<double>(m.true_positives + m.false_negatives);
    if (m.precision + m.recall > 0)
        m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

EdgeMetrics edge_metrics(const Dag& predicted, const Dag& truth) {
    return edge_metrics(predicted.edges, truth);
}

const char* to_string(Motif m) {
    switch (m) {
        case Motif::chain: return "chain";
        case Motif::fork: return "fork";
        case Motif::collider: return "collider";
        case Motif::multi_parent: return "multi_parent";
        case Motif::mixed: return "mixed";
    }
    return "?";
}

const char* to_string(PerturbKind k) {
    switch (k) {
        case PerturbKind::edge_deletion: return "edge_deletion";
        case PerturbKind::false_edge: return "false_edge";
        case PerturbKind::direction_reversal: return "direction_reversal";
    }
    return "?";
}

Motif motif_from_string(const std::string& s) {
    if (s == "chain") return Motif::chain;
    if (s == "fork") return Motif::fork;
    if (s == "collider") return Motif::collider;
    if (s == "multi_parent") return Motif::multi_parent;
    if (s == "mixed") return Motif::mixed;
    fail(ErrorCode::parse_error, "unknown motif: " + s);
}

PerturbKind perturb_kind_from_string(const std::string& s) {
    if (s == "edge_deletion" || s == "ED") return PerturbKind::edge_deletion;
    if (s == "false_edge" || s == "FE") return PerturbKind::false_edge;
    if (s == "direction_reversal" || s == "DR") return PerturbKind::direction_reversal;
    fail(ErrorCode::parse_error, "unknown perturbation kind: " + s);
}

}  // namespace causalbench
