#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "causalbench/error.hpp"

namespace causalbench {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // (parent, child)

/// Directed acyclic causal graph over nodes 0..node_count-1.
/// `edges` is kept sorted and duplicate-free by the factory functions;
/// `validate` accepts arbitrary contents so malformed graphs can be
/// inspected rather than rejected at construction.
struct Dag {
    NodeId node_count = 0;
    std::vector<Edge> edges;
    std::vector<NodeId> topo;

    bool has_edge(NodeId parent, NodeId child) const;
    std::vector<NodeId> parents_of(NodeId child) const;
    std::vector<NodeId> children_of(NodeId parent) const;
    std::size_t edge_count() const { return edges.size(); }

    // Sorts/dedups edges and fills topo. Throws cycle_detected on cyclic input.
    static Dag make(NodeId node_count, std::vector<Edge> edges);
};

enum class Motif { chain, fork, collider, multi_parent, mixed };

enum class PerturbKind { edge_deletion, false_edge, direction_reversal };

/// Audit entry for one structural edit made by perturb_graph.
/// For direction_reversal, `edge` holds the original orientation.
struct PerturbRecord {
    PerturbKind kind;
    Edge edge;
    bool disconnected_after = false;
};

struct EdgeMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
};

/// Samples a connected DAG with 3..7 nodes shaped by `motif`.
/// Pure function of its arguments: same inputs, bit-identical output.
Dag sample_dag(std::uint64_t seed, NodeId node_count, Motif motif);

/// Returns every violated graph invariant; empty result means the graph is valid.
std::vector<std::string> validate(const Dag& dag);

/// Kahn topological order with ascending-NodeId tie-break. Throws cycle_detected.
std::vector<NodeId> topo_order(const Dag& dag);

/// Applies `count` edits of one kind, rejecting any choice that would create
/// a cycle. Deletions may disconnect the graph; that is recorded, not rejected.
std::pair<Dag, std::vector<PerturbRecord>> perturb_graph(const Dag& dag, PerturbKind kind,
                                                         std::size_t count, std::uint64_t seed);

/// Edge-level precision/recall/F1 with strict direction matching: a reversed
/// edge counts as one false positive plus one false negative.
EdgeMetrics edge_metrics(const std::vector<Edge>& predicted, const Dag& truth);
EdgeMetrics edge_metrics(const Dag& predicted, const Dag& truth);

const char* to_string(Motif m);
const char* to_string(PerturbKind k);
Motif motif_from_string(const std::string& s);
PerturbKind perturb_kind_from_string(const std::string& s);

}  // namespace causalbench
