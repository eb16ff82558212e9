#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfpd/hypergraph.hpp"

namespace sqfpd {

enum class Rule { union_edge_removed, closed_edge_removed, joint_removed, branch_colon, branch_vertex_removed };

std::string_view to_string(Rule rule);
Rule rule_from_string(std::string_view name);

/// One rewrite. Edge rules carry `edge`, vertex rules carry `vertex`;
/// labels are the ones of the input hypergraph.
struct TraceStep {
    Rule rule;
    std::optional<VertexSet> edge;
    int vertex = 0;
    std::string cite;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;

    void append(const ReductionTrace& other) { steps.insert(steps.end(), other.steps.begin(), other.steps.end()); }
    bool empty() const { return steps.empty(); }
};

/// Applies the steps in order: edge rules delete the edge, vertex rules
/// delete the vertex.
Hypergraph replay(const Hypergraph& start, const ReductionTrace& trace);

struct Reduced {
    Hypergraph hypergraph;
    ReductionTrace trace;
    /// Higher edges that could not be removed (lenient union-edge removal).
    std::vector<VertexSet> survivors;
};

/// Removes every edge with at least 3 vertices that is the union of the
/// edges it properly contains. Strict mode throws Error("non_union_edge") if
/// some other edge with at least 3 vertices is present.
Reduced remove_union_edges(const Hypergraph& h, bool strict = false);

/// Removes every edge with at least 2 vertices, all of them closed.
Reduced remove_closed_vertex_edges(const Hypergraph& h);

struct Preconditions {
    bool bush = false;
    bool higher_edges_same_joint = false;
    bool no_connected_closed = false;
    std::string bush_witness;
    std::string higher_edge_witness;
    std::string closed_pair_witness;

    bool all() const { return bush && higher_edges_same_joint && no_connected_closed; }
};

/// Evaluated per connected component; a property holds when it holds on
/// every component.
///   bush                     shape is string, two_star or bush
///   higher_edges_same_joint  each edge with >= 3 vertices lies within pair
///                            distance 2 of one joint
///   no_connected_closed      no pair edge joins two closed vertices
Preconditions check_preconditions(const Hypergraph& h);

/// Repeated ascending scan: a joint i is removed when some pair neighbour j
/// has pair degree 2 and j's other neighbour is an endpoint. Scanning resumes
/// at i+1; passes repeat until nothing changes. Throws Error("precondition").
Reduced remove_joints(const Hypergraph& h);

enum class BranchCount { branch_vertices, with_joint };

/// For a branch S hanging off joint w with all vertices open except the
/// closed end: n = 1 mod 3 removes the edge {w, S[0]}, n = 2 mod 3 removes w.
/// n = 0 mod 3 throws Error("unsupported_residue").
Reduced branch_reduce(const Hypergraph& h, int w, const std::vector<int>& branch,
                      BranchCount count = BranchCount::branch_vertices);

/// Per component: joint removal (when the preconditions hold), union-edge
/// removal, closed-edge removal, repeated until nothing changes.
Reduced full_reduce(const Hypergraph& h);

/// Disjoint union of hypergraphs with disjoint vertex labels.
Hypergraph disjoint_union(const std::vector<Hypergraph>& parts);

} // namespace sqfpd
