#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sqfpd/bitset64.hpp"
#include "sqfpd/ideal.hpp"

namespace sqfpd {

/// Set of vertex labels; bit v-1 stands for vertex v (labels are 1..64).
using VertexSet = BitSet64;

inline constexpr int kMaxVertexLabel = 64;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet::singleton(static_cast<unsigned>(v - 1)); }
VertexSet vertex_set(std::initializer_list<int> labels);
std::vector<int> labels_of(VertexSet s);

struct Edge {
    VertexSet members;
    /// Names of the variables inducing this edge; several variables may
    /// induce the same vertex subset.
    std::set<std::string> labels;
};

/// The dual hypergraph of a square-free monomial ideal: vertices are the
/// generators, one edge per variable. Edges form a set; adding an existing
/// edge merges its labels. Vertex labels stay fixed under surgery.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(VertexSet vertices) : vertices_(vertices) {}

    /// Vertices 1..mu with the given edges (test and fixture convenience).
    Hypergraph(int mu, std::initializer_list<std::initializer_list<int>> edges);

    static Hypergraph with_vertices(int mu);

    /// Adds an edge; the members must be non-empty vertices of the hypergraph.
    void add_edge(VertexSet members, const std::set<std::string>& labels = {});

    VertexSet vertices() const { return vertices_; }
    int num_vertices() const { return vertices_.size(); }
    bool has_vertex(int v) const { return v >= 1 && v <= kMaxVertexLabel && vertices_.contains(static_cast<unsigned>(v - 1)); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t num_edges() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool has_edge(VertexSet members) const { return find_edge(members).has_value(); }
    std::optional<std::size_t> find_edge(VertexSet members) const;

    /// Edge families sorted by bitmask; the canonical form used for equality.
    std::vector<VertexSet> edge_family() const;

    /// Relabels vertices to 1..mu in ascending order. `labels_out`, when
    /// given, receives the original label of each new vertex.
    Hypergraph compacted(std::vector<int>* labels_out = nullptr) const;

    /// Sub-hypergraph on `vertices` keeping the edges contained in it.
    Hypergraph induced(VertexSet vertices) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.vertices_ == b.vertices_ && a.edge_family() == b.edge_family();
    }

private:
    VertexSet vertices_;
    std::vector<Edge> edges_;
};

Hypergraph dual_hypergraph(const MonomialIdeal& ideal);

/// One fresh variable per edge (its first label if it has one, else x<k>);
/// generator j is the product of the variables of the edges containing j.
/// Vertices are taken in ascending label order. The result is minimalized,
/// so non-separated input yields fewer generators.
MonomialIdeal ideal_from_hypergraph(const Hypergraph& h);

bool is_separated(const Hypergraph& h);

struct VertexClass {
    int vertex = 0;
    bool open = true;
    int degree = 0;
};

std::vector<VertexClass> classify_vertices(const Hypergraph& h);
bool is_closed(const Hypergraph& h, int v);
VertexSet closed_vertices(const Hypergraph& h);

/// Edges of cardinality at most dim+1.
Hypergraph skeleton(const Hypergraph& h, int dim);

Hypergraph remove_edge(const Hypergraph& h, VertexSet edge);
Hypergraph remove_vertex(const Hypergraph& h, int v);
/// Removes every vertex of `edge`, then adjoins one fresh closed isolated
/// vertex labelled max_label+1.
Hypergraph add_edge_vertex(const Hypergraph& h, VertexSet edge);

/// Connected components ordered by their smallest vertex.
std::vector<Hypergraph> components(const Hypergraph& h);

/// Neighbours of v through pair edges {v, u}.
VertexSet pair_neighbors(const Hypergraph& h, int v);
int pair_degree(const Hypergraph& h, int v);

enum class ShapeKind { string, cycle, two_star, bush, other };
std::string_view to_string(ShapeKind kind);

/// A maximal run of non-joint vertices leaving a joint along pair edges.
struct Branch {
    std::vector<int> vertices;   // in order, starting next to the joint
    int terminal_joint = 0;      // joint the run ends at, 0 if it ends at an endpoint
    int length() const { return static_cast<int>(vertices.size()); }
};

struct JointBranches {
    int joint = 0;
    std::vector<Branch> branches;
};

struct ShapeReport {
    ShapeKind kind = ShapeKind::other;
    std::vector<int> joints;
    std::vector<JointBranches> branch_data;
};

/// Joints are vertices of pair-degree at least 3. Throws Error("disconnected")
/// on disconnected input.
ShapeReport classify_shape(const Hypergraph& h);

/// Branches of one joint, ordered by first vertex.
std::vector<Branch> branches_of(const Hypergraph& h, int joint);

/// Pair-graph distances from `source` (-1 for unreachable), indexed by label.
std::vector<int> pair_distances(const Hypergraph& h, int source);

} // namespace sqfpd
