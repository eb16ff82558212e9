#include "sqfpd/reduction.hpp"

#include <algorithm>

#include "sqfpd/error.hpp"

namespace sqfpd {

namespace {

constexpr const char* kUnionCite = "union of the edges it contains; total Betti numbers unchanged";
constexpr const char* kClosedCite = "all vertices closed; pd unchanged";
constexpr const char* kJointCite = "bush joint with a length-2 branch; pd unchanged";
constexpr const char* kColonCite = "branch length 1 mod 3; pd unchanged";
constexpr const char* kVertexCite = "branch length 2 mod 3; pd unchanged";

std::string describe(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int v : labels_of(s)) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool is_union_edge(const Hypergraph& h, VertexSet f)
{
    VertexSet u;
    for (const Edge& e : h.edges())
        if (e.members.proper_subset_of(f))
            u |= e.members;
    return u == f;
}

int other_neighbor(const Hypergraph& h, int j, int i)
{
    VertexSet rest = pair_neighbors(h, j) - vertex_bit(i);
    return rest.empty() ? 0 : static_cast<int>(rest.lowest()) + 1;
}

} // namespace

std::string_view to_string(Rule rule)
{
    switch (rule) {
    case Rule::union_edge_removed:
        return "union_edge_removed";
    case Rule::closed_edge_removed:
        return "closed_edge_removed";
    case Rule::joint_removed:
        return "joint_removed";
    case Rule::branch_colon:
        return "branch_colon";
    case Rule::branch_vertex_removed:
        return "branch_vertex_removed";
    }
    return "unknown";
}

Rule rule_from_string(std::string_view name)
{
    for (Rule r : {Rule::union_edge_removed, Rule::closed_edge_removed, Rule::joint_removed, Rule::branch_colon,
                   Rule::branch_vertex_removed})
        if (to_string(r) == name)
            return r;
    throw Error("unknown_rule", "unknown rule '" + std::string(name) + "'");
}

Hypergraph replay(const Hypergraph& start, const ReductionTrace& trace)
{
    Hypergraph h = start;
    for (const TraceStep& s : trace.steps) {
        switch (s.rule) {
        case Rule::union_edge_removed:
        case Rule::closed_edge_removed:
        case Rule::branch_colon:
            if (!s.edge)
                throw Error("invalid_trace", std::string(to_string(s.rule)) + " step without an edge");
            h = remove_edge(h, *s.edge);
            break;
        case Rule::joint_removed:
        case Rule::branch_vertex_removed:
            h = remove_vertex(h, s.vertex);
            break;
        }
    }
    return h;
}

Reduced remove_union_edges(const Hypergraph& h, bool strict)
{
    Reduced out{h, {}, {}};
    std::vector<VertexSet> doomed;
    for (const Edge& e : h.edges()) {
        if (e.members.size() < 3)
            continue;
        if (is_union_edge(h, e.members))
            doomed.push_back(e.members);
        else
            out.survivors.push_back(e.members);
    }
    if (strict && !out.survivors.empty())
        throw Error("non_union_edge", "edge " + describe(out.survivors.front()) + " is not a union of other edges");
    std::sort(doomed.begin(), doomed.end());
    std::sort(out.survivors.begin(), out.survivors.end());
    for (VertexSet f : doomed) {
        out.hypergraph = remove_edge(out.hypergraph, f);
        out.trace.steps.push_back({Rule::union_edge_removed, f, 0, kUnionCite});
    }
    return out;
}

Reduced remove_closed_vertex_edges(const Hypergraph& h)
{
    Reduced out{h, {}, {}};
    const VertexSet closed = closed_vertices(h);
    std::vector<VertexSet> doomed;
    for (const Edge& e : h.edges())
        if (e.members.size() >= 2 && e.members.subset_of(closed))
            doomed.push_back(e.members);
    std::sort(doomed.begin(), doomed.end());
    for (VertexSet f : doomed) {
        out.hypergraph = remove_edge(out.hypergraph, f);
        out.trace.steps.push_back({Rule::closed_edge_removed, f, 0, kClosedCite});
    }
    return out;
}

Preconditions check_preconditions(const Hypergraph& h)
{
    Preconditions p{true, true, true, {}, {}, {}};
    for (const Hypergraph& c : components(h)) {
        ShapeReport shape = classify_shape(c);
        if (p.bush && shape.kind != ShapeKind::string && shape.kind != ShapeKind::two_star &&
            shape.kind != ShapeKind::bush) {
            p.bush = false;
            p.bush_witness = "component " + describe(c.vertices()) + " has shape " + std::string(to_string(shape.kind));
        }

        std::vector<std::vector<int>> distances;
        for (int j : shape.joints)
            distances.push_back(pair_distances(c, j));
        for (const Edge& e : c.edges()) {
            if (e.members.size() < 3 || !p.higher_edges_same_joint || shape.joints.empty())
                continue;
            bool near_one = false;
            for (const auto& dist : distances) {
                bool all_close = true;
                for (int v : labels_of(e.members)) {
                    int d = dist[static_cast<std::size_t>(v)];
                    if (d < 0 || d > 2)
                        all_close = false;
                }
                near_one = near_one || all_close;
            }
            if (!near_one) {
                p.higher_edges_same_joint = false;
                p.higher_edge_witness = "edge " + describe(e.members) + " is not on the branches of one joint";
            }
        }

        const VertexSet closed = closed_vertices(c);
        for (const Edge& e : c.edges()) {
            if (p.no_connected_closed && e.members.size() == 2 && e.members.subset_of(closed)) {
                p.no_connected_closed = false;
                p.closed_pair_witness = "edge " + describe(e.members) + " joins two closed vertices";
            }
        }
    }
    return p;
}

Reduced remove_joints(const Hypergraph& h)
{
    Preconditions p = check_preconditions(h);
    if (!p.bush)
        throw Error("precondition", "not a bush: " + p.bush_witness);
    if (!p.higher_edges_same_joint)
        throw Error("precondition", p.higher_edge_witness);
    if (!p.no_connected_closed)
        throw Error("precondition", p.closed_pair_witness);

    Reduced out{h, {}, {}};
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= kMaxVertexLabel; ++i) {
            const Hypergraph& cur = out.hypergraph;
            if (!cur.has_vertex(i) || pair_degree(cur, i) < 3)
                continue;
            bool removable = false;
            for (int j : labels_of(pair_neighbors(cur, i))) {
                if (pair_degree(cur, j) != 2)
                    continue;
                int k = other_neighbor(cur, j, i);
                if (k && pair_degree(cur, k) == 1)
                    removable = true;
            }
            if (removable) {
                out.hypergraph = remove_vertex(cur, i);
                out.trace.steps.push_back({Rule::joint_removed, std::nullopt, i, kJointCite});
                changed = true;
            }
        }
    }
    return out;
}

Reduced branch_reduce(const Hypergraph& h, int w, const std::vector<int>& branch, BranchCount count)
{
    for (const Edge& e : h.edges())
        if (e.members.size() > 2)
            throw Error("precondition", "branch reduction needs a hypergraph without higher edges");
    if (!h.has_vertex(w) || pair_degree(h, w) < 3)
        throw Error("precondition", std::to_string(w) + " is not a joint");
    bool found = false;
    for (const Branch& b : branches_of(h, w))
        if (b.vertices == branch && b.terminal_joint == 0)
            found = true;
    if (!found)
        throw Error("precondition", "not a branch of joint " + std::to_string(w) + " ending at an endpoint");
    for (std::size_t i = 0; i < branch.size(); ++i) {
        bool closed = is_closed(h, branch[i]);
        if (closed != (i + 1 == branch.size()))
            throw Error("precondition", "branch vertices must be open except the closed end vertex");
    }

    std::size_t n = branch.size() + (count == BranchCount::with_joint ? 1 : 0);
    Reduced out{h, {}, {}};
    switch (n % 3) {
    case 1: {
        VertexSet e = vertex_bit(w) | vertex_bit(branch.front());
        out.hypergraph = remove_edge(h, e);
        out.trace.steps.push_back({Rule::branch_colon, e, 0, kColonCite});
        break;
    }
    case 2:
        out.hypergraph = remove_vertex(h, w);
        out.trace.steps.push_back({Rule::branch_vertex_removed, std::nullopt, w, kVertexCite});
        break;
    default:
        throw Error("unsupported_residue", "no rule for a branch with n = 0 mod 3 (n = " + std::to_string(n) + ")");
    }
    return out;
}

Hypergraph disjoint_union(const std::vector<Hypergraph>& parts)
{
    VertexSet all;
    for (const Hypergraph& p : parts) {
        if (all.intersects(p.vertices()))
            throw Error("overlapping_parts", "parts share vertex labels");
        all |= p.vertices();
    }
    Hypergraph out(all);
    for (const Hypergraph& p : parts)
        for (const Edge& e : p.edges())
            out.add_edge(e.members, e.labels);
    return out;
}

Reduced full_reduce(const Hypergraph& h)
{
    Reduced out{h, {}, {}};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Hypergraph> parts;
        for (Hypergraph c : components(out.hypergraph)) {
            auto apply = [&](Reduced r) {
                if (r.trace.empty())
                    return;
                c = std::move(r.hypergraph);
                out.trace.append(r.trace);
                changed = true;
            };
            if (check_preconditions(c).all())
                apply(remove_joints(c));
            apply(remove_union_edges(c));
            apply(remove_closed_vertex_edges(c));
            parts.push_back(std::move(c));
        }
        out.hypergraph = disjoint_union(parts);
    }
    for (const Edge& e : out.hypergraph.edges())
        if (e.members.size() >= 3)
            out.survivors.push_back(e.members);
    std::sort(out.survivors.begin(), out.survivors.end());
    return out;
}

} // namespace sqfpd
