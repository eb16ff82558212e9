#include "sqfpd/hypergraph.hpp"

#include <algorithm>
#include <deque>

#include "sqfpd/error.hpp"

namespace sqfpd {

namespace {

void check_label(int v)
{
    if (v < 1 || v > kMaxVertexLabel)
        throw Error("capacity", "vertex label " + std::to_string(v) + " outside 1.." + std::to_string(kMaxVertexLabel));
}

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

} // namespace

VertexSet vertex_set(std::initializer_list<int> labels)
{
    VertexSet s;
    for (int v : labels) {
        check_label(v);
        s |= vertex_bit(v);
    }
    return s;
}

std::vector<int> labels_of(VertexSet s)
{
    std::vector<int> out;
    s.for_each([&](unsigned b) { out.push_back(static_cast<int>(b) + 1); });
    return out;
}

Hypergraph::Hypergraph(int mu, std::initializer_list<std::initializer_list<int>> edges)
    : Hypergraph(with_vertices(mu))
{
    for (const auto& e : edges)
        add_edge(vertex_set(e));
}

Hypergraph Hypergraph::with_vertices(int mu)
{
    if (mu < 0 || mu > kMaxVertexLabel)
        throw Error("capacity", "vertex count " + std::to_string(mu) + " outside 0.." + std::to_string(kMaxVertexLabel));
    return Hypergraph(VertexSet::first_n(static_cast<unsigned>(mu)));
}

void Hypergraph::add_edge(VertexSet members, const std::set<std::string>& labels)
{
    if (members.empty())
        throw Error("invalid_edge", "edges must be non-empty");
    if (!members.subset_of(vertices_))
        throw Error("invalid_edge", "edge " + describe(members) + " uses vertices outside the hypergraph");
    if (auto idx = find_edge(members)) {
        edges_[*idx].labels.insert(labels.begin(), labels.end());
        return;
    }
    edges_.push_back({members, labels});
}

std::optional<std::size_t> Hypergraph::find_edge(VertexSet members) const
{
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].members == members)
            return i;
    return std::nullopt;
}

std::vector<VertexSet> Hypergraph::edge_family() const
{
    std::vector<VertexSet> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_)
        out.push_back(e.members);
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph Hypergraph::compacted(std::vector<int>* labels_out) const
{
    std::vector<int> labels = labels_of(vertices_);
    auto remap = [&](VertexSet s) {
        VertexSet r;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (s.contains(static_cast<unsigned>(labels[i] - 1)))
                r = r.with(static_cast<unsigned>(i));
        return r;
    };
    Hypergraph out = with_vertices(static_cast<int>(labels.size()));
    for (const Edge& e : edges_)
        out.add_edge(remap(e.members), e.labels);
    if (labels_out)
        *labels_out = std::move(labels);
    return out;
}

Hypergraph Hypergraph::induced(VertexSet vertices) const
{
    Hypergraph out(vertices & vertices_);
    for (const Edge& e : edges_)
        if (e.members.subset_of(out.vertices_))
            out.edges_.push_back(e);
    return out;
}

Hypergraph dual_hypergraph(const MonomialIdeal& ideal)
{
    if (ideal.kind() != MonomialIdeal::Kind::proper || ideal.size() == 0)
        throw Error("empty_ideal", "the dual hypergraph needs at least one generator");
    const auto& gens = ideal.generators();
    Hypergraph h = Hypergraph::with_vertices(static_cast<int>(gens.size()));
    for (std::size_t i = 0; i < ideal.ring().size(); ++i) {
        VertexSet edge;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (gens[j].contains(static_cast<unsigned>(i)))
                edge = edge.with(static_cast<unsigned>(j));
        if (!edge.empty())
            h.add_edge(edge, {ideal.ring()[i]});
    }
    return h;
}

MonomialIdeal ideal_from_hypergraph(const Hypergraph& h)
{
    if (h.empty())
        throw Error("empty_ideal", "hypergraph has no vertices");
    if (h.num_edges() > kMaxVariables)
        throw Error("capacity", "hypergraph has more than " + std::to_string(kMaxVariables) + " edges");

    std::vector<std::string> names;
    for (std::size_t k = 0; k < h.edges().size(); ++k) {
        const Edge& e = h.edges()[k];
        std::string name;
        if (!e.labels.empty() && is_variable_name(*e.labels.begin()))
            name = *e.labels.begin();
        if (name.empty() || std::find(names.begin(), names.end(), name) != names.end())
            name = "x" + std::to_string(k + 1);
        while (std::find(names.begin(), names.end(), name) != names.end())
            name += "_";
        names.push_back(name);
    }

    std::vector<VarSet> gens;
    for (int v : labels_of(h.vertices())) {
        VarSet g;
        for (std::size_t k = 0; k < h.edges().size(); ++k)
            if (h.edges()[k].members.contains(static_cast<unsigned>(v - 1)))
                g = g.with(static_cast<unsigned>(k));
        if (g.empty())
            throw Error("isolated_vertex", "vertex " + std::to_string(v) + " lies in no edge");
        gens.push_back(g);
    }
    return MonomialIdeal::from_supports(make_ring(std::move(names)), gens);
}

bool is_separated(const Hypergraph& h)
{
    auto labels = labels_of(h.vertices());
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            VertexSet va = vertex_bit(labels[a]);
            VertexSet vb = vertex_bit(labels[b]);
            bool a_without_b = false;
            bool b_without_a = false;
            for (const Edge& e : h.edges()) {
                if (e.members.intersects(va) && !e.members.intersects(vb))
                    a_without_b = true;
                if (e.members.intersects(vb) && !e.members.intersects(va))
                    b_without_a = true;
            }
            if (!a_without_b || !b_without_a)
                return false;
        }
    }
    return true;
}

std::vector<VertexClass> classify_vertices(const Hypergraph& h)
{
    std::vector<VertexClass> out;
    for (int v : labels_of(h.vertices())) {
        VertexClass c{v, true, 0};
        for (const Edge& e : h.edges()) {
            if (!e.members.contains(static_cast<unsigned>(v - 1)))
                continue;
            ++c.degree;
            if (e.members.size() == 1)
                c.open = false;
        }
        out.push_back(c);
    }
    return out;
}

bool is_closed(const Hypergraph& h, int v) { return h.has_edge(vertex_bit(v)); }

VertexSet closed_vertices(const Hypergraph& h)
{
    VertexSet out;
    for (const Edge& e : h.edges())
        if (e.members.size() == 1)
            out |= e.members;
    return out;
}

Hypergraph skeleton(const Hypergraph& h, int dim)
{
    if (dim < 0)
        throw Error("out_of_range", "skeleton dimension must be non-negative");
    Hypergraph out(h.vertices());
    for (const Edge& e : h.edges())
        if (e.members.size() <= dim + 1)
            out.add_edge(e.members, e.labels);
    return out;
}

Hypergraph remove_edge(const Hypergraph& h, VertexSet edge)
{
    if (!h.has_edge(edge))
        throw Error("not_an_edge", describe(edge) + " is not an edge");
    Hypergraph out(h.vertices());
    for (const Edge& e : h.edges())
        if (e.members != edge)
            out.add_edge(e.members, e.labels);
    return out;
}

Hypergraph remove_vertex(const Hypergraph& h, int v)
{
    if (!h.has_vertex(v))
        throw Error("not_a_vertex", std::to_string(v) + " is not a vertex");
    VertexSet gone = vertex_bit(v);
    Hypergraph out(h.vertices() - gone);
    for (const Edge& e : h.edges()) {
        VertexSet rest = e.members - gone;
        if (!rest.empty())
            out.add_edge(rest, e.labels);
    }
    return out;
}

Hypergraph add_edge_vertex(const Hypergraph& h, VertexSet edge)
{
    if (!h.has_edge(edge))
        throw Error("not_an_edge", describe(edge) + " is not an edge");
    int fresh = h.vertices().empty() ? 1 : static_cast<int>(h.vertices().highest()) + 2;
    check_label(fresh);
    Hypergraph out = h;
    for (int v : labels_of(edge))
        out = remove_vertex(out, v);
    Hypergraph with_fresh(out.vertices() | vertex_bit(fresh));
    for (const Edge& e : out.edges())
        with_fresh.add_edge(e.members, e.labels);
    std::set<std::string> labels;
    for (const auto& name : h.edges()[*h.find_edge(edge)].labels)
        labels.insert(name);
    with_fresh.add_edge(vertex_bit(fresh), labels);
    return with_fresh;
}

std::vector<Hypergraph> components(const Hypergraph& h)
{
    std::vector<Hypergraph> out;
    VertexSet remaining = h.vertices();
    while (!remaining.empty()) {
        VertexSet comp = VertexSet::singleton(remaining.lowest());
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Edge& e : h.edges()) {
                if (e.members.intersects(comp) && !e.members.subset_of(comp)) {
                    comp |= e.members;
                    grew = true;
                }
            }
        }
        out.push_back(h.induced(comp));
        remaining = remaining - comp;
    }
    return out;
}

VertexSet pair_neighbors(const Hypergraph& h, int v)
{
    VertexSet self = vertex_bit(v);
    VertexSet out;
    for (const Edge& e : h.edges())
        if (e.members.size() == 2 && e.members.intersects(self))
            out |= e.members - self;
    return out;
}

int pair_degree(const Hypergraph& h, int v) { return pair_neighbors(h, v).size(); }

std::string_view to_string(ShapeKind kind)
{
    switch (kind) {
    case ShapeKind::string:
        return "string";
    case ShapeKind::cycle:
        return "cycle";
    case ShapeKind::two_star:
        return "two_star";
    case ShapeKind::bush:
        return "bush";
    case ShapeKind::other:
        return "other";
    }
    return "other";
}

std::vector<Branch> branches_of(const Hypergraph& h, int joint)
{
    std::vector<Branch> out;
    for (int first : labels_of(pair_neighbors(h, joint))) {
        if (pair_degree(h, first) >= 3)
            continue;
        Branch b;
        int prev = joint;
        int cur = first;
        b.vertices.push_back(cur);
        while (true) {
            VertexSet next_set = pair_neighbors(h, cur) - vertex_bit(prev);
            if (next_set.empty())
                break;
            int next = static_cast<int>(next_set.lowest()) + 1;
            if (pair_degree(h, next) >= 3) {
                b.terminal_joint = next;
                break;
            }
            b.vertices.push_back(next);
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(b));
    }
    return out;
}

ShapeReport classify_shape(const Hypergraph& h)
{
    if (components(h).size() != 1)
        throw Error("disconnected", "shape classification needs a connected hypergraph");

    ShapeReport report;
    const auto vertices = labels_of(h.vertices());
    int pair_edges = 0;
    bool has_higher = false;
    for (const Edge& e : h.edges()) {
        if (e.members.size() == 2)
            ++pair_edges;
        else if (e.members.size() > 2)
            has_higher = true;
    }
    int max_pair_degree = 0;
    for (int v : vertices) {
        int d = pair_degree(h, v);
        max_pair_degree = std::max(max_pair_degree, d);
        if (d >= 3)
            report.joints.push_back(v);
    }
    const int mu = static_cast<int>(vertices.size());

    if (report.joints.empty()) {
        bool pair_connected = components(skeleton(h, 1)).size() == 1;
        if (!has_higher && pair_connected && pair_edges == mu - 1)
            report.kind = ShapeKind::string;
        else if (!has_higher && pair_connected && mu >= 3 && pair_edges == mu)
            report.kind = ShapeKind::cycle;
        else if (pair_edges < mu - static_cast<int>(components(skeleton(h, 1)).size()) + 1)
            report.kind = ShapeKind::bush;   // pair graph is a forest of paths
        else
            report.kind = ShapeKind::other;
        return report;
    }

    bool short_branches = true;
    for (int j : report.joints) {
        JointBranches jb{j, branches_of(h, j)};
        for (const Branch& b : jb.branches)
            if (b.length() > 2)
                short_branches = false;
        report.branch_data.push_back(std::move(jb));
    }
    if (!short_branches)
        report.kind = ShapeKind::other;
    else if (report.joints.size() == 1)
        report.kind = ShapeKind::two_star;
    else
        report.kind = ShapeKind::bush;
    return report;
}

std::vector<int> pair_distances(const Hypergraph& h, int source)
{
    std::vector<int> dist(kMaxVertexLabel + 1, -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : labels_of(pair_neighbors(h, v))) {
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

} // namespace sqfpd
