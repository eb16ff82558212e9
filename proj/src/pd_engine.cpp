#include "sqfpd/pd_engine.hpp"

#include "sqfpd/error.hpp"
#include "sqfpd/lattice.hpp"

namespace sqfpd {

namespace {

int count_pair_edges(const Hypergraph& h)
{
    int n = 0;
    for (const Edge& e : h.edges())
        if (e.members.size() == 2)
            ++n;
    return n;
}

bool connected(const Hypergraph& h) { return components(h).size() == 1; }

ComponentPd solve_component(const Hypergraph& c, const PdOptions& options)
{
    ComponentPd out{c, 0, PdMethod::oracle, std::nullopt};
    if (options.use_formulas && is_open_string(c)) {
        out.pd = pd_open_string(c.num_vertices());
        out.method = PdMethod::formula_open_string;
    } else if (options.use_formulas && is_two_star(c)) {
        out.pd = pd_two_star(c);
        out.method = PdMethod::formula_two_star;
    } else {
        out.pd = oracle_pd(c, options.oracle);
        out.oracle_pd = out.pd;
        return out;
    }
    if (options.verify) {
        out.oracle_pd = oracle_pd(c, options.oracle);
        if (*out.oracle_pd != out.pd)
            throw Error("verification_failed", std::string(to_string(out.method)) + " gives " + std::to_string(out.pd) +
                                                   " but the oracle gives " + std::to_string(*out.oracle_pd));
    }
    return out;
}

} // namespace

std::string_view to_string(PdMethod method)
{
    switch (method) {
    case PdMethod::formula_open_string:
        return "formula_open_string";
    case PdMethod::formula_two_star:
        return "formula_two_star";
    case PdMethod::formula_closed_isolated:
        return "formula_closed_isolated";
    case PdMethod::additivity:
        return "additivity";
    case PdMethod::oracle:
        return "oracle";
    }
    return "oracle";
}

int pd_open_string(int mu)
{
    if (mu < 1)
        throw Error("out_of_range", "a string needs at least one vertex");
    return mu - mu / 3;
}

int pd_closed_isolated(int count)
{
    if (count < 0)
        throw Error("out_of_range", "negative vertex count");
    return count;
}

bool is_open_string(const Hypergraph& h)
{
    const int mu = h.num_vertices();
    if (mu < 2 || !connected(h))
        return false;
    for (const Edge& e : h.edges())
        if (e.members.size() > 2)
            return false;
    if (count_pair_edges(h) != mu - 1)
        return false;
    for (int v : labels_of(h.vertices())) {
        int d = pair_degree(h, v);
        if (d > 2 || (d == 1) != is_closed(h, v))
            return false;
    }
    return true;
}

bool is_two_star(const Hypergraph& h)
{
    if (h.empty() || !connected(h))
        return false;
    ShapeReport shape = classify_shape(h);
    if (shape.kind != ShapeKind::two_star)
        return false;
    const int joint = shape.joints.front();
    if (is_closed(h, joint) || count_pair_edges(h) != h.num_vertices() - 1)
        return false;
    for (int v : labels_of(h.vertices())) {
        if (v == joint)
            continue;
        if ((pair_degree(h, v) == 1) != is_closed(h, v))
            return false;
    }
    for (VertexSet f : union_edge_elements(h))
        if (f.size() >= 3)
            return false;
    return true;
}

int pd_two_star(const Hypergraph& h)
{
    if (!is_two_star(h))
        throw Error("shape_mismatch", "not a 2-star with open joint and closed leaves");
    return h.num_vertices() - 1;
}

PdResult pd(const Hypergraph& h, const PdOptions& options)
{
    PdResult result;
    Reduced r = full_reduce(h);
    result.trace = std::move(r.trace);
    result.reduced = r.hypergraph;

    std::vector<Hypergraph> isolated;
    for (const Hypergraph& c : components(result.reduced)) {
        if (c.num_vertices() == 1 && c.num_edges() == 1 && c.edges().front().members.size() == 1) {
            isolated.push_back(c);
            continue;
        }
        result.per_component.push_back(solve_component(c, options));
    }
    if (!isolated.empty()) {
        ComponentPd pooled{disjoint_union(isolated), pd_closed_isolated(static_cast<int>(isolated.size())),
                           PdMethod::formula_closed_isolated, std::nullopt};
        if (options.verify) {
            // The pooled Boolean lattice is too large to build; check one vertex and add.
            pooled.oracle_pd = static_cast<int>(isolated.size()) * oracle_pd(isolated.front(), options.oracle);
            if (*pooled.oracle_pd != pooled.pd)
                throw Error("verification_failed", "closed isolated vertex count disagrees with the oracle");
        }
        result.per_component.insert(result.per_component.begin(), std::move(pooled));
    }

    for (const ComponentPd& c : result.per_component)
        result.pd += c.pd;
    if (result.per_component.size() == 1)
        result.method = result.per_component.front().method;
    else
        result.method = PdMethod::additivity;
    return result;
}

PdResult pd(const MonomialIdeal& ideal, const PdOptions& options)
{
    if (ideal.is_unit())
        throw Error("unit_ideal", "R/I is zero for the unit ideal");
    if (ideal.is_zero() || ideal.size() == 0)
        return PdResult{};
    return pd(dual_hypergraph(ideal), options);
}

bool pd_monotonicity_check(const Hypergraph& small, const Hypergraph& large, const OracleOptions& options)
{
    if (small.vertices() != large.vertices())
        throw Error("not_contained", "the hypergraphs have different vertex sets");
    for (const Edge& e : small.edges())
        if (!large.has_edge(e.members))
            throw Error("not_contained", "an edge of the smaller hypergraph is missing from the larger one");
    return oracle_pd(small, options) <= oracle_pd(large, options);
}

} // namespace sqfpd
