#include "sqfpd/io.hpp"

#include <algorithm>
#include <sstream>

#include "sqfpd/error.hpp"

namespace sqfpd {

namespace {

std::string edge_key(const std::vector<int>& members)
{
    std::string key = "[";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i)
            key += ",";
        key += std::to_string(members[i]);
    }
    return key + "]";
}

std::vector<int> parse_edge_key(const std::string& key)
{
    json parsed = json::parse(key, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_array())
        throw Error("invalid_json", "label key '" + key + "' is not an edge");
    return parsed.get<std::vector<int>>();
}

template <class F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error("invalid_json", std::string("malformed ") + what + ": " + e.what());
    }
}

} // namespace

json atom_set_to_json(AtomSet s)
{
    json a = json::array();
    s.for_each([&](unsigned b) { a.push_back(b + 1); });
    return a;
}

AtomSet atom_set_from_json(const json& j)
{
    AtomSet s;
    for (int v : j.get<std::vector<int>>()) {
        if (v < 1 || v > 64)
            throw Error("invalid_json", "atom " + std::to_string(v) + " outside 1..64");
        s = s.with(static_cast<unsigned>(v - 1));
    }
    return s;
}

json ideal_to_json(const MonomialIdeal& ideal)
{
    json gens = json::array();
    for (VarSet g : ideal.generators()) {
        json idx = json::array();
        g.for_each([&](unsigned i) { idx.push_back(i); });
        gens.push_back(idx);
    }
    return {{"variables", ideal.ring()}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j)
{
    return guarded("ideal", [&] {
        RingPtr ring = make_ring(j.at("variables").get<std::vector<std::string>>());
        std::vector<VarSet> gens;
        for (const auto& g : j.at("generators")) {
            VarSet s;
            for (unsigned i : g.get<std::vector<unsigned>>()) {
                if (i >= ring->size())
                    throw Error("invalid_json", "variable index " + std::to_string(i) + " out of range");
                s = s.with(i);
            }
            gens.push_back(s);
        }
        if (gens.empty())
            throw Error("empty_ideal", "no generators given");
        return MonomialIdeal::from_supports(ring, gens);
    });
}

json hypergraph_to_json(const Hypergraph& h)
{
    std::vector<int> original;
    Hypergraph c = h.compacted(&original);
    std::vector<std::vector<int>> edges;
    json labels = json::object();
    for (const Edge& e : c.edges()) {
        edges.push_back(labels_of(e.members));
        if (!e.labels.empty())
            labels[edge_key(edges.back())] = e.labels;
    }
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    json out = {{"mu", c.num_vertices()}, {"edges", edges}};
    if (!labels.empty())
        out["labels"] = labels;
    bool identity = true;
    for (std::size_t i = 0; i < original.size(); ++i)
        identity = identity && original[i] == static_cast<int>(i) + 1;
    if (!identity)
        out["vertex_labels"] = original;
    return out;
}

Hypergraph hypergraph_from_json(const json& j)
{
    return guarded("hypergraph", [&] {
        int mu = j.at("mu").get<int>();
        std::vector<int> original;
        if (j.contains("vertex_labels")) {
            original = j.at("vertex_labels").get<std::vector<int>>();
            if (static_cast<int>(original.size()) != mu)
                throw Error("invalid_json", "vertex_labels must have mu entries");
        } else {
            for (int v = 1; v <= mu; ++v)
                original.push_back(v);
        }
        if (mu < 0 || mu > kMaxVertexLabel)
            throw Error("capacity", "mu must lie in 0.." + std::to_string(kMaxVertexLabel));
        VertexSet all;
        for (int v : original) {
            if (v < 1 || v > kMaxVertexLabel)
                throw Error("capacity", "vertex label " + std::to_string(v) + " outside 1.." +
                                            std::to_string(kMaxVertexLabel));
            all |= vertex_bit(v);
        }
        if (all.size() != mu)
            throw Error("invalid_json", "vertex_labels must be distinct");
        Hypergraph h(all);
        std::map<std::vector<int>, std::set<std::string>> labels;
        if (j.contains("labels"))
            for (const auto& [key, names] : j.at("labels").items())
                labels[parse_edge_key(key)] = names.get<std::set<std::string>>();
        for (const auto& e : j.at("edges")) {
            auto members = e.get<std::vector<int>>();
            VertexSet s;
            for (int v : members) {
                if (v < 1 || v > mu)
                    throw Error("invalid_edge", "vertex " + std::to_string(v) + " outside 1.." + std::to_string(mu));
                s |= vertex_bit(original[static_cast<std::size_t>(v - 1)]);
            }
            std::sort(members.begin(), members.end());
            auto it = labels.find(members);
            h.add_edge(s, it == labels.end() ? std::set<std::string>{} : it->second);
        }
        return h;
    });
}

json lattice_to_json(const SetFamilyLattice& lattice)
{
    json elements = json::array();
    std::vector<AtomSet> sorted = lattice.elements();
    std::sort(sorted.begin(), sorted.end(), [](AtomSet a, AtomSet b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.indices() < b.indices();
    });
    for (AtomSet x : sorted)
        elements.push_back(atom_set_to_json(x));
    return {{"atoms", lattice.num_atoms()}, {"elements", elements}};
}

SetFamilyLattice lattice_from_json(const json& j)
{
    return guarded("lattice", [&] {
        std::vector<AtomSet> family;
        for (const auto& e : j.at("elements"))
            family.push_back(atom_set_from_json(e));
        return SetFamilyLattice::from_family(j.at("atoms").get<int>(), std::move(family));
    });
}

json labeling_to_json(const Labeling& labeling)
{
    json labels = json::array();
    for (const auto& [element, label] : labeling.labels)
        labels.push_back({{"element", atom_set_to_json(element)},
                          {"monomial", monomial_to_string(label, labeling.variables)}});
    return {{"variables", labeling.variables}, {"labels", labels}};
}

Labeling labeling_from_json(const json& j)
{
    return guarded("labeling", [&] {
        Labeling out;
        if (j.contains("variables"))
            out.variables = j.at("variables").get<std::vector<std::string>>();
        std::vector<std::pair<AtomSet, std::string>> raw;
        for (const auto& entry : j.at("labels"))
            raw.emplace_back(atom_set_from_json(entry.at("element")), entry.at("monomial").get<std::string>());
        std::vector<ExponentVector> exps;
        for (const auto& [element, text] : raw)
            exps.push_back(parse_monomial(text, out.variables));
        for (std::size_t i = 0; i < raw.size(); ++i) {
            exps[i].resize(out.variables.size(), 0);
            out.labels.emplace_back(raw[i].first, exps[i]);
        }
        return out;
    });
}

json betti_to_json(const BettiTable& table, bool multidegrees)
{
    json totals = json::object();
    for (const auto& [i, t] : table.totals)
        if (t)
            totals[std::to_string(i)] = t;
    json out = {{"char", table.field_char}, {"totals", totals}, {"pd", table.pd()}};
    if (multidegrees) {
        json md = json::array();
        for (const auto& [key, beta] : table.entries)
            md.push_back({{"i", key.first}, {"element", atom_set_to_json(key.second)}, {"beta", beta}});
        out["multidegrees"] = md;
    }
    return out;
}

json pd_result_to_json(const PdResult& result)
{
    json comps = json::array();
    for (const ComponentPd& c : result.per_component) {
        json v = json::array();
        for (int x : labels_of(c.component.vertices()))
            v.push_back(x);
        json entry = {{"vertices", v}, {"pd", c.pd}, {"method", std::string(to_string(c.method))}};
        if (c.oracle_pd)
            entry["oracle_pd"] = *c.oracle_pd;
        comps.push_back(entry);
    }
    json breakdown = json::array();
    for (const ComponentPd& c : result.per_component)
        breakdown.push_back(c.pd);
    return {{"pd", result.pd},
            {"method", std::string(to_string(result.method))},
            {"breakdown", breakdown},
            {"components", comps},
            {"trace_steps", result.trace.steps.size()}};
}

json preconditions_to_json(const Preconditions& p)
{
    json out = {{"bush", p.bush}, {"higher_edges_same_joint", p.higher_edges_same_joint},
                {"no_connected_closed", p.no_connected_closed}};
    json witnesses = json::object();
    if (!p.bush_witness.empty())
        witnesses["bush"] = p.bush_witness;
    if (!p.higher_edge_witness.empty())
        witnesses["higher_edges_same_joint"] = p.higher_edge_witness;
    if (!p.closed_pair_witness.empty())
        witnesses["no_connected_closed"] = p.closed_pair_witness;
    if (!witnesses.empty())
        out["witnesses"] = witnesses;
    return out;
}

json trace_step_to_json(const TraceStep& step)
{
    json out = {{"rule", std::string(to_string(step.rule))}, {"cite", step.cite}};
    if (step.edge)
        out["edge"] = labels_of(*step.edge);
    else
        out["vertex"] = step.vertex;
    return out;
}

TraceStep trace_step_from_json(const json& j)
{
    return guarded("trace step", [&] {
        TraceStep s{rule_from_string(j.at("rule").get<std::string>()), std::nullopt, 0, j.value("cite", "")};
        if (j.contains("edge")) {
            VertexSet e;
            for (int v : j.at("edge").get<std::vector<int>>()) {
                if (v < 1 || v > kMaxVertexLabel)
                    throw Error("invalid_json", "vertex label out of range");
                e |= vertex_bit(v);
            }
            s.edge = e;
        } else {
            s.vertex = j.at("vertex").get<int>();
        }
        return s;
    });
}

std::string trace_to_jsonl(const ReductionTrace& trace)
{
    std::string out;
    for (const TraceStep& s : trace.steps)
        out += trace_step_to_json(s).dump() + "\n";
    return out;
}

ReductionTrace trace_from_jsonl(const std::string& text)
{
    ReductionTrace trace;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw Error("invalid_json", "trace line is not JSON: " + line);
        trace.steps.push_back(trace_step_from_json(j));
    }
    return trace;
}

std::string hypergraph_to_dot(const Hypergraph& h)
{
    std::ostringstream os;
    const VertexSet closed = closed_vertices(h);
    os << "graph H {\n  node [shape=circle];\n";
    for (int v : labels_of(h.vertices())) {
        os << "  v" << v << " [label=\"" << v << "\"";
        if (closed.contains(static_cast<unsigned>(v - 1)))
            os << ", style=filled, fillcolor=black, fontcolor=white";
        os << "];\n";
    }
    int hyper = 0;
    for (const Edge& e : h.edges()) {
        auto m = labels_of(e.members);
        if (m.size() == 2) {
            os << "  v" << m[0] << " -- v" << m[1];
            if (!e.labels.empty())
                os << " [label=\"" << *e.labels.begin() << "\"]";
            os << ";\n";
        } else if (m.size() > 2) {
            ++hyper;
            std::string name = e.labels.empty() ? "F" + std::to_string(hyper) : *e.labels.begin();
            os << "  h" << hyper << " [shape=box, style=filled, fillcolor=lightgrey, label=\"" << name << "\"];\n";
            for (int v : m)
                os << "  h" << hyper << " -- v" << v << " [style=dashed];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string hasse_to_dot(const SetFamilyLattice& lattice)
{
    auto name = [](AtomSet s) {
        std::string out = "{";
        bool first = true;
        s.for_each([&](unsigned b) {
            if (!first)
                out += ",";
            out += std::to_string(b + 1);
            first = false;
        });
        return out + "}";
    };
    std::ostringstream os;
    os << "digraph L {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (AtomSet x : lattice.elements())
        os << "  e" << x.word() << " [label=\"" << name(x) << "\"];\n";
    for (AtomSet x : lattice.elements())
        for (AtomSet y : lattice.upper_covers(x))
            os << "  e" << x.word() << " -> e" << y.word() << " [arrowhead=none];\n";
    os << "}\n";
    return os.str();
}

} // namespace sqfpd
