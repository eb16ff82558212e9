#pragma once

#include <string>

#include <json.hpp>

#include "sqfpd/betti.hpp"
#include "sqfpd/hypergraph.hpp"
#include "sqfpd/ideal.hpp"
#include "sqfpd/lattice.hpp"
#include "sqfpd/pd_engine.hpp"
#include "sqfpd/reduction.hpp"

namespace sqfpd {

using json = nlohmann::json;

// {"variables": [...], "generators": [[0,1], ...]} with 0-based variable indices.
json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

// {"mu": 5, "edges": [[1],[1,2],...], "labels": {"[1]": ["a"]}}. Hypergraphs
// whose labels are not 1..mu are renumbered and carry "vertex_labels", the
// original label of each vertex, which reading restores.
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

// {"atoms": 4, "elements": [[], [1], ...]}
json lattice_to_json(const SetFamilyLattice& lattice);
SetFamilyLattice lattice_from_json(const json& j);

// {"labels": [{"element": [1,2], "monomial": "a"}, ...], "variables": [...]}
// "variables" is optional and fixes the variable order.
json labeling_to_json(const Labeling& labeling);
Labeling labeling_from_json(const json& j);

json betti_to_json(const BettiTable& table, bool multidegrees = false);
json pd_result_to_json(const PdResult& result);
json preconditions_to_json(const Preconditions& p);

json trace_step_to_json(const TraceStep& step);
TraceStep trace_step_from_json(const json& j);
/// One JSON object per line.
std::string trace_to_jsonl(const ReductionTrace& trace);
ReductionTrace trace_from_jsonl(const std::string& text);

json atom_set_to_json(AtomSet s);
AtomSet atom_set_from_json(const json& j);

/// Closed vertices filled, pair edges as graph edges, higher edges as
/// labelled clusters.
std::string hypergraph_to_dot(const Hypergraph& h);
std::string hasse_to_dot(const SetFamilyLattice& lattice);

} // namespace sqfpd
