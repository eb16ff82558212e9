#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sqfpd/betti.hpp"
#include "sqfpd/hypergraph.hpp"
#include "sqfpd/reduction.hpp"

namespace sqfpd {

// All projective dimensions here are pd(R/I), one more than pd(I).

enum class PdMethod { formula_open_string, formula_two_star, formula_closed_isolated, additivity, oracle };

std::string_view to_string(PdMethod method);

/// mu - floor(mu / 3). Throws Error("out_of_range") for mu < 1.
int pd_open_string(int mu);
/// |V| - 1. Throws Error("shape_mismatch") unless is_two_star(h).
int pd_two_star(const Hypergraph& h);
int pd_closed_isolated(int count);

/// A path v1 - ... - vm (m >= 2) along pair edges with closed ends, open
/// interior vertices and no other edges.
bool is_open_string(const Hypergraph& h);
/// One open joint whose branches all have length <= 2, open interior
/// vertices, closed leaves, a tree of pair edges, and no union edges.
bool is_two_star(const Hypergraph& h);

struct ComponentPd {
    Hypergraph component;
    int pd = 0;
    PdMethod method = PdMethod::oracle;
    std::optional<int> oracle_pd;   // set when verification ran
};

struct PdResult {
    int pd = 0;
    PdMethod method = PdMethod::oracle;
    /// Closed isolated vertices are pooled into a single entry.
    std::vector<ComponentPd> per_component;
    ReductionTrace trace;
    Hypergraph reduced;
};

struct PdOptions {
    /// Also run the oracle on formula components; throws
    /// Error("verification_failed") on disagreement.
    bool verify = false;
    bool use_formulas = true;
    OracleOptions oracle;
};

PdResult pd(const Hypergraph& h, const PdOptions& options = {});
PdResult pd(const MonomialIdeal& ideal, const PdOptions& options = {});

/// Oracle pd(small) <= pd(large). Requires the edges of `small` to be edges
/// of `large` on the same vertex set; throws Error("not_contained").
bool pd_monotonicity_check(const Hypergraph& small, const Hypergraph& large, const OracleOptions& options = {});

} // namespace sqfpd
