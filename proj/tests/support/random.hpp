#pragma once

#include <random>
#include <string>
#include <vector>

#include "sqfpd/hypergraph.hpp"
#include "sqfpd/ideal.hpp"
#include "sqfpd/lattice.hpp"

namespace sqfpd::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline RingPtr letters_ring(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    return make_ring(names);
}

/// Random supports, then minimalized (so the generator count may shrink).
inline MonomialIdeal random_minimal_ideal(Rng& rng, int max_gens, int max_vars)
{
    int n = uniform(rng, 1, max_vars);
    int mu = uniform(rng, 1, max_gens);
    std::vector<VarSet> gens;
    for (int j = 0; j < mu; ++j) {
        VarSet g;
        while (g.empty())
            for (int i = 0; i < n; ++i)
                if (uniform(rng, 0, 2) == 0)
                    g = g.with(static_cast<unsigned>(i));
        gens.push_back(g);
    }
    return MonomialIdeal::from_supports(letters_ring(n), gens);
}

/// Every vertex gets a singleton or lies in a random edge; not necessarily separated.
inline Hypergraph random_hypergraph(Rng& rng, int mu, int extra_edges)
{
    Hypergraph h = Hypergraph::with_vertices(mu);
    for (int e = 0; e < extra_edges; ++e) {
        VertexSet s;
        while (s.empty())
            for (int v = 1; v <= mu; ++v)
                if (uniform(rng, 0, 2) == 0)
                    s |= vertex_bit(v);
        h.add_edge(s);
    }
    for (int v = 1; v <= mu; ++v) {
        bool covered = false;
        for (const Edge& e : h.edges())
            covered = covered || e.members.contains(static_cast<unsigned>(v - 1));
        if (!covered || uniform(rng, 0, 1) == 0)
            h.add_edge(vertex_bit(v));
    }
    return h;
}

/// Separated by construction: every vertex starts closed, and a vertex is
/// opened only when it stays covered and separated.
inline Hypergraph random_separated_hypergraph(Rng& rng, int mu, int extra_edges)
{
    Hypergraph h = random_hypergraph(rng, mu, extra_edges);
    for (int v = 1; v <= mu; ++v)
        h.add_edge(vertex_bit(v));
    // Opening a vertex keeps separation when its other edges still tell it apart.
    for (int v = 1; v <= mu; ++v) {
        if (uniform(rng, 0, 1) == 0)
            continue;
        Hypergraph trial = remove_edge(h, vertex_bit(v));
        bool covered = false;
        for (const Edge& e : trial.edges())
            covered = covered || e.members.contains(static_cast<unsigned>(v - 1));
        if (covered && is_separated(trial))
            h = trial;
    }
    return h;
}

/// Random atomic lattice: intersection closure of random subsets and all singletons.
inline SetFamilyLattice random_lattice(Rng& rng, int atoms, int extra)
{
    std::vector<AtomSet> gens;
    for (int j = 0; j < atoms; ++j)
        gens.push_back(AtomSet::singleton(static_cast<unsigned>(j)));
    for (int k = 0; k < extra; ++k) {
        AtomSet s;
        for (int j = 0; j < atoms; ++j)
            if (uniform(rng, 0, 1) == 0)
                s = s.with(static_cast<unsigned>(j));
        gens.push_back(s);
    }
    auto closed = SetFamilyLattice::intersection_closure(atoms, gens);
    return SetFamilyLattice::from_family(atoms, closed.elements());
}

/// A labeling satisfying both conditions: a fresh variable on every
/// meet-irreducible below the top, plus extra variables spread along random
/// chains with exponents 1 or 2.
inline Labeling random_valid_labeling(Rng& rng, const SetFamilyLattice& lattice, int extra_chains)
{
    Labeling lab;
    auto fresh = [&] {
        lab.variables.push_back("x" + std::to_string(lab.variables.size() + 1));
        for (auto& [element, label] : lab.labels)
            label.push_back(0);
        return lab.variables.size() - 1;
    };
    for (AtomSet m : meet_irreducibles(lattice)) {
        if (m == lattice.top())
            continue;
        std::size_t v = fresh();
        ExponentVector e(lab.variables.size(), 0);
        e[v] = 1;
        lab.labels.emplace_back(m, e);
    }
    for (int c = 0; c < extra_chains; ++c) {
        std::size_t v = fresh();
        AtomSet x = lattice.elements()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(lattice.size()) - 1))];
        while (true) {
            if (uniform(rng, 0, 1) == 0) {
                ExponentVector e(lab.variables.size(), 0);
                e[v] = static_cast<unsigned>(uniform(rng, 1, 2));
                lab.labels.emplace_back(x, e);
            }
            auto up = lattice.upper_covers(x);
            if (up.empty())
                break;
            x = up[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(up.size()) - 1))];
        }
    }
    return lab;
}

} // namespace sqfpd::testing
