#pragma once

#include <vector>

#include "sqfpd/hypergraph.hpp"
#include "support/random.hpp"

namespace sqfpd::testing {

/// Path 1 - 2 - ... - mu with closed ends; a single closed vertex for mu = 1.
inline Hypergraph string_hypergraph(int mu, int first = 1)
{
    Hypergraph h(VertexSet{});
    VertexSet vs;
    for (int v = first; v < first + mu; ++v)
        vs |= vertex_bit(v);
    h = Hypergraph(vs);
    for (int v = first; v + 1 < first + mu; ++v)
        h.add_edge(vertex_bit(v) | vertex_bit(v + 1));
    h.add_edge(vertex_bit(first));
    h.add_edge(vertex_bit(first + mu - 1));
    return h;
}

/// Random tree on up to max_vertices with closed leaves and some closed
/// interior vertices; separated trees only.
inline Hypergraph random_closed_leaf_tree(Rng& rng, int max_vertices)
{
    while (true) {
        int n = uniform(rng, 2, max_vertices);
        Hypergraph h = Hypergraph::with_vertices(n);
        for (int v = 2; v <= n; ++v)
            h.add_edge(vertex_bit(v) | vertex_bit(uniform(rng, 1, v - 1)));
        for (int v = 1; v <= n; ++v)
            if (pair_degree(h, v) == 1 || uniform(rng, 0, 2) == 0)
                h.add_edge(vertex_bit(v));
        if (is_separated(h))
            return h;
    }
}

/// 2-star: joint 1 with the given branch lengths (1 or 2), open joint and
/// interior vertices, closed leaves.
inline Hypergraph two_star(const std::vector<int>& lengths)
{
    int n = 1;
    for (int l : lengths)
        n += l;
    Hypergraph h = Hypergraph::with_vertices(n);
    int next = 2;
    for (int l : lengths) {
        int prev = 1;
        for (int s = 0; s < l; ++s) {
            h.add_edge(vertex_bit(prev) | vertex_bit(next));
            prev = next++;
        }
        h.add_edge(vertex_bit(prev));
    }
    return h;
}

} // namespace sqfpd::testing
