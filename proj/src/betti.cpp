#include "sqfpd/betti.hpp"

#include <algorithm>
#include <functional>

#include "sqfpd/error.hpp"

namespace sqfpd {

namespace {

[[noreturn]] void too_many_faces(std::size_t cap)
{
    throw Error("interval_too_large", "interval complex exceeds the cap of " + std::to_string(cap) + " faces");
}

} // namespace

SimplicialComplex order_complex(const SetFamilyLattice& lattice, AtomSet p, std::size_t chain_cap)
{
    if (!lattice.contains(p))
        throw Error("not_an_element", "not a lattice element");
    if (p.empty())
        throw Error("bottom_element", "the interval below the bottom element is undefined");
    std::vector<AtomSet> inside;
    for (AtomSet q : lattice.elements())
        if (!q.empty() && q.proper_subset_of(p))
            inside.push_back(q);
    std::stable_sort(inside.begin(), inside.end(), [](AtomSet a, AtomSet b) { return a.size() < b.size(); });

    SimplicialComplex k;
    std::size_t count = 0;
    SimplicialComplex::Face chain;
    std::function<void(std::size_t)> extend = [&](std::size_t last) {
        for (std::size_t next = last + 1; next < inside.size(); ++next) {
            if (!inside[last].proper_subset_of(inside[next]))
                continue;
            chain.push_back(static_cast<std::uint32_t>(next));
            if (++count > chain_cap)
                too_many_faces(chain_cap);
            k.add_face(chain);
            extend(next);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < inside.size(); ++i) {
        chain.assign(1, static_cast<std::uint32_t>(i));
        if (++count > chain_cap)
            too_many_faces(chain_cap);
        k.add_face(chain);
        extend(i);
    }
    return k;
}

namespace {

SimplicialComplex crosscut_from_covers(AtomSet p, const std::vector<AtomSet>& covers, std::size_t face_cap)
{
    SimplicialComplex k;
    std::size_t count = 0;
    SimplicialComplex::Face face;
    std::function<void(std::size_t, AtomSet)> extend = [&](std::size_t from, AtomSet common) {
        for (std::size_t c = from; c < covers.size(); ++c) {
            AtomSet meet = common & covers[c];
            if (meet.empty())
                continue;
            face.push_back(static_cast<std::uint32_t>(c));
            if (++count > face_cap)
                too_many_faces(face_cap);
            k.add_face(face);
            extend(c + 1, meet);
            face.pop_back();
        }
    };
    extend(0, p);
    return k;
}

} // namespace

SimplicialComplex crosscut_complex(const SetFamilyLattice& lattice, AtomSet p, std::size_t face_cap)
{
    if (p.empty())
        throw Error("bottom_element", "the interval below the bottom element is undefined");
    return crosscut_from_covers(p, lattice.lower_covers(p), face_cap);
}

int BettiTable::pd() const
{
    int best = -1;
    for (const auto& [i, total] : totals)
        if (total > 0)
            best = std::max(best, i);
    return best;
}

long long BettiTable::total(int i) const
{
    auto it = totals.find(i);
    return it == totals.end() ? 0 : it->second;
}

BettiTable betti_table(const SetFamilyLattice& lattice, const OracleOptions& options)
{
    if (!is_prime(options.field_char))
        throw Error("invalid_characteristic", std::to_string(options.field_char) + " is not prime");
    BettiTable table;
    table.field_char = options.field_char;
    table.entries[{0, AtomSet{}}] = 1;
    table.totals[0] = 1;
    const auto& elements = lattice.elements();
    std::vector<std::vector<AtomSet>> lower(elements.size());
    if (options.model == IntervalModel::crosscut) {
        auto up = lattice.hasse();
        for (std::size_t i = 0; i < up.size(); ++i)
            for (std::size_t j : up[i])
                lower[j].push_back(elements[i]);
    }
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        AtomSet p = elements[idx];
        if (p.empty())
            continue;
        SimplicialComplex k = options.model == IntervalModel::order
                                  ? order_complex(lattice, p, options.chain_cap)
                                  : crosscut_from_covers(p, lower[idx], options.chain_cap);
        HomologyRanks h = reduced_homology_ranks(k, options.field_char);
        ++table.intervals_checked;
        for (std::size_t d = 0; d < h.ranks.size(); ++d) {
            if (h.ranks[d] == 0)
                continue;
            int i = static_cast<int>(d) - 1 + 2;
            table.entries[{i, p}] = h.ranks[d];
            table.totals[i] += h.ranks[d];
        }
    }
    return table;
}

BettiTable betti_table(const MonomialIdeal& ideal, const OracleOptions& options)
{
    if (ideal.is_unit()) {
        BettiTable empty;
        empty.field_char = options.field_char;
        return empty;
    }
    return betti_table(lcm_lattice(ideal, options.lattice_cap), options);
}

BettiTable betti_table(const Hypergraph& h, const OracleOptions& options)
{
    if (h.empty())
        return betti_table(MonomialIdeal::zero(make_ring({})), options);
    Hypergraph compact = h.compacted();
    if (is_separated(compact))
        return betti_table(lattice_from_hypergraph(compact, options.lattice_cap), options);
    return betti_table(ideal_from_hypergraph(compact), options);
}

int oracle_pd(const MonomialIdeal& ideal, const OracleOptions& options) { return betti_table(ideal, options).pd(); }

int oracle_pd(const Hypergraph& h, const OracleOptions& options) { return betti_table(h, options).pd(); }

} // namespace sqfpd
