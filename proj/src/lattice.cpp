#include "sqfpd/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "sqfpd/error.hpp"

namespace sqfpd {

namespace {

std::string describe(AtomSet s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](unsigned b) {
        if (!first)
            out += ",";
        out += std::to_string(b + 1);
        first = false;
    });
    return out + "}";
}

void check_atoms(int num_atoms)
{
    if (num_atoms < 0 || num_atoms > 64)
        throw Error("capacity", "lattices are limited to 64 atoms");
}

[[noreturn]] void cap_exceeded(std::size_t cap)
{
    throw Error("lattice_too_large", "lattice exceeds the cap of " + std::to_string(cap) + " elements");
}

} // namespace

SetFamilyLattice::SetFamilyLattice(int num_atoms, std::vector<AtomSet> elements, std::vector<AtomSet> meet_generators)
    : num_atoms_(num_atoms), elements_(std::move(elements)), meet_generators_(std::move(meet_generators))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    std::sort(meet_generators_.begin(), meet_generators_.end());
    meet_generators_.erase(std::unique(meet_generators_.begin(), meet_generators_.end()), meet_generators_.end());
}

SetFamilyLattice SetFamilyLattice::from_family(int num_atoms, std::vector<AtomSet> family)
{
    check_atoms(num_atoms);
    SetFamilyLattice l(num_atoms, family, family);
    const AtomSet full = l.top();
    for (AtomSet x : l.elements_)
        if (!x.subset_of(full))
            throw Error("invalid_lattice", describe(x) + " uses atoms beyond " + std::to_string(num_atoms));
    if (!l.contains(AtomSet{}))
        throw Error("invalid_lattice", "the empty set is missing");
    if (!l.contains(full))
        throw Error("invalid_lattice", "the full set is missing");
    for (unsigned j = 0; j < static_cast<unsigned>(num_atoms); ++j)
        if (!l.contains(AtomSet::singleton(j)))
            throw Error("invalid_lattice", "atom {" + std::to_string(j + 1) + "} is missing");
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a + 1; b < l.size(); ++b)
            if (!l.contains(l.elements_[a] & l.elements_[b]))
                throw Error("invalid_lattice", "intersection of " + describe(l.elements_[a]) + " and " +
                                                   describe(l.elements_[b]) + " is missing");
    // Only the meet-irreducibles are needed to compute closures.
    std::vector<AtomSet> mi;
    for (AtomSet x : l.elements_)
        if (x != full && l.upper_covers(x).size() == 1)
            mi.push_back(x);
    l.meet_generators_ = std::move(mi);
    return l;
}

SetFamilyLattice SetFamilyLattice::intersection_closure(int num_atoms, const std::vector<AtomSet>& generators,
                                                        std::size_t cap)
{
    check_atoms(num_atoms);
    const AtomSet full = AtomSet::first_n(static_cast<unsigned>(num_atoms));
    std::vector<AtomSet> gens;
    for (AtomSet g : generators)
        if (g != full)
            gens.push_back(g & full);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Every element is an intersection of generators, so closing under
    // intersection with single generators reaches all of them.
    std::unordered_set<AtomSet, BitSet64Hash> seen{full, AtomSet{}};
    std::vector<AtomSet> work{full};
    while (!work.empty()) {
        AtomSet x = work.back();
        work.pop_back();
        for (AtomSet g : gens) {
            AtomSet y = x & g;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    cap_exceeded(cap);
                work.push_back(y);
            }
        }
    }
    return SetFamilyLattice(num_atoms, std::vector<AtomSet>(seen.begin(), seen.end()), std::move(gens));
}

bool SetFamilyLattice::contains(AtomSet x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::optional<std::size_t> SetFamilyLattice::index_of(AtomSet x) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x)
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

void SetFamilyLattice::require(AtomSet x) const
{
    if (!contains(x))
        throw Error("not_an_element", describe(x) + " is not a lattice element");
}

AtomSet SetFamilyLattice::meet(AtomSet a, AtomSet b) const
{
    require(a);
    require(b);
    return a & b;
}

AtomSet SetFamilyLattice::closure(AtomSet s) const
{
    AtomSet c = top();
    for (AtomSet g : meet_generators_)
        if (s.subset_of(g))
            c &= g;
    return c;
}

AtomSet SetFamilyLattice::join(AtomSet a, AtomSet b) const
{
    require(a);
    require(b);
    return closure(a | b);
}

std::vector<AtomSet> SetFamilyLattice::filter(AtomSet x) const
{
    require(x);
    std::vector<AtomSet> out;
    for (AtomSet y : elements_)
        if (x.subset_of(y))
            out.push_back(y);
    return out;
}

// In an atomic lattice every upper cover of x is x joined with one atom.
std::vector<AtomSet> SetFamilyLattice::upper_covers(AtomSet x) const
{
    std::vector<AtomSet> candidates;
    (top() - x).for_each([&](unsigned a) { candidates.push_back(closure(x.with(a))); });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<AtomSet> covers;
    for (AtomSet y : candidates)
        if (std::none_of(candidates.begin(), candidates.end(), [&](AtomSet c) { return c.proper_subset_of(y); }))
            covers.push_back(y);
    return covers;
}

std::vector<AtomSet> SetFamilyLattice::lower_covers(AtomSet x) const
{
    require(x);
    std::vector<AtomSet> covers;
    for (AtomSet y : elements_) {
        if (!y.proper_subset_of(x))
            continue;
        bool covered = true;
        (x - y).for_each([&](unsigned a) { covered = covered && closure(y.with(a)) == x; });
        if (covered)
            covers.push_back(y);
    }
    return covers;
}

std::vector<std::vector<std::size_t>> SetFamilyLattice::hasse() const
{
    std::vector<std::vector<std::size_t>> up(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (AtomSet y : upper_covers(elements_[i]))
            up[i].push_back(*index_of(y));
    return up;
}

SetFamilyLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap)
{
    const auto& gens = ideal.generators();
    const int mu = static_cast<int>(gens.size());
    check_atoms(mu);
    std::unordered_set<VarSet, BitSet64Hash> lcms;
    std::vector<VarSet> work;
    for (VarSet g : gens)
        if (lcms.insert(g).second)
            work.push_back(g);
    while (!work.empty()) {
        VarSet m = work.back();
        work.pop_back();
        for (VarSet g : gens) {
            VarSet n = m | g;
            if (lcms.insert(n).second) {
                if (lcms.size() + 1 > cap)
                    cap_exceeded(cap);
                work.push_back(n);
            }
        }
    }
    auto support_set = [&](VarSet m) {
        AtomSet s;
        for (int j = 0; j < mu; ++j)
            if (gens[static_cast<std::size_t>(j)].subset_of(m))
                s = s.with(static_cast<unsigned>(j));
        return s;
    };
    std::vector<AtomSet> family{AtomSet{}};
    for (VarSet m : lcms)
        family.push_back(support_set(m));

    // Meet-irreducibles, found with the ideal's own join (lcm with one more
    // generator), are enough to compute closures later.
    const AtomSet full = AtomSet::first_n(static_cast<unsigned>(mu));
    std::vector<AtomSet> irreducible;
    for (VarSet m : lcms) {
        AtomSet s = support_set(m);
        if (s == full)
            continue;
        std::vector<AtomSet> up;
        (full - s).for_each([&](unsigned a) { up.push_back(support_set(m | gens[a])); });
        std::sort(up.begin(), up.end());
        up.erase(std::unique(up.begin(), up.end()), up.end());
        int covers = 0;
        for (AtomSet y : up)
            if (std::none_of(up.begin(), up.end(), [&](AtomSet c) { return c.proper_subset_of(y); }))
                ++covers;
        if (covers == 1)
            irreducible.push_back(s);
    }
    if (mu == 1)
        irreducible.push_back(AtomSet{});   // the bottom's only upper cover is the top
    return SetFamilyLattice(mu, std::move(family), std::move(irreducible));
}

SetFamilyLattice lcm_lattice(const ExponentIdeal& ideal, std::size_t cap)
{
    const auto& gens = ideal.generators;
    const int mu = static_cast<int>(gens.size());
    check_atoms(mu);
    auto divides = [](const ExponentVector& a, const ExponentVector& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i])
                return false;
        return true;
    };
    std::set<ExponentVector> lcms(gens.begin(), gens.end());
    std::vector<ExponentVector> work(lcms.begin(), lcms.end());
    while (!work.empty()) {
        ExponentVector m = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            ExponentVector n = m;
            for (std::size_t i = 0; i < n.size(); ++i)
                n[i] = std::max(n[i], g[i]);
            if (lcms.insert(n).second) {
                if (lcms.size() + 1 > cap)
                    cap_exceeded(cap);
                work.push_back(std::move(n));
            }
        }
    }
    std::vector<AtomSet> family{AtomSet{}};
    for (const auto& m : lcms) {
        AtomSet s;
        for (int j = 0; j < mu; ++j)
            if (divides(gens[static_cast<std::size_t>(j)], m))
                s = s.with(static_cast<unsigned>(j));
        family.push_back(s);
    }
    return SetFamilyLattice::intersection_closure(mu, family, cap);
}

SetFamilyLattice lattice_from_hypergraph(const Hypergraph& h, std::size_t cap)
{
    if (h.vertices() != VertexSet::first_n(static_cast<unsigned>(h.num_vertices())))
        throw Error("not_compact", "vertex labels must be 1..mu; compact the hypergraph first");
    if (!is_separated(h))
        throw Error("not_separated", "the hypergraph is not separated");
    const AtomSet full = h.vertices();
    std::vector<AtomSet> complements;
    for (const Edge& e : h.edges())
        complements.push_back(full - e.members);
    return SetFamilyLattice::intersection_closure(h.num_vertices(), complements, cap);
}

bool is_meet_irreducible(const SetFamilyLattice& lattice, AtomSet x)
{
    if (!lattice.contains(x))
        throw Error("not_an_element", describe(x) + " is not a lattice element");
    return x == lattice.top() || lattice.upper_covers(x).size() == 1;
}

std::vector<AtomSet> meet_irreducibles(const SetFamilyLattice& lattice)
{
    std::vector<AtomSet> out;
    for (AtomSet x : lattice.elements())
        if (is_meet_irreducible(lattice, x))
            out.push_back(x);
    return out;
}

bool check_meet_irreducible_generation(const SetFamilyLattice& lattice)
{
    const auto mi = meet_irreducibles(lattice);
    for (AtomSet p : lattice.elements()) {
        if (p == lattice.top())
            continue;
        AtomSet m = lattice.top();
        for (AtomSet q : mi)
            if (p.subset_of(q))
                m &= q;
        if (m != p)
            return false;
    }
    return true;
}

std::vector<VertexSet> union_edge_elements(const Hypergraph& h)
{
    std::vector<VertexSet> out;
    for (const Edge& f : h.edges()) {
        VertexSet u;
        for (const Edge& e : h.edges())
            if (e.members.proper_subset_of(f.members))
                u |= e.members;
        if (u == f.members)
            out.push_back(f.members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExponentVector Labeling::label_of(AtomSet x) const
{
    ExponentVector e(variables.size(), 0);
    for (const auto& [element, label] : labels)
        if (element == x)
            for (std::size_t i = 0; i < label.size() && i < e.size(); ++i)
                e[i] += label[i];
    return e;
}

LabelingCheck check_labeling(const SetFamilyLattice& lattice, const Labeling& labeling)
{
    LabelingCheck check;
    for (const auto& [element, label] : labeling.labels)
        if (!lattice.contains(element))
            throw Error("not_an_element", describe(element) + " is not a lattice element");

    auto nontrivial = [](const ExponentVector& e) {
        return std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
    };
    for (AtomSet m : meet_irreducibles(lattice)) {
        if (m == lattice.top())
            continue;
        if (!nontrivial(labeling.label_of(m))) {
            check.c1 = false;
            check.unlabeled_meet_irreducible = m;
            break;
        }
    }

    std::map<AtomSet, ExponentVector> merged;
    for (const auto& [element, label] : labeling.labels)
        merged.emplace(element, labeling.label_of(element));
    for (auto a = merged.begin(); a != merged.end() && check.c2; ++a) {
        for (auto b = std::next(a); b != merged.end(); ++b) {
            bool shared = false;
            for (std::size_t i = 0; i < a->second.size(); ++i)
                if (a->second[i] && b->second[i])
                    shared = true;
            if (shared && !a->first.subset_of(b->first) && !b->first.subset_of(a->first)) {
                check.c2 = false;
                check.incomparable_pair = std::make_pair(a->first, b->first);
                break;
            }
        }
    }
    return check;
}

ExponentIdeal coordinatize(const SetFamilyLattice& lattice, const Labeling& labeling)
{
    LabelingCheck check = check_labeling(lattice, labeling);
    if (!check.c1)
        throw Error("labeling_c1", "meet-irreducible " + describe(*check.unlabeled_meet_irreducible) + " is unlabeled");
    if (!check.c2)
        throw Error("labeling_c2", "labels of " + describe(check.incomparable_pair->first) + " and " +
                                       describe(check.incomparable_pair->second) +
                                       " share a variable but the elements are incomparable");
    ExponentIdeal out{labeling.variables, {}};
    for (int j = 0; j < lattice.num_atoms(); ++j) {
        ExponentVector g(labeling.variables.size(), 0);
        for (const auto& [element, label] : labeling.labels) {
            if (element.contains(static_cast<unsigned>(j)))
                continue;
            for (std::size_t i = 0; i < label.size() && i < g.size(); ++i)
                g[i] += label[i];
        }
        out.generators.push_back(std::move(g));
    }
    return out;
}

HypergraphCoordinatization hypergraph_coordinatization(const Hypergraph& h)
{
    SetFamilyLattice lattice = lattice_from_hypergraph(h);
    MonomialIdeal ideal = ideal_from_hypergraph(h);
    Labeling labeling;
    labeling.variables = ideal.ring();
    const AtomSet full = h.vertices();
    for (std::size_t k = 0; k < h.edges().size(); ++k) {
        ExponentVector e(labeling.variables.size(), 0);
        e[k] = 1;
        labeling.labels.emplace_back(full - h.edges()[k].members, std::move(e));
    }
    ExponentIdeal coordinates = coordinatize(lattice, labeling);
    return {std::move(lattice), std::move(labeling), coordinates.to_square_free()};
}

} // namespace sqfpd
