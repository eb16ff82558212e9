#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfpd/bitset64.hpp"
#include "sqfpd/hypergraph.hpp"
#include "sqfpd/ideal.hpp"

namespace sqfpd {

/// Lattice elements are sets of atoms; bit j stands for atom j+1, so atom
/// labels line up with generator indices and hypergraph vertex labels.
using AtomSet = BitSet64;

inline constexpr std::size_t kDefaultLatticeCap = std::size_t{1} << 18;

/// A finite atomic lattice stored as an intersection-closed family of atom
/// sets. Elements are kept sorted by bitmask.
class SetFamilyLattice {
public:
    SetFamilyLattice() = default;

    /// Validates the family (bottom, top, singletons, intersection closure).
    /// Throws Error("invalid_lattice") naming the first violation.
    static SetFamilyLattice from_family(int num_atoms, std::vector<AtomSet> family);

    /// Intersection closure of `generators` with the full set and the empty
    /// set adjoined. No atomicity check.
    static SetFamilyLattice intersection_closure(int num_atoms, const std::vector<AtomSet>& generators,
                                                 std::size_t cap = kDefaultLatticeCap);

    int num_atoms() const { return num_atoms_; }
    const std::vector<AtomSet>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    AtomSet top() const { return AtomSet::first_n(static_cast<unsigned>(num_atoms_)); }
    AtomSet bottom() const { return AtomSet{}; }

    bool contains(AtomSet x) const;
    std::optional<std::size_t> index_of(AtomSet x) const;

    AtomSet meet(AtomSet a, AtomSet b) const;
    /// Smallest member containing a | b.
    AtomSet join(AtomSet a, AtomSet b) const;
    /// All members containing x, in element order.
    std::vector<AtomSet> filter(AtomSet x) const;

    /// Smallest member containing s (s need not be a member).
    AtomSet closure(AtomSet s) const;

    std::vector<AtomSet> upper_covers(AtomSet x) const;
    std::vector<AtomSet> lower_covers(AtomSet x) const;
    /// Upper covers of every element, as indices into elements().
    std::vector<std::vector<std::size_t>> hasse() const;

    /// Literal equality of the families.
    friend bool operator==(const SetFamilyLattice& a, const SetFamilyLattice& b)
    {
        return a.num_atoms_ == b.num_atoms_ && a.elements_ == b.elements_;
    }

private:
    friend SetFamilyLattice lcm_lattice(const MonomialIdeal&, std::size_t);

    // Every element is an intersection of members of `meet_generators`.
    SetFamilyLattice(int num_atoms, std::vector<AtomSet> elements, std::vector<AtomSet> meet_generators);
    void require(AtomSet x) const;

    int num_atoms_ = 0;
    std::vector<AtomSet> elements_;
    std::vector<AtomSet> meet_generators_;
};

/// L_I: the support sets {j : m_j divides m} of all lcms m of generator
/// subsets, plus the empty set for the empty subset.
SetFamilyLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = kDefaultLatticeCap);
SetFamilyLattice lcm_lattice(const ExponentIdeal& ideal, std::size_t cap = kDefaultLatticeCap);

/// L_H: intersection closure of the edge complements, full set and empty set
/// adjoined. Vertex v becomes atom v. Throws Error("not_separated").
SetFamilyLattice lattice_from_hypergraph(const Hypergraph& h, std::size_t cap = kDefaultLatticeCap);

/// The top element is included (it is not a meet of strictly larger elements).
std::vector<AtomSet> meet_irreducibles(const SetFamilyLattice& lattice);
bool is_meet_irreducible(const SetFamilyLattice& lattice, AtomSet x);

/// Every element other than the top is the intersection of the
/// meet-irreducibles above it.
bool check_meet_irreducible_generation(const SetFamilyLattice& lattice);

/// Edges equal to the union of the edges properly contained in them.
std::vector<VertexSet> union_edge_elements(const Hypergraph& h);

/// Vertex labels of a hypergraph used as lattice atoms: vertex v is atom v.
inline AtomSet atoms_of(VertexSet s) { return s; }

/// Monomial labels on lattice elements; elements without an entry carry 1.
struct Labeling {
    std::vector<std::string> variables;
    std::vector<std::pair<AtomSet, ExponentVector>> labels;

    /// Label of `x` padded to the variable count (all zeros when unlabeled).
    ExponentVector label_of(AtomSet x) const;
};

struct LabelingCheck {
    bool c1 = true;   // every meet-irreducible except the top is labeled
    bool c2 = true;   // labels sharing a variable sit on comparable elements
    std::optional<AtomSet> unlabeled_meet_irreducible;
    std::optional<std::pair<AtomSet, AtomSet>> incomparable_pair;

    bool ok() const { return c1 && c2; }
};

LabelingCheck check_labeling(const SetFamilyLattice& lattice, const Labeling& labeling);

/// Generator of atom j is the product of the labels on elements not
/// containing j. Throws Error("labeling_c1") or Error("labeling_c2").
ExponentIdeal coordinatize(const SetFamilyLattice& lattice, const Labeling& labeling);

struct HypergraphCoordinatization {
    SetFamilyLattice lattice;
    Labeling labeling;
    MonomialIdeal ideal;
};

/// Labels the complement of each edge with that edge's variable.
HypergraphCoordinatization hypergraph_coordinatization(const Hypergraph& h);

} // namespace sqfpd
