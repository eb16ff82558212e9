#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "sqfpd/homology.hpp"
#include "sqfpd/hypergraph.hpp"
#include "sqfpd/ideal.hpp"
#include "sqfpd/lattice.hpp"

namespace sqfpd {

/// Which complex stands in for the open interval (0, p).
///   order     chains of elements strictly between 0 and p
///   crosscut  sets of lower covers of p with non-empty common intersection
/// Both have the same homotopy type; crosscut is much smaller.
enum class IntervalModel { crosscut, order };

inline constexpr std::size_t kDefaultChainCap = 10'000'000;

struct OracleOptions {
    std::uint32_t field_char = 2;
    IntervalModel model = IntervalModel::crosscut;
    std::size_t lattice_cap = kDefaultLatticeCap;
    std::size_t chain_cap = kDefaultChainCap;
};

/// Order complex of the open interval (0, p); vertices index `lattice.elements()`.
SimplicialComplex order_complex(const SetFamilyLattice& lattice, AtomSet p, std::size_t chain_cap = kDefaultChainCap);
/// Crosscut complex on the lower covers of p.
SimplicialComplex crosscut_complex(const SetFamilyLattice& lattice, AtomSet p, std::size_t face_cap = kDefaultChainCap);

struct BettiTable {
    std::uint32_t field_char = 2;
    /// (homological degree, lattice element) -> beta, non-zero entries only.
    std::map<std::pair<int, AtomSet>, long long> entries;
    std::map<int, long long> totals;
    /// Intervals whose homology passed the Euler characteristic check.
    std::size_t intervals_checked = 0;

    int pd() const;
    long long total(int i) const;
};

BettiTable betti_table(const SetFamilyLattice& lattice, const OracleOptions& options = {});
BettiTable betti_table(const MonomialIdeal& ideal, const OracleOptions& options = {});
/// Separated hypergraphs use L_H directly; others go through the ideal of H,
/// which minimalizes the generators.
BettiTable betti_table(const Hypergraph& h, const OracleOptions& options = {});

int oracle_pd(const MonomialIdeal& ideal, const OracleOptions& options = {});
int oracle_pd(const Hypergraph& h, const OracleOptions& options = {});

} // namespace sqfpd
