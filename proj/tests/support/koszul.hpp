#pragma once

#include <map>

#include "sqfpd/ideal.hpp"

namespace sqfpd::testing {

/// Total Betti numbers of R/I over GF(2) from upper Koszul simplicial
/// complexes K^b = {t subset of b : x^(b - t) in I}, one per lcm b, with
/// beta_{i,b}(R/I) = rank of reduced H_{i-2}(K^b). Shares no code with the
/// lattice oracle; ranks come from dense elimination.
std::map<int, long long> koszul_betti_totals(const MonomialIdeal& ideal);

int koszul_pd(const MonomialIdeal& ideal);

} // namespace sqfpd::testing
