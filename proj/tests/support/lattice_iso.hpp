#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "sqfpd/lattice.hpp"

namespace sqfpd::testing {

inline AtomSet permute(AtomSet s, const std::vector<unsigned>& perm)
{
    AtomSet out;
    s.for_each([&](unsigned b) { out = out.with(perm[b]); });
    return out;
}

/// True when some bijection of atoms maps one family onto the other.
/// Backtracking over atom images; fine up to about 10 atoms.
inline bool isomorphic(const SetFamilyLattice& a, const SetFamilyLattice& b)
{
    if (a.num_atoms() != b.num_atoms() || a.size() != b.size())
        return false;
    const int n = a.num_atoms();
    auto profile = [](const SetFamilyLattice& l, unsigned atom) {
        std::multiset<int> sizes;
        for (AtomSet x : l.elements())
            if (x.contains(atom))
                sizes.insert(x.size());
        return sizes;
    };
    std::vector<unsigned> perm(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto consistent = [&](int placed) {
        AtomSet domain = AtomSet::first_n(static_cast<unsigned>(placed));
        AtomSet image;
        for (int j = 0; j < placed; ++j)
            image = image.with(perm[static_cast<std::size_t>(j)]);
        std::multiset<std::uint64_t> lhs, rhs;
        for (AtomSet x : a.elements())
            lhs.insert(permute(x & domain, perm).word());
        for (AtomSet y : b.elements())
            rhs.insert((y & image).word());
        return lhs == rhs;
    };
    auto search = [&](auto&& self, int j) -> bool {
        if (j == n) {
            for (AtomSet x : a.elements())
                if (!b.contains(permute(x, perm)))
                    return false;
            return true;
        }
        auto want = profile(a, static_cast<unsigned>(j));
        for (unsigned t = 0; t < static_cast<unsigned>(n); ++t) {
            if (used[t] || profile(b, t) != want)
                continue;
            used[t] = true;
            perm[static_cast<std::size_t>(j)] = t;
            if (consistent(j + 1) && self(self, j + 1))
                return true;
            used[t] = false;
        }
        return false;
    };
    return search(search, 0);
}

} // namespace sqfpd::testing
