#include "koszul.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace sqfpd::testing {

namespace {

using Row = std::vector<std::uint64_t>;

long long gf2_rank(std::vector<Row> rows)
{
    long long rank = 0;
    if (rows.empty())
        return 0;
    const std::size_t words = rows.front().size();
    for (std::size_t col = 0; col < words * 64; ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const Row& r) { return r[w] & bit; });
        if (pivot == rows.end())
            continue;
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r][w] & bit))
                for (std::size_t k = 0; k < words; ++k)
                    rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

// Reduced homology ranks of a complex given as a set of faces (bitmasks over
// at most 64 vertices, the empty face included). Index d+1 holds H_d.
std::vector<long long> reduced_ranks(const std::vector<std::uint64_t>& faces)
{
    int top = -1;
    for (auto f : faces)
        top = std::max(top, static_cast<int>(__builtin_popcountll(f)) - 1);
    std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(top + 2));
    for (auto f : faces)
        by_dim[static_cast<std::size_t>(__builtin_popcountll(f))].push_back(f);
    // boundary rank from dimension d (stored at d+1) to d-1
    std::vector<long long> brank(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d) {
        const auto& lower = by_dim[static_cast<std::size_t>(d)];
        const auto& upper = by_dim[static_cast<std::size_t>(d + 1)];
        std::vector<Row> rows;
        const std::size_t words = (lower.size() + 63) / 64 + 1;
        for (auto f : upper) {
            Row r(words, 0);
            for (std::uint64_t rest = f; rest; rest &= rest - 1) {
                std::uint64_t g = f & ~(rest & -rest);
                auto pos = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), g) - lower.begin());
                r[pos / 64] |= std::uint64_t{1} << (pos % 64);
            }
            rows.push_back(std::move(r));
        }
        brank[static_cast<std::size_t>(d + 1)] = gf2_rank(std::move(rows));
    }
    std::vector<long long> out;
    for (int d = -1; d <= top; ++d) {
        long long dim = static_cast<long long>(by_dim[static_cast<std::size_t>(d + 1)].size());
        long long h = dim - brank[static_cast<std::size_t>(d + 1)] - brank[static_cast<std::size_t>(d + 2)];
        out.push_back(h);
    }
    return out;
}

} // namespace

std::map<int, long long> koszul_betti_totals(const MonomialIdeal& ideal)
{
    std::map<int, long long> totals{{0, 1}};
    const auto& gens = ideal.generators();
    std::set<std::uint64_t> lcms;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << gens.size()); ++s) {
        std::uint64_t m = 0;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (s >> j & 1U)
                m |= gens[j].word();
        lcms.insert(m);
    }
    auto in_ideal = [&](std::uint64_t m) {
        return std::any_of(gens.begin(), gens.end(), [&](VarSet g) { return (g.word() & ~m) == 0; });
    };
    for (std::uint64_t b : lcms) {
        // Faces are subsets t of b, re-indexed onto the bits of b.
        std::vector<unsigned> vars;
        for (unsigned i = 0; i < 64; ++i)
            if (b >> i & 1U)
                vars.push_back(i);
        std::vector<std::uint64_t> faces;
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << vars.size()); ++t) {
            std::uint64_t tau = 0;
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (t >> k & 1U)
                    tau |= std::uint64_t{1} << vars[k];
            if (in_ideal(b & ~tau))
                faces.push_back(t);
        }
        std::sort(faces.begin(), faces.end());
        auto ranks = reduced_ranks(faces);
        for (std::size_t d = 0; d < ranks.size(); ++d)
            if (ranks[d])
                totals[static_cast<int>(d) + 1] += ranks[d];
    }
    return totals;
}

int koszul_pd(const MonomialIdeal& ideal)
{
    int best = 0;
    for (const auto& [i, t] : koszul_betti_totals(ideal))
        if (t > 0)
            best = std::max(best, i);
    return best;
}

} // namespace sqfpd::testing
