#include "sqfpd/homology.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "sqfpd/error.hpp"

namespace sqfpd {

namespace {

struct FaceHash {
    std::size_t operator()(const SimplicialComplex::Face& f) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : f)
            h = (h ^ v) * 1099511628211ULL;
        return h;
    }
};

using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;   // (row, coefficient), row ascending

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1U)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// col -= factor * other
void axpy(SparseColumn& col, const SparseColumn& other, std::uint32_t factor, std::uint32_t p)
{
    SparseColumn out;
    out.reserve(col.size() + other.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
            out.push_back(col[i++]);
        } else if (i == col.size() || other[j].first < col[i].first) {
            std::uint64_t c = (p - static_cast<std::uint64_t>(factor) * other[j].second % p) % p;
            out.emplace_back(other[j].first, static_cast<std::uint32_t>(c));
            ++j;
        } else {
            std::uint64_t c = (col[i].second + p - static_cast<std::uint64_t>(factor) * other[j].second % p) % p;
            if (c)
                out.emplace_back(col[i].first, static_cast<std::uint32_t>(c));
            ++i;
            ++j;
        }
    }
    col.swap(out);
}

// Rank of a matrix given by sparse columns, by pivoting on the lowest row.
long long column_rank(std::vector<SparseColumn> columns, std::uint32_t p)
{
    std::unordered_map<std::uint32_t, std::size_t> pivot_owner;
    long long rank = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        SparseColumn& col = columns[c];
        while (!col.empty()) {
            auto [row, coeff] = col.back();
            auto it = pivot_owner.find(row);
            if (it == pivot_owner.end()) {
                pivot_owner.emplace(row, c);
                ++rank;
                break;
            }
            const SparseColumn& other = columns[it->second];
            std::uint32_t factor = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(coeff) * inverse_mod(other.back().second, p) % p);
            axpy(col, other, factor, p);
        }
    }
    return rank;
}

} // namespace

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void SimplicialComplex::add_face(Face face)
{
    if (face.empty())
        return;
    auto d = face.size() - 1;
    if (by_dim_.size() <= d)
        by_dim_.resize(d + 1);
    by_dim_[d].push_back(std::move(face));
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int d) const
{
    static const std::vector<Face> none;
    if (d < 0 || static_cast<std::size_t>(d) >= by_dim_.size())
        return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::num_faces() const
{
    std::size_t n = 1;
    for (const auto& fs : by_dim_)
        n += fs.size();
    return n;
}

long long SimplicialComplex::reduced_euler_characteristic() const
{
    long long chi = -1;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
    return chi;
}

void SimplicialComplex::check_closed() const
{
    for (std::size_t d = 1; d < by_dim_.size(); ++d) {
        std::unordered_map<Face, std::size_t, FaceHash> index;
        for (std::size_t i = 0; i < by_dim_[d - 1].size(); ++i)
            index.emplace(by_dim_[d - 1][i], i);
        for (const Face& f : by_dim_[d]) {
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!index.count(g))
                    throw Error("not_a_complex", "a boundary face of a " + std::to_string(d) + "-face is missing");
            }
        }
    }
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& k, std::uint32_t prime)
{
    if (!is_prime(prime))
        throw Error("invalid_characteristic", std::to_string(prime) + " is not prime");
    const int top = k.dimension();
    // boundary_rank[d + 1] = rank of the boundary map out of dimension d (d >= 0).
    std::vector<long long> boundary_rank(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d) {
        const auto& faces = k.faces(d);
        if (d == 0) {
            boundary_rank[1] = faces.empty() ? 0 : 1;
            continue;
        }
        std::unordered_map<SimplicialComplex::Face, std::uint32_t, FaceHash> index;
        const auto& lower = k.faces(d - 1);
        for (std::size_t i = 0; i < lower.size(); ++i)
            index.emplace(lower[i], static_cast<std::uint32_t>(i));
        std::vector<SparseColumn> columns;
        columns.reserve(faces.size());
        for (const auto& f : faces) {
            SparseColumn col;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                SimplicialComplex::Face g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
                auto it = index.find(g);
                if (it == index.end())
                    throw Error("not_a_complex", "a boundary face is missing");
                std::uint32_t sign = (drop % 2 == 0) ? 1U : prime - 1U;
                col.emplace_back(it->second, sign % prime);
            }
            std::sort(col.begin(), col.end());
            columns.push_back(std::move(col));
        }
        boundary_rank[static_cast<std::size_t>(d + 1)] = column_rank(std::move(columns), prime);
    }

    HomologyRanks out;
    long long alternating = 0;
    for (int d = -1; d <= top; ++d) {
        long long chain_dim = d == -1 ? 1 : static_cast<long long>(k.faces(d).size());
        long long out_rank = d == -1 ? 0 : boundary_rank[static_cast<std::size_t>(d + 1)];
        long long in_rank = boundary_rank[static_cast<std::size_t>(d + 2)];
        long long h = chain_dim - out_rank - in_rank;
        out.ranks.push_back(h);
        alternating += ((d + 1) % 2 == 0 ? -1 : 1) * h;
    }
    if (alternating != k.reduced_euler_characteristic())
        throw Error("euler_mismatch", "homology ranks disagree with the Euler characteristic");
    return out;
}

} // namespace sqfpd
