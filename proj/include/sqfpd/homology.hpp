#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sqfpd {

/// A simplicial complex given by its faces, grouped by dimension. Faces are
/// sorted vertex-id lists; the empty face is always present (dimension -1).
class SimplicialComplex {
public:
    using Face = std::vector<std::uint32_t>;

    SimplicialComplex() = default;

    /// Adds a face without its subfaces; callers enumerate downward-closed
    /// families (chains, crosscut subsets). Face must be sorted.
    void add_face(Face face);

    /// Faces of dimension d (d >= 0).
    const std::vector<Face>& faces(int d) const;
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t num_faces() const;

    /// Euler characteristic counting the empty face: sum (-1)^d f_d, d >= -1.
    long long reduced_euler_characteristic() const;

    /// Throws Error("not_a_complex") if some boundary face is missing.
    void check_closed() const;

private:
    std::vector<std::vector<Face>> by_dim_;
};

struct HomologyRanks {
    /// ranks[d + 1] = rank of reduced H_d, for d = -1 .. dim.
    std::vector<long long> ranks;

    long long at(int d) const
    {
        auto i = static_cast<std::size_t>(d + 1);
        return d >= -1 && i < ranks.size() ? ranks[i] : 0;
    }
};

/// Reduced homology over GF(p) by sparse column reduction of the boundary
/// maps. Asserts that the alternating sum of ranks equals the reduced Euler
/// characteristic and throws Error("euler_mismatch") otherwise.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& k, std::uint32_t prime = 2);

bool is_prime(std::uint32_t p);

} // namespace sqfpd
