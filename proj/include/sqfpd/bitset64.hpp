#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sqfpd {

/// A subset of {0, ..., 63} packed into one machine word.
///
/// Used for variable supports (bit i = variable i), hypergraph vertex sets
/// (bit v-1 = vertex label v) and lattice elements (bit j = atom j).
class BitSet64 {
public:
    constexpr BitSet64() = default;
    constexpr explicit BitSet64(std::uint64_t word) : word_(word) {}

    static constexpr BitSet64 singleton(unsigned i) { return BitSet64{std::uint64_t{1} << i}; }

    static constexpr BitSet64 first_n(unsigned n)
    {
        return n >= 64 ? BitSet64{~std::uint64_t{0}} : BitSet64{(std::uint64_t{1} << n) - 1};
    }

    static constexpr BitSet64 of(std::initializer_list<unsigned> bits)
    {
        BitSet64 s;
        for (unsigned b : bits)
            s.word_ |= std::uint64_t{1} << b;
        return s;
    }

    constexpr std::uint64_t word() const { return word_; }
    constexpr bool empty() const { return word_ == 0; }
    constexpr int size() const { return std::popcount(word_); }
    constexpr bool contains(unsigned i) const { return (word_ >> i) & 1U; }
    constexpr bool subset_of(BitSet64 other) const { return (word_ & ~other.word_) == 0; }
    constexpr bool proper_subset_of(BitSet64 other) const { return subset_of(other) && word_ != other.word_; }
    constexpr bool intersects(BitSet64 other) const { return (word_ & other.word_) != 0; }

    constexpr BitSet64 with(unsigned i) const { return BitSet64{word_ | (std::uint64_t{1} << i)}; }
    constexpr BitSet64 without(unsigned i) const { return BitSet64{word_ & ~(std::uint64_t{1} << i)}; }

    /// Index of the lowest set bit; undefined on the empty set.
    constexpr unsigned lowest() const { return static_cast<unsigned>(std::countr_zero(word_)); }
    constexpr unsigned highest() const { return 63U - static_cast<unsigned>(std::countl_zero(word_)); }

    template <class F>
    constexpr void for_each(F&& f) const
    {
        for (std::uint64_t w = word_; w != 0; w &= w - 1)
            f(static_cast<unsigned>(std::countr_zero(w)));
    }

    std::vector<unsigned> indices() const
    {
        std::vector<unsigned> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](unsigned i) { out.push_back(i); });
        return out;
    }

    friend constexpr BitSet64 operator|(BitSet64 a, BitSet64 b) { return BitSet64{a.word_ | b.word_}; }
    friend constexpr BitSet64 operator&(BitSet64 a, BitSet64 b) { return BitSet64{a.word_ & b.word_}; }
    friend constexpr BitSet64 operator-(BitSet64 a, BitSet64 b) { return BitSet64{a.word_ & ~b.word_}; }
    constexpr BitSet64& operator|=(BitSet64 b) { word_ |= b.word_; return *this; }
    constexpr BitSet64& operator&=(BitSet64 b) { word_ &= b.word_; return *this; }

    friend constexpr bool operator==(BitSet64, BitSet64) = default;
    friend constexpr auto operator<=>(BitSet64 a, BitSet64 b) { return a.word_ <=> b.word_; }

private:
    std::uint64_t word_ = 0;
};

struct BitSet64Hash {
    std::size_t operator()(BitSet64 s) const noexcept
    {
        std::uint64_t x = s.word() + 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

} // namespace sqfpd
