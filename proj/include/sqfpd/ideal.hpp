#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sqfpd/bitset64.hpp"

namespace sqfpd {

/// Square-free exponent vector: bit i set iff variable i divides the monomial.
using VarSet = BitSet64;

inline constexpr std::size_t kMaxVariables = 64;

/// Ordered variable names of an ambient polynomial ring.
using Ring = std::vector<std::string>;
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// True for names matching [a-zA-Z][a-zA-Z0-9_]*.
bool is_variable_name(std::string_view name);

struct Variable {
    std::string name;
    std::size_t index = 0;
};

class Monomial {
public:
    Monomial(RingPtr ring, VarSet support);

    VarSet support() const { return support_; }
    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }

    std::string to_string() const;

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.support_ == b.support_ && *a.ring_ == *b.ring_;
    }

private:
    RingPtr ring_;
    VarSet support_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);

/// A square-free monomial ideal given by its minimal generators.
///
/// The generator order is the input order and fixes the vertex labels 1..mu
/// of the dual hypergraph. The unit ideal and the zero ideal are carried as
/// distinguished values (they arise from colon and generator removal).
class MonomialIdeal {
public:
    enum class Kind { proper, unit, zero };

    /// Minimalizes `generators` (keeping the first of any duplicates and
    /// dropping every generator divisible by another); each drop is recorded
    /// in `warnings()`.
    static MonomialIdeal from_supports(RingPtr ring, const std::vector<VarSet>& generators);
    static MonomialIdeal unit(RingPtr ring);
    static MonomialIdeal zero(RingPtr ring);

    Kind kind() const { return kind_; }
    bool is_unit() const { return kind_ == Kind::unit; }
    bool is_zero() const { return kind_ == Kind::zero; }

    const std::vector<VarSet>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    Monomial generator(std::size_t j) const { return Monomial(ring_, generators_.at(j)); }

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }

    const std::vector<std::string>& warnings() const { return warnings_; }
    bool dropped_generators() const { return !warnings_.empty(); }

    /// Looks up a ring variable by name; throws Error("unknown_variable").
    Variable variable(std::string_view name) const;

    /// Comma separated text form, e.g. "ab, bcg". Multi-character names are
    /// joined with '*'.
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.kind_ == b.kind_ && a.generators_ == b.generators_ && *a.ring_ == *b.ring_;
    }

private:
    MonomialIdeal(RingPtr ring, Kind kind) : ring_(std::move(ring)), kind_(kind) {}

    RingPtr ring_;
    Kind kind_ = Kind::proper;
    std::vector<VarSet> generators_;
    std::vector<std::string> warnings_;
};

/// Parses "ab, bcg, cdg". Single letters may be juxtaposed (digits and '_'
/// extend the preceding letter, so "x1x2" is x1*x2); longer names need '*'.
/// Variables are numbered by first appearance.
MonomialIdeal parse_ideal(std::string_view text);

/// The ideal I : v. Returns the unit ideal when v is itself a generator.
MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, const Variable& v);

/// The ideal (I, v), minimally generated by v and the generators v does not divide.
MonomialIdeal add_variable_generator(const MonomialIdeal& ideal, const Variable& v);

/// Removes generator j (1-based). Removing the last generator gives the zero ideal.
MonomialIdeal drop_generator(const MonomialIdeal& ideal, std::size_t j);

/// Exponent vector indexed by ring variable.
using ExponentVector = std::vector<unsigned>;

/// A monomial ideal with arbitrary exponents. Coordinatizations of a lattice
/// can produce these (a label may repeat along a chain).
struct ExponentIdeal {
    std::vector<std::string> variables;
    std::vector<ExponentVector> generators;

    bool is_square_free() const;
    /// Throws Error("non_square_free") if some exponent exceeds 1.
    MonomialIdeal to_square_free() const;
    std::string to_string() const;

    friend bool operator==(const ExponentIdeal&, const ExponentIdeal&) = default;
};

ExponentIdeal to_exponent_ideal(const MonomialIdeal& ideal);

/// Parses one monomial word with optional exponents ("a^2b", "x1*y^3"),
/// appending unseen names to `variables`. Returns the exponent vector sized to
/// `variables`.
ExponentVector parse_monomial(std::string_view word, std::vector<std::string>& variables);

std::string monomial_to_string(const ExponentVector& exponents, const std::vector<std::string>& variables);

} // namespace sqfpd
