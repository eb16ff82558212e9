#include "sqfpd/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sqfpd/error.hpp"

namespace sqfpd {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Names that survive juxtaposition: one letter followed by digits/underscores.
bool is_short_name(const std::string& name)
{
    if (name.empty() || !is_letter(name[0]))
        return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) { return is_digit(c) || c == '_'; });
}

std::size_t intern(std::vector<std::string>& variables, const std::string& name)
{
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it != variables.end())
        return static_cast<std::size_t>(it - variables.begin());
    variables.push_back(name);
    return variables.size() - 1;
}

struct Factor {
    std::size_t variable;
    unsigned exponent;
    std::size_t position;
};

// Parses an optional "^k" suffix starting at `pos`; advances `pos`.
unsigned parse_exponent(std::string_view text, std::size_t& pos, std::size_t offset)
{
    if (pos >= text.size() || text[pos] != '^')
        return 1;
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos]))
        ++pos;
    if (start == pos)
        throw ParseError("syntax", "expected exponent after '^'", offset + start);
    unsigned long value = std::stoul(std::string(text.substr(start, pos - start)));
    if (value == 0)
        throw ParseError("syntax", "zero exponent", offset + start);
    return static_cast<unsigned>(std::min<unsigned long>(value, 1U << 30));
}

// `word` is already trimmed; `offset` is its position in the original text.
std::vector<Factor> parse_word(std::string_view word, std::size_t offset, std::vector<std::string>& variables)
{
    std::vector<Factor> factors;
    if (word.empty())
        throw ParseError("syntax", "empty monomial", offset);

    if (word.find('*') != std::string_view::npos) {
        std::size_t pos = 0;
        while (true) {
            std::size_t end = word.find('*', pos);
            std::string_view piece = word.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
            std::size_t lead = 0;
            while (lead < piece.size() && is_space(piece[lead]))
                ++lead;
            std::size_t p = lead;
            if (p >= piece.size() || !is_letter(piece[p]))
                throw ParseError("syntax", "expected variable name", offset + pos + p);
            std::size_t name_start = p;
            while (p < piece.size() && (is_letter(piece[p]) || is_digit(piece[p]) || piece[p] == '_'))
                ++p;
            std::string name(piece.substr(name_start, p - name_start));
            unsigned e = parse_exponent(piece, p, offset + pos);
            while (p < piece.size() && is_space(piece[p]))
                ++p;
            if (p != piece.size())
                throw ParseError("syntax", "unexpected character '" + std::string(1, piece[p]) + "'", offset + pos + p);
            factors.push_back({intern(variables, name), e, offset + pos + name_start});
            if (end == std::string_view::npos)
                break;
            pos = end + 1;
        }
        return factors;
    }

    std::size_t p = 0;
    while (p < word.size()) {
        if (!is_letter(word[p]))
            throw ParseError("syntax", "unexpected character '" + std::string(1, word[p]) + "'", offset + p);
        std::size_t name_start = p++;
        while (p < word.size() && (is_digit(word[p]) || word[p] == '_'))
            ++p;
        std::string name(word.substr(name_start, p - name_start));
        unsigned e = parse_exponent(word, p, offset);
        factors.push_back({intern(variables, name), e, offset + name_start});
    }
    return factors;
}

std::string_view trim(std::string_view s, std::size_t& offset)
{
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b]))
        ++b;
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1]))
        --e;
    offset += b;
    return s.substr(b, e - b);
}

void require_same_ring(const Ring& a, const Ring& b)
{
    if (a != b)
        throw Error("ring_mismatch", "monomials live in different rings");
}

void require_variable(const MonomialIdeal& ideal, const Variable& v)
{
    if (v.index >= ideal.ring().size() || ideal.ring()[v.index] != v.name)
        throw Error("ring_mismatch", "variable '" + v.name + "' is not a variable of the ring");
}

} // namespace

RingPtr make_ring(std::vector<std::string> names)
{
    if (names.size() > kMaxVariables)
        throw Error("capacity", "rings are limited to " + std::to_string(kMaxVariables) + " variables");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_variable_name(names[i]))
            throw Error("syntax", "invalid variable name '" + names[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names[i] == names[j])
                throw Error("syntax", "duplicate variable name '" + names[i] + "'");
    }
    return std::make_shared<const Ring>(std::move(names));
}

bool is_variable_name(std::string_view name)
{
    if (name.empty() || !is_letter(name[0]))
        return false;
    return std::all_of(name.begin() + 1, name.end(),
                       [](char c) { return is_letter(c) || is_digit(c) || c == '_'; });
}

Monomial::Monomial(RingPtr ring, VarSet support) : ring_(std::move(ring)), support_(support)
{
    if (!support_.subset_of(VarSet::first_n(static_cast<unsigned>(ring_->size()))))
        throw Error("ring_mismatch", "monomial support exceeds the ring");
}

std::string Monomial::to_string() const
{
    ExponentVector e(ring_->size(), 0);
    support_.for_each([&](unsigned i) { e[i] = 1; });
    return monomial_to_string(e, *ring_);
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    require_same_ring(a.ring(), b.ring());
    return Monomial(a.ring_ptr(), a.support() | b.support());
}

bool divides(const Monomial& a, const Monomial& b)
{
    require_same_ring(a.ring(), b.ring());
    return a.support().subset_of(b.support());
}

MonomialIdeal MonomialIdeal::from_supports(RingPtr ring, const std::vector<VarSet>& generators)
{
    MonomialIdeal ideal(std::move(ring), Kind::proper);
    const VarSet universe = VarSet::first_n(static_cast<unsigned>(ideal.ring_->size()));
    for (std::size_t j = 0; j < generators.size(); ++j) {
        VarSet g = generators[j];
        if (!g.subset_of(universe))
            throw Error("ring_mismatch", "generator support exceeds the ring");
        if (g.empty())
            return unit(ideal.ring_);
        bool redundant = false;
        for (std::size_t k = 0; k < generators.size() && !redundant; ++k) {
            if (k == j)
                continue;
            VarSet h = generators[k];
            // Strict divisors always win; among equal generators the first is kept.
            if (h.proper_subset_of(g) || (h == g && k < j))
                redundant = true;
        }
        if (redundant) {
            ideal.warnings_.push_back("dropped non-minimal generator " + Monomial(ideal.ring_, g).to_string());
            continue;
        }
        ideal.generators_.push_back(g);
    }
    if (ideal.generators_.empty())
        return zero(ideal.ring_);
    return ideal;
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) { return MonomialIdeal(std::move(ring), Kind::unit); }
MonomialIdeal MonomialIdeal::zero(RingPtr ring) { return MonomialIdeal(std::move(ring), Kind::zero); }

Variable MonomialIdeal::variable(std::string_view name) const
{
    for (std::size_t i = 0; i < ring_->size(); ++i)
        if ((*ring_)[i] == name)
            return {(*ring_)[i], i};
    throw Error("unknown_variable", "no variable named '" + std::string(name) + "'");
}

std::string MonomialIdeal::to_string() const
{
    switch (kind_) {
    case Kind::unit:
        return "(1)";
    case Kind::zero:
        return "(0)";
    case Kind::proper:
        break;
    }
    std::string out;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
        if (j)
            out += ", ";
        out += generator(j).to_string();
    }
    return out;
}

MonomialIdeal parse_ideal(std::string_view text)
{
    std::vector<std::string> variables;
    std::vector<std::vector<Factor>> words;

    std::size_t total_offset = 0;
    {
        std::size_t off = 0;
        if (trim(text, off).empty())
            throw Error("empty_ideal", "no generators given");
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find(',', pos);
        std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        total_offset = pos;
        std::string_view word = trim(raw, total_offset);
        words.push_back(parse_word(word, total_offset, variables));
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }

    if (variables.size() > kMaxVariables)
        throw Error("capacity", "rings are limited to " + std::to_string(kMaxVariables) + " variables");

    // The ring is ordered by variable name.
    std::vector<std::string> sorted = variables;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> rank(variables.size());
    for (std::size_t i = 0; i < variables.size(); ++i)
        rank[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), variables[i]) - sorted.begin());

    std::vector<VarSet> supports;
    for (const auto& factors : words) {
        VarSet support;
        for (const Factor& f : factors) {
            auto bit = static_cast<unsigned>(rank[f.variable]);
            if (f.exponent > 1 || support.contains(bit))
                throw ParseError("non_square_free", "exponent >= 2 on '" + variables[f.variable] + "'", f.position);
            support = support.with(bit);
        }
        supports.push_back(support);
    }
    return MonomialIdeal::from_supports(make_ring(std::move(sorted)), supports);
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, const Variable& v)
{
    require_variable(ideal, v);
    if (ideal.kind() != MonomialIdeal::Kind::proper)
        return ideal;
    std::vector<VarSet> gens;
    for (VarSet g : ideal.generators()) {
        VarSet reduced = g.without(static_cast<unsigned>(v.index));
        if (reduced.empty())
            return MonomialIdeal::unit(ideal.ring_ptr());
        gens.push_back(reduced);
    }
    return MonomialIdeal::from_supports(ideal.ring_ptr(), gens);
}

MonomialIdeal add_variable_generator(const MonomialIdeal& ideal, const Variable& v)
{
    require_variable(ideal, v);
    if (ideal.is_unit())
        return ideal;
    std::vector<VarSet> gens{VarSet::singleton(static_cast<unsigned>(v.index))};
    for (VarSet g : ideal.generators())
        if (!g.contains(static_cast<unsigned>(v.index)))
            gens.push_back(g);
    return MonomialIdeal::from_supports(ideal.ring_ptr(), gens);
}

MonomialIdeal drop_generator(const MonomialIdeal& ideal, std::size_t j)
{
    if (j < 1 || j > ideal.size())
        throw Error("out_of_range", "generator index " + std::to_string(j) + " out of range 1.." +
                                        std::to_string(ideal.size()));
    std::vector<VarSet> gens = ideal.generators();
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(j - 1));
    if (gens.empty())
        return MonomialIdeal::zero(ideal.ring_ptr());
    return MonomialIdeal::from_supports(ideal.ring_ptr(), gens);
}

bool ExponentIdeal::is_square_free() const
{
    for (const auto& g : generators)
        for (unsigned e : g)
            if (e > 1)
                return false;
    return true;
}

MonomialIdeal ExponentIdeal::to_square_free() const
{
    if (!is_square_free())
        throw Error("non_square_free", "ideal has exponents >= 2");
    std::vector<VarSet> supports;
    for (const auto& g : generators) {
        VarSet s;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i])
                s = s.with(static_cast<unsigned>(i));
        supports.push_back(s);
    }
    return MonomialIdeal::from_supports(make_ring(variables), supports);
}

std::string ExponentIdeal::to_string() const
{
    std::string out;
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (j)
            out += ", ";
        out += monomial_to_string(generators[j], variables);
    }
    return out;
}

ExponentIdeal to_exponent_ideal(const MonomialIdeal& ideal)
{
    ExponentIdeal out{ideal.ring(), {}};
    for (VarSet g : ideal.generators()) {
        ExponentVector e(ideal.ring().size(), 0);
        g.for_each([&](unsigned i) { e[i] = 1; });
        out.generators.push_back(std::move(e));
    }
    return out;
}

ExponentVector parse_monomial(std::string_view word, std::vector<std::string>& variables)
{
    std::size_t offset = 0;
    std::string_view trimmed = trim(word, offset);
    if (trimmed == "1")
        return ExponentVector(variables.size(), 0);
    auto factors = parse_word(trimmed, offset, variables);
    ExponentVector e(variables.size(), 0);
    for (const Factor& f : factors)
        e[f.variable] += f.exponent;
    return e;
}

std::string monomial_to_string(const ExponentVector& exponents, const std::vector<std::string>& variables)
{
    bool juxtapose = true;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] && !is_short_name(variables.at(i)))
            juxtapose = false;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (!exponents[i])
            continue;
        if (!first && !juxtapose)
            os << '*';
        os << variables[i];
        if (exponents[i] > 1)
            os << '^' << exponents[i];
        first = false;
    }
    if (first)
        return "1";
    return os.str();
}

} // namespace sqfpd
