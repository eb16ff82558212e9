#include <doctest.h>

#include "sqfpd/error.hpp"
#include "sqfpd/ideal.hpp"
#include "support/random.hpp"

using namespace sqfpd;

TEST_CASE("parse_ideal reads juxtaposed letters into a name-sorted ring")
{
    auto I = parse_ideal("ab, bcg, cdg, de, efg");
    CHECK(I.size() == 5);
    CHECK(I.ring() == Ring{"a", "b", "c", "d", "e", "f", "g"});
    CHECK(I.to_string() == "ab, bcg, cdg, de, efg");
    CHECK_FALSE(I.dropped_generators());

    auto X = parse_ideal("x");
    CHECK(X.size() == 1);
    CHECK(X.ring() == Ring{"x"});
}

TEST_CASE("parse_ideal drops non-minimal generators with a warning")
{
    auto I = parse_ideal("ab, abc");
    CHECK(I.size() == 1);
    CHECK(I.generator(0).to_string() == "ab");
    CHECK(I.dropped_generators());

    auto dup = parse_ideal("ab, ba");
    CHECK(dup.size() == 1);
    CHECK(dup.dropped_generators());
}

TEST_CASE("parse_ideal handles long names and digits")
{
    auto I = parse_ideal("x1x2, x2*y_long");
    CHECK(I.ring() == Ring{"x1", "x2", "y_long"});
    CHECK(I.to_string() == "x1x2, x2*y_long");
    CHECK(parse_ideal(I.to_string()) == I);
}

TEST_CASE("parse_ideal errors")
{
    CHECK_THROWS_AS(parse_ideal(""), Error);
    try {
        parse_ideal("ab, a^2c");
        FAIL("expected a non-square-free error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == "non_square_free");
    }
    try {
        parse_ideal("ab, , cd");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == "syntax");
        CHECK(e.position() == 4);
    }
    try {
        parse_ideal("ab, c#d");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == "syntax");
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_ideal("aa"), ParseError);
}

TEST_CASE("lcm and divides")
{
    auto I = parse_ideal("ab, bcg, de");
    auto ab = I.generator(0), bcg = I.generator(1), de = I.generator(2);
    CHECK(lcm(ab, bcg).to_string() == "abcg");
    CHECK(lcm(ab, ab) == ab);
    CHECK(lcm(ab, de).support().size() == 4);
    CHECK(divides(ab, lcm(ab, bcg)));
    CHECK_FALSE(divides(lcm(ab, bcg), ab));
    CHECK(divides(de, lcm(ab, de)));

    auto other = parse_ideal("ab");
    CHECK_THROWS_AS(lcm(ab, other.generator(0)), Error);
    CHECK_THROWS_AS(divides(ab, other.generator(0)), Error);
}

TEST_CASE("colon by a variable")
{
    auto I = parse_ideal("ab, bcg, cdg, de, efg");
    auto J = colon_by_variable(I, I.variable("g"));
    CHECK(J.to_string() == "ab, bc, cd, de, ef");
    CHECK(colon_by_variable(J, I.variable("g")) == J);

    auto K = parse_ideal("ab, c");
    auto same = colon_by_variable(drop_generator(K, 2), K.variable("c"));
    CHECK(same.to_string() == "ab");

    auto X = parse_ideal("x");
    CHECK(colon_by_variable(X, X.variable("x")).is_unit());
    CHECK_THROWS_AS(I.variable("z"), Error);
}

TEST_CASE("adjoining a variable generator")
{
    auto I = parse_ideal("ab, bcg, cdg, de, efg");
    CHECK(add_variable_generator(I, I.variable("g")).to_string() == "g, ab, de");

    auto A = parse_ideal("ab, c");
    CHECK(add_variable_generator(drop_generator(A, 2), A.variable("c")).to_string() == "c, ab");

    auto B = parse_ideal("ab, cd");
    CHECK(add_variable_generator(B, B.variable("a")).to_string() == "a, cd");
}

TEST_CASE("dropping a generator")
{
    auto I = parse_ideal("ab, bcg, cdg, de, efg");
    CHECK(drop_generator(I, 3).to_string() == "ab, bcg, de, efg");
    CHECK(drop_generator(parse_ideal("x"), 1).is_zero());
    CHECK(drop_generator(parse_ideal("ab, cd"), 2).to_string() == "ab");
    CHECK_THROWS_AS(drop_generator(I, 0), Error);
    CHECK_THROWS_AS(drop_generator(I, 6), Error);
}

TEST_CASE("exponent monomials")
{
    std::vector<std::string> vars;
    auto e = parse_monomial("a^2c", vars);
    CHECK(vars == std::vector<std::string>{"a", "c"});
    CHECK(e == ExponentVector{2, 1});
    CHECK(monomial_to_string(e, vars) == "a^2c");
    CHECK(parse_monomial("1", vars) == ExponentVector{0, 0});

    ExponentIdeal sq{{"a", "b"}, {{1, 0}, {0, 1}}};
    CHECK(sq.is_square_free());
    CHECK(sq.to_square_free().to_string() == "a, b");
    ExponentIdeal not_sq{{"a"}, {{2}}};
    CHECK_THROWS_AS(not_sq.to_square_free(), Error);
}

TEST_CASE("lcm is associative, commutative and idempotent on random triples")
{
    testing::Rng rng(11);
    auto ring = testing::letters_ring(8);
    for (int trial = 0; trial < 500; ++trial) {
        auto pick = [&] { return Monomial(ring, VarSet{rng() & 0xFF}); };
        auto a = pick(), b = pick(), c = pick();
        CHECK(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
        CHECK(lcm(a, b) == lcm(b, a));
        CHECK(lcm(a, a) == a);
    }
}

TEST_CASE("random ideals are minimal, round-trip through text, and colon is idempotent")
{
    testing::Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        auto I = testing::random_minimal_ideal(rng, 7, 8);
        const auto& g = I.generators();
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k)
                if (j != k)
                    CHECK_FALSE(g[j].subset_of(g[k]));

        // Unused ring variables vanish in text form, so compare text.
        auto again = parse_ideal(I.to_string());
        CHECK(again.to_string() == I.to_string());
        CHECK(parse_ideal(again.to_string()) == again);

        Variable v = I.variable(I.ring()[0]);
        auto once = colon_by_variable(I, v);
        if (!once.is_unit())
            CHECK(colon_by_variable(once, v) == once);
    }
}
