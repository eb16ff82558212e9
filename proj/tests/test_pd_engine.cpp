#include <doctest.h>

#include "sqfpd/error.hpp"
#include "sqfpd/io.hpp"
#include "sqfpd/lattice.hpp"
#include "sqfpd/pd_engine.hpp"
#include "support/fixtures.hpp"
#include "support/koszul.hpp"
#include "support/random.hpp"
#include "support/shapes.hpp"

using namespace sqfpd;

TEST_CASE("closed forms")
{
    CHECK(pd_open_string(1) == 1);
    CHECK(pd_open_string(3) == 2);
    CHECK(pd_open_string(5) == 4);
    CHECK(pd_open_string(9) == 6);
    CHECK_THROWS_AS(pd_open_string(0), Error);
    CHECK(pd_closed_isolated(27) == 27);
    CHECK(pd_closed_isolated(0) == 0);
    CHECK(pd_closed_isolated(1) == 1);
    CHECK_THROWS_AS(pd_closed_isolated(-1), Error);
    CHECK(pd_two_star(testing::two_star({1, 1, 1})) == 3);
    CHECK_THROWS_AS(pd_two_star(testing::string_hypergraph(4)), Error);
}

TEST_CASE("string formula matches the oracle")
{
    for (int mu = 1; mu <= 9; ++mu) {
        Hypergraph s = testing::string_hypergraph(mu);
        CHECK(oracle_pd(s) == pd_open_string(mu));
        if (mu >= 2)
            CHECK(is_open_string(s));
    }
    CHECK_FALSE(is_open_string(Hypergraph(3, {{1, 2}, {2, 3}, {1}, {2}, {3}})));
    CHECK_FALSE(is_open_string(Hypergraph(3, {{1, 2}, {2, 3}, {1}, {3}, {1, 2, 3}})));
}

TEST_CASE("2-star recognition and formula")
{
    Hypergraph star = testing::two_star({1, 1, 1});
    CHECK(is_two_star(star));
    CHECK(oracle_pd(star) == 3);

    Hypergraph with_edge = testing::two_star({2, 2, 1});
    with_edge.add_edge(vertex_set({2, 4, 6}));
    CHECK(is_two_star(with_edge));
    CHECK(oracle_pd(with_edge) == with_edge.num_vertices() - 1);

    Hypergraph closed_joint = star;
    closed_joint.add_edge(vertex_bit(1));
    CHECK_FALSE(is_two_star(closed_joint));
    CHECK_FALSE(is_two_star(testing::string_hypergraph(4)));

    Hypergraph union_edge = star;
    union_edge.add_edge(vertex_set({1, 2, 3}));
    CHECK_FALSE(is_two_star(union_edge));
}

TEST_CASE("2-star formula against the oracle")
{
    for (int deg = 3; deg <= 6; ++deg)
        for (int twos = 0; twos <= deg; ++twos) {
            std::vector<int> lengths(static_cast<std::size_t>(deg - twos), 1);
            lengths.insert(lengths.end(), static_cast<std::size_t>(twos), 2);
            Hypergraph h = testing::two_star(lengths);
            if (h.num_vertices() > 9)
                continue;
            CHECK(oracle_pd(h) == h.num_vertices() - 1);
        }
}

TEST_CASE("pipeline on small inputs")
{
    PdResult x = pd(parse_ideal("x"));
    CHECK(x.pd == 1);
    CHECK(x.method == PdMethod::formula_closed_isolated);

    PdResult ex = pd(parse_ideal("ab, bcg, cdg, de, efg"));
    CHECK(ex.pd == 4);
    CHECK(ex.method == PdMethod::formula_open_string);
    CHECK(ex.pd == oracle_pd(parse_ideal("ab, bcg, cdg, de, efg")));

    PdOptions verify;
    verify.verify = true;
    PdResult v = pd(parse_ideal("ab, bcg, cdg, de, efg"), verify);
    REQUIRE(v.per_component.size() == 1);
    CHECK(v.per_component[0].oracle_pd == 4);

    CHECK_THROWS_AS(pd(MonomialIdeal::unit(testing::letters_ring(1))), Error);
    CHECK(pd(MonomialIdeal::zero(testing::letters_ring(1))).pd == 0);
}

TEST_CASE("pipeline agrees with the oracle on random ideals")
{
    testing::Rng rng(77);
    PdOptions verify;
    verify.verify = true;
    for (int trial = 0; trial < 200; ++trial) {
        auto I = testing::random_minimal_ideal(rng, 8, 8);
        if (I.is_zero() || I.is_unit())
            continue;
        PdResult r = pd(I, verify);
        CHECK(r.pd == oracle_pd(I));
        CHECK(r.pd == testing::koszul_pd(I));
        int sum = 0;
        for (const ComponentPd& c : r.per_component)
            sum += c.pd;
        CHECK(sum == r.pd);
        CHECK(replay(dual_hypergraph(I), r.trace) == r.reduced);
    }
}

TEST_CASE("pipeline agrees with the oracle on random bushes")
{
    testing::Rng rng(78);
    PdOptions verify;
    verify.verify = true;
    for (int trial = 0; trial < 150; ++trial) {
        Hypergraph h = testing::random_closed_leaf_tree(rng, 10);
        PdResult r = pd(h, verify);
        CHECK(r.pd == oracle_pd(h));
    }
}

TEST_CASE("additivity")
{
    testing::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int a = testing::uniform(rng, 1, 5);
        int b = testing::uniform(rng, 1, 5);
        Hypergraph g1 = testing::random_separated_hypergraph(rng, a, 3);
        Hypergraph g2 = testing::random_separated_hypergraph(rng, b, 3);
        Hypergraph shifted(VertexSet{});
        VertexSet vs;
        for (int v : labels_of(g2.vertices()))
            vs |= vertex_bit(v + a);
        shifted = Hypergraph(vs);
        for (const Edge& e : g2.edges())
            shifted.add_edge(VertexSet(e.members.word() << a));
        Hypergraph u = disjoint_union({g1, shifted});
        CHECK(oracle_pd(u) == oracle_pd(g1) + oracle_pd(g2));
        CHECK(pd(u).pd == oracle_pd(u));
    }
}

TEST_CASE("monotonicity")
{
    Hypergraph h = dual_hypergraph(parse_ideal("ab, bcg, cdg, de, efg"));
    CHECK(pd_monotonicity_check(skeleton(h, 1), h));
    CHECK(pd_monotonicity_check(h, h));
    CHECK_THROWS_AS(pd_monotonicity_check(h, skeleton(h, 1)), Error);
    CHECK_THROWS_AS(pd_monotonicity_check(Hypergraph(1, {{1}}), h), Error);

    testing::Rng rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        Hypergraph big = testing::random_separated_hypergraph(rng, testing::uniform(rng, 1, 6), 4);
        Hypergraph small(big.vertices());
        for (const Edge& e : big.edges())
            if (testing::uniform(rng, 0, 1) == 0)
                small.add_edge(e.members);
        // Keep every vertex in some edge so that the ideal stays proper.
        for (const Edge& e : big.edges()) {
            VertexSet covered;
            for (const Edge& f : small.edges())
                covered |= f.members;
            if (!e.members.subset_of(covered))
                small.add_edge(e.members);
        }
        CHECK(pd_monotonicity_check(small, big));
    }
}

TEST_CASE("pd result JSON")
{
    PdResult r = pd(parse_ideal("ab, bcg, cdg, de, efg"));
    json j = pd_result_to_json(r);
    CHECK(j["pd"] == 4);
    CHECK(j["method"] == "formula_open_string");
    CHECK(j["components"].size() == 1);
}
