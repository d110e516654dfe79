#include "support.hh"

#include <bisynth/generators.hh>

#include <doctest.h>

using namespace bisynth;
using namespace test_support;

TEST_CASE("in-degree on a path")
{
    auto d = path3();
    CHECK(in_degree(d, bit(1)) == 1);
    CHECK(in_degree(d, 0) == 0);
    CHECK(in_degree(d, bit(0)) == 0);
    CHECK(out_degree(d, bit(0)) == 1);
    CHECK(d.in_degree_of(2) == 1);
}

TEST_CASE("digraphs reject loops and bad endpoints")
{
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), InputError);
    CHECK_NOTHROW(Digraph(2, {{1, 1}}, Loops::allow));
}

TEST_CASE("neighbourhoods")
{
    Bigraph k22(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(k22.neighbors(bit(0)) == 0b11);
    CHECK(k22.neighbors(0) == 0);
    CHECK(k22.neighbors_of_s(bit(1)) == 0b11);
}

TEST_CASE("parallel edges")
{
    Bigraph g(1, 1, {{0, 0}, {0, 0}});
    CHECK_FALSE(g.is_simple());
    CHECK(g.multiplicity(0, 0) == 2);
    CHECK_THROWS_AS(Bigraph(1, 1, {{0, 0}, {0, 0}}, Simplicity::required), InputError);
}

TEST_CASE("matching examples")
{
    CHECK(max_matching(Bigraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).size() == 2);
    CHECK(max_matching(Bigraph(1, 3, {{0, 0}, {0, 1}, {0, 2}})).size() == 1);
}

TEST_CASE("matching number agrees with the oracle")
{
    gen::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        int s = gen::uniform(rng, 1, 5), t = gen::uniform(rng, 1, 5);
        auto g = gen::random_bigraph(rng, s, t, 0.4);
        auto m = max_matching(g);
        CHECK(m.size() == oracle::matching_number(s, t, rows_of(g)));
        std::vector<bool> used_s(s), used_t(t);
        for (auto & e : m.edges) {
            CHECK(g.multiplicity(e.s, e.t) > 0);
            CHECK_FALSE(used_s[e.s]);
            CHECK_FALSE(used_t[e.t]);
            used_s[e.s] = used_t[e.t] = true;
        }
    }
}

TEST_CASE("subpartition counts are Bell numbers of n + 1")
{
    CHECK(enumerate_subpartitions(0).size() == 1);
    CHECK(enumerate_subpartitions(bit(0)).size() == 2);
    auto two = enumerate_subpartitions(0b11);
    CHECK(two.size() == 5);
    // Bell(n + 1) for n = 0, 1, ...
    const std::size_t bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 6; ++n) {
        auto all = enumerate_subpartitions(full_mask(n));
        CHECK(all.size() == bell[n]);
        for (auto & sp : all)
            CHECK(sp.valid());
    }
}

TEST_CASE("subpartitions respect a part limit")
{
    for (auto & sp : enumerate_subpartitions(full_mask(5), 2))
        CHECK(sp.parts.size() <= 2);
    CHECK(enumerate_subpartitions(full_mask(4), 1).size() == 16);
}

TEST_CASE("mask helpers")
{
    CHECK(indices_to_mask({0, 3}, 4) == 0b1001);
    CHECK(mask_to_indices(0b1010) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(indices_to_mask({4}, 4), InputError);
    CHECK_THROWS_AS(sat_add(pos_inf, neg_inf), DefectError);
    CHECK(sat_add(pos_inf, 5) == pos_inf);
}
