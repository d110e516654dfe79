#include "support.hh"

#include <bisynth/generators.hh>

#include <doctest.h>

using namespace bisynth;
using namespace test_support;

TEST_CASE("bigraph oracle examples")
{
    DegreeSpec pm{{1, 1}, std::vector<int>{1, 1}};
    auto g = oracle::find_bigraph(2, 2, oracle::Box::exact(pm),
        [](const oracle::Rows & r) { return oracle::matching_number(2, 2, r) >= 2; });
    REQUIRE(g);
    CHECK(edge_set(*g) == std::vector<Edge>{{0, 0}, {1, 1}});

    DegreeSpec ce{{4, 4, 3, 2}, std::vector<int>{4, 4, 3, 2}};
    auto table = counterexample_p().table();
    CHECK_FALSE(oracle::find_bigraph(4, 4, oracle::Box::exact(ce),
        [&](const oracle::Rows & r) { return oracle::covers(4, r, table); }));

    DegreeSpec k{{2, 2}, std::vector<int>{2, 2}};
    CHECK_FALSE(oracle::find_bigraph(2, 2, oracle::Box::exact(k),
        [](const oracle::Rows & r) { return oracle::has_forest(2, 2, r, {2, 2}); }));
}

TEST_CASE("enumeration is lexicographic and complete")
{
    std::vector<oracle::Rows> seen;
    oracle::for_each_bigraph(2, 2, oracle::Box::s_only({1, 1}, 2), [&](const oracle::Rows & r) {
        seen.push_back(r);
        return true;
    });
    CHECK(seen.size() == 4);
    CHECK(std::ranges::is_sorted(seen));

    int all = 0;
    oracle::Box free;
    free.s_lo = {0, 0, 0};
    free.s_hi = {3, 3, 3};
    free.t_lo = {0, 0, 0};
    free.t_hi = {3, 3, 3};
    oracle::for_each_bigraph(3, 3, free, [&](const oracle::Rows &) { return ++all, true; });
    CHECK(all == 512);
}

TEST_CASE("capacity limits")
{
    DegreeSpec big{std::vector<int>(5, 1), std::vector<int>(5, 1)};
    CHECK_THROWS_AS(oracle::find_bigraph(5, 5, oracle::Box::exact(big), [](const oracle::Rows &) { return true; }),
        CapacityError);
    oracle::PackingQuery q;
    q.k = 4;
    q.sizes = std::vector<int>{1, 1, 1, 1};
    CHECK_THROWS_AS(oracle::find_packing(path3(), q), CapacityError);
}

TEST_CASE("packing oracle examples")
{
    oracle::PackingQuery q;
    q.k = 1;
    q.sizes = std::vector<int>{2};
    CHECK(oracle::find_packing(path3(), q));
    q.k = 2;
    q.sizes = std::vector<int>{2, 2};
    CHECK_FALSE(oracle::find_packing(path3(), q));
    CHECK(oracle::find_packing(four_arcs(), q));
}

TEST_CASE("raw condition sweeps")
{
    DegreeSpec ce{{4, 4, 3, 2}, std::vector<int>{4, 4, 3, 2}};
    auto v = oracle::condition("cover-full", oracle::instance(ce, counterexample_p().table()));
    CHECK(v.amount == 1);
    CHECK(v.x == std::vector<int>{0, 1});
    CHECK(v.y == std::vector<int>{0, 1});
    CHECK(v.parts == std::vector<std::vector<int>>{{2, 3}});

    DegreeSpec ok{{2, 1}, std::vector<int>{1, 2}};
    CHECK(oracle::condition("gale-ryser", oracle::instance(ok, {})).amount <= 0);

    auto inst = oracle::instance(DegreeSpec{{1, 1}, std::vector<int>{2, 0}}, {});
    inst.ell = 2;
    CHECK(oracle::condition("termrank", inst).amount == 1);
    CHECK_THROWS_AS(oracle::condition("nonsense", inst), InputError);
}

TEST_CASE("oracle results are deterministic")
{
    gen::Rng rng(71);
    for (int i = 0; i < 30; ++i) {
        int s = gen::uniform(rng, 1, 4), t = gen::uniform(rng, 1, 4);
        auto m = gen::random_spec(rng, s, t, 4);
        auto a = oracle::find_bigraph(s, t, oracle::Box::exact(m), [](const oracle::Rows &) { return true; });
        auto b = oracle::find_bigraph(s, t, oracle::Box::exact(m), [](const oracle::Rows &) { return true; });
        CHECK(a.has_value() == b.has_value());
        if (a && b)
            CHECK(edge_set(*a) == edge_set(*b));
    }
}

TEST_CASE("maximum term rank by enumeration")
{
    CHECK(oracle::max_term_rank(DegreeSpec{{1, 1}, std::vector<int>{2, 0}}) == 1);
    CHECK(oracle::max_term_rank(DegreeSpec{{4, 4, 3, 2}, std::vector<int>{4, 4, 3, 2}}) == 4);
    CHECK_FALSE(oracle::max_term_rank(DegreeSpec{{2}, std::vector<int>{2}}));
}

TEST_CASE("trimming oracle")
{
    CHECK(oracle::trimmable({0b111}));
    CHECK_FALSE(oracle::trimmable({0b11, 0b11}));
    CHECK(oracle::trimmable({0b011, 0b101}));
    CHECK(oracle::union_condition({0b011, 0b101}));
    CHECK_FALSE(oracle::union_condition({0b11, 0b11}));
}
