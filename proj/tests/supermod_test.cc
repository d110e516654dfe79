#include "support.hh"

#include <bisynth/generators.hh>
#include <bisynth/realize.hh>

#include <doctest.h>

using namespace bisynth;
using namespace test_support;

TEST_CASE("closed-form values")
{
    auto tr = SetFunction::term_rank(3, 2);
    CHECK(tr(bit(0)) == 0);
    CHECK(tr(0b111) == 2);
    CHECK(tr(0) == 0);
    auto fo = SetFunction::forest({2, 2, 2});
    CHECK(fo(0b011) == 3);
    CHECK(fo(bit(1)) == 2);
    auto br = SetFunction::branching(path3(), 2);
    CHECK(br(0b110) == 1);
    CHECK(br(bit(0)) == 2);
    CHECK_THROWS_AS(SetFunction::term_rank(2, 3), PreconditionError);
}

TEST_CASE("branching in-degree variant uses m_in on singletons")
{
    auto p = SetFunction::branching(path3(), 2, std::vector<int>{0, 1, 1});
    CHECK(p(bit(1)) == 1);
    CHECK(p(0b110) == 1);
    CHECK_THROWS_AS(SetFunction::branching(path3(), 1, std::vector<int>{1, 1, 0}), PreconditionError);
}

TEST_CASE("classification of the named forms")
{
    auto f = classify(SetFunction::term_rank(4, 2));
    CHECK(f.intersecting == Tri::yes);
    CHECK(f.fully == Tri::yes);
    CHECK(f.monotone == Tri::yes);

    auto fo = classify(SetFunction::forest({2, 2, 2, 2}));
    CHECK(fo.intersecting == Tri::yes);
    CHECK(fo.fully == Tri::no);

    auto ce = classify(counterexample_p());
    CHECK(ce.intersecting == Tri::yes);
}

// Independent pairwise check, positive variant.
static auto brute_intersecting(const std::vector<Value> & p) -> bool
{
    for (Mask x = 1; x < p.size(); ++x)
        for (Mask y = 1; y < p.size(); ++y)
            if ((x & y) && p[x] > 0 && p[y] > 0 && p[x] + p[y] > p[x & y] + p[x | y])
                return false;
    return true;
}

static auto brute_fully(const std::vector<Value> & p) -> bool
{
    for (Mask x = 0; x < p.size(); ++x)
        for (Mask y = 0; y < p.size(); ++y)
            if (p[x] + p[y] > p[x & y] + p[x | y])
                return false;
    return true;
}

TEST_CASE("explicit classification matches pairwise checks")
{
    gen::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        int t = gen::uniform(rng, 1, 4);
        std::vector<Value> table(std::size_t{1} << t, 0);
        for (Mask y = 1; y < table.size(); ++y)
            table[y] = gen::uniform(rng, -1, 4);
        auto f = classify(SetFunction::from_table(t, table));
        CHECK((f.intersecting == Tri::yes) == brute_intersecting(table));
        CHECK((f.fully == Tri::yes) == brute_fully(table));
    }
}

TEST_CASE("generated tables have the advertised properties")
{
    gen::Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        int t = gen::uniform(rng, 1, 5);
        auto a = gen::random_intersecting_table(rng, t, 4);
        CHECK(brute_intersecting(a.table()));
        auto b = gen::random_monotone_fully(rng, t, 4);
        CHECK(brute_fully(b.table()));
        CHECK(b.flags().monotone == Tri::yes);
    }
}

TEST_CASE("subpartition maximum")
{
    auto p = counterexample_p();
    CHECK(subpartition_max(p, 0b1100, 1) == 4);
    CHECK(subpartition_max(p, 0b1111, 0) == 0);
    CHECK(subpartition_max(SetFunction::term_rank(3, 3), 0b111, 1) == 3);
}

TEST_CASE("subpartition table agrees with enumeration")
{
    gen::Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        int t = gen::uniform(rng, 1, 5);
        auto p = gen::random_set_function(rng, t, 4);
        auto table = p.table();
        SubpartitionTable dp(t, table);
        for (Mask g = 0; g < table.size(); ++g)
            for (int q = 0; q <= popcount(g); ++q) {
                Value best = neg_inf;
                for (auto & sp : enumerate_subpartitions(g))
                    if (static_cast<int>(sp.parts.size()) == q) {
                        Value v = 0;
                        for (auto part : sp.parts)
                            v += table[part];
                        best = std::max(best, v);
                    }
                CHECK(dp.value(g, q) == best);
                auto parts = dp.recover(g, q);
                Value v = 0;
                Mask seen = 0;
                for (auto part : parts) {
                    CHECK((part & seen) == 0);
                    CHECK((part & ~g) == 0);
                    seen |= part;
                    v += table[part];
                }
                CHECK(static_cast<int>(parts.size()) == q);
                CHECK(v == best);
            }
    }
}

TEST_CASE("master function examples")
{
    MasterFunction b(2, hall(2));
    CHECK(b.b0(0) == 0);
    CHECK(b.b0(0b1111) == 0);
    CHECK(b.b0(bit(0) | bit(2)) == 1);

    CHECK(member_in_b0(MasterFunction(1, SetFunction::zero(1)), DegreeSpec{{1}, std::vector<int>{1}}).member);
    CHECK(member_in_b0(b, DegreeSpec{{1, 1}, std::vector<int>{1, 1}}).member);

    DegreeSpec m{{4, 4, 3, 2}, std::vector<int>{4, 4, 3, 2}};
    MasterFunction ce(4, counterexample_p());
    auto r = member_in_b0(ce, m);
    REQUIRE_FALSE(r.member);
    CHECK(r.lhs - r.rhs == 1);
}

TEST_CASE("master function requires p <= |S|")
{
    CHECK_THROWS_AS(MasterFunction(1, hall(2)), PreconditionError);
}

TEST_CASE("b0 is submodular on random instances")
{
    gen::Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        int s = gen::uniform(rng, 1, 3), t = gen::uniform(rng, 1, 3);
        auto p = gen::random_set_function(rng, t, s);
        auto table = p.table();
        if (std::ranges::any_of(table, [&](Value v) { return v > s; }))
            continue;
        MasterFunction b(s, p);
        Mask all = full_mask(s + t);
        for (Mask u = 0; u <= all; ++u)
            for (Mask w = 0; w <= all; ++w)
                CHECK(b.b0(u) + b.b0(w) >= b.b0(u & w) + b.b0(u | w));
    }
}
