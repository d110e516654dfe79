#include "support.hh"

#include <bisynth/generators.hh>
#include <bisynth/realize.hh>

#include <doctest.h>

using namespace bisynth;
using namespace test_support;

namespace
{
    auto any_rows = [](const oracle::Rows &) { return true; };

    auto oracle_exists(const DegreeSpec & m, const std::vector<Value> & p) -> bool
    {
        int t = m.t_size();
        return oracle::find_bigraph(m.s_size(), t, oracle::Box::exact(m),
            [&](const oracle::Rows & r) { return p.empty() || oracle::covers(t, r, p); })
            .has_value();
    }

    void check_reevaluates(const CheckResult & r, const DegreeSpec * m, const DegreeBounds * b, const SetFunction & p)
    {
        REQUIRE(r.certificate);
        auto [lhs, rhs] = evaluate_certificate(*r.certificate, m, b, p);
        CHECK(lhs == r.certificate->lhs);
        CHECK(rhs == r.certificate->rhs);
        CHECK(lhs > rhs);
    }
}

TEST_CASE("Gale-Ryser examples")
{
    CHECK(check_gale_ryser(DegreeSpec{{1}, std::vector<int>{1}}).feasible);
    auto r = check_gale_ryser(DegreeSpec{{2}, std::vector<int>{2}});
    REQUIRE(r.certificate);
    CHECK(r.certificate->x == std::vector<int>{0});
    CHECK(r.certificate->y == std::vector<int>{0});
    CHECK(r.certificate->lhs == 3);
    CHECK(r.certificate->rhs == 2);
    CHECK(check_gale_ryser(DegreeSpec{{2, 2, 1}, std::vector<int>{3, 2}}).feasible);
    CHECK_THROWS_AS(check_gale_ryser(DegreeSpec{{2}, std::vector<int>{1}}), PreconditionError);
}

TEST_CASE("Gale-Ryser constructions")
{
    auto k22 = construct_gale_ryser(DegreeSpec{{2, 2}, std::vector<int>{2, 2}});
    REQUIRE(k22.value);
    CHECK(k22.value->edge_count() == 4);
    auto star = construct_gale_ryser(DegreeSpec{{1, 1}, std::vector<int>{2, 0}});
    REQUIRE(star.value);
    CHECK(edge_set(*star.value) == std::vector<Edge>{{0, 0}, {1, 0}});
    DegreeSpec m{{4, 4, 3, 2}, std::vector<int>{4, 4, 3, 2}};
    auto g = construct_gale_ryser(m);
    REQUIRE(g.value);
    CHECK(g.value->edge_count() == 13);
    CHECK(g.value->neighbors(0b1100) == 0b0111);
    CHECK(max_matching(*g.value).size() == 4);
    // The fitting graph is unique.
    int count = 0;
    oracle::for_each_bigraph(4, 4, oracle::Box::exact(m), [&](const oracle::Rows &) { return ++count, true; });
    CHECK(count == 1);
}

TEST_CASE("worked counterexample")
{
    DegreeSpec m{{4, 4, 3, 2}, std::vector<int>{4, 4, 3, 2}};
    auto p = counterexample_p();
    auto r = check_cover_full(m, p);
    REQUIRE_FALSE(r.feasible);
    CHECK(r.certificate->lhs == 14);
    CHECK(r.certificate->rhs == 13);
    check_reevaluates(r, &m, nullptr, p);
    CHECK_FALSE(oracle_exists(m, p.table()));
    auto raw = oracle::condition("cover-full", oracle::instance(m, p.table()));
    CHECK(raw.amount == 1);
    CHECK(raw.x == std::vector<int>{0, 1});
    CHECK_FALSE(construct_cover_full(m, p).value);
}

TEST_CASE("S-side covering examples")
{
    CHECK(check_cover_s({2, 1}, SetFunction::zero(2)).feasible);
    CHECK(check_cover_s({1, 1, 1}, hall(3)).feasible);
    std::vector<Value> table{0, 2, 2, 2};
    auto p = SetFunction::from_table(2, table);
    auto r = check_cover_s({1, 1}, p);
    REQUIRE_FALSE(r.feasible);
    CHECK(r.certificate->parts.size() == 2);
    CHECK(r.certificate->lhs == 4);
    CHECK(r.certificate->rhs == 2);
    CHECK_THROWS_AS(check_cover_s({3}, SetFunction::zero(2)), PreconditionError);

    auto g = construct_cover_s({2, 1}, SetFunction::zero(2));
    REQUIRE(g.value);
    CHECK(fits(*g.value, {2, 1}, std::nullopt, {}));
    auto pm = construct_cover_s({1, 1, 1}, hall(3));
    REQUIRE(pm.value);
    CHECK(max_matching(*pm.value).size() == 3);
    auto f = construct_cover_s({2, 1, 1}, SetFunction::forest({2, 2}));
    REQUIRE(f.value);
    CHECK(f.value->edge_count() == 4);
    CHECK(fits(*f.value, {2, 1, 1}, std::nullopt, SetFunction::forest({2, 2}).table()));
}

TEST_CASE("full covering examples")
{
    auto zero = SetFunction::zero(2);
    DegreeSpec star{{1, 1}, std::vector<int>{2, 0}};
    CHECK(check_cover_full(star, zero).feasible == check_gale_ryser(star).feasible);
    auto tr = SetFunction::term_rank(2, 2);
    auto r = check_cover_full(star, tr, {PartStrategy::full, Search::maximum});
    REQUIRE_FALSE(r.feasible);
    CHECK(r.certificate->lhs - r.certificate->rhs == 1);
    check_reevaluates(r, &star, nullptr, tr);

    auto k = construct_cover_full(DegreeSpec{{2, 2}, std::vector<int>{2, 2}}, zero);
    REQUIRE(k.value);
    CHECK(k.value->edge_count() == 4);
    auto pm = construct_cover_full(DegreeSpec{{1, 1}, std::vector<int>{1, 1}}, tr);
    REQUIRE(pm.value);
    CHECK(max_matching(*pm.value).size() == 2);
    auto fo = SetFunction::forest({2, 2});
    auto g = construct_cover_full(DegreeSpec{{2, 1, 1}, std::vector<int>{2, 2}}, fo);
    REQUIRE(g.value);
    CHECK(fits(*g.value, {2, 1, 1}, std::vector<int>{2, 2}, fo.table()));
}

TEST_CASE("p above |S| is infeasible, not an error")
{
    DegreeSpec m{{1}, std::vector<int>{1}};
    std::vector<Value> table{0, 2};
    auto r = check_cover_full(m, SetFunction::from_table(1, table));
    CHECK_FALSE(r.feasible);
}

TEST_CASE("covering verdicts agree with the oracle")
{
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        gen::Rng rng(seed);
        for (int i = 0; i < 120; ++i) {
            int s = gen::uniform(rng, 1, 4), t = gen::uniform(rng, 1, 4);
            auto m = gen::random_spec(rng, s, t, std::max(s, t));
            auto p = gen::random_set_function(rng, t, s);
            auto table = p.table();
            bool exists = oracle_exists(m, table);
            auto r = check_cover_full(m, p, {PartStrategy::automatic, Search::first});
            CHECK(r.feasible == exists);
            auto mx = check_cover_full(m, p);
            CHECK(mx.feasible == exists);
            auto raw = oracle::condition("cover-full", oracle::instance(m, table));
            CHECK((raw.amount <= 0) == exists);
            if (! exists) {
                check_reevaluates(r, &m, nullptr, p);
                // The maximum search finds the largest violation of the sweep.
                CHECK(mx.certificate->violation() == raw.amount);
            }
            auto g = construct_cover_full(m, p);
            CHECK(g.value.has_value() == exists);
            if (g.value)
                CHECK(fits(*g.value, m.m_s, m.m_t, table));
        }
    }
}

TEST_CASE("degree-bound examples")
{
    auto b = DegreeBounds::unbounded(2, 2);
    CHECK(check_bounds(b, SetFunction::zero(2)).feasible);

    auto tr = SetFunction::term_rank(3, 2);
    auto gt = DegreeBounds::unbounded(2, 3);
    gt.g_t = {1, 1, 1};
    CHECK(check_bounds(gt, tr).feasible);

    auto c = DegreeBounds::unbounded(2, 3);
    c.f_t = {2, 2, 2};
    c.g_s = {1, 1};
    auto r = check_bounds(c, SetFunction::zero(3));
    REQUIRE_FALSE(r.feasible);
    CHECK(r.certificate->condition == "lower-t");
    CHECK(r.certificate->lhs == 6);
    CHECK(r.certificate->rhs == 2);
    check_reevaluates(r, nullptr, &c, SetFunction::zero(3));
}

TEST_CASE("edge-count examples")
{
    auto b = DegreeBounds::unbounded(2, 2);
    b.alpha = 0;
    CHECK(check_bounds_edges(b, SetFunction::zero(2)).feasible);
    b.alpha = 5;
    auto r = check_bounds_edges(b, SetFunction::zero(2));
    REQUIRE_FALSE(r.feasible);
    CHECK(r.certificate->condition == "edges-min");

    auto t = DegreeBounds::unbounded(2, 2);
    t.f_s = t.f_t = {0, 0};
    t.beta = 1;
    auto tr = SetFunction::term_rank(2, 2);
    auto q = check_bounds_edges(t, tr);
    REQUIRE_FALSE(q.feasible);
    CHECK(q.certificate->condition == "edges-max");
    check_reevaluates(q, nullptr, &t, tr);
}

TEST_CASE("bounded constructions")
{
    auto b = DegreeBounds::unbounded(2, 2);
    b.f_s = b.f_t = {0, 0};
    b.g_s = b.g_t = {1, 1};
    b.alpha = b.beta = 2;
    auto g = construct_bounds(b, SetFunction::zero(2));
    REQUIRE(g.value);
    CHECK(g.value->edge_count() == 2);
    CHECK(max_matching(*g.value).size() == 2);

    auto t = DegreeBounds::unbounded(2, 2);
    t.f_s = t.f_t = {0, 0};
    t.g_s = t.g_t = {2, 2};
    t.alpha = 0;
    t.beta = 4;
    auto h = construct_bounds(t, SetFunction::term_rank(2, 2));
    REQUIRE(h.value);
    CHECK(max_matching(*h.value).size() == 2);

    DegreeSpec m{{2, 1, 1}, std::vector<int>{2, 2}};
    auto fo = SetFunction::forest({2, 2});
    auto exact = construct_bounds(DegreeBounds::exact(m), fo);
    REQUIRE(exact.value);
    CHECK(fits(*exact.value, m.m_s, m.m_t, fo.table()));
}

TEST_CASE("bounded verdicts agree with the oracle")
{
    gen::Rng rng(31);
    for (int i = 0; i < 250; ++i) {
        int s = gen::uniform(rng, 1, 4), t = gen::uniform(rng, 1, 4);
        auto b = gen::random_bounds(rng, s, t, 0.5, 2);
        auto p = gen::random_set_function(rng, t, s);
        auto table = p.table();
        bool exists = oracle::find_bigraph(s, t, oracle::Box::from_bounds(b),
            [&](const oracle::Rows & r) { return oracle::covers(t, r, table); })
                          .has_value();
        auto d = check_bounds(b, p);
        if (! d.feasible) {
            CHECK_FALSE(exists);
            check_reevaluates(d, nullptr, &b, p);
            CHECK_THROWS_AS(check_bounds_edges(b, p), PreconditionError);
        }
        else {
            auto e = check_bounds_edges(b, p);
            CHECK(e.feasible == exists);
            if (! e.feasible)
                check_reevaluates(e, nullptr, &b, p);
        }
        auto g = construct_bounds(b, p);
        CHECK(g.value.has_value() == exists);
        if (g.value) {
            auto ds = g.value->degrees_s(), dt = g.value->degrees_t();
            for (int v = 0; v < s; ++v)
                CHECK((ds[v] >= b.f_s[v] && ds[v] <= b.g_s[v]));
            for (int v = 0; v < t; ++v)
                CHECK((dt[v] >= b.f_t[v] && dt[v] <= b.g_t[v]));
            CHECK(g.value->edge_count() >= b.alpha);
            CHECK(g.value->edge_count() <= b.beta);
            CHECK(fits(*g.value, ds, dt, table));
        }
    }
}

TEST_CASE("minimum edge count is attained")
{
    gen::Rng rng(32);
    for (int i = 0; i < 80; ++i) {
        int s = gen::uniform(rng, 1, 3), t = gen::uniform(rng, 1, 3);
        auto b = gen::random_bounds(rng, s, t, 0.5, 2);
        b.alpha = neg_inf;
        b.beta = pos_inf;
        auto p = gen::random_set_function(rng, t, s);
        auto table = p.table();
        if (! check_bounds(b, p).feasible)
            continue;
        int best = 1 << 30;
        oracle::for_each_bigraph(s, t, oracle::Box::from_bounds(b), [&](const oracle::Rows & r) {
            if (oracle::covers(t, r, table)) {
                int e = 0;
                for (auto row : r)
                    e += popcount(row);
                best = std::min(best, e);
            }
            return true;
        });
        CHECK(min_edge_count(b, p) == best);
    }
}

TEST_CASE("one-sided wrappers")
{
    auto tr = SetFunction::term_rank(2, 2);
    CHECK(check_gt(2, {1, 1}, tr).feasible);
    CHECK_FALSE(check_gt(2, {0, 1}, tr).feasible);
    CHECK(check_ms_gt({1, 1}, {1, 1}, tr).feasible);
    CHECK_FALSE(check_ft_gs({2, 2}, {1, 1}, SetFunction::zero(2)).feasible);
    CHECK(check_fs_gs({1, 1}, {2, 2}, tr).feasible);
    CHECK_FALSE(check_fs_gt({2, 2}, {1, 1}, SetFunction::zero(2)).feasible);
}

TEST_CASE("simplify keeps coverage and degrees")
{
    Bigraph g(2, 3, {{0, 0}, {0, 0}, {1, 1}});
    auto h = simplify(g);
    CHECK(h.is_simple());
    CHECK(h.degrees_s() == g.degrees_s());
    CHECK(uncovered_set(h, hall(3)).has_value());
    CHECK_FALSE(uncovered_set(h, SetFunction::zero(3)).has_value());
}
