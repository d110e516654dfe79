#include "support.hh"

#include <bisynth/forests.hh>
#include <bisynth/generators.hh>

#include <doctest.h>

using namespace bisynth;
using namespace test_support;

namespace
{
    auto forest_ok(const Bigraph & g, const std::vector<Edge> & f, const std::vector<int> & m_for) -> bool
    {
        std::vector<std::pair<int, int>> e;
        std::vector<int> deg(g.t_size(), 0);
        for (auto & x : f) {
            if (g.multiplicity(x.s, x.t) == 0)
                return false;
            e.emplace_back(x.s, g.s_size() + x.t);
            ++deg[x.t];
        }
        return deg == m_for && acyclic(g.s_size() + g.t_size(), e);
    }

    auto k32() -> Bigraph { return Bigraph(3, 2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}); }
    auto c4() -> Bigraph { return Bigraph(2, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
}

TEST_CASE("T2-forest examples")
{
    Bigraph star(2, 1, {{0, 0}, {1, 0}});
    CHECK(check_t2_forest(star).feasible);
    auto r = check_t2_forest(c4());
    REQUIRE_FALSE(r.feasible);
    CHECK(r.certificate->y == std::vector<int>{0, 1});
    CHECK(r.certificate->lhs == 3);
    CHECK(r.certificate->rhs == 2);
    CHECK(check_t2_forest(k32()).feasible);
}

TEST_CASE("forest extraction")
{
    Bigraph star(2, 1, {{0, 0}, {1, 0}});
    auto a = extract_forest(star, std::vector<int>{2});
    REQUIRE(a.value);
    CHECK(a.value->size() == 2);
    auto b = extract_forest(k32());
    REQUIRE(b.value);
    CHECK(forest_ok(k32(), *b.value, {2, 2}));
    auto c = extract_forest(c4());
    CHECK_FALSE(c.value);
    REQUIRE(c.certificate);
    CHECK(c.certificate->y == std::vector<int>{0, 1});

    auto parents = forest_parents(3, 2, *b.value);
    CHECK(parents.size() == 5);
    int roots = static_cast<int>(std::ranges::count(parents, -1));
    CHECK(roots == 5 - 4);
}

TEST_CASE("forest verdicts agree with the oracle")
{
    gen::Rng rng(61);
    for (int i = 0; i < 400; ++i) {
        int s = gen::uniform(rng, 1, 5), t = gen::uniform(rng, 1, 4);
        auto g = gen::random_bigraph(rng, s, t, 0.5);
        std::vector<int> m_for(t);
        for (auto & x : m_for)
            x = gen::uniform(rng, 0, 3);
        bool exists = oracle::has_forest(s, t, rows_of(g), m_for);
        auto r = check_t2_forest(g, m_for);
        CHECK(r.feasible == exists);
        auto f = extract_forest(g, m_for);
        CHECK(f.value.has_value() == exists);
        if (f.value)
            CHECK(forest_ok(g, *f.value, m_for));
        else {
            auto & c = *r.certificate;
            Mask y = indices_to_mask(c.y, t);
            Value need = 1 - popcount(y);
            for (int j : c.y)
                need += m_for[j];
            CHECK(c.lhs == need);
            CHECK(c.rhs == popcount(g.neighbors(y)));
        }
    }
}

TEST_CASE("matroid intersection finds a maximum common independent set")
{
    // Bipartite matching as the intersection of two partition matroids.
    gen::Rng rng(62);
    for (int i = 0; i < 100; ++i) {
        int s = gen::uniform(rng, 1, 5), t = gen::uniform(rng, 1, 5);
        auto g = gen::random_bigraph(rng, s, t, 0.4);
        auto & e = g.edges();
        auto side = [&](bool left) {
            return [&, left](const std::vector<bool> & in) {
                std::vector<int> used(left ? s : t, 0);
                for (std::size_t k = 0; k < e.size(); ++k)
                    if (in[k] && ++used[left ? e[k].s : e[k].t] > 1)
                        return false;
                return true;
            };
        };
        auto pick = matroid_intersection(static_cast<int>(e.size()), side(true), side(false));
        CHECK(std::ranges::count(pick, true) == oracle::matching_number(s, t, rows_of(g)));
    }
}

TEST_CASE("graphs with a prescribed forest")
{
    auto a = realize_with_forest(DegreeSpec{{2, 1, 1}, std::vector<int>{2, 2}}, {2, 2});
    REQUIRE(a.value);
    CHECK(a.value->graph.edge_count() == 4);
    CHECK(forest_ok(a.value->graph, a.value->forest, {2, 2}));

    DegreeSpec k{{2, 2}, std::vector<int>{2, 2}};
    auto r = check_with_forest(k, {2, 2});
    REQUIRE_FALSE(r.feasible);
    auto [lhs, rhs] = evaluate_forest_certificate(*r.certificate, k, {2, 2});
    CHECK(lhs == r.certificate->lhs);
    CHECK(rhs == r.certificate->rhs);
    CHECK(lhs > rhs);

    auto p = realize_with_forest(DegreeSpec{{1, 1}, std::vector<int>{2}}, {2});
    REQUIRE(p.value);
    CHECK(p.value->graph.edge_count() == 2);
}

TEST_CASE("forest realizations agree with the oracle")
{
    for (std::uint64_t seed : {63u, 64u}) {
        gen::Rng rng(seed);
        for (int i = 0; i < 150; ++i) {
            int s = gen::uniform(rng, 1, 4), t = gen::uniform(rng, 1, 4);
            auto m = gen::random_spec(rng, s, t, std::max(s, t));
            std::vector<int> m_for(t);
            for (int j = 0; j < t; ++j)
                m_for[j] = gen::uniform(rng, 0, (*m.m_t)[j]);
            bool exists = oracle::find_bigraph(s, t, oracle::Box::exact(m), [&](const oracle::Rows & r) {
                return oracle::has_forest(s, t, r, m_for);
            }).has_value();
            auto r = check_with_forest(m, m_for);
            CHECK(r.feasible == exists);
            if (! r.feasible) {
                auto [lhs, rhs] = evaluate_forest_certificate(*r.certificate, m, m_for);
                CHECK(lhs == r.certificate->lhs);
                CHECK(rhs == r.certificate->rhs);
                CHECK(lhs > rhs);
            }
            auto w = realize_with_forest(m, m_for);
            CHECK(w.value.has_value() == exists);
            if (w.value) {
                CHECK(fits(w.value->graph, m.m_s, m.m_t, {}));
                CHECK(forest_ok(w.value->graph, w.value->forest, m_for));
            }
        }
    }
}

TEST_CASE("uniform wooded hypergraph examples")
{
    auto a = realize_wooded_uniform({1, 1, 1}, 3);
    REQUIRE(a.value);
    CHECK(a.value->hypergraph.edges.size() == 1);
    CHECK_FALSE(check_wooded_uniform({2, 2}, 2).feasible);
    auto c = realize_wooded_uniform({2, 1, 1}, 2);
    REQUIRE(c.value);
    CHECK(c.value->hypergraph.edges.size() == 2);
}

TEST_CASE("uniform wooded verdicts agree with the oracle")
{
    gen::Rng rng(65);
    for (int i = 0; i < 200; ++i) {
        int n = gen::uniform(rng, 1, 5), ell = gen::uniform(rng, 2, 4);
        std::vector<int> m_s(n);
        for (auto & x : m_s)
            x = gen::uniform(rng, 0, 3);
        bool exists = oracle::find_uniform_wooded(m_s, ell).has_value();
        CHECK(check_wooded_uniform(m_s, ell).feasible == exists);
        auto w = realize_wooded_uniform(m_s, ell);
        CHECK(w.value.has_value() == exists);
        if (! w.value)
            continue;
        std::vector<int> deg(n, 0);
        std::vector<std::pair<int, int>> kept;
        for (std::size_t e = 0; e < w.value->hypergraph.edges.size(); ++e) {
            auto & edge = w.value->hypergraph.edges[e];
            CHECK(static_cast<int>(edge.size()) == ell);
            for (int v : edge)
                ++deg[v];
            auto [a, b] = w.value->trimmed[e];
            CHECK(std::ranges::count(edge, a) == 1);
            CHECK(std::ranges::count(edge, b) == 1);
            kept.emplace_back(a, b);
        }
        CHECK(deg == m_s);
        CHECK(acyclic(n, kept));
    }
}

TEST_CASE("wooded hypergraphs match the union condition")
{
    gen::Rng rng(66);
    for (int i = 0; i < 300; ++i) {
        int n = gen::uniform(rng, 2, 6);
        auto h = gen::random_hypergraph(rng, n, gen::uniform(rng, 1, 6), 4);
        std::vector<Mask> masks;
        for (auto & e : h.edges)
            masks.push_back(indices_to_mask(e, n));
        bool wooded = oracle::trimmable(masks);
        CHECK(wooded == oracle::union_condition(masks));
        CHECK(check_t2_forest(hypergraph_to_bigraph(h)).feasible == wooded);
    }
}

TEST_CASE("hypergraph validation")
{
    CHECK_THROWS_AS((Hypergraph{3, {{0}}}.validate()), InputError);
    CHECK_THROWS_AS((Hypergraph{3, {{0, 0}}}.validate()), InputError);
    CHECK_THROWS_AS((Hypergraph{3, {{0, 3}}}.validate()), InputError);
}
