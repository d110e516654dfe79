#include <bisynth/branchings.hh>
#include <bisynth/forests.hh>
#include <bisynth/generators.hh>
#include <bisynth/json_io.hh>
#include <bisynth/oracle.hh>
#include <bisynth/realize.hh>
#include <bisynth/selftest.hh>
#include <bisynth/supermod.hh>
#include <bisynth/termrank.hh>

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <sstream>

namespace bisynth
{
    namespace
    {
        using gen::Rng;
        using gen::uniform;

        struct Tally
        {
            int instances = 0;
            int disagreements = 0;
            int positives = 0;
            std::string first;

            void fail(const std::string & why)
            {
                if (disagreements++ == 0)
                    first = why;
            }

            auto summary(const std::string & what) const -> std::string
            {
                std::ostringstream s;
                s << instances << " " << what;
                if (positives)
                    s << " (" << positives << " feasible)";
                s << ", " << disagreements << " disagreements";
                if (disagreements)
                    s << "; first: " << first;
                return s.str();
            }
        };

        auto rows_of(const Bigraph & g) -> oracle::Rows
        {
            oracle::Rows rows(g.s_size(), 0);
            for (auto & e : g.edges())
                rows[e.s] |= bit(e.t);
            return rows;
        }

        auto dump(const DegreeSpec & m) -> std::string { return to_json(m).dump(); }

        // Simple, fits the degrees, covers p.
        auto realization_problem(const Bigraph & g, const std::vector<int> & m_s,
            const std::optional<std::vector<int>> & m_t, const SetFunction & p) -> std::optional<std::string>
        {
            if (! g.is_simple())
                return "not simple";
            if (g.degrees_s() != m_s)
                return "S-degrees differ";
            if (m_t && g.degrees_t() != *m_t)
                return "T-degrees differ";
            if (auto y = uncovered_set(g, p))
                return "uncovered set " + std::to_string(*y);
            return std::nullopt;
        }

        auto forest_problem(const Bigraph & g, const std::vector<Edge> & forest, const std::vector<int> & m_for)
            -> std::optional<std::string>
        {
            int s = g.s_size(), t = g.t_size();
            std::vector<int> parent(s + t);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int v) {
                while (parent[v] != v)
                    v = parent[v] = parent[parent[v]];
                return v;
            };
            std::vector<int> deg(t, 0);
            auto available = g.edges();
            for (auto & e : forest) {
                auto it = std::ranges::find(available, e);
                if (it == available.end())
                    return "forest edge not in graph";
                available.erase(it);
                int a = find(e.s), b = find(s + e.t);
                if (a == b)
                    return "forest has a cycle";
                parent[a] = b;
                ++deg[e.t];
            }
            if (deg != m_for)
                return "forest degrees differ";
            return std::nullopt;
        }

        auto sizes_of(int n, const Packing & p) -> std::vector<int>
        {
            std::vector<int> r;
            for (auto & b : p)
                r.push_back(n - popcount(b.roots));
            return r;
        }

        // Degree bounds, edge-count bounds and simplicity.
        auto bounds_problem(const Bigraph & g, const DegreeBounds & b) -> std::optional<std::string>
        {
            if (! g.is_simple())
                return "not simple";
            auto ds = g.degrees_s(), dt = g.degrees_t();
            for (int i = 0; i < g.s_size(); ++i)
                if (ds[i] < b.f_s[i] || ds[i] > b.g_s[i])
                    return "S-degree out of bounds";
            for (int j = 0; j < g.t_size(); ++j)
                if (dt[j] < b.f_t[j] || dt[j] > b.g_t[j])
                    return "T-degree out of bounds";
            if (g.edge_count() < b.alpha || g.edge_count() > b.beta)
                return "edge count out of bounds";
            return std::nullopt;
        }

        auto c1(const SuiteOptions &, Tally & tally) -> bool
        {
            std::vector<Value> table(16, 0);
            table[1] = table[2] = table[4] = 3;
            table[8] = 2;
            table[3] = table[5] = table[6] = table[9] = table[10] = 1;
            table[12] = 4;
            table[13] = table[14] = 3;
            table[7] = table[11] = 2;
            table[15] = 4;
            auto p = SetFunction::from_table(4, table);
            DegreeSpec m{{4, 4, 3, 2}, std::vector<int>{4, 4, 3, 2}};
            ++tally.instances;

            auto r = check_cover_full(m, p);
            if (r.feasible || ! r.certificate) {
                tally.fail("cover check accepted");
                return false;
            }
            auto & c = *r.certificate;
            auto [lhs, rhs] = evaluate_certificate(c, &m, nullptr, p);
            if (c.lhs != 14 || c.rhs != 13 || lhs != 14 || rhs != 13)
                tally.fail("certificate " + to_json(c).dump());

            auto g = construct_gale_ryser(m);
            if (! g.value)
                tally.fail("no Gale-Ryser graph");
            else if (popcount(g.value->neighbors(bit(2) | bit(3))) != 3 || g.value->edge_count() != 13)
                tally.fail("Gale-Ryser graph differs from the expected one");
            return tally.disagreements == 0;
        }

        void gale_ryser_case(const DegreeSpec & m, Tally & tally)
        {
            ++tally.instances;
            int s = m.s_size(), t = m.t_size();
            bool exists = oracle::find_bigraph(s, t, oracle::Box::exact(m), [](const oracle::Rows &) { return true; })
                              .has_value();
            tally.positives += exists;
            auto r = check_gale_ryser(m);
            if (r.feasible != exists) {
                tally.fail(dump(m));
                return;
            }
            if (exists) {
                auto g = construct_gale_ryser(m);
                if (! g.value || realization_problem(*g.value, m.m_s, m.m_t, SetFunction::zero(t)))
                    tally.fail("construction " + dump(m));
            }
            else if (! r.certificate || r.certificate->violation() <= 0 ||
                oracle::condition("gale-ryser", oracle::instance(m, {})).amount <= 0)
                tally.fail("certificate " + dump(m));
        }

        auto c2(const SuiteOptions & opts, Tally & tally) -> bool
        {
            for (int s = 1; s <= 3; ++s)
                for (int t = 1; t <= 3; ++t) {
                    std::vector<int> ms(s, 0);
                    for (;;) {
                        std::vector<int> mt(t, 0);
                        for (;;) {
                            if (std::accumulate(ms.begin(), ms.end(), 0) == std::accumulate(mt.begin(), mt.end(), 0))
                                gale_ryser_case(DegreeSpec{ms, mt}, tally);
                            int j = 0;
                            while (j < t && mt[j] == 3)
                                mt[j++] = 0;
                            if (j == t)
                                break;
                            ++mt[j];
                        }
                        int i = 0;
                        while (i < s && ms[i] == 3)
                            ms[i++] = 0;
                        if (i == s)
                            break;
                        ++ms[i];
                    }
                }
            Rng rng(opts.seed ^ 2);
            int n = std::max(1, static_cast<int>(500 * opts.scale));
            for (int k = 0; k < n; ++k)
                gale_ryser_case(gen::random_spec(rng, 4, 4, 4), tally);
            return tally.disagreements == 0;
        }

        auto c3(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 3);
            int n = std::max(1, static_cast<int>(200 * opts.scale));
            for (int k = 0; k < n; ++k) {
                int s = uniform(rng, 1, 4), t = uniform(rng, 1, 4);
                std::vector<int> ms(s);
                for (auto & x : ms)
                    x = uniform(rng, 0, t);
                auto p = gen::random_set_function(rng, t, s + 1);
                auto table = p.table();
                ++tally.instances;
                std::string tag = "m_s=" + Json(ms).dump() + " p=" + to_json(p).dump();

                bool exists = oracle::find_bigraph(s, t, oracle::Box::s_only(ms, t),
                    [&](const oracle::Rows & rows) { return oracle::covers(t, rows, table); })
                                  .has_value();
                tally.positives += exists;
                auto b2 = check_cover_s(ms, p);
                auto b1 = check_cover_s_sets(ms, p);
                DegreeSpec m{ms, std::nullopt};
                bool raw_b1 = oracle::condition("cover-s-sets", oracle::instance(m, table)).amount <= 0;
                bool raw_b2 = oracle::condition("cover-s", oracle::instance(m, table)).amount <= 0;
                if (b2.feasible != exists || b1.feasible != exists || raw_b1 != exists || raw_b2 != exists) {
                    tally.fail(tag);
                    continue;
                }
                if (exists) {
                    auto g = construct_cover_s(ms, p);
                    if (! g.value || realization_problem(*g.value, ms, std::nullopt, p))
                        tally.fail("construction " + tag);
                }
            }
            return tally.disagreements == 0;
        }

        auto bounded_function(Rng & rng, int s, int t) -> SetFunction
        {
            for (;;) {
                auto p = gen::random_set_function(rng, t, s);
                auto table = p.table();
                if (std::ranges::all_of(table, [&](Value v) { return v <= s; }))
                    return p;
            }
        }

        auto c4(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 4);
            int n = std::max(1, static_cast<int>(50 * opts.scale));
            for (int k = 0; k < n; ++k) {
                int s = uniform(rng, 1, 4), t = uniform(rng, 1, 8 - s > 4 ? 4 : 8 - s);
                auto p = bounded_function(rng, s, t);
                MasterFunction b(s, p);
                ++tally.instances;
                Mask all = full_mask(s + t);
                if (b.b0(0) != 0 || b.b0(all) != 0) {
                    tally.fail("b0 not normalized for p=" + to_json(p).dump());
                    continue;
                }
                bool ok = true;
                for (Mask u = 0; u <= all && ok; ++u)
                    for (Mask w = u + 1; w <= all && ok; ++w)
                        if (b.b0(u) + b.b0(w) < b.b0(u & w) + b.b0(u | w)) {
                            ok = false;
                            tally.fail("submodularity fails at " + std::to_string(u) + "," + std::to_string(w) +
                                " for s=" + std::to_string(s) + " p=" + to_json(p).dump());
                        }
            }
            return tally.disagreements == 0;
        }

        auto c5(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 5);
            int n = std::max(1, static_cast<int>(200 * opts.scale));
            for (int k = 0; k < n; ++k) {
                int s = uniform(rng, 1, 4), t = uniform(rng, 1, 4);
                auto m = gen::random_spec(rng, s, t, std::max(s, t));
                auto p = bounded_function(rng, s, t);
                auto table = p.table();
                ++tally.instances;
                std::string tag = dump(m) + " p=" + to_json(p).dump();

                auto member = member_in_b0(MasterFunction(s, p), m).member;
                auto built = construct_cover_full(m, p);
                bool exists = oracle::find_bigraph(s, t, oracle::Box::exact(m),
                    [&](const oracle::Rows & rows) { return oracle::covers(t, rows, table); })
                                  .has_value();
                tally.positives += exists;
                if (member != built.value.has_value() || member != exists || check_cover_full(m, p).feasible != exists)
                    tally.fail(tag);
                else if (built.value && realization_problem(*built.value, m.m_s, m.m_t, p))
                    tally.fail("construction " + tag);
            }
            return tally.disagreements == 0;
        }

        void packing_case(const Digraph & d, const std::vector<int> & mu, Tally & tally)
        {
            ++tally.instances;
            int k = static_cast<int>(mu.size());
            std::string tag = to_json(d).dump() + " mu=" + Json(mu).dump();
            oracle::PackingQuery q;
            q.k = k;
            q.sizes = mu;
            bool exists = oracle::find_packing(d, q).has_value();
            tally.positives += exists;
            auto r = pack_sizes(d, mu);
            if (r.value.has_value() != exists || check_pack_sizes(d, mu).feasible != exists ||
                (oracle::sizes_violation(d, mu) <= 0) != exists) {
                tally.fail(tag);
                return;
            }
            if (r.value) {
                if (auto why = verify_packing(d, *r.value))
                    tally.fail(*why + " " + tag);
                else if (sizes_of(d.n(), *r.value) != mu)
                    tally.fail("sizes " + tag);
            }
            else if (! r.certificate || r.certificate->violation() <= 0)
                tally.fail("certificate " + tag);
        }

        auto c6(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 6);
            int small = std::max(1, static_cast<int>(2000 * opts.scale));
            for (int i = 0; i < small; ++i) {
                int n = uniform(rng, 2, 4), k = uniform(rng, 1, 2);
                auto d = gen::random_digraph(rng, n, uniform(rng, 0, 6));
                std::vector<int> mu(k);
                for (auto & x : mu)
                    x = uniform(rng, 1, n - 1);
                packing_case(d, mu, tally);
            }
            int large = std::max(1, static_cast<int>(200 * opts.scale));
            for (int i = 0; i < large; ++i) {
                int k = uniform(rng, 1, 3);
                auto d = gen::random_digraph(rng, 5, uniform(rng, 3, 9));
                std::vector<int> mu(k);
                for (auto & x : mu)
                    x = uniform(rng, 1, 4);
                packing_case(d, mu, tally);
            }
            return tally.disagreements == 0;
        }

        auto c7(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 7);
            int count = std::max(1, static_cast<int>(200 * opts.scale));
            for (int i = 0; i < count; ++i) {
                int n = uniform(rng, 2, 5), k = uniform(rng, 1, n == 5 ? 2 : 3);
                auto d = gen::random_digraph(rng, n, uniform(rng, 1, n == 5 ? 8 : 7));
                std::vector<int> mu(k);
                for (auto & x : mu)
                    x = uniform(rng, 1, n - 1);
                std::vector<int> m_in(n);
                oracle::PackingQuery q;
                q.k = k;
                q.sizes = mu;
                std::optional<Packing> sample = gen::coin(rng) ? oracle::find_packing(d, q) : std::nullopt;
                if (sample)
                    m_in = packing_indegrees(n, *sample);
                else {
                    for (int v = 0; v < n; ++v)
                        m_in[v] = uniform(rng, 0, std::min(k, d.in_degree_of(v)));
                    int want = std::accumulate(mu.begin(), mu.end(), 0);
                    for (int tries = 0; tries < 50 && std::accumulate(m_in.begin(), m_in.end(), 0) != want; ++tries) {
                        int v = uniform(rng, 0, n - 1);
                        int sum = std::accumulate(m_in.begin(), m_in.end(), 0);
                        if (sum < want && m_in[v] < std::min(k, d.in_degree_of(v)))
                            ++m_in[v];
                        else if (sum > want && m_in[v] > 0)
                            --m_in[v];
                    }
                }
                // Mismatched sums break the operation's precondition; draw again.
                if (std::accumulate(m_in.begin(), m_in.end(), 0) != std::accumulate(mu.begin(), mu.end(), 0)) {
                    --i;
                    continue;
                }
                ++tally.instances;
                std::string tag = to_json(d).dump() + " mu=" + Json(mu).dump() + " m_in=" + Json(m_in).dump();
                q.indeg = m_in;
                bool exists = oracle::find_packing(d, q).has_value();
                tally.positives += exists;
                auto r = pack_sizes_indeg(d, mu, m_in);
                if (r.value.has_value() != exists || (oracle::indeg_violation(d, mu, m_in) <= 0) != exists) {
                    tally.fail(tag);
                    continue;
                }
                if (r.value) {
                    if (auto why = verify_packing(d, *r.value))
                        tally.fail(*why + " " + tag);
                    else if (sizes_of(n, *r.value) != mu || packing_indegrees(n, *r.value) != m_in)
                        tally.fail("sizes or in-degrees " + tag);
                }
            }
            return tally.disagreements == 0;
        }

        auto c8(const SuiteOptions &, Tally & tally) -> bool
        {
            for (int s = 1; s <= 3; ++s)
                for (int t = 1; t <= 3; ++t) {
                    std::vector<int> ms(s, 0);
                    for (;;) {
                        std::vector<int> mt(t, 0);
                        for (;;) {
                            if (std::accumulate(ms.begin(), ms.end(), 0) == std::accumulate(mt.begin(), mt.end(), 0)) {
                                DegreeSpec m{ms, mt};
                                ++tally.instances;
                                auto expected = oracle::max_term_rank(m);
                                std::optional<int> best;
                                for (int ell = 0; ell <= std::min(s, t); ++ell) {
                                    auto r = check_termrank(m, ell);
                                    auto inst = oracle::instance(m, {});
                                    inst.ell = ell;
                                    bool sweep = oracle::condition("termrank", inst).amount <= 0;
                                    if (sweep != r.feasible)
                                        tally.fail("prefix vs sweep " + dump(m) + " ell=" + std::to_string(ell));
                                    if (r.feasible)
                                        best = ell;
                                }
                                if (best != expected)
                                    tally.fail("max term rank " + dump(m));
                            }
                            int j = 0;
                            while (j < t && mt[j] == 3)
                                mt[j++] = 0;
                            if (j == t)
                                break;
                            ++mt[j];
                        }
                        int i = 0;
                        while (i < s && ms[i] == 3)
                            ms[i++] = 0;
                        if (i == s)
                            break;
                        ++ms[i];
                    }
                }
            return tally.disagreements == 0;
        }

        auto c9(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 9);
            int count = std::max(1, static_cast<int>(200 * opts.scale));
            for (int i = 0; i < count; ++i) {
                int s = uniform(rng, 1, 4), t = uniform(rng, 1, 4);
                auto b = gen::random_bounds(rng, s, t, 0.5, 2);
                int ell = uniform(rng, 0, std::min(s, t));
                ++tally.instances;
                std::string tag = to_json(b).dump() + " ell=" + std::to_string(ell);
                bool exists = oracle::find_bigraph(s, t, oracle::Box::from_bounds(b),
                    [&](const oracle::Rows & rows) { return oracle::matching_number(s, t, rows) >= ell; })
                                  .has_value();
                tally.positives += exists;
                auto r = check_termrank_bounds(b, ell);
                auto inst = oracle::instance(b.normalized(), {});
                inst.ell = ell;
                bool sweep = true;
                for (auto id : {"termrank-lower-t", "termrank-lower-s", "termrank-edges-min", "termrank-edges-max"})
                    sweep = sweep && oracle::condition(id, inst).amount <= 0;
                if (r.feasible != exists || sweep != exists) {
                    tally.fail(tag);
                    continue;
                }
                if (exists) {
                    auto g = construct_termrank(b, ell);
                    if (! g.value)
                        tally.fail("no construction " + tag);
                    else if (auto why = bounds_problem(*g.value, b))
                        tally.fail(*why + " " + tag);
                    else if (max_matching(*g.value).size() < ell)
                        tally.fail("matching too small " + tag);
                }
            }
            return tally.disagreements == 0;
        }

        auto c10(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 10);
            int count = std::max(1, static_cast<int>(3 * opts.scale));
            for (int i = 0; i < count; ++i) {
                auto g = gen::random_bigraph(rng, 200, 200, std::uniform_real_distribution<double>(0.02, 0.5)(rng));
                int nu = max_matching(g).size();
                int ell = std::max(0, nu - uniform(rng, 0, 5));
                auto ds = g.degrees_s(), dt = g.degrees_t();
                auto b = DegreeBounds::unbounded(200, 200);
                for (int v = 0; v < 200; ++v) {
                    b.f_s[v] = std::max(0, ds[v] - uniform(rng, 0, 4));
                    b.g_s[v] = ds[v] + uniform(rng, 0, 4);
                    b.f_t[v] = std::max(0, dt[v] - uniform(rng, 0, 4));
                    b.g_t[v] = dt[v] + uniform(rng, 0, 4);
                }
                ++tally.instances;
                auto start = std::chrono::steady_clock::now();
                auto lifted = lift_termrank_bounds(b, ell);
                DegreeSpec m{std::vector<int>(lifted.f_s.begin(), lifted.f_s.end()),
                    std::vector<int>(lifted.f_t.begin(), lifted.f_t.end())};
                bool ok = check_termrank(m, ell, Search::first).feasible;
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                for (int v = 0; v < 200; ++v)
                    if (m.m_s[v] < b.f_s[v] || m.m_s[v] > b.g_s[v] || (*m.m_t)[v] < b.f_t[v] || (*m.m_t)[v] > b.g_t[v])
                        ok = false;
                if (! ok)
                    tally.fail("lifted degrees rejected on instance " + std::to_string(i));
                if (secs >= 5.0)
                    tally.fail("instance " + std::to_string(i) + " took " + std::to_string(secs) + " s");
            }
            return tally.disagreements == 0;
        }

        auto c11(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 11);
            int count = std::max(1, static_cast<int>(500 * opts.scale));
            for (int i = 0; i < count; ++i) {
                int s = uniform(rng, 1, 4), t = uniform(rng, 1, 4);
                std::vector<Edge> cells;
                for (int a = 0; a < s; ++a)
                    for (int b = 0; b < t; ++b)
                        cells.push_back(Edge{a, b});
                std::shuffle(cells.begin(), cells.end(), rng);
                cells.resize(std::min<std::size_t>(cells.size(), uniform(rng, 0, 10)));
                Bigraph g(s, t, cells, Simplicity::required);
                std::optional<std::vector<int>> m_for;
                std::vector<int> target(t, 2);
                if (gen::coin(rng)) {
                    for (auto & x : target)
                        x = uniform(rng, 0, 3);
                    m_for = target;
                }
                ++tally.instances;
                std::string tag = to_json(g).dump() + " m_for=" + Json(target).dump();
                bool exists = oracle::has_forest(s, t, rows_of(g), target);
                tally.positives += exists;
                auto r = check_t2_forest(g, m_for);
                if (r.feasible != exists) {
                    tally.fail(tag);
                    continue;
                }
                if (exists) {
                    auto f = extract_forest(g, m_for);
                    if (! f.value)
                        tally.fail("no forest " + tag);
                    else if (auto why = forest_problem(g, *f.value, target))
                        tally.fail(*why + " " + tag);
                }
            }

            int hyper = std::max(1, static_cast<int>(200 * opts.scale));
            for (int i = 0; i < hyper; ++i) {
                int n = uniform(rng, 2, 5);
                auto h = gen::random_hypergraph(rng, n, uniform(rng, 1, 5), 4);
                std::vector<Mask> masks;
                for (auto & e : h.edges)
                    masks.push_back(indices_to_mask(e, n));
                ++tally.instances;
                bool wooded = oracle::trimmable(masks);
                bool main = check_t2_forest(hypergraph_to_bigraph(h)).feasible;
                if (wooded != main || wooded != oracle::union_condition(masks))
                    tally.fail("wooded " + to_json(h).dump());
            }

            for (int i = 0; i < hyper; ++i) {
                int n = uniform(rng, 1, 5), ell = uniform(rng, 2, 3);
                std::vector<int> ms(n);
                for (auto & x : ms)
                    x = uniform(rng, 0, 2);
                ++tally.instances;
                std::string tag = "m_s=" + Json(ms).dump() + " ell=" + std::to_string(ell);
                bool exists = oracle::find_uniform_wooded(ms, ell).has_value();
                tally.positives += exists;
                if (check_wooded_uniform(ms, ell).feasible != exists) {
                    tally.fail("uniform " + tag);
                    continue;
                }
                if (! exists)
                    continue;
                auto w = realize_wooded_uniform(ms, ell);
                if (! w.value) {
                    tally.fail("no uniform realization " + tag);
                    continue;
                }
                auto & hg = w.value->hypergraph;
                std::vector<int> deg(n, 0);
                bool ok = hg.n == n && w.value->trimmed.size() == hg.edges.size();
                std::vector<int> parent(n);
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](int v) {
                    while (parent[v] != v)
                        v = parent[v] = parent[parent[v]];
                    return v;
                };
                for (std::size_t e = 0; ok && e < hg.edges.size(); ++e) {
                    auto edge = hg.edges[e];
                    std::ranges::sort(edge);
                    ok = static_cast<int>(edge.size()) == ell && std::ranges::adjacent_find(edge) == edge.end();
                    for (int v : edge)
                        ++deg[v];
                    auto [a, b] = w.value->trimmed[e];
                    ok = ok && a != b && std::ranges::binary_search(edge, a) && std::ranges::binary_search(edge, b) &&
                        find(a) != find(b);
                    if (ok)
                        parent[find(a)] = find(b);
                }
                if (! ok || deg != ms)
                    tally.fail("bad uniform realization " + tag);
            }
            return tally.disagreements == 0;
        }

        auto c12(const SuiteOptions & opts, Tally & tally) -> bool
        {
            Rng rng(opts.seed ^ 12);
            int count = std::max(1, static_cast<int>(200 * opts.scale));
            for (int i = 0; i < count; ++i) {
                int s = uniform(rng, 1, 4), t = uniform(rng, 1, 4);
                auto p = gen::coin(rng) ? SetFunction::term_rank(t, uniform(rng, 0, t))
                                        : gen::random_monotone_fully(rng, t, s);
                auto m = gen::random_spec(rng, s, t, std::max(s, t));
                auto b = gen::random_bounds(rng, s, t, 0.5, 1);
                ++tally.instances;
                auto verdicts = [&](PartStrategy strategy) {
                    CheckOptions o{strategy, Search::maximum};
                    bool s_side = std::ranges::all_of(m.m_s, [&](int d) { return d <= t; }) &&
                        check_cover_s(m.m_s, p, o).feasible;
                    return std::array<bool, 3>{check_cover_full(m, p, o).feasible, check_bounds(b, p, o).feasible, s_side};
                };
                auto full = verdicts(PartStrategy::full);
                tally.positives += full[0];
                if (verdicts(PartStrategy::single_part) != full || verdicts(PartStrategy::monotone) != full)
                    tally.fail(dump(m) + " " + to_json(b).dump() + " p=" + to_json(p).dump());
            }
            return tally.disagreements == 0;
        }

        struct Entry
        {
            const char * name;
            bool (*run)(const SuiteOptions &, Tally &);
            const char * unit;
            double limit;
        };

        const Entry entries[criterion_count] = {
            {"worked counterexample", c1, "instances", 1},
            {"Gale-Ryser biconditional", c2, "degree pairs", 120},
            {"S-degree covering biconditional", c3, "instances", 300},
            {"b0 submodularity", c4, "instances", 120},
            {"membership vs realizability", c5, "instances", 0},
            {"branching packing biconditional", c6, "instances", 600},
            {"in-degree packing variant", c7, "instances", 0},
            {"term rank", c8, "degree pairs", 180},
            {"constrained term rank", c9, "instances", 0},
            {"lifting at 200x200", c10, "instances", 0},
            {"forests and wooded hypergraphs", c11, "instances", 0},
            {"fast-path equivalence", c12, "instances", 0},
        };
    }

    auto run_criterion(int id, const SuiteOptions & opts) -> CriterionResult
    {
        if (id < 1 || id > criterion_count)
            throw InputError("criterion ids run from 1 to " + std::to_string(criterion_count));
        const auto & e = entries[id - 1];
        CriterionResult result;
        result.id = id;
        result.name = e.name;
        Tally tally;
        auto start = std::chrono::steady_clock::now();
        try {
            result.passed = e.run(opts, tally);
            result.detail = tally.summary(e.unit);
        }
        catch (const std::exception & ex) {
            result.passed = false;
            result.detail = tally.summary(e.unit) + "; aborted: " + ex.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (e.limit > 0 && result.seconds >= e.limit) {
            result.passed = false;
            result.detail += "; over the " + std::to_string(static_cast<int>(e.limit)) + " s limit";
        }
        return result;
    }

    auto run_suite(const SuiteOptions & opts, const std::function<void(const CriterionResult &)> & report)
        -> std::vector<CriterionResult>
    {
        std::vector<CriterionResult> results;
        for (int id = 1; id <= criterion_count; ++id) {
            results.push_back(run_criterion(id, opts));
            if (report)
                report(results.back());
        }
        return results;
    }
}
