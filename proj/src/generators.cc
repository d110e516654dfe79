#include <bisynth/generators.hh>

#include <algorithm>
#include <numeric>

namespace bisynth::gen
{
    auto uniform(Rng & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    auto coin(Rng & rng, double p) -> bool
    {
        return std::bernoulli_distribution(p)(rng);
    }

    auto random_bigraph(Rng & rng, int s, int t, double density) -> Bigraph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < t; ++j)
                if (coin(rng, density))
                    edges.push_back(Edge{i, j});
        return Bigraph(s, t, std::move(edges), Simplicity::required);
    }

    auto random_spec(Rng & rng, int s, int t, int max_entry) -> DegreeSpec
    {
        if (coin(rng)) {
            auto g = random_bigraph(rng, s, t, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
            auto ds = g.degrees_s(), dt = g.degrees_t();
            if (std::ranges::all_of(ds, [&](int d) { return d <= max_entry; }) &&
                std::ranges::all_of(dt, [&](int d) { return d <= max_entry; }))
                return DegreeSpec{ds, dt};
        }
        for (;;) {
            std::vector<int> ms(s), mt(t);
            for (auto & x : ms)
                x = uniform(rng, 0, max_entry);
            int total = std::accumulate(ms.begin(), ms.end(), 0);
            if (total > t * max_entry)
                continue;
            for (int k = 0; k < total; ++k) {
                int j;
                do
                    j = uniform(rng, 0, t - 1);
                while (mt[j] >= max_entry);
                ++mt[j];
            }
            return DegreeSpec{ms, mt};
        }
    }

    auto random_digraph(Rng & rng, int n, int arcs) -> Digraph
    {
        std::vector<Arc> a;
        if (n >= 2)
            while (static_cast<int>(a.size()) < arcs) {
                int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
                if (u != v)
                    a.push_back(Arc{u, v});
            }
        return Digraph(n, std::move(a));
    }

    auto random_intersecting_table(Rng & rng, int t, int max_value) -> SetFunction
    {
        int h = uniform(rng, 1, 3);
        auto helper = random_bigraph(rng, h, t, 0.4);
        std::vector<int> w(t);
        for (auto & x : w)
            x = uniform(rng, 0, std::max(1, max_value / 2));
        int c = uniform(rng, -1, std::max(1, max_value / 2));
        int a = uniform(rng, 0, 1);
        std::vector<Value> table(std::size_t{1} << t, 0);
        for (Mask y = 1; y < table.size(); ++y) {
            Value k = popcount(y), v = c - popcount(helper.neighbors(y)) + a * k * (k - 1) / 2;
            for (int j = 0; j < t; ++j)
                if (y >> j & 1)
                    v += w[j];
            table[y] = std::max<Value>(0, v);
        }
        return classified(SetFunction::from_table(t, std::move(table)));
    }

    auto random_monotone_fully(Rng & rng, int t, int max_value) -> SetFunction
    {
        std::vector<int> w(t);
        for (auto & x : w)
            x = uniform(rng, 0, std::max(1, max_value / 2));
        int a = uniform(rng, 0, 1);
        std::vector<Value> table(std::size_t{1} << t, 0);
        for (Mask y = 1; y < table.size(); ++y) {
            Value k = popcount(y), v = a * k * (k - 1) / 2;
            for (int j = 0; j < t; ++j)
                if (y >> j & 1)
                    v += w[j];
            table[y] = v;
        }
        return classified(SetFunction::from_table(t, std::move(table)));
    }

    auto random_set_function(Rng & rng, int t, int max_value) -> SetFunction
    {
        switch (uniform(rng, 0, 4)) {
        case 0:
            return SetFunction::term_rank(t, uniform(rng, 0, t));
        case 1: {
            std::vector<int> m_for(t);
            for (auto & x : m_for)
                x = uniform(rng, 0, 2);
            return SetFunction::forest(m_for);
        }
        case 2: {
            if (t < 2)
                return SetFunction::zero(t);
            auto d = random_digraph(rng, t, uniform(rng, 0, 2 * t));
            return SetFunction::branching(d, uniform(rng, 1, 2));
        }
        case 3:
            return random_monotone_fully(rng, t, max_value);
        default:
            return random_intersecting_table(rng, t, max_value);
        }
    }

    auto random_bounds(Rng & rng, int s, int t, double density, int slack) -> DegreeBounds
    {
        auto g = random_bigraph(rng, s, t, density);
        auto ds = g.degrees_s(), dt = g.degrees_t();
        auto b = DegreeBounds::unbounded(s, t);
        bool tighten = coin(rng, 0.4);
        auto fill = [&](const std::vector<int> & d, std::vector<Value> & lo, std::vector<Value> & hi) {
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (! coin(rng, 0.15))
                    lo[i] = std::max(0, d[i] - uniform(rng, 0, slack)) + (tighten && coin(rng, 0.3) ? 1 : 0);
                if (! coin(rng, 0.15))
                    hi[i] = std::max<Value>(lo[i], d[i] + uniform(rng, 0, slack));
            }
        };
        fill(ds, b.f_s, b.g_s);
        fill(dt, b.f_t, b.g_t);
        Value e = g.edge_count();
        if (coin(rng, 0.5))
            b.alpha = std::max<Value>(0, e - uniform(rng, 0, slack)) + (tighten ? uniform(rng, 0, 2) : 0);
        if (coin(rng, 0.5))
            b.beta = std::max<Value>(is_finite(b.alpha) ? b.alpha : 0, e + uniform(rng, 0, slack));
        return b;
    }

    auto random_hypergraph(Rng & rng, int n, int edges, int max_size) -> Hypergraph
    {
        Hypergraph h{n, {}};
        std::vector<int> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        for (int e = 0; e < edges; ++e) {
            std::shuffle(vs.begin(), vs.end(), rng);
            int k = uniform(rng, 2, std::min(n, max_size));
            std::vector<int> edge(vs.begin(), vs.begin() + k);
            std::ranges::sort(edge);
            h.edges.push_back(edge);
        }
        return h;
    }
}
