#include <bisynth/forests.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace bisynth
{
    namespace
    {
        struct UnionFind
        {
            std::vector<int> parent;

            explicit UnionFind(int n) :
                parent(n)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> bool
            {
                a = find(a), b = find(b);
                if (a == b)
                    return false;
                parent[a] = b;
                return true;
            }
        };

        auto acyclic(int s, int t, const std::vector<Edge> & edges) -> bool
        {
            UnionFind uf(s + t);
            for (auto & e : edges)
                if (! uf.unite(e.s, s + e.t))
                    return false;
            return true;
        }

        auto default_m_for(const std::optional<std::vector<int>> & m_for, int t) -> std::vector<int>
        {
            if (! m_for)
                return std::vector<int>(t, 2);
            if (static_cast<int>(m_for->size()) != t)
                throw InputError("m_for length differs from |T|");
            for (int v : *m_for)
                if (v < 0)
                    throw InputError("negative m_for entry");
            return *m_for;
        }

        // max over non-empty W within z of sum_{t in W} (m_for(t) - 1).
        auto best_excess(const std::vector<int> & m_for, Mask z) -> std::pair<Value, Mask>
        {
            Value sum = 0;
            Mask w = 0;
            for (int t : mask_to_indices(z))
                if (m_for[t] >= 1) {
                    sum += m_for[t] - 1;
                    w |= bit(t);
                }
            if (w)
                return {sum, w};
            // Every m_for in z is zero: any single node gives -1.
            return {-1, z & (~z + 1)};
        }

        auto order_desc(const std::vector<int> & w) -> std::vector<int>
        {
            std::vector<int> order(w.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
            return order;
        }
    }

    void Hypergraph::validate() const
    {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto e = edges[i];
            std::sort(e.begin(), e.end());
            if (e.size() < 2)
                throw InputError("hyperedge " + std::to_string(i) + " has fewer than two vertices");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw InputError("hyperedge " + std::to_string(i) + " repeats a vertex");
            if (e.front() < 0 || e.back() >= n)
                throw InputError("hyperedge " + std::to_string(i) + " has a vertex out of range");
        }
    }

    auto hypergraph_to_bigraph(const Hypergraph & h) -> Bigraph
    {
        h.validate();
        std::vector<Edge> edges;
        for (std::size_t j = 0; j < h.edges.size(); ++j)
            for (int v : h.edges[j])
                edges.push_back(Edge{v, static_cast<int>(j)});
        std::sort(edges.begin(), edges.end());
        return Bigraph(h.n, static_cast<int>(h.edges.size()), std::move(edges), Simplicity::required);
    }

    auto check_t2_forest(const Bigraph & g, std::optional<std::vector<int>> m_for_opt, Search search) -> CheckResult
    {
        int t = g.t_size();
        if (t > 16)
            throw CapacityError("forest test scans subsets of T and needs |T| <= 16");
        auto m_for = default_m_for(m_for_opt, t);
        std::vector<Mask> nbr(t, 0);
        for (auto & e : g.edges())
            nbr[e.t] |= bit(e.s);
        std::vector<Mask> gamma(std::size_t{1} << t, 0);
        std::optional<Certificate> best;
        for (Mask y = 1; y < gamma.size(); ++y) {
            Mask low = y & (~y + 1);
            gamma[y] = gamma[y ^ low] | nbr[std::countr_zero(low)];
            Value need = sum_over(m_for, y) - popcount(y) + 1, have = popcount(gamma[y]);
            if (need > have && (! best || need - have > best->violation())) {
                best = Certificate{"forest-neighbourhood", {}, mask_to_indices(y), {}, need, have};
                if (search == Search::first)
                    break;
            }
        }
        return CheckResult{! best, best};
    }

    auto matroid_intersection(int ground, const IndependenceOracle & m1, const IndependenceOracle & m2)
        -> std::vector<bool>
    {
        std::vector<bool> in(ground, false);
        for (int e = 0; e < ground; ++e) {
            in[e] = true;
            if (! m1(in) || ! m2(in))
                in[e] = false;
        }

        while (true) {
            std::vector<bool> source(ground, false), sink(ground, false);
            for (int y = 0; y < ground; ++y)
                if (! in[y]) {
                    in[y] = true;
                    source[y] = m1(in);
                    sink[y] = m2(in);
                    in[y] = false;
                }

            // x -> y when I - x + y is independent in m1, y -> x when in m2.
            std::vector<std::vector<int>> out(ground);
            for (int x = 0; x < ground; ++x) {
                if (! in[x])
                    continue;
                for (int y = 0; y < ground; ++y) {
                    if (in[y])
                        continue;
                    in[x] = false;
                    in[y] = true;
                    if (m1(in))
                        out[x].push_back(y);
                    if (m2(in))
                        out[y].push_back(x);
                    in[y] = false;
                    in[x] = true;
                }
            }

            std::vector<int> prev(ground, -2);
            std::deque<int> queue;
            for (int y = 0; y < ground; ++y)
                if (source[y]) {
                    prev[y] = -1;
                    queue.push_back(y);
                }
            int end = -1;
            while (! queue.empty() && end == -1) {
                int u = queue.front();
                queue.pop_front();
                if (! in[u] && sink[u]) {
                    end = u;
                    break;
                }
                for (int v : out[u])
                    if (prev[v] == -2) {
                        prev[v] = u;
                        queue.push_back(v);
                    }
            }
            if (end == -1)
                return in;
            for (int v = end; v != -1; v = prev[v])
                in[v] = ! in[v];
        }
    }

    auto extract_forest(const Bigraph & g, std::optional<std::vector<int>> m_for_opt) -> Outcome<std::vector<Edge>>
    {
        Outcome<std::vector<Edge>> out;
        int s = g.s_size(), t = g.t_size();
        auto m_for = default_m_for(m_for_opt, t);
        if (auto r = check_t2_forest(g, m_for); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        const auto & edges = g.edges();
        int ground = static_cast<int>(edges.size());
        auto graphic = [&](const std::vector<bool> & in) {
            UnionFind uf(s + t);
            for (int e = 0; e < ground; ++e)
                if (in[e] && ! uf.unite(edges[e].s, s + edges[e].t))
                    return false;
            return true;
        };
        auto capped = [&](const std::vector<bool> & in) {
            std::vector<int> d(t, 0);
            for (int e = 0; e < ground; ++e)
                if (in[e] && ++d[edges[e].t] > m_for[edges[e].t])
                    return false;
            return true;
        };
        auto in = matroid_intersection(ground, graphic, capped);
        std::vector<Edge> forest;
        for (int e = 0; e < ground; ++e)
            if (in[e])
                forest.push_back(edges[e]);
        std::sort(forest.begin(), forest.end());

        std::vector<int> d(t, 0);
        for (auto & e : forest)
            ++d[e.t];
        if (d != m_for || ! acyclic(s, t, forest))
            throw DefectError("extracted forest fails verification although the forest test passed");
        out.value = std::move(forest);
        return out;
    }

    auto forest_parents(int s_size, int t_size, const std::vector<Edge> & forest) -> std::vector<int>
    {
        int n = s_size + t_size;
        std::vector<std::vector<int>> adj(n);
        for (auto & e : forest) {
            adj[e.s].push_back(s_size + e.t);
            adj[s_size + e.t].push_back(e.s);
        }
        std::vector<int> parent(n, -1);
        std::vector<bool> seen(n, false);
        for (int r = 0; r < n; ++r) {
            if (seen[r])
                continue;
            seen[r] = true;
            std::deque<int> queue{r};
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : adj[u])
                    if (! seen[v]) {
                        seen[v] = true;
                        parent[v] = u;
                        queue.push_back(v);
                    }
            }
        }
        return parent;
    }

    namespace
    {
        void validate_forest_spec(const DegreeSpec & m, const std::vector<int> & m_for)
        {
            if (! m.m_t)
                throw InputError("forest realization needs degrees on both sides");
            m.validate();
            if (static_cast<int>(m_for.size()) != m.t_size())
                throw InputError("m_for length differs from |T|");
            if (m.t_size() > 16)
                throw CapacityError("forest realization scans subsets of T and needs |T| <= 16");
            for (int j = 0; j < m.t_size(); ++j)
                if (m_for[j] < 0 || m_for[j] > (*m.m_t)[j])
                    throw PreconditionError("m_for(" + std::to_string(j) + ") must lie in [0, m_t(" +
                        std::to_string(j) + ")]");
        }
    }

    auto check_with_forest(const DegreeSpec & m, const std::vector<int> & m_for, Search search) -> CheckResult
    {
        validate_forest_spec(m, m_for);
        if (auto r = check_gale_ryser(m, search); ! r)
            return r;

        int s = m.s_size(), t = m.t_size();
        const auto & mt = *m.m_t;
        auto order = order_desc(m.m_s);
        std::vector<Value> ps(s + 1, 0);
        for (int i = 0; i < s; ++i)
            ps[i + 1] = ps[i] + m.m_s[order[i]];
        Value gamma = m.gamma();
        Mask all = full_mask(t);

        // For non-empty X a subpartition of T - Y is never better than a
        // single part; the best part keeps every t with m_for(t) >= 1.
        // Y = T is already covered by the Gale-Ryser test.
        std::optional<Certificate> best;
        for (Mask y = 0; y < all; ++y) {
            auto [excess, w] = best_excess(m_for, all & ~y);
            Value base = sum_over(mt, y);
            for (int x = 1; x <= s; ++x) {
                Value lhs = ps[x] + base - Value{x} * popcount(y) + excess - x + 1;
                if (lhs > gamma && (! best || lhs - gamma > best->violation())) {
                    std::vector<int> xs(order.begin(), order.begin() + x);
                    std::sort(xs.begin(), xs.end());
                    best = Certificate{"forest-degrees", xs, mask_to_indices(y), {mask_to_indices(w)}, lhs, gamma};
                    if (search == Search::first)
                        return CheckResult{false, best};
                }
            }
        }
        return CheckResult{! best, best};
    }

    auto realize_with_forest(const DegreeSpec & m, const std::vector<int> & m_for, ConstructOptions opts)
        -> Outcome<ForestRealization>
    {
        Outcome<ForestRealization> out;
        if (auto r = check_with_forest(m, m_for); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        int s = m.s_size(), t = m.t_size();
        if (std::all_of(m_for.begin(), m_for.end(), [](int v) { return v == 2; })) {
            if (s < t + 1)
                out.notes.push_back("|S| < |T| + 1; the m_for = 2 case is usually stated under |S| >= |T| + 1");
            if (std::any_of(m.m_t->begin(), m.m_t->end(), [](int v) { return v < 2; }))
                out.notes.push_back("some m_t(t) < 2; the m_for = 2 case is usually stated under m_t >= 2");
        }
        auto built = construct_cover_full(m, SetFunction::forest(m_for), opts);
        if (! built.value)
            throw DefectError("forest condition passed but the covering construction failed");
        auto forest = extract_forest(*built.value, m_for);
        if (! forest.value)
            throw DefectError("constructed graph contains no forest with the prescribed degrees");
        auto & g = *built.value;
        if (! g.is_simple() || g.degrees_s() != m.m_s || g.degrees_t() != *m.m_t)
            throw DefectError("forest realization does not fit the degrees");
        out.value = ForestRealization{std::move(g), std::move(*forest.value)};
        return out;
    }

    auto check_wooded_uniform(const std::vector<int> & m_s, int ell) -> CheckResult
    {
        if (ell < 2)
            throw PreconditionError("hyperedges need at least two vertices");
        for (int v : m_s)
            if (v < 0)
                throw InputError("negative degree in m_s");
        Value gamma = std::accumulate(m_s.begin(), m_s.end(), Value{0});
        if (gamma % ell != 0)
            return CheckResult{false, Certificate{"divisibility", {}, {}, {}, gamma % ell, 0}};
        Value tau = gamma / ell;
        std::vector<int> positive;
        for (int i = 0; i < static_cast<int>(m_s.size()); ++i)
            if (m_s[i] > 0)
                positive.push_back(i);
        for (int i : positive)
            if (m_s[i] > tau)
                return CheckResult{false, Certificate{"degree-at-most-tau", {i}, {}, {}, m_s[i], tau}};
        if (! positive.empty() && tau > static_cast<Value>(positive.size()) - 1)
            return CheckResult{false, Certificate{"tau-bound", positive, {}, {}, tau,
                static_cast<Value>(positive.size()) - 1}};
        return {};
    }

    auto realize_wooded_uniform(const std::vector<int> & m_s, int ell, ConstructOptions opts)
        -> Outcome<WoodedHypergraph>
    {
        Outcome<WoodedHypergraph> out;
        if (auto r = check_wooded_uniform(m_s, ell); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        int n = static_cast<int>(m_s.size());
        std::vector<int> positive;
        DegreeSpec m;
        for (int i = 0; i < n; ++i)
            if (m_s[i] > 0) {
                positive.push_back(i);
                m.m_s.push_back(m_s[i]);
            }
        int tau = static_cast<int>(m.gamma() / ell);
        WoodedHypergraph result{Hypergraph{n, {}}, {}};
        if (tau > 0) {
            m.m_t = std::vector<int>(tau, ell);
            auto built = realize_with_forest(m, std::vector<int>(tau, 2), opts);
            if (! built.value)
                throw DefectError("uniform wooded conditions hold but the forest realization failed");
            result.hypergraph.edges.assign(tau, {});
            for (auto & e : built.value->graph.edges())
                result.hypergraph.edges[e.t].push_back(positive[e.s]);
            result.trimmed.assign(tau, {-1, -1});
            for (auto & e : built.value->forest) {
                auto & pair = result.trimmed[e.t];
                (pair.first == -1 ? pair.first : pair.second) = positive[e.s];
            }
        }
        for (auto & e : result.hypergraph.edges)
            std::sort(e.begin(), e.end());
        std::vector<Edge> trimmed;
        for (int j = 0; j < tau; ++j) {
            trimmed.push_back(Edge{result.trimmed[j].first, j});
            trimmed.push_back(Edge{result.trimmed[j].second, j});
        }
        if (! acyclic(n, tau, trimmed))
            throw DefectError("trimmed hypergraph is not a forest");
        out.value = std::move(result);
        return out;
    }

    auto evaluate_forest_certificate(const Certificate & c, const DegreeSpec & m, const std::vector<int> & m_for)
        -> std::pair<Value, Value>
    {
        if (c.condition == "gale-ryser")
            return evaluate_certificate(c, &m, nullptr, SetFunction::zero(m.t_size()));
        if (c.condition != "forest-degrees" || c.parts.size() != 1)
            throw InputError("not a forest-realization certificate");
        Mask x = indices_to_mask(c.x, m.s_size()), y = indices_to_mask(c.y, m.t_size());
        Mask w = indices_to_mask(c.parts[0], m.t_size());
        if (! x || ! w || (w & y))
            throw InputError("forest certificate needs non-empty X and a part disjoint from Y");
        Value nx = popcount(x);
        return {sum_over(m.m_s, x) + sum_over(*m.m_t, y) - nx * popcount(y) + sum_over(m_for, w) - popcount(w) - nx + 1,
            m.gamma()};
    }
}
