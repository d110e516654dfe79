#include <bisynth/termrank.hh>

#include <algorithm>
#include <numeric>
#include <string>

namespace bisynth
{
    namespace
    {
        auto order_desc(const std::vector<Value> & w) -> std::vector<int>
        {
            std::vector<int> order(w.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
            return order;
        }

        struct Prefix
        {
            std::vector<int> order;
            std::vector<Value> sums;

            explicit Prefix(const std::vector<Value> & w) :
                order(order_desc(w)),
                sums(w.size() + 1, 0)
            {
                for (std::size_t i = 0; i < order.size(); ++i)
                    sums[i + 1] = sums[i] + w[order[i]];
            }

            auto set(int k) const -> std::vector<int>
            {
                std::vector<int> r(order.begin(), order.begin() + k);
                std::sort(r.begin(), r.end());
                return r;
            }
        };

        auto widen(const std::vector<int> & v) -> std::vector<Value> { return {v.begin(), v.end()}; }

        auto plus_part(int ell, Value i, Value j) -> Value { return std::max<Value>(0, ell - i - j); }

        void require_ell(int ell, int s, int t)
        {
            if (ell < 0 || ell > std::min(s, t))
                throw PreconditionError("term rank target " + std::to_string(ell) + " outside [0, min(|S|,|T|)]");
        }

        enum class Cond
        {
            lower_t,
            lower_s,
            edges_min,
            edges_max
        };

        auto name(Cond c) -> std::string
        {
            switch (c) {
            case Cond::lower_t: return "termrank-lower-t";
            case Cond::lower_s: return "termrank-lower-s";
            case Cond::edges_min: return "termrank-edges-min";
            case Cond::edges_max: return "termrank-edges-max";
            }
            return "";
        }

        // Sweeps (i, j) over prefixes xs, ys; eval gives (lhs, rhs).
        template <typename F_>
        auto prefix_sweep(const Prefix & xs, const Prefix & ys, const std::string & condition, Search search, F_ && eval)
            -> std::optional<Certificate>
        {
            std::optional<Certificate> best;
            int s = static_cast<int>(xs.order.size()), t = static_cast<int>(ys.order.size());
            int bi = 0, bj = 0;
            Value bl = 0, br = 0;
            bool found = false;
            for (int i = 0; i <= s; ++i)
                for (int j = 0; j <= t; ++j) {
                    auto [lhs, rhs] = eval(i, j);
                    if (lhs > rhs && (! found || lhs - rhs > bl - br)) {
                        found = true;
                        bi = i, bj = j, bl = lhs, br = rhs;
                        if (search == Search::first)
                            goto done;
                    }
                }
        done:
            if (found)
                best = Certificate{condition, xs.set(bi), ys.set(bj), {}, bl, br};
            return best;
        }

        auto bounds_violation(const DegreeBounds & b, int ell, Cond c, Search search) -> std::optional<Certificate>
        {
            Value gs_total = std::accumulate(b.g_s.begin(), b.g_s.end(), Value{0});
            Value gt_total = std::accumulate(b.g_t.begin(), b.g_t.end(), Value{0});
            switch (c) {
            case Cond::lower_t: {
                Prefix xs(b.g_s), ys(b.f_t);
                return prefix_sweep(xs, ys, name(c), search, [&](Value i, Value j) -> std::pair<Value, Value> {
                    return {ys.sums[j] - i * j + plus_part(ell, i, j), gs_total - xs.sums[i]};
                });
            }
            case Cond::lower_s: {
                Prefix xs(b.f_s), ys(b.g_t);
                return prefix_sweep(xs, ys, name(c), search, [&](Value i, Value j) -> std::pair<Value, Value> {
                    return {xs.sums[i] - i * j + plus_part(ell, i, j), gt_total - ys.sums[j]};
                });
            }
            case Cond::edges_min: {
                Prefix xs(b.g_s), ys(b.g_t);
                return prefix_sweep(xs, ys, name(c), search, [&](Value i, Value j) -> std::pair<Value, Value> {
                    return {b.alpha, (gs_total - xs.sums[i]) + (gt_total - ys.sums[j]) + i * j - plus_part(ell, i, j)};
                });
            }
            case Cond::edges_max: {
                Prefix xs(b.f_s), ys(b.f_t);
                return prefix_sweep(xs, ys, name(c), search, [&](Value i, Value j) -> std::pair<Value, Value> {
                    return {xs.sums[i] + ys.sums[j] - i * j + plus_part(ell, i, j), b.beta};
                });
            }
            }
            return std::nullopt;
        }

        auto first_violation(const DegreeBounds & b, int ell, std::initializer_list<Cond> conds, Search search)
            -> std::optional<Certificate>
        {
            for (auto c : conds)
                if (auto v = bounds_violation(b, ell, c, search))
                    return v;
            return std::nullopt;
        }

        auto verified(const Bigraph & g, int ell) -> bool
        {
            return g.is_simple() && max_matching(g).size() >= ell;
        }

        // Above this size the covering reduction's explicit tables get
        // expensive; the interchange path is tried first.
        constexpr int covering_limit = 10;
    }

    auto check_termrank(const DegreeSpec & m, int ell, Search search) -> CheckResult
    {
        if (! m.m_t)
            throw InputError("term rank test needs degrees on both sides");
        m.validate();
        require_ell(ell, m.s_size(), m.t_size());
        Prefix xs(widen(m.m_s)), ys(widen(*m.m_t));
        Value gamma = m.gamma();
        auto c = prefix_sweep(xs, ys, "termrank", search, [&](Value i, Value j) -> std::pair<Value, Value> {
            return {xs.sums[i] + ys.sums[j] - i * j + plus_part(ell, i, j), gamma};
        });
        return CheckResult{! c, c};
    }

    auto check_termrank_bounds(const DegreeBounds & raw, int ell, Search search) -> CheckResult
    {
        auto b = raw.normalized();
        require_ell(ell, b.s_size(), b.t_size());
        auto c = first_violation(b, ell, {Cond::lower_t, Cond::lower_s, Cond::edges_min, Cond::edges_max}, search);
        return CheckResult{! c, c};
    }

    auto lift_termrank_bounds(const DegreeBounds & raw, int ell) -> DegreeBounds
    {
        auto b = raw.normalized();
        require_ell(ell, b.s_size(), b.t_size());
        if (first_violation(b, ell, {Cond::lower_t, Cond::lower_s, Cond::edges_min, Cond::edges_max}, Search::first))
            throw PreconditionError("lifting needs the term rank conditions to hold");
        auto holds = [&]() { return ! first_violation(b, ell, {Cond::lower_t, Cond::lower_s, Cond::edges_max}, Search::first); };
        auto raise = [&](std::vector<Value> & f, const std::vector<Value> & g, int v) {
            Value lo = f[v], hi = g[v];
            while (lo < hi) {
                Value mid = lo + (hi - lo + 1) / 2;
                f[v] = mid;
                if (holds())
                    lo = mid;
                else
                    hi = mid - 1;
            }
            f[v] = lo;
        };
        for (int v = 0; v < b.s_size(); ++v)
            raise(b.f_s, b.g_s, v);
        for (int v = 0; v < b.t_size(); ++v)
            raise(b.f_t, b.g_t, v);
        return b;
    }

    auto construct_termrank(const DegreeSpec & m, int ell, ConstructOptions opts) -> Outcome<Bigraph>
    {
        Outcome<Bigraph> out;
        if (auto r = check_termrank(m, ell); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        auto covering = [&]() {
            auto built = construct_cover_full(m, SetFunction::term_rank(m.t_size(), ell), opts);
            if (! built.value)
                throw DefectError("term rank covering reduction rejected a feasible instance");
            return *built.value;
        };

        std::optional<Bigraph> g;
        if (m.t_size() <= covering_limit)
            g = covering();
        else {
            g = *construct_gale_ryser(m).value;
            while (max_matching(*g).size() < ell) {
                auto next = interchange_step(*g);
                if (! next)
                    break;
                g = std::move(next);
            }
            if (max_matching(*g).size() < ell) {
                if (m.t_size() > 16)
                    throw DefectError("interchanges stalled below the target matching size and |T| > 16");
                out.notes.push_back("interchanges stalled; used the covering reduction");
                g = covering();
            }
        }
        if (! verified(*g, ell) || g->degrees_s() != m.m_s || g->degrees_t() != *m.m_t)
            throw DefectError("term rank construction failed verification");
        out.value = std::move(g);
        return out;
    }

    auto construct_termrank(const DegreeBounds & raw, int ell, ConstructOptions opts) -> Outcome<Bigraph>
    {
        Outcome<Bigraph> out;
        auto b = raw.normalized();
        if (auto r = check_termrank_bounds(b, ell); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        auto lifted = lift_termrank_bounds(b, ell);
        DegreeSpec m;
        for (auto v : lifted.f_s)
            m.m_s.push_back(static_cast<int>(v));
        m.m_t = std::vector<int>{};
        for (auto v : lifted.f_t)
            m.m_t->push_back(static_cast<int>(v));
        if (! m.balanced())
            throw DefectError("lifted term rank bounds are unbalanced");
        auto built = construct_termrank(m, ell, opts);
        if (! built.value)
            throw DefectError("lifted degree vector fails the term rank test");
        auto & g = *built.value;
        auto ds = g.degrees_s(), dt = g.degrees_t();
        for (int i = 0; i < g.s_size(); ++i)
            if (ds[i] < b.f_s[i] || ds[i] > b.g_s[i])
                throw DefectError("term rank construction violates S bounds");
        for (int j = 0; j < g.t_size(); ++j)
            if (dt[j] < b.f_t[j] || dt[j] > b.g_t[j])
                throw DefectError("term rank construction violates T bounds");
        if (g.edge_count() < b.alpha || g.edge_count() > b.beta)
            throw DefectError("term rank construction violates the edge-count bounds");
        out.value = std::move(built.value);
        out.notes = std::move(built.notes);
        return out;
    }

    auto interchange_step(const Bigraph & g) -> std::optional<Bigraph>
    {
        if (! g.is_simple())
            throw PreconditionError("interchange needs a simple graph");
        int nu = max_matching(g).size();
        std::vector<std::vector<bool>> adj(g.s_size(), std::vector<bool>(g.t_size(), false));
        for (auto & e : g.edges())
            adj[e.s][e.t] = true;
        const auto & edges = g.edges();
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                auto [s1, t1] = edges[a];
                auto [s2, t2] = edges[b];
                if (s1 == s2 || t1 == t2 || adj[s1][t2] || adj[s2][t1])
                    continue;
                auto switched = edges;
                switched[a] = Edge{s1, t2};
                switched[b] = Edge{s2, t1};
                std::sort(switched.begin(), switched.end());
                Bigraph h(g.s_size(), g.t_size(), std::move(switched));
                if (max_matching(h).size() > nu)
                    return h;
            }
        return std::nullopt;
    }

    auto evaluate_termrank_certificate(const Certificate & c, const DegreeSpec * spec, const DegreeBounds * bounds,
        int ell) -> std::pair<Value, Value>
    {
        if (c.condition == "termrank") {
            if (! spec || ! spec->m_t)
                throw InputError("termrank condition needs a two-sided degree specification");
            Mask x = indices_to_mask(c.x, spec->s_size()), y = indices_to_mask(c.y, spec->t_size());
            Value i = popcount(x), j = popcount(y);
            return {sum_over(spec->m_s, x) + sum_over(*spec->m_t, y) - i * j + plus_part(ell, i, j), spec->gamma()};
        }
        if (! bounds)
            throw InputError("condition " + c.condition + " needs degree bounds");
        auto b = bounds->normalized();
        int s = b.s_size(), t = b.t_size();
        // Index lists may exceed 64 nodes here, so sums are taken directly.
        auto sum = [](const std::vector<Value> & w, const std::vector<int> & idx) {
            Value r = 0;
            for (int i : idx)
                r += w.at(i);
            return r;
        };
        auto complement = [](const std::vector<int> & idx, int n) {
            std::vector<bool> in(n, false);
            for (int i : idx)
                in.at(i) = true;
            std::vector<int> r;
            for (int i = 0; i < n; ++i)
                if (! in[i])
                    r.push_back(i);
            return r;
        };
        Value i = static_cast<Value>(c.x.size()), j = static_cast<Value>(c.y.size());
        auto sx = complement(c.x, s), ty = complement(c.y, t);
        if (c.condition == "termrank-lower-t")
            return {sum(b.f_t, c.y) - i * j + plus_part(ell, i, j), sum(b.g_s, sx)};
        if (c.condition == "termrank-lower-s")
            return {sum(b.f_s, c.x) - i * j + plus_part(ell, i, j), sum(b.g_t, ty)};
        if (c.condition == "termrank-edges-min")
            return {b.alpha, sum(b.g_s, sx) + sum(b.g_t, ty) + i * j - plus_part(ell, i, j)};
        if (c.condition == "termrank-edges-max")
            return {sum(b.f_s, c.x) + sum(b.f_t, c.y) - i * j + plus_part(ell, i, j), b.beta};
        throw InputError("unknown condition " + c.condition);
    }

    auto to_matrix(const Bigraph & g) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> rows(g.s_size(), std::vector<int>(g.t_size(), 0));
        for (auto & e : g.edges())
            ++rows[e.s][e.t];
        return rows;
    }

    auto from_matrix(const std::vector<std::vector<int>> & rows, int t_size) -> Bigraph
    {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != t_size)
                throw InputError("matrix row " + std::to_string(i) + " has the wrong length");
            for (int j = 0; j < t_size; ++j) {
                if (rows[i][j] < 0)
                    throw InputError("negative matrix entry");
                for (int k = 0; k < rows[i][j]; ++k)
                    edges.push_back(Edge{static_cast<int>(i), j});
            }
        }
        return Bigraph(static_cast<int>(rows.size()), t_size, std::move(edges));
    }
}
