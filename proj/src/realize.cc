#include <bisynth/realize.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace bisynth
{
    namespace
    {
        // Indices sorted by decreasing weight, ties by smallest index.
        template <typename T_>
        auto sorted_order(const std::vector<T_> & w) -> std::vector<int>
        {
            std::vector<int> order(w.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
            return order;
        }

        template <typename T_>
        auto prefix_sums(const std::vector<int> & order, const std::vector<T_> & w) -> std::vector<Value>
        {
            std::vector<Value> ps(order.size() + 1, 0);
            for (std::size_t i = 0; i < order.size(); ++i)
                ps[i + 1] = ps[i] + w[order[i]];
            return ps;
        }

        template <typename T_>
        auto mask_sums(const std::vector<T_> & w) -> std::vector<Value>
        {
            int t = static_cast<int>(w.size());
            std::vector<Value> sums(std::size_t{1} << t, 0);
            for (Mask y = 1; y < sums.size(); ++y) {
                Mask low = y & (~y + 1);
                sums[y] = sums[y ^ low] + w[std::countr_zero(low)];
            }
            return sums;
        }

        auto prefix(const std::vector<int> & order, int x) -> std::vector<int>
        {
            std::vector<int> r(order.begin(), order.begin() + x);
            std::sort(r.begin(), r.end());
            return r;
        }

        auto to_lists(const std::vector<Mask> & parts) -> std::vector<std::vector<int>>
        {
            std::vector<std::vector<int>> r;
            for (auto m : parts)
                r.push_back(mask_to_indices(m));
            return r;
        }

        auto effective_flags(const SetFunction & p) -> Flags
        {
            auto f = p.flags();
            if (f.intersecting == Tri::unverified || f.fully == Tri::unverified || f.monotone == Tri::unverified)
                f = classify(p);
            return f;
        }

        auto resolve(PartStrategy s, const Flags & f) -> PartStrategy
        {
            if (s != PartStrategy::automatic)
                return s;
            if (f.fully == Tri::yes && f.monotone == Tri::yes)
                return PartStrategy::monotone;
            if (f.fully == Tri::yes)
                return PartStrategy::single_part;
            return PartStrategy::full;
        }

        void require_intersecting(const Flags & f)
        {
            if (f.intersecting == Tri::no)
                throw PreconditionError("p is not intersecting supermodular");
        }

        // Max over subpartitions P of Z of p(P) - |P| x.
        class PartTerm
        {
        public:
            PartTerm(int t, std::vector<Value> table, PartStrategy strategy) :
                _strategy(strategy),
                _t(t),
                _p(std::move(table))
            {
                if (_strategy == PartStrategy::full)
                    _dp.emplace(_t, _p);
                else if (_strategy == PartStrategy::single_part) {
                    _single.assign(_p.size(), neg_inf);
                    _arg.assign(_p.size(), 0);
                    for (Mask z = 1; z < _p.size(); ++z) {
                        _single[z] = _p[z];
                        _arg[z] = z;
                        for (Mask m = z; m; m &= m - 1) {
                            Mask rest = z & ~(m & (~m + 1));
                            if (rest && _single[rest] > _single[z]) {
                                _single[z] = _single[rest];
                                _arg[z] = _arg[rest];
                            }
                        }
                    }
                }
            }

            auto value(Mask z, Value x) const -> Value
            {
                switch (_strategy) {
                case PartStrategy::full: {
                    Value h = 0;
                    for (int q = 1; q <= popcount(z); ++q) {
                        Value v = _dp->value(z, q);
                        if (v > neg_inf)
                            h = std::max(h, v - q * x);
                    }
                    return h;
                }
                case PartStrategy::single_part:
                    return z ? std::max<Value>(0, _single[z] - x) : 0;
                default:
                    return z ? std::max<Value>(0, _p[z] - x) : 0;
                }
            }

            auto parts(Mask z, Value x) const -> std::vector<Mask>
            {
                switch (_strategy) {
                case PartStrategy::full: {
                    Value h = 0;
                    int best_q = 0;
                    for (int q = 1; q <= popcount(z); ++q) {
                        Value v = _dp->value(z, q);
                        if (v > neg_inf && v - q * x > h) {
                            h = v - q * x;
                            best_q = q;
                        }
                    }
                    return best_q ? _dp->recover(z, best_q) : std::vector<Mask>{};
                }
                case PartStrategy::single_part:
                    if (z && _single[z] - x > 0)
                        return {_arg[z]};
                    return {};
                default:
                    if (z && _p[z] - x > 0)
                        return {z};
                    return {};
                }
            }

        private:
            PartStrategy _strategy;
            int _t;
            std::vector<Value> _p;
            std::optional<SubpartitionTable> _dp;
            std::vector<Value> _single;
            std::vector<Mask> _arg;
        };

        struct Hit
        {
            int x;
            Mask y;
            Value lhs, rhs;
        };

        // Scans every Y and every |X|; eval returns (lhs, rhs) for the best
        // X of that size together with the part term h.
        template <typename F_>
        auto sweep(int s, int t, const PartTerm & term, bool y_empty_only, Search search, F_ && eval)
            -> std::optional<Hit>
        {
            std::optional<Hit> best;
            Mask all = full_mask(t);
            for (Mask y = 0; y <= all; ++y) {
                if (y_empty_only && y)
                    break;
                Mask z = all & ~y;
                for (int x = 0; x <= s; ++x) {
                    auto [lhs, rhs] = eval(x, y, term.value(z, x));
                    if (lhs > rhs && (! best || lhs - rhs > best->lhs - best->rhs)) {
                        best = Hit{x, y, lhs, rhs};
                        if (search == Search::first)
                            return best;
                    }
                }
            }
            return best;
        }

        auto make_certificate(std::string condition, const Hit & hit, const std::vector<int> & order, int t,
            const PartTerm & term) -> Certificate
        {
            Certificate c;
            c.condition = std::move(condition);
            c.x = prefix(order, hit.x);
            c.y = mask_to_indices(hit.y);
            c.parts = to_lists(term.parts(full_mask(t) & ~hit.y, hit.x));
            c.lhs = hit.lhs;
            c.rhs = hit.rhs;
            return c;
        }

        auto validate_m_s(const std::vector<int> & m_s, int t) -> void
        {
            for (std::size_t i = 0; i < m_s.size(); ++i) {
                if (m_s[i] < 0)
                    throw InputError("negative degree in m_s");
                if (m_s[i] > t)
                    throw PreconditionError("m_s(" + std::to_string(i) + ") = " + std::to_string(m_s[i]) +
                        " exceeds |T| = " + std::to_string(t));
            }
        }

        auto sum_min(const std::vector<int> & m, int q) -> Value
        {
            Value r = 0;
            for (int v : m)
                r += std::min(v, q);
            return r;
        }

        // The subpartition form over q, on a table that is assumed to be
        // positively intersecting supermodular.
        auto cover_s_violation(const std::vector<int> & m_s, int t, const std::vector<Value> & table, Search search)
            -> std::optional<Certificate>
        {
            SubpartitionTable dp(t, table);
            std::optional<Certificate> best;
            for (int q = 1; q <= t; ++q) {
                Value lhs = dp.value(full_mask(t), q);
                Value rhs = sum_min(m_s, q);
                if (lhs > neg_inf && lhs > rhs && (! best || lhs - rhs > best->violation())) {
                    Certificate c;
                    c.condition = "cover-s";
                    c.parts = to_lists(dp.recover(full_mask(t), q));
                    c.lhs = lhs;
                    c.rhs = rhs;
                    best = c;
                    if (search == Search::first)
                        break;
                }
            }
            return best;
        }

        auto verify_cover(const Bigraph & g, const std::vector<Value> & table) -> std::optional<Mask>
        {
            int t = g.t_size();
            std::vector<Mask> gamma(table.size(), 0);
            std::vector<Mask> nbr(t, 0);
            for (auto & e : g.edges())
                nbr[e.t] |= bit(e.s);
            for (Mask y = 1; y < table.size(); ++y) {
                Mask low = y & (~y + 1);
                gamma[y] = gamma[y ^ low] | nbr[std::countr_zero(low)];
                if (popcount(gamma[y]) < table[y])
                    return y;
            }
            return std::nullopt;
        }

        // Certified backtracking over S-nodes in decreasing m_s order; a
        // neighbour set is accepted only if the residual instance still
        // passes the subpartition test.
        auto backtrack_cover_s(const std::vector<int> & m_s, int t, const std::vector<Value> & table,
            std::int64_t budget) -> Bigraph
        {
            int s = static_cast<int>(m_s.size());
            auto order = sorted_order(m_s);
            std::vector<int> cov(table.size(), 0);
            std::vector<Mask> chosen(s, 0);
            std::vector<Value> residual(table.size());
            std::int64_t nodes = 0;

            std::function<bool(int)> dfs = [&](int idx) -> bool {
                if (idx == s)
                    return true;
                int sv = order[idx];
                int d = m_s[sv];
                std::vector<int> rest;
                for (int j = idx + 1; j < s; ++j)
                    rest.push_back(m_s[order[j]]);

                Mask limit = full_mask(t);
                Mask cand = d == 0 ? 0 : full_mask(d);
                while (true) {
                    if (++nodes > budget)
                        throw DefectError("cover construction exceeded its node budget of " + std::to_string(budget));
                    for (Mask y = 0; y < table.size(); ++y)
                        residual[y] = std::max<Value>(0, table[y] - cov[y] - ((y & cand) ? 1 : 0));
                    if (! cover_s_violation(rest, t, residual, Search::first)) {
                        for (Mask y = 0; y < table.size(); ++y)
                            cov[y] += (y & cand) ? 1 : 0;
                        chosen[sv] = cand;
                        if (dfs(idx + 1))
                            return true;
                        for (Mask y = 0; y < table.size(); ++y)
                            cov[y] -= (y & cand) ? 1 : 0;
                    }
                    if (d == 0)
                        break;
                    // Next mask with the same popcount.
                    Mask c = cand & (~cand + 1);
                    Mask r = cand + c;
                    cand = (((r ^ cand) >> 2) / c) | r;
                    if (cand > limit)
                        break;
                }
                return false;
            };

            if (! dfs(0))
                throw DefectError("cover construction found no branch although the test passed");

            std::vector<Edge> edges;
            for (int i = 0; i < s; ++i)
                for (int j : mask_to_indices(chosen[i]))
                    edges.push_back(Edge{i, j});
            Bigraph g(s, t, std::move(edges));
            if (! g.is_simple() || g.degrees_s() != m_s || verify_cover(g, table))
                throw DefectError("constructed cover failed verification");
            return g;
        }

        enum class Cond
        {
            lower_t,
            lower_s,
            edges_min,
            edges_max
        };

        auto cond_name(Cond c) -> std::string
        {
            switch (c) {
            case Cond::lower_t: return "lower-t";
            case Cond::lower_s: return "lower-s";
            case Cond::edges_min: return "edges-min";
            case Cond::edges_max: return "edges-max";
            }
            return "";
        }

        // Normalized bounds plus the precomputed part term.
        struct BoundsContext
        {
            int s, t;
            DegreeBounds b;
            PartTerm term;

            auto violation(Cond c, Search search) const -> std::optional<Certificate>
            {
                const auto & w = (c == Cond::lower_t || c == Cond::edges_min) ? b.g_s : b.f_s;
                auto order = sorted_order(w);
                auto ps = prefix_sums(order, w);
                Value gs_total = std::accumulate(b.g_s.begin(), b.g_s.end(), Value{0});
                Value gt_total = std::accumulate(b.g_t.begin(), b.g_t.end(), Value{0});
                auto ft = mask_sums(b.f_t);
                auto gt = mask_sums(b.g_t);

                auto hit = sweep(s, t, term, false, search, [&](int x, Mask y, Value h) -> std::pair<Value, Value> {
                    Value xy = Value{x} * popcount(y);
                    switch (c) {
                    case Cond::lower_t: return {ft[y] - xy + h, gs_total - ps[x]};
                    case Cond::lower_s: return {ps[x] - xy + h, gt_total - gt[y]};
                    case Cond::edges_min: return {b.alpha, (gs_total - ps[x]) + (gt_total - gt[y]) + xy - h};
                    case Cond::edges_max: return {ps[x] + ft[y] - xy + h, b.beta};
                    }
                    return {0, 0};
                });
                if (! hit)
                    return std::nullopt;
                return make_certificate(cond_name(c), *hit, order, t, term);
            }

            auto first_of(std::initializer_list<Cond> conds, Search search) const -> std::optional<Certificate>
            {
                std::optional<Certificate> best;
                for (auto c : conds) {
                    auto v = violation(c, search);
                    if (v && (! best || v->violation() > best->violation()))
                        best = v;
                    if (best && search == Search::first)
                        break;
                }
                return best;
            }
        };

        auto prepare_bounds(const DegreeBounds & raw, const SetFunction & p, PartStrategy strategy) -> BoundsContext
        {
            auto b = raw.normalized();
            if (b.t_size() != p.t_size())
                throw InputError("bounds on T and p have different sizes");
            auto flags = effective_flags(p);
            require_intersecting(flags);
            auto table = p.table();
            int t = b.t_size();
            return BoundsContext{b.s_size(), t, b, PartTerm(t, std::move(table), resolve(strategy, flags))};
        }

        auto to_result(std::optional<Certificate> c) -> CheckResult
        {
            CheckResult r;
            r.feasible = ! c;
            r.certificate = std::move(c);
            return r;
        }

        void lift(BoundsContext & ctx)
        {
            auto holds = [&]() {
                return ! ctx.first_of({Cond::lower_t, Cond::lower_s, Cond::edges_max}, Search::first);
            };
            auto raise = [&](std::vector<Value> & f, const std::vector<Value> & g, int v) {
                Value lo = f[v], hi = g[v];
                // Feasibility is monotone in f(v): find the largest value that holds.
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
            for (int v = 0; v < ctx.s; ++v)
                raise(ctx.b.f_s, ctx.b.g_s, v);
            for (int v = 0; v < ctx.t; ++v)
                raise(ctx.b.f_t, ctx.b.g_t, v);
        }

        auto within_bounds(const Bigraph & g, const DegreeBounds & b) -> bool
        {
            auto ds = g.degrees_s(), dt = g.degrees_t();
            for (int i = 0; i < g.s_size(); ++i)
                if (ds[i] < b.f_s[i] || ds[i] > b.g_s[i])
                    return false;
            for (int j = 0; j < g.t_size(); ++j)
                if (dt[j] < b.f_t[j] || dt[j] > b.g_t[j])
                    return false;
            return g.edge_count() >= b.alpha && g.edge_count() <= b.beta;
        }

        // Searches the box [f, g] for a balanced degree vector that passes
        // the exact-degree test. Only reached if lifting left an imbalance.
        auto box_search(const BoundsContext & ctx, const SetFunction & p) -> std::optional<DegreeSpec>
        {
            const auto & b = ctx.b;
            double size = 1;
            for (int i = 0; i < ctx.s; ++i)
                size *= double(b.g_s[i] - b.f_s[i] + 1);
            for (int j = 0; j < ctx.t; ++j)
                size *= double(b.g_t[j] - b.f_t[j] + 1);
            if (size > 1e6)
                throw DefectError("degree box too large for the fallback search");

            DegreeSpec m;
            m.m_s.assign(ctx.s, 0);
            m.m_t = std::vector<int>(ctx.t, 0);
            std::optional<DegreeSpec> found;
            int n = ctx.s + ctx.t;
            std::function<void(int)> rec = [&](int i) {
                if (found)
                    return;
                if (i == n) {
                    Value gamma = m.gamma();
                    if (m.balanced() && gamma >= b.alpha && gamma <= b.beta && check_cover_full(m, p))
                        found = m;
                    return;
                }
                Value lo = i < ctx.s ? b.f_s[i] : b.f_t[i - ctx.s];
                Value hi = i < ctx.s ? b.g_s[i] : b.g_t[i - ctx.s];
                for (Value v = lo; v <= hi; ++v) {
                    (i < ctx.s ? m.m_s[i] : (*m.m_t)[i - ctx.s]) = static_cast<int>(v);
                    rec(i + 1);
                }
            };
            rec(0);
            return found;
        }
    }

    auto check_gale_ryser(const DegreeSpec & m, Search search) -> CheckResult
    {
        if (! m.m_t)
            throw InputError("Gale-Ryser test needs degrees on both sides");
        m.validate();
        const auto & mt = *m.m_t;
        auto os = sorted_order(m.m_s), ot = sorted_order(mt);
        auto ps = prefix_sums(os, m.m_s), pt = prefix_sums(ot, mt);
        Value gamma = m.gamma();

        std::optional<Certificate> best;
        for (int i = 0; i <= m.s_size(); ++i)
            for (int j = 0; j <= m.t_size(); ++j) {
                Value lhs = ps[i] + pt[j] - Value{i} * j;
                if (lhs > gamma && (! best || lhs - gamma > best->violation())) {
                    best = Certificate{"gale-ryser", prefix(os, i), prefix(ot, j), {}, lhs, gamma};
                    if (search == Search::first)
                        return to_result(best);
                }
            }
        return to_result(best);
    }

    auto construct_gale_ryser(const DegreeSpec & m) -> Outcome<Bigraph>
    {
        Outcome<Bigraph> out;
        if (auto r = check_gale_ryser(m); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        int s = m.s_size(), t = m.t_size();
        std::vector<int> residual = *m.m_t;
        std::vector<Edge> edges;
        for (int sv : sorted_order(m.m_s)) {
            auto cols = sorted_order(residual);
            for (int k = 0; k < m.m_s[sv]; ++k) {
                int tv = cols[k];
                if (residual[tv] <= 0)
                    throw DefectError("greedy Gale-Ryser construction ran out of demand");
                --residual[tv];
                edges.push_back(Edge{sv, tv});
            }
        }
        std::sort(edges.begin(), edges.end());
        Bigraph g(s, t, std::move(edges));
        if (! g.is_simple() || g.degrees_s() != m.m_s || g.degrees_t() != *m.m_t)
            throw DefectError("greedy Gale-Ryser construction failed verification");
        out.value = std::move(g);
        return out;
    }

    auto check_cover_s(const std::vector<int> & m_s, const SetFunction & p, CheckOptions opts) -> CheckResult
    {
        int t = p.t_size();
        validate_m_s(m_s, t);
        require_intersecting(effective_flags(p));
        return to_result(cover_s_violation(m_s, t, p.table(), opts.search));
    }

    auto check_cover_s_sets(const std::vector<int> & m_s, const SetFunction & p, CheckOptions opts) -> CheckResult
    {
        int t = p.t_size();
        validate_m_s(m_s, t);
        auto flags = effective_flags(p);
        require_intersecting(flags);
        PartTerm term(t, p.table(), resolve(opts.strategy, flags));
        auto order = sorted_order(m_s);
        auto ps = prefix_sums(order, m_s);
        Value gamma = ps.back();
        int s = static_cast<int>(m_s.size());
        auto hit = sweep(s, t, term, true, opts.search, [&](int x, Mask, Value h) -> std::pair<Value, Value> {
            return {ps[x] + h, gamma};
        });
        if (! hit)
            return {};
        return to_result(make_certificate("cover-s-sets", *hit, order, t, term));
    }

    auto construct_cover_s(const std::vector<int> & m_s, const SetFunction & p, ConstructOptions opts)
        -> Outcome<Bigraph>
    {
        Outcome<Bigraph> out;
        if (auto r = check_cover_s(m_s, p); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        out.value = backtrack_cover_s(m_s, p.t_size(), p.table(), opts.budget);
        return out;
    }

    auto check_cover_full(const DegreeSpec & m, const SetFunction & p, CheckOptions opts) -> CheckResult
    {
        if (! m.m_t)
            throw InputError("cover test needs degrees on both sides");
        m.validate();
        if (m.t_size() != p.t_size())
            throw InputError("m_t and p have different sizes");
        auto flags = effective_flags(p);
        require_intersecting(flags);
        auto table = p.table();
        int s = m.s_size(), t = m.t_size();
        PartTerm term(t, std::move(table), resolve(opts.strategy, flags));
        auto order = sorted_order(m.m_s);
        auto ps = prefix_sums(order, m.m_s);
        auto mt = mask_sums(*m.m_t);
        Value gamma = m.gamma();
        auto hit = sweep(s, t, term, false, opts.search, [&](int x, Mask y, Value h) -> std::pair<Value, Value> {
            return {ps[x] + mt[y] - Value{x} * popcount(y) + h, gamma};
        });
        if (! hit)
            return {};
        return to_result(make_certificate("cover-full", *hit, order, t, term));
    }

    auto construct_cover_full(const DegreeSpec & m, const SetFunction & p, ConstructOptions opts) -> Outcome<Bigraph>
    {
        Outcome<Bigraph> out;
        if (auto r = check_cover_full(m, p); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        int t = m.t_size();
        auto table = p.table();
        auto plus = table;
        for (int j = 0; j < t; ++j)
            plus[bit(j)] = std::max<Value>(plus[bit(j)], (*m.m_t)[j]);
        if (cover_s_violation(m.m_s, t, plus, Search::first))
            throw DefectError("lifted demand fails the subpartition test although the cover test passed");
        auto g = backtrack_cover_s(m.m_s, t, plus, opts.budget);
        if (g.degrees_t() != *m.m_t || verify_cover(g, table))
            throw DefectError("constructed graph does not fit m_t or does not cover p");
        out.value = std::move(g);
        return out;
    }

    auto check_bounds(const DegreeBounds & b, const SetFunction & p, CheckOptions opts) -> CheckResult
    {
        auto ctx = prepare_bounds(b, p, opts.strategy);
        return to_result(ctx.first_of({Cond::lower_t, Cond::lower_s}, opts.search));
    }

    auto check_bounds_edges(const DegreeBounds & b, const SetFunction & p, CheckOptions opts) -> CheckResult
    {
        auto ctx = prepare_bounds(b, p, opts.strategy);
        if (ctx.first_of({Cond::lower_t, Cond::lower_s}, Search::first))
            throw PreconditionError("edge-count test needs the degree bounds to be feasible");
        return to_result(ctx.first_of({Cond::edges_min, Cond::edges_max}, opts.search));
    }

    auto min_edge_count(const DegreeBounds & b, const SetFunction & p) -> Value
    {
        auto ctx = prepare_bounds(b, p, PartStrategy::automatic);
        if (ctx.first_of({Cond::lower_t, Cond::lower_s}, Search::first))
            throw PreconditionError("edge-count formula needs the degree bounds to be feasible");
        // The largest edges-max left-hand side is the least feasible beta.
        ctx.b.beta = neg_inf;
        auto c = ctx.violation(Cond::edges_max, Search::maximum);
        return c ? c->lhs : 0;
    }

    auto lift_lower_bounds(const DegreeBounds & b, const SetFunction & p) -> DegreeBounds
    {
        auto ctx = prepare_bounds(b, p, PartStrategy::automatic);
        if (ctx.first_of({Cond::lower_t, Cond::lower_s, Cond::edges_min, Cond::edges_max}, Search::first))
            throw PreconditionError("lifting needs all four bound conditions to hold");
        lift(ctx);
        return ctx.b;
    }

    auto construct_bounds(const DegreeBounds & b, const SetFunction & p, ConstructOptions opts) -> Outcome<Bigraph>
    {
        Outcome<Bigraph> out;
        auto ctx = prepare_bounds(b, p, PartStrategy::automatic);
        if (auto c = ctx.first_of({Cond::lower_t, Cond::lower_s}, Search::maximum)) {
            out.certificate = c;
            return out;
        }
        if (auto c = ctx.first_of({Cond::edges_min, Cond::edges_max}, Search::maximum)) {
            out.certificate = c;
            return out;
        }
        auto original = ctx.b;
        lift(ctx);

        DegreeSpec m;
        for (auto v : ctx.b.f_s)
            m.m_s.push_back(static_cast<int>(v));
        m.m_t = std::vector<int>{};
        for (auto v : ctx.b.f_t)
            m.m_t->push_back(static_cast<int>(v));
        if (! m.balanced()) {
            out.notes.push_back("lifted lower bounds were unbalanced; searched the degree box instead");
            auto found = box_search(ctx, p);
            if (! found)
                throw DefectError("no balanced degree vector in the box although all bound conditions hold");
            m = *found;
        }
        auto built = construct_cover_full(m, p, opts);
        if (! built.value)
            throw DefectError("lifted degree vector is not realizable");
        if (! within_bounds(*built.value, original))
            throw DefectError("constructed graph violates the degree or edge-count bounds");
        out.value = std::move(built.value);
        return out;
    }

    auto check_ft_gs(const std::vector<Value> & f_t, const std::vector<Value> & g_s, const SetFunction & p) -> CheckResult
    {
        auto b = DegreeBounds::unbounded(static_cast<int>(g_s.size()), static_cast<int>(f_t.size()));
        b.f_t = f_t;
        b.g_s = g_s;
        return check_bounds(b, p);
    }

    auto check_fs_gt(const std::vector<Value> & f_s, const std::vector<Value> & g_t, const SetFunction & p) -> CheckResult
    {
        auto b = DegreeBounds::unbounded(static_cast<int>(f_s.size()), static_cast<int>(g_t.size()));
        b.f_s = f_s;
        b.g_t = g_t;
        return check_bounds(b, p);
    }

    auto check_ms_gt(const std::vector<int> & m_s, const std::vector<Value> & g_t, const SetFunction & p) -> CheckResult
    {
        auto b = DegreeBounds::unbounded(static_cast<int>(m_s.size()), static_cast<int>(g_t.size()));
        b.f_s.assign(m_s.begin(), m_s.end());
        b.g_s = b.f_s;
        b.g_t = g_t;
        return check_bounds(b, p);
    }

    auto check_fs_gs(const std::vector<Value> & f_s, const std::vector<Value> & g_s, const SetFunction & p) -> CheckResult
    {
        auto b = DegreeBounds::unbounded(static_cast<int>(f_s.size()), p.t_size());
        b.f_s = f_s;
        b.g_s = g_s;
        return check_bounds(b, p);
    }

    auto check_gt(int s_size, const std::vector<Value> & g_t, const SetFunction & p) -> CheckResult
    {
        auto b = DegreeBounds::unbounded(s_size, static_cast<int>(g_t.size()));
        b.g_t = g_t;
        return check_bounds(b, p);
    }

    auto simplify(const Bigraph & g) -> Bigraph
    {
        auto edges = g.edges();
        int t = g.t_size();
        while (true) {
            auto sorted = edges;
            std::sort(sorted.begin(), sorted.end());
            auto dup = sorted.end();
            for (auto it = sorted.begin(); it + 1 < sorted.end(); ++it)
                if (*it == *(it + 1)) {
                    int deg = static_cast<int>(std::count_if(edges.begin(), edges.end(),
                        [&](const Edge & e) { return e.s == it->s; }));
                    if (deg <= t) {
                        dup = it;
                        break;
                    }
                }
            if (dup == sorted.end())
                break;
            std::vector<bool> adjacent(t, false);
            for (auto & e : edges)
                if (e.s == dup->s)
                    adjacent[e.t] = true;
            int target = static_cast<int>(std::find(adjacent.begin(), adjacent.end(), false) - adjacent.begin());
            *std::find(edges.begin(), edges.end(), *dup) = Edge{dup->s, target};
        }
        std::sort(edges.begin(), edges.end());
        return Bigraph(g.s_size(), t, std::move(edges));
    }

    auto uncovered_set(const Bigraph & g, const SetFunction & p) -> std::optional<Mask>
    {
        if (g.t_size() != p.t_size())
            throw InputError("graph and p have different T sizes");
        return verify_cover(g, p.table());
    }

    auto evaluate_certificate(const Certificate & c, const DegreeSpec * spec, const DegreeBounds * bounds,
        const SetFunction & p) -> std::pair<Value, Value>
    {
        int t = p.t_size();
        int s = spec ? spec->s_size() : bounds ? bounds->s_size() : 0;
        Mask x = indices_to_mask(c.x, s);
        Mask y = indices_to_mask(c.y, t);
        Value nx = popcount(x), ny = popcount(y);
        Value pp = 0, q = 0;
        Mask seen = y;
        for (auto & part : c.parts) {
            Mask pm = indices_to_mask(part, t);
            if (! pm || (pm & seen))
                throw InputError("certificate parts are not a subpartition of T - Y");
            seen |= pm;
            pp += p(pm);
            ++q;
        }

        if (c.condition == "gale-ryser" || c.condition == "cover-full" || c.condition == "cover-s-sets" || c.condition == "cover-s") {
            if (! spec)
                throw InputError("condition " + c.condition + " needs a degree specification");
            Value ms = sum_over(spec->m_s, x);
            Value mt = spec->m_t ? sum_over(*spec->m_t, y) : 0;
            if (c.condition == "gale-ryser")
                return {ms + mt - nx * ny, spec->gamma()};
            if (c.condition == "cover-full")
                return {ms + mt - nx * ny + pp - q * nx, spec->gamma()};
            if (c.condition == "cover-s-sets")
                return {ms + pp - q * nx, spec->gamma()};
            return {pp, sum_min(spec->m_s, static_cast<int>(q))};
        }

        if (! bounds)
            throw InputError("condition " + c.condition + " needs degree bounds");
        auto b = bounds->normalized();
        Mask sx = full_mask(s) & ~x, ty = full_mask(t) & ~y;
        Value part = pp - q * nx;
        if (c.condition == "lower-t")
            return {sum_over(b.f_t, y) - nx * ny + part, sum_over(b.g_s, sx)};
        if (c.condition == "lower-s")
            return {sum_over(b.f_s, x) - nx * ny + part, sum_over(b.g_t, ty)};
        if (c.condition == "edges-min")
            return {b.alpha, sum_over(b.g_s, sx) + sum_over(b.g_t, ty) + nx * ny - part};
        if (c.condition == "edges-max")
            return {sum_over(b.f_s, x) + sum_over(b.f_t, y) - nx * ny + part, b.beta};
        throw InputError("unknown condition " + c.condition);
    }
}
