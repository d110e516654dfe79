#include <bisynth/supermod.hh>

#include <algorithm>
#include <numeric>
#include <string>

namespace bisynth
{
    namespace
    {
        template <class... Ts_>
        struct Overloaded : Ts_...
        {
            using Ts_::operator()...;
        };
        template <class... Ts_>
        Overloaded(Ts_...) -> Overloaded<Ts_...>;

        // The supermodular inequality on squares X, X+a, X+b, X+a+b. Over all
        // X this is full supermodularity; over non-empty X it is intersecting
        // supermodularity.
        auto local_supermodular(int t, const std::vector<Value> & p, bool allow_empty) -> bool
        {
            Mask all = full_mask(t);
            for (Mask x = 0; x <= all; ++x) {
                if (x == 0 && ! allow_empty)
                    continue;
                for (int a = 0; a < t; ++a) {
                    if (x & bit(a))
                        continue;
                    for (int b = a + 1; b < t; ++b) {
                        if (x & bit(b))
                            continue;
                        if (p[x | bit(a)] + p[x | bit(b)] > p[x] + p[x | bit(a) | bit(b)])
                            return false;
                    }
                }
            }
            return true;
        }

        auto positively_intersecting(int t, const std::vector<Value> & p) -> bool
        {
            Mask all = full_mask(t);
            for (Mask x = 1; x <= all; ++x) {
                if (p[x] <= 0)
                    continue;
                for (Mask y = x + 1; y <= all; ++y) {
                    if (p[y] <= 0 || ! (x & y) || (x & y) == x || (x & y) == y)
                        continue;
                    if (p[x] + p[y] > p[x & y] + p[x | y])
                        return false;
                }
            }
            return true;
        }

        auto monotone_table(int t, const std::vector<Value> & p) -> bool
        {
            Mask all = full_mask(t);
            for (Mask x = 1; x <= all; ++x)
                for (int a = 0; a < t; ++a)
                    if (! (x & bit(a)) && p[x] > p[x | bit(a)])
                        return false;
            return true;
        }

        auto tri(bool b) -> Tri { return b ? Tri::yes : Tri::no; }
    }

    SetFunction::SetFunction(int t, SetFunctionForm form) :
        _t(t),
        _form(std::move(form))
    {
    }

    auto SetFunction::from_table(int t, std::vector<Value> table) -> SetFunction
    {
        if (t < 0 || t > max_table_size)
            throw CapacityError("explicit set function tables need t <= " + std::to_string(max_table_size));
        if (table.size() != (std::size_t{1} << t))
            throw InputError("explicit table for t = " + std::to_string(t) + " needs " +
                std::to_string(std::size_t{1} << t) + " entries");
        table[0] = 0;
        return SetFunction(t, ExplicitForm{std::move(table)});
    }

    auto SetFunction::zero(int t) -> SetFunction
    {
        return from_table(t, std::vector<Value>(std::size_t{1} << t, 0));
    }

    auto SetFunction::cardinality(int t) -> SetFunction
    {
        std::vector<Value> table(std::size_t{1} << t);
        for (Mask y = 0; y < table.size(); ++y)
            table[y] = popcount(y);
        return from_table(t, std::move(table));
    }

    auto SetFunction::term_rank(int t, int ell) -> SetFunction
    {
        if (ell < 0 || ell > t)
            throw PreconditionError("term rank target " + std::to_string(ell) + " outside [0, |T|]");
        return SetFunction(t, TermRankForm{ell});
    }

    auto SetFunction::forest(std::vector<int> m_for) -> SetFunction
    {
        for (int v : m_for)
            if (v < 0)
                throw InputError("negative m_for entry");
        int t = static_cast<int>(m_for.size());
        return SetFunction(t, ForestForm{std::move(m_for)});
    }

    auto SetFunction::branching(Digraph d, int k, std::optional<std::vector<int>> m_in) -> SetFunction
    {
        if (k < 0)
            throw InputError("negative number of branchings");
        if (m_in) {
            if (static_cast<int>(m_in->size()) != d.n())
                throw InputError("m_in length differs from the node count");
            for (int v = 0; v < d.n(); ++v) {
                if ((*m_in)[v] < 0)
                    throw InputError("negative m_in entry");
                if ((*m_in)[v] > d.in_degree_of(v))
                    throw PreconditionError("m_in(" + std::to_string(v) + ") = " + std::to_string((*m_in)[v]) +
                        " exceeds the in-degree " + std::to_string(d.in_degree_of(v)));
            }
        }
        int t = d.n();
        return SetFunction(t, BranchingForm{std::move(d), k, std::move(m_in)});
    }

    auto SetFunction::kind() const -> std::string
    {
        return std::visit(Overloaded{
            [](const ExplicitForm &) { return std::string{"explicit"}; },
            [](const TermRankForm &) { return std::string{"termrank"}; },
            [](const ForestForm &) { return std::string{"forest"}; },
            [](const BranchingForm &) { return std::string{"branching"}; }},
            _form);
    }

    auto SetFunction::operator()(Mask y) const -> Value
    {
        if (y == 0)
            return 0;
        return std::visit(Overloaded{
            [&](const ExplicitForm & f) -> Value { return f.table[y]; },
            [&](const TermRankForm & f) -> Value { return f.ell - (_t - popcount(y)); },
            [&](const ForestForm & f) -> Value {
                Value r = 1;
                for (Mask m = y; m; m &= m - 1)
                    r += f.m_for[std::countr_zero(m)] - 1;
                return r;
            },
            [&](const BranchingForm & f) -> Value {
                if (f.m_in && popcount(y) == 1)
                    return f.k - (*f.m_in)[std::countr_zero(y)];
                return f.k - f.digraph.in_degree(y);
            }},
            _form);
    }

    auto SetFunction::table() const -> std::vector<Value>
    {
        if (_t > max_table_size)
            throw CapacityError("tabulating a set function needs t <= " + std::to_string(max_table_size));
        if (auto f = std::get_if<ExplicitForm>(&_form))
            return f->table;
        std::vector<Value> result(std::size_t{1} << _t);
        for (Mask y = 0; y < result.size(); ++y)
            result[y] = (*this)(y);
        return result;
    }

    auto SetFunction::with_flags(Flags f) const -> SetFunction
    {
        SetFunction r = *this;
        r._flags = f;
        return r;
    }

    auto eval_p(const SetFunction & p, Mask y) -> Value { return p(y); }

    auto classify(const SetFunction & p) -> Flags
    {
        int t = p.t_size();
        Flags f;
        if (auto tr = std::get_if<TermRankForm>(&p.form())) {
            f.intersecting = Tri::yes;
            f.fully = tri(tr->ell <= t);
            f.monotone = Tri::yes;
            return f;
        }
        if (auto fo = std::get_if<ForestForm>(&p.form())) {
            // Modular plus one on non-empty sets.
            f.intersecting = Tri::yes;
            f.fully = tri(t <= 1);
            f.monotone = tri(t <= 1 || std::all_of(fo->m_for.begin(), fo->m_for.end(), [](int v) { return v >= 1; }));
            return f;
        }
        if (std::holds_alternative<BranchingForm>(p.form())) {
            // k minus a submodular in-degree function.
            f.intersecting = Tri::yes;
            if (t <= max_classify_size) {
                auto table = p.table();
                f.fully = tri(local_supermodular(t, table, true));
                f.monotone = tri(monotone_table(t, table));
            }
            return f;
        }

        if (t > max_classify_size)
            throw CapacityError("classifying an explicit set function needs t <= " + std::to_string(max_classify_size));
        auto table = p.table();
        if (t <= 12)
            f.intersecting = tri(positively_intersecting(t, table));
        else
            f.intersecting = tri(local_supermodular(t, table, false) || positively_intersecting(t, table));
        f.fully = tri(local_supermodular(t, table, true));
        f.monotone = tri(monotone_table(t, table));
        return f;
    }

    auto classified(const SetFunction & p) -> SetFunction { return p.with_flags(classify(p)); }

    SubpartitionTable::SubpartitionTable(int t, const std::vector<Value> & p) :
        _t(t),
        _p(p)
    {
        if (t > 16)
            throw CapacityError("subpartition DP needs |T| <= 16");
        Mask all = full_mask(t);
        std::size_t stride = t + 1;
        _best.assign((all + 1) * stride, neg_inf);
        _best[0] = 0;
        for (Mask mask = 1; mask <= all; ++mask) {
            Mask low = mask & (~mask + 1);
            Mask rest = mask ^ low;
            Value * out = &_best[mask * stride];
            const Value * skip = &_best[rest * stride];
            for (int q = 0; q <= t; ++q)
                out[q] = skip[q];
            // Parts containing the lowest element.
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                Value pv = _p[sub | low];
                const Value * remain = &_best[(rest ^ sub) * stride];
                for (int q = 1; q <= t; ++q)
                    if (remain[q - 1] > neg_inf)
                        out[q] = std::max(out[q], pv + remain[q - 1]);
                if (sub == 0)
                    break;
            }
        }
    }

    auto SubpartitionTable::recover(Mask ground, int q) const -> std::vector<Mask>
    {
        std::vector<Mask> parts;
        Mask mask = ground;
        Value target = value(ground, q);
        if (target <= neg_inf)
            throw DefectError("no subpartition with the requested number of parts");
        while (mask && q > 0) {
            Mask low = mask & (~mask + 1);
            Mask rest = mask ^ low;
            if (value(rest, q) == target) {
                mask = rest;
                continue;
            }
            bool found = false;
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                Value r = value(rest ^ sub, q - 1);
                if (r > neg_inf && _p[sub | low] + r == target) {
                    parts.push_back(sub | low);
                    mask = rest ^ sub;
                    target = r;
                    --q;
                    found = true;
                    break;
                }
                if (sub == 0)
                    break;
            }
            if (! found)
                throw DefectError("subpartition DP table is inconsistent");
        }
        return parts;
    }

    auto subpartition_max(const SetFunction & p, Mask ground, int q) -> Value
    {
        if (ground & ~full_mask(p.t_size()))
            throw InputError("ground set is not a subset of T");
        if (q < 0 || q > popcount(ground))
            return neg_inf;
        SubpartitionTable dp(p.t_size(), p.table());
        return dp.value(ground, q);
    }

    namespace
    {
        constexpr Value memo_unset = std::numeric_limits<Value>::min();
        constexpr int memo_cap = 24;
    }

    MasterFunction::MasterFunction(int s_size, const SetFunction & p) :
        _s(s_size),
        _t(p.t_size()),
        _p(p.table())
    {
        if (_s < 0 || _s + _t > 62)
            throw CapacityError("master function needs |S| + |T| <= 62");
        for (Mask y = 0; y < _p.size(); ++y)
            if (_p[y] > _s)
                throw PreconditionError("p(Y) = " + std::to_string(_p[y]) + " exceeds |S| = " + std::to_string(_s) +
                    " at Y = " + std::to_string(y));
        _dp = std::make_unique<SubpartitionTable>(_t, _p);
        if (_s + _t <= memo_cap) {
            std::size_t size = std::size_t{1} << (_s + _t);
            _memo = std::make_unique<std::atomic<Value>[]>(size);
            for (std::size_t i = 0; i < size; ++i)
                _memo[i].store(memo_unset, std::memory_order_relaxed);
        }
    }

    auto MasterFunction::split(Mask u) const -> std::pair<Mask, Mask>
    {
        return {u & full_mask(_s), (u >> _s) & full_mask(_t)};
    }

    auto MasterFunction::b0(Mask u) const -> Value
    {
        if (u & ~full_mask(_s + _t))
            throw InputError("subset of V out of range");
        if (_memo) {
            Value cached = _memo[u].load(std::memory_order_relaxed);
            if (cached != memo_unset)
                return cached;
        }
        auto [xs, z] = split(u);
        Value x = popcount(xs);
        Value h = 0;
        for (int q = 1; q <= popcount(z); ++q) {
            Value v = _dp->value(z, q);
            if (v > neg_inf)
                h = std::max(h, v - q * x);
        }
        Value result = (_t - popcount(z)) * x - h;
        if (_memo)
            _memo[u].store(result, std::memory_order_relaxed);
        return result;
    }

    auto MasterFunction::p0(Mask u) const -> Value
    {
        return -b0(full_mask(_s + _t) & ~u);
    }

    auto member_in_b0(const MasterFunction & b, const DegreeSpec & m) -> Membership
    {
        if (! m.m_t)
            throw InputError("membership in B0 needs degrees on both sides");
        if (m.s_size() != b.s_size() || m.t_size() != b.t_size())
            throw InputError("degree vector sizes do not match the master function");
        int n = b.s_size() + b.t_size();
        if (n > memo_cap)
            throw CapacityError("membership test enumerates 2^|V| sets and needs |V| <= 24");

        Membership result;
        if (! m.balanced()) {
            result.member = false;
            result.witness = full_mask(n);
            result.lhs = m.gamma() - std::accumulate(m.m_t->begin(), m.m_t->end(), Value{0});
            result.rhs = 0;
            return result;
        }
        std::vector<Value> weight(n);
        for (int i = 0; i < b.s_size(); ++i)
            weight[i] = m.m_s[i];
        for (int j = 0; j < b.t_size(); ++j)
            weight[b.s_size() + j] = -(*m.m_t)[j];

        Value worst = 0;
        for (Mask u = 0; u <= full_mask(n); ++u) {
            Value lhs = sum_over(weight, u), rhs = b.b0(u);
            if (lhs - rhs > worst) {
                worst = lhs - rhs;
                result = Membership{false, u, lhs, rhs};
            }
        }
        return result;
    }
}
