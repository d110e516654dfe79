#include <bisynth/common.hh>

#include <string>

namespace bisynth
{
    auto sat_add(Value a, Value b) -> Value
    {
        if ((a <= neg_inf && b >= pos_inf) || (a >= pos_inf && b <= neg_inf))
            throw DefectError("indeterminate sum of opposite infinities");
        if (a <= neg_inf || b <= neg_inf)
            return neg_inf;
        if (a >= pos_inf || b >= pos_inf)
            return pos_inf;
        Value r = a + b;
        if (r <= neg_inf)
            return neg_inf;
        if (r >= pos_inf)
            return pos_inf;
        return r;
    }

    auto mask_to_indices(Mask m) -> std::vector<int>
    {
        std::vector<int> result;
        for (; m; m &= m - 1)
            result.push_back(std::countr_zero(m));
        return result;
    }

    auto indices_to_mask(const std::vector<int> & indices, int n) -> Mask
    {
        if (n > 64)
            throw CapacityError("ground set of size " + std::to_string(n) + " does not fit a bitmask");
        Mask m = 0;
        for (int i : indices) {
            if (i < 0 || i >= n)
                throw InputError("node index " + std::to_string(i) + " out of range [0," + std::to_string(n) + ")");
            m |= bit(i);
        }
        return m;
    }
}

#include <bisynth/degrees.hh>

#include <algorithm>
#include <numeric>

namespace bisynth
{
    auto DegreeSpec::gamma() const -> Value
    {
        return std::accumulate(m_s.begin(), m_s.end(), Value{0});
    }

    auto DegreeSpec::balanced() const -> bool
    {
        return ! m_t || std::accumulate(m_t->begin(), m_t->end(), Value{0}) == gamma();
    }

    void DegreeSpec::validate() const
    {
        for (int v : m_s)
            if (v < 0)
                throw InputError("negative degree in m_s");
        if (m_t)
            for (int v : *m_t)
                if (v < 0)
                    throw InputError("negative degree in m_t");
        if (! balanced())
            throw PreconditionError("degree sums differ: m_s sums to " + std::to_string(gamma()) + ", m_t to " +
                std::to_string(std::accumulate(m_t->begin(), m_t->end(), Value{0})));
    }

    auto DegreeBounds::unbounded(int s, int t) -> DegreeBounds
    {
        DegreeBounds b;
        b.f_s.assign(s, neg_inf);
        b.g_s.assign(s, pos_inf);
        b.f_t.assign(t, neg_inf);
        b.g_t.assign(t, pos_inf);
        return b;
    }

    auto DegreeBounds::exact(const DegreeSpec & m) -> DegreeBounds
    {
        DegreeBounds b;
        b.f_s.assign(m.m_s.begin(), m.m_s.end());
        b.g_s = b.f_s;
        if (m.m_t) {
            b.f_t.assign(m.m_t->begin(), m.m_t->end());
            b.g_t = b.f_t;
        }
        return b;
    }

    void DegreeBounds::validate() const
    {
        if (g_s.size() != f_s.size() || g_t.size() != f_t.size())
            throw InputError("bound vectors of one side differ in length");
        for (std::size_t i = 0; i < f_s.size(); ++i)
            if (f_s[i] > g_s[i] || f_s[i] >= pos_inf || g_s[i] <= neg_inf)
                throw PreconditionError("f_s > g_s at S-node " + std::to_string(i));
        for (std::size_t i = 0; i < f_t.size(); ++i)
            if (f_t[i] > g_t[i] || f_t[i] >= pos_inf || g_t[i] <= neg_inf)
                throw PreconditionError("f_t > g_t at T-node " + std::to_string(i));
        if (alpha > beta || alpha >= pos_inf || beta <= neg_inf)
            throw PreconditionError("alpha > beta");
    }

    auto DegreeBounds::normalized() const -> DegreeBounds
    {
        validate();
        Value s = s_size(), t = t_size();
        DegreeBounds b = *this;
        for (std::size_t i = 0; i < b.f_s.size(); ++i) {
            b.f_s[i] = std::max<Value>(b.f_s[i], 0);
            b.g_s[i] = std::min(b.g_s[i], std::max(t, b.f_s[i]));
        }
        for (std::size_t i = 0; i < b.f_t.size(); ++i) {
            b.f_t[i] = std::max<Value>(b.f_t[i], 0);
            b.g_t[i] = std::min(b.g_t[i], std::max(s, b.f_t[i]));
        }
        b.alpha = std::max<Value>(b.alpha, 0);
        b.beta = std::min(b.beta, std::max(s * t, b.alpha));
        return b;
    }
}
