#pragma once

#include <bisynth/common.hh>

#include <optional>
#include <string>
#include <vector>

namespace bisynth
{
    // Exact degree prescription. With m_t absent only the S side is fixed.
    struct DegreeSpec
    {
        std::vector<int> m_s;
        std::optional<std::vector<int>> m_t;

        auto s_size() const -> int { return static_cast<int>(m_s.size()); }
        auto t_size() const -> int { return m_t ? static_cast<int>(m_t->size()) : 0; }
        auto gamma() const -> Value;
        auto balanced() const -> bool;
        void validate() const;
    };

    // Lower and upper degree bounds plus bounds on the edge count. Entries
    // may be neg_inf or pos_inf.
    struct DegreeBounds
    {
        std::vector<Value> f_s, g_s, f_t, g_t;
        Value alpha = neg_inf;
        Value beta = pos_inf;

        auto s_size() const -> int { return static_cast<int>(f_s.size()); }
        auto t_size() const -> int { return static_cast<int>(f_t.size()); }

        static auto unbounded(int s, int t) -> DegreeBounds;
        static auto exact(const DegreeSpec & m) -> DegreeBounds;

        void validate() const;

        // Replaces infinite entries by the values simple graphs force
        // anyway: f >= 0, g_s <= |T|, g_t <= |S|, 0 <= alpha, beta <= |S||T|.
        // Upper caps never drop below the matching lower bound, so an
        // impossible lower bound still shows up as a violated condition.
        auto normalized() const -> DegreeBounds;
    };

    // A violated inequality, in the form lhs <= rhs, evaluated at a
    // particular choice of X, Y and parts.
    struct Certificate
    {
        std::string condition;
        std::vector<int> x;
        std::vector<int> y;
        std::vector<std::vector<int>> parts;
        Value lhs = 0;
        Value rhs = 0;

        auto violation() const -> Value { return lhs - rhs; }
    };

    struct CheckResult
    {
        bool feasible = true;
        std::optional<Certificate> certificate;

        explicit operator bool() const { return feasible; }
    };

    // Either a constructed object or a certificate that none exists.
    template <typename T_>
    struct Outcome
    {
        std::optional<T_> value;
        std::optional<Certificate> certificate;
        std::vector<std::string> notes;

        explicit operator bool() const { return value.has_value(); }
    };

    enum class Search
    {
        first,
        maximum
    };
}
