#pragma once

#include <bisynth/degrees.hh>
#include <bisynth/graph.hh>

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bisynth
{
    enum class Tri
    {
        unverified,
        yes,
        no
    };

    // "intersecting" means the supermodular inequality holds for every pair
    // of intersecting sets on which both values are positive.
    struct Flags
    {
        Tri intersecting = Tri::unverified;
        Tri fully = Tri::unverified;
        Tri monotone = Tri::unverified;
    };

    struct ExplicitForm
    {
        std::vector<Value> table;
    };

    // l - |T - Y| on non-empty Y.
    struct TermRankForm
    {
        int ell;
    };

    // m_for(Y) - |Y| + 1 on non-empty Y.
    struct ForestForm
    {
        std::vector<int> m_for;
    };

    // k - rho_D(Y) on non-empty Y; when m_in is given, singletons {v} take
    // k - m_in(v) instead.
    struct BranchingForm
    {
        Digraph digraph;
        int k;
        std::optional<std::vector<int>> m_in;
    };

    using SetFunctionForm = std::variant<ExplicitForm, TermRankForm, ForestForm, BranchingForm>;

    inline constexpr int max_table_size = 20;
    inline constexpr int max_classify_size = 16;

    // An integer set function on subsets of T with p(empty) = 0.
    class SetFunction
    {
    public:
        static auto from_table(int t, std::vector<Value> table) -> SetFunction;
        static auto zero(int t) -> SetFunction;
        static auto cardinality(int t) -> SetFunction;
        static auto term_rank(int t, int ell) -> SetFunction;
        static auto forest(std::vector<int> m_for) -> SetFunction;
        static auto branching(Digraph d, int k, std::optional<std::vector<int>> m_in = std::nullopt) -> SetFunction;

        auto t_size() const -> int { return _t; }
        auto form() const -> const SetFunctionForm & { return _form; }
        auto flags() const -> const Flags & { return _flags; }
        auto kind() const -> std::string;

        auto operator()(Mask y) const -> Value;

        // All 2^t values, indexed by mask.
        auto table() const -> std::vector<Value>;

        auto with_flags(Flags f) const -> SetFunction;

    private:
        SetFunction(int t, SetFunctionForm form);

        int _t = 0;
        SetFunctionForm _form;
        Flags _flags;
    };

    auto eval_p(const SetFunction & p, Mask y) -> Value;

    // Closed forms are classified from known facts; explicit tables by
    // exhaustive checks, which need t <= 16.
    auto classify(const SetFunction & p) -> Flags;
    auto classified(const SetFunction & p) -> SetFunction;

    // Max of p over subpartitions with exactly q parts, for every ground
    // mask and every q, by a subset DP. Values are neg_inf where no
    // subpartition with q parts exists.
    class SubpartitionTable
    {
    public:
        explicit SubpartitionTable(int t, const std::vector<Value> & p);

        auto t_size() const -> int { return _t; }
        auto value(Mask ground, int q) const -> Value { return _best[ground * (_t + 1) + q]; }
        auto recover(Mask ground, int q) const -> std::vector<Mask>;

    private:
        int _t;
        std::vector<Value> _p;
        std::vector<Value> _best;
    };

    auto subpartition_max(const SetFunction & p, Mask ground, int q) -> Value;

    // The bisubmodular master function b0 on V = S + T. Node i < |S| is an
    // S-node, node |S| + j is T-node j.
    class MasterFunction
    {
    public:
        MasterFunction(int s_size, const SetFunction & p);

        auto s_size() const -> int { return _s; }
        auto t_size() const -> int { return _t; }
        auto split(Mask u) const -> std::pair<Mask, Mask>;

        auto b0(Mask u) const -> Value;
        auto p0(Mask u) const -> Value;

    private:
        int _s, _t;
        std::vector<Value> _p;
        std::unique_ptr<SubpartitionTable> _dp;
        mutable std::unique_ptr<std::atomic<Value>[]> _memo;
    };

    struct Membership
    {
        bool member = true;
        std::optional<Mask> witness;
        Value lhs = 0;
        Value rhs = 0;
    };

    // Tests (m_S, -m_T) against the base polyhedron of b0.
    auto member_in_b0(const MasterFunction & b, const DegreeSpec & m) -> Membership;
}
