#pragma once

#include <bisynth/degrees.hh>
#include <bisynth/graph.hh>
#include <bisynth/supermod.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace bisynth
{
    // How the maximum over subpartitions of T - Y is evaluated. The
    // restricted forms are exact only for fully supermodular (and, for
    // monotone, monotone) p; automatic picks the cheapest valid one.
    enum class PartStrategy
    {
        automatic,
        full,
        single_part,
        monotone
    };

    struct CheckOptions
    {
        PartStrategy strategy = PartStrategy::automatic;
        Search search = Search::maximum;
    };

    struct ConstructOptions
    {
        std::int64_t budget = 2'000'000;
    };

    auto check_gale_ryser(const DegreeSpec & m, Search search = Search::maximum) -> CheckResult;
    auto construct_gale_ryser(const DegreeSpec & m) -> Outcome<Bigraph>;

    // Degrees prescribed on S only. check_cover_s tests the subpartition
    // form over q, check_cover_s_sets the form over X and subpartitions.
    auto check_cover_s(const std::vector<int> & m_s, const SetFunction & p, CheckOptions opts = {}) -> CheckResult;
    auto check_cover_s_sets(const std::vector<int> & m_s, const SetFunction & p, CheckOptions opts = {}) -> CheckResult;
    auto construct_cover_s(const std::vector<int> & m_s, const SetFunction & p, ConstructOptions opts = {})
        -> Outcome<Bigraph>;

    auto check_cover_full(const DegreeSpec & m, const SetFunction & p, CheckOptions opts = {}) -> CheckResult;
    auto construct_cover_full(const DegreeSpec & m, const SetFunction & p, ConstructOptions opts = {})
        -> Outcome<Bigraph>;

    // Degree bounds (conditions lower-t and lower-s), then edge-count bounds
    // (edges-min and edges-max).
    auto check_bounds(const DegreeBounds & b, const SetFunction & p, CheckOptions opts = {}) -> CheckResult;
    auto check_bounds_edges(const DegreeBounds & b, const SetFunction & p, CheckOptions opts = {}) -> CheckResult;
    auto min_edge_count(const DegreeBounds & b, const SetFunction & p) -> Value;
    auto construct_bounds(const DegreeBounds & b, const SetFunction & p, ConstructOptions opts = {})
        -> Outcome<Bigraph>;

    // Raises every lower bound as far as all four conditions allow. On a
    // feasible instance the result is the degree vector of a solution.
    auto lift_lower_bounds(const DegreeBounds & b, const SetFunction & p) -> DegreeBounds;

    // One-sided variants; absent bounds are unbounded.
    auto check_ft_gs(const std::vector<Value> & f_t, const std::vector<Value> & g_s, const SetFunction & p) -> CheckResult;
    auto check_fs_gt(const std::vector<Value> & f_s, const std::vector<Value> & g_t, const SetFunction & p) -> CheckResult;
    auto check_ms_gt(const std::vector<int> & m_s, const std::vector<Value> & g_t, const SetFunction & p) -> CheckResult;
    auto check_fs_gs(const std::vector<Value> & f_s, const std::vector<Value> & g_s, const SetFunction & p) -> CheckResult;
    auto check_gt(int s_size, const std::vector<Value> & g_t, const SetFunction & p) -> CheckResult;

    // Rewires parallel copies to the smallest non-adjacent T-node while the
    // S-node's degree allows it. Coverage never drops.
    auto simplify(const Bigraph & g) -> Bigraph;

    // A non-empty Y with |Gamma(Y)| < p(Y), if any.
    auto uncovered_set(const Bigraph & g, const SetFunction & p) -> std::optional<Mask>;

    // Recomputes lhs and rhs of a certificate from its X, Y and parts.
    // Exactly one of spec and bounds applies, depending on the condition.
    auto evaluate_certificate(const Certificate & c, const DegreeSpec * spec, const DegreeBounds * bounds,
        const SetFunction & p) -> std::pair<Value, Value>;
}
