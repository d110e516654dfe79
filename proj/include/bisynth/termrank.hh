#pragma once

#include <bisynth/degrees.hh>
#include <bisynth/graph.hh>
#include <bisynth/realize.hh>

#include <optional>
#include <vector>

namespace bisynth
{
    // Is there a simple bigraph with the given degrees and a matching of
    // size ell? Only sorted-prefix pairs (X, Y) are evaluated.
    auto check_termrank(const DegreeSpec & m, int ell, Search search = Search::maximum) -> CheckResult;

    // Same question under degree bounds and edge-count bounds. Returns the
    // first violated condition.
    auto check_termrank_bounds(const DegreeBounds & b, int ell, Search search = Search::maximum) -> CheckResult;

    // Raises lower bounds as far as the term rank conditions allow; the
    // result has f equal to the degrees of some solution.
    auto lift_termrank_bounds(const DegreeBounds & b, int ell) -> DegreeBounds;

    auto construct_termrank(const DegreeSpec & m, int ell, ConstructOptions opts = {}) -> Outcome<Bigraph>;
    auto construct_termrank(const DegreeBounds & b, int ell, ConstructOptions opts = {}) -> Outcome<Bigraph>;

    // A degree-preserving 2-switch that strictly increases the matching
    // number, applied to a copy of g.
    auto interchange_step(const Bigraph & g) -> std::optional<Bigraph>;

    auto evaluate_termrank_certificate(const Certificate & c, const DegreeSpec * spec, const DegreeBounds * bounds,
        int ell) -> std::pair<Value, Value>;

    // Row-major 0-1 (or multiplicity) matrix, rows indexed by S.
    auto to_matrix(const Bigraph & g) -> std::vector<std::vector<int>>;
    auto from_matrix(const std::vector<std::vector<int>> & rows, int t_size) -> Bigraph;
}
