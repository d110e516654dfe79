#pragma once

#include <bisynth/degrees.hh>
#include <bisynth/graph.hh>
#include <bisynth/realize.hh>

#include <optional>
#include <string>
#include <vector>

namespace bisynth
{
    struct Branching
    {
        Mask roots = 0;
        std::vector<Arc> arcs;
    };

    using Packing = std::vector<Branching>;

    inline constexpr int branching_node_cap = 16;

    // Arc-disjoint branchings with prescribed root sets exist iff every
    // non-empty X has at least as many entering arcs as root sets missing
    // it. The certificate names such an X (lhs: missing root sets, rhs:
    // entering arcs).
    auto check_edmonds(const Digraph & d, const std::vector<Mask> & root_sets) -> CheckResult;
    auto pack_edmonds(const Digraph & d, const std::vector<Mask> & root_sets, ConstructOptions opts = {})
        -> Outcome<Packing>;

    // Branching j has exactly mu[j] arcs, 1 <= mu[j] <= n - 1.
    auto check_pack_sizes(const Digraph & d, const std::vector<int> & mu) -> CheckResult;
    auto pack_sizes(const Digraph & d, const std::vector<int> & mu, ConstructOptions opts = {}) -> Outcome<Packing>;

    // Additionally each node v is entered by exactly m_in[v] arcs of the
    // packing.
    auto check_pack_sizes_indeg(const Digraph & d, const std::vector<int> & mu, const std::vector<int> & m_in)
        -> CheckResult;
    auto pack_sizes_indeg(const Digraph & d, const std::vector<int> & mu, const std::vector<int> & m_in,
        ConstructOptions opts = {}) -> Outcome<Packing>;

    // Size of branching j in [size_lo[j], size_hi[j]], in-degree of v in
    // the union in [indeg_lo[v], indeg_hi[v]], total size in
    // [total_lo, total_hi]. The totals may be infinite.
    struct PackingBounds
    {
        int k = 0;
        std::vector<int> size_lo, size_hi;
        std::vector<int> indeg_lo, indeg_hi;
        Value total_lo = neg_inf;
        Value total_hi = pos_inf;

        void validate(int n) const;

        // The equivalent degree bounds on the bigraph with S = branchings
        // and T = nodes, where s_j is joined to the roots of branching j.
        auto to_degree_bounds(int n) const -> DegreeBounds;
    };

    // f(v) <= #branchings rooted at v <= g(v); every branching spanning.
    auto rooted_count_preset(int n, int k, const std::vector<int> & f, const std::vector<int> & g) -> PackingBounds;
    // k branchings of size mu each, in-degrees free.
    auto uniform_size_preset(int n, int k, int mu) -> PackingBounds;

    auto check_pack_bounds(const Digraph & d, const PackingBounds & b) -> CheckResult;
    auto pack_bounds(const Digraph & d, const PackingBounds & b, ConstructOptions opts = {}) -> Outcome<Packing>;

    // Independent check of a packing: branching structure, root sets, and
    // multiset-aware arc disjointness. Returns a description of the first
    // problem found.
    auto verify_packing(const Digraph & d, const Packing & packing) -> std::optional<std::string>;

    auto packing_indegrees(int n, const Packing & packing) -> std::vector<int>;
}
