#pragma once

#include <bisynth/common.hh>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace bisynth
{
    struct Arc
    {
        int tail;
        int head;

        auto operator==(const Arc &) const -> bool = default;
    };

    enum class Loops
    {
        reject,
        allow
    };

    // Directed multigraph on nodes 0..n-1.
    class Digraph
    {
    public:
        Digraph() = default;
        Digraph(int n, std::vector<Arc> arcs, Loops loops = Loops::reject);

        auto n() const -> int { return _n; }
        auto arcs() const -> const std::vector<Arc> & { return _arcs; }

        // Arcs with tail outside X and head inside X.
        auto in_degree(Mask x) const -> int;
        // Arcs with tail inside X and head outside X.
        auto out_degree(Mask x) const -> int;
        auto in_degree_of(int v) const -> int;

    private:
        int _n = 0;
        std::vector<Arc> _arcs;
    };

    auto in_degree(const Digraph & d, Mask x) -> int;
    auto out_degree(const Digraph & d, Mask x) -> int;

    struct Edge
    {
        int s;
        int t;

        auto operator==(const Edge &) const -> bool = default;
        auto operator<=>(const Edge &) const = default;
    };

    enum class Simplicity
    {
        allow_parallel,
        required
    };

    // Bipartite multigraph with colour classes S = 0..s-1 and T = 0..t-1.
    class Bigraph
    {
    public:
        Bigraph() = default;
        Bigraph(int s_size, int t_size, std::vector<Edge> edges, Simplicity simplicity = Simplicity::allow_parallel);

        auto s_size() const -> int { return _s; }
        auto t_size() const -> int { return _t; }
        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
        auto is_simple() const -> bool;

        auto degrees_s() const -> std::vector<int>;
        auto degrees_t() const -> std::vector<int>;
        auto multiplicity(int s, int t) const -> int;

        // Set of S-nodes adjacent to some node of Y (Y is a T-mask).
        auto neighbors(Mask y) const -> Mask;
        // Set of T-nodes adjacent to some node of X (X is an S-mask).
        auto neighbors_of_s(Mask x) const -> Mask;

        auto adjacency_s() const -> std::vector<std::vector<int>>;

    private:
        int _s = 0, _t = 0;
        std::vector<Edge> _edges;
    };

    auto neighbors(const Bigraph & g, Mask y) -> Mask;

    struct Matching
    {
        std::vector<Edge> edges;

        auto size() const -> int { return static_cast<int>(edges.size()); }
    };

    auto max_matching(const Bigraph & g) -> Matching;

    // A family of pairwise disjoint non-empty subsets of a ground set.
    struct Subpartition
    {
        Mask ground = 0;
        std::vector<Mask> parts;

        auto union_mask() const -> Mask;
        auto valid() const -> bool;
    };

    inline constexpr int default_subpartition_cap = 12;

    // Visits every subpartition of the ground set, the empty one included.
    // The callback may return false to stop the enumeration.
    void for_each_subpartition(Mask ground, std::optional<int> max_parts,
        const std::function<bool(const std::vector<Mask> &)> & visit, int cap = default_subpartition_cap);

    auto enumerate_subpartitions(Mask ground, std::optional<int> max_parts = std::nullopt,
        int cap = default_subpartition_cap) -> std::vector<Subpartition>;
}
