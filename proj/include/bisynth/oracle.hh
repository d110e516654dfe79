#pragma once

#include <bisynth/branchings.hh>
#include <bisynth/degrees.hh>
#include <bisynth/graph.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

// Exhaustive reference implementations. Nothing here calls the checkers or
// constructors of the main library; enumeration is lexicographic and the
// first witness found is returned.
namespace bisynth::oracle
{
    inline constexpr int max_cells = 20;
    inline constexpr int max_nodes = 5;
    inline constexpr int max_arcs = 9;
    inline constexpr int max_branchings = 3;

    // Per-node degree intervals and an edge-count interval.
    struct Box
    {
        std::vector<int> s_lo, s_hi, t_lo, t_hi;
        int edges_lo = 0;
        int edges_hi = 1 << 30;

        static auto exact(const DegreeSpec & m) -> Box;
        // Only S-degrees fixed; T-degrees free.
        static auto s_only(const std::vector<int> & m_s, int t) -> Box;
        static auto from_bounds(const DegreeBounds & b) -> Box;
    };

    // rows[i] is the neighbour mask of S-node i.
    using Rows = std::vector<Mask>;
    using Predicate = std::function<bool(const Rows &)>;

    // Visits every simple bigraph in the box; stops when visit returns false.
    void for_each_bigraph(int s, int t, const Box & box, const std::function<bool(const Rows &)> & visit);
    auto find_bigraph(int s, int t, const Box & box, const Predicate & pred) -> std::optional<Bigraph>;

    auto matching_number(int s, int t, const Rows & rows) -> int;
    auto covers(int t, const Rows & rows, const std::vector<Value> & p) -> bool;
    auto has_forest(int s, int t, const Rows & rows, const std::vector<int> & m_for) -> bool;

    // Largest matching number over all simple realizations of m, or none.
    auto max_term_rank(const DegreeSpec & m) -> std::optional<int>;

    struct PackingQuery
    {
        int k = 1;
        std::optional<std::vector<Mask>> roots;
        std::optional<std::vector<int>> sizes;
        std::optional<std::vector<int>> indeg;
        std::optional<PackingBounds> bounds;
    };

    auto find_packing(const Digraph & d, const PackingQuery & q) -> std::optional<Packing>;

    // The largest lhs - rhs of a named inequality over every X, Y and
    // subpartition (no prefix or part-count reductions). Positive means
    // violated.
    struct Instance
    {
        int s = 0, t = 0;
        std::vector<Value> m_s, m_t;
        std::vector<Value> f_s, g_s, f_t, g_t;
        Value alpha = 0, beta = 0;
        std::vector<Value> p;
        int ell = 0;
    };

    struct Violation
    {
        Value amount = 0;
        std::vector<int> x, y;
        std::vector<std::vector<int>> parts;
    };

    auto condition(const std::string & id, const Instance & inst) -> Violation;

    auto instance(const DegreeSpec & m, const std::vector<Value> & p) -> Instance;
    auto instance(const DegreeBounds & normalized, const std::vector<Value> & p) -> Instance;

    // Branching inequalities over all subsets or subpartitions of V.
    auto edmonds_violation(const Digraph & d, const std::vector<Mask> & roots) -> Value;
    auto sizes_violation(const Digraph & d, const std::vector<int> & mu) -> Value;
    auto indeg_violation(const Digraph & d, const std::vector<int> & mu, const std::vector<int> & m_in) -> Value;

    // Hypergraphs as lists of vertex masks.
    auto trimmable(const std::vector<Mask> & hyperedges) -> bool;
    auto union_condition(const std::vector<Mask> & hyperedges) -> bool;
    auto find_uniform_wooded(const std::vector<int> & m_s, int ell) -> std::optional<std::vector<Mask>>;
}
