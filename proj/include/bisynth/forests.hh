#pragma once

#include <bisynth/degrees.hh>
#include <bisynth/graph.hh>
#include <bisynth/realize.hh>

#include <functional>
#include <optional>
#include <vector>

namespace bisynth
{
    // Vertices 0..n-1; each hyperedge lists at least two distinct vertices.
    // Repeated hyperedges are allowed.
    struct Hypergraph
    {
        int n = 0;
        std::vector<std::vector<int>> edges;

        void validate() const;
    };

    // S = vertices, T = hyperedges, s ~ t when s lies in t.
    auto hypergraph_to_bigraph(const Hypergraph & h) -> Bigraph;

    // Does G contain a forest F with d_F(t) = m_for(t) for every T-node?
    // Exactly when |Gamma(Y)| >= m_for(Y) - |Y| + 1 for all non-empty Y.
    // The certificate has lhs = m_for(Y) - |Y| + 1, rhs = |Gamma(Y)|.
    auto check_t2_forest(const Bigraph & g, std::optional<std::vector<int>> m_for = std::nullopt,
        Search search = Search::maximum) -> CheckResult;

    auto extract_forest(const Bigraph & g, std::optional<std::vector<int>> m_for = std::nullopt) -> Outcome<std::vector<Edge>>;

    // Parent of each node of S + T (T-node j is |S| + j) in the forest,
    // rooted at the smallest index of each component; roots get -1.
    auto forest_parents(int s_size, int t_size, const std::vector<Edge> & forest) -> std::vector<int>;

    // Maximum common independent set of two matroids on 0..ground-1, by
    // shortest augmenting paths in the exchange graph.
    using IndependenceOracle = std::function<bool(const std::vector<bool> &)>;
    auto matroid_intersection(int ground, const IndependenceOracle & m1, const IndependenceOracle & m2)
        -> std::vector<bool>;

    struct ForestRealization
    {
        Bigraph graph;
        std::vector<Edge> forest;
    };

    // A simple bigraph with degrees m that contains a forest with T-degrees
    // m_for. Needs m_for <= m_t.
    auto check_with_forest(const DegreeSpec & m, const std::vector<int> & m_for, Search search = Search::maximum)
        -> CheckResult;
    auto realize_with_forest(const DegreeSpec & m, const std::vector<int> & m_for, ConstructOptions opts = {})
        -> Outcome<ForestRealization>;

    struct WoodedHypergraph
    {
        Hypergraph hypergraph;
        // Two vertices kept from each hyperedge; together they form a forest.
        std::vector<std::pair<int, int>> trimmed;
    };

    // An ell-uniform hypergraph with vertex degrees m_s that can be trimmed
    // to a forest.
    auto check_wooded_uniform(const std::vector<int> & m_s, int ell) -> CheckResult;
    auto realize_wooded_uniform(const std::vector<int> & m_s, int ell, ConstructOptions opts = {})
        -> Outcome<WoodedHypergraph>;

    auto evaluate_forest_certificate(const Certificate & c, const DegreeSpec & m, const std::vector<int> & m_for)
        -> std::pair<Value, Value>;
}
