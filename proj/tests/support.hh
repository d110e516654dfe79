#pragma once

#include <bisynth/graph.hh>
#include <bisynth/oracle.hh>
#include <bisynth/supermod.hh>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace test_support
{
    using namespace bisynth;

    inline auto rows_of(const Bigraph & g) -> oracle::Rows
    {
        oracle::Rows rows(g.s_size(), 0);
        for (auto & e : g.edges())
            rows[e.s] |= bit(e.t);
        return rows;
    }

    inline auto edge_set(const Bigraph & g) -> std::vector<Edge>
    {
        auto e = g.edges();
        std::ranges::sort(e);
        return e;
    }

    // Simple, fits the degrees, covers p; checked without library helpers.
    inline auto fits(const Bigraph & g, const std::vector<int> & m_s, const std::optional<std::vector<int>> & m_t,
        const std::vector<Value> & p) -> bool
    {
        auto e = edge_set(g);
        if (std::ranges::adjacent_find(e) != e.end())
            return false;
        std::vector<int> ds(g.s_size(), 0), dt(g.t_size(), 0);
        for (auto & x : e)
            ++ds[x.s], ++dt[x.t];
        if (ds != m_s || (m_t && dt != *m_t))
            return false;
        return p.empty() || oracle::covers(g.t_size(), rows_of(g), p);
    }

    inline auto hall(int t) -> SetFunction
    {
        std::vector<Value> table(std::size_t{1} << t);
        for (Mask y = 0; y < table.size(); ++y)
            table[y] = popcount(y);
        return SetFunction::from_table(t, table);
    }

    // Table of the worked 4x4 counterexample on T = {a, b, c, d}.
    inline auto counterexample_p() -> SetFunction
    {
        std::vector<Value> table(16, 0);
        table[1] = table[2] = table[4] = 3;
        table[8] = 2;
        table[3] = table[5] = table[6] = table[9] = table[10] = 1;
        table[12] = 4;
        table[13] = table[14] = 3;
        table[7] = table[11] = 2;
        table[15] = 4;
        return SetFunction::from_table(4, table);
    }

    inline auto path3() -> Digraph { return Digraph(3, {{0, 1}, {1, 2}}); }
    inline auto four_arcs() -> Digraph { return Digraph(3, {{0, 1}, {1, 2}, {0, 2}, {2, 1}}); }

    inline auto acyclic(int nodes, const std::vector<std::pair<int, int>> & edges) -> bool
    {
        std::vector<int> parent(nodes);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [a, b] : edges) {
            if (find(a) == find(b))
                return false;
            parent[find(a)] = find(b);
        }
        return true;
    }
}
