#include <bisynth/graph.hh>

#include <algorithm>
#include <string>

namespace bisynth
{
    Digraph::Digraph(int n, std::vector<Arc> arcs, Loops loops) :
        _n(n),
        _arcs(std::move(arcs))
    {
        if (n < 0)
            throw InputError("digraph with negative node count");
        for (auto & a : _arcs) {
            if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
                throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") out of range");
            if (a.tail == a.head && loops == Loops::reject)
                throw InputError("loop at node " + std::to_string(a.tail));
        }
    }

    auto Digraph::in_degree(Mask x) const -> int
    {
        int r = 0;
        for (auto & a : _arcs)
            if (! (x & bit(a.tail)) && (x & bit(a.head)))
                ++r;
        return r;
    }

    auto Digraph::out_degree(Mask x) const -> int
    {
        int r = 0;
        for (auto & a : _arcs)
            if ((x & bit(a.tail)) && ! (x & bit(a.head)))
                ++r;
        return r;
    }

    auto Digraph::in_degree_of(int v) const -> int
    {
        return static_cast<int>(std::count_if(_arcs.begin(), _arcs.end(),
            [&](const Arc & a) { return a.head == v && a.tail != v; }));
    }

    auto in_degree(const Digraph & d, Mask x) -> int { return d.in_degree(x); }
    auto out_degree(const Digraph & d, Mask x) -> int { return d.out_degree(x); }

    Bigraph::Bigraph(int s_size, int t_size, std::vector<Edge> edges, Simplicity simplicity) :
        _s(s_size),
        _t(t_size),
        _edges(std::move(edges))
    {
        if (s_size < 0 || t_size < 0)
            throw InputError("bigraph with negative side size");
        for (auto & e : _edges)
            if (e.s < 0 || e.s >= _s || e.t < 0 || e.t >= _t)
                throw InputError("edge (" + std::to_string(e.s) + "," + std::to_string(e.t) + ") out of range");
        if (simplicity == Simplicity::required && ! is_simple())
            throw InputError("bigraph has parallel edges");
    }

    auto Bigraph::is_simple() const -> bool
    {
        auto sorted = _edges;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    auto Bigraph::degrees_s() const -> std::vector<int>
    {
        std::vector<int> d(_s, 0);
        for (auto & e : _edges)
            ++d[e.s];
        return d;
    }

    auto Bigraph::degrees_t() const -> std::vector<int>
    {
        std::vector<int> d(_t, 0);
        for (auto & e : _edges)
            ++d[e.t];
        return d;
    }

    auto Bigraph::multiplicity(int s, int t) const -> int
    {
        return static_cast<int>(std::count(_edges.begin(), _edges.end(), Edge{s, t}));
    }

    auto Bigraph::neighbors(Mask y) const -> Mask
    {
        if (_s > 64)
            throw CapacityError("neighbour masks need |S| <= 64");
        Mask r = 0;
        for (auto & e : _edges)
            if (e.t < 64 && (y & bit(e.t)))
                r |= bit(e.s);
        return r;
    }

    auto Bigraph::neighbors_of_s(Mask x) const -> Mask
    {
        if (_t > 64)
            throw CapacityError("neighbour masks need |T| <= 64");
        Mask r = 0;
        for (auto & e : _edges)
            if (e.s < 64 && (x & bit(e.s)))
                r |= bit(e.t);
        return r;
    }

    auto Bigraph::adjacency_s() const -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> adj(_s);
        for (auto & e : _edges)
            adj[e.s].push_back(e.t);
        return adj;
    }

    auto neighbors(const Bigraph & g, Mask y) -> Mask { return g.neighbors(y); }

    auto max_matching(const Bigraph & g) -> Matching
    {
        auto adj = g.adjacency_s();
        for (auto & a : adj) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        std::vector<int> match_t(g.t_size(), -1);
        std::vector<int> seen(g.t_size(), -1);

        std::function<bool(int, int)> augment = [&](int s, int round) -> bool {
            for (int t : adj[s]) {
                if (seen[t] == round)
                    continue;
                seen[t] = round;
                if (match_t[t] == -1 || augment(match_t[t], round)) {
                    match_t[t] = s;
                    return true;
                }
            }
            return false;
        };

        for (int s = 0; s < g.s_size(); ++s)
            augment(s, s);

        Matching m;
        for (int t = 0; t < g.t_size(); ++t)
            if (match_t[t] != -1)
                m.edges.push_back(Edge{match_t[t], t});
        std::sort(m.edges.begin(), m.edges.end());
        return m;
    }

    auto Subpartition::union_mask() const -> Mask
    {
        Mask r = 0;
        for (auto p : parts)
            r |= p;
        return r;
    }

    auto Subpartition::valid() const -> bool
    {
        Mask seen = 0;
        for (auto p : parts) {
            if (p == 0 || (p & seen) || (p & ~ground))
                return false;
            seen |= p;
        }
        return true;
    }

    void for_each_subpartition(Mask ground, std::optional<int> max_parts,
        const std::function<bool(const std::vector<Mask> &)> & visit, int cap)
    {
        if (popcount(ground) > cap)
            throw CapacityError("subpartition enumeration over " + std::to_string(popcount(ground)) +
                " elements exceeds the cap of " + std::to_string(cap));

        auto elements = mask_to_indices(ground);
        int limit = max_parts.value_or(static_cast<int>(elements.size()));
        std::vector<Mask> parts;
        bool stop = false;

        // Each element is left out, joins an existing part, or opens a new one.
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (stop)
                return;
            if (i == elements.size()) {
                if (! visit(parts))
                    stop = true;
                return;
            }
            Mask b = bit(elements[i]);
            rec(i + 1);
            for (std::size_t j = 0; j < parts.size() && ! stop; ++j) {
                parts[j] |= b;
                rec(i + 1);
                parts[j] &= ~b;
            }
            if (! stop && static_cast<int>(parts.size()) < limit) {
                parts.push_back(b);
                rec(i + 1);
                parts.pop_back();
            }
        };
        rec(0);
    }

    auto enumerate_subpartitions(Mask ground, std::optional<int> max_parts, int cap) -> std::vector<Subpartition>
    {
        std::vector<Subpartition> result;
        for_each_subpartition(ground, max_parts, [&](const std::vector<Mask> & parts) {
            result.push_back(Subpartition{ground, parts});
            return true;
        }, cap);
        return result;
    }
}
