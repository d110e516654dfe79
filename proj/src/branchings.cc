#include <bisynth/branchings.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace bisynth
{
    namespace
    {
        void require_cap(const Digraph & d)
        {
            if (d.n() > branching_node_cap)
                throw CapacityError("branching tests enumerate subsets and need n <= " + std::to_string(branching_node_cap));
        }

        auto missing(const std::vector<Mask> & sets, Mask x) -> Value
        {
            return std::count_if(sets.begin(), sets.end(), [&](Mask r) { return ! (r & x); });
        }

        auto edmonds_violation(const Digraph & d, const std::vector<Mask> & root_sets) -> std::optional<Certificate>
        {
            std::optional<Certificate> best;
            for (Mask x = 1; x <= full_mask(d.n()); ++x) {
                Value need = missing(root_sets, x), have = d.in_degree(x);
                if (need > have && (! best || need - have > best->violation()))
                    best = Certificate{"edmonds", mask_to_indices(x), {}, {}, need, have};
            }
            return best;
        }

        void validate_sizes(const Digraph & d, const std::vector<int> & mu)
        {
            if (mu.empty())
                throw InputError("at least one branching is needed");
            for (std::size_t j = 0; j < mu.size(); ++j)
                if (mu[j] < 1 || mu[j] > d.n() - 1)
                    throw PreconditionError("size of branching " + std::to_string(j) + " must lie in [1, n-1]");
        }

        auto root_demands(const Digraph & d, const std::vector<int> & mu) -> std::vector<int>
        {
            std::vector<int> m;
            for (int v : mu)
                m.push_back(d.n() - v);
            return m;
        }

        auto root_sets_of(const Bigraph & g) -> std::vector<Mask>
        {
            std::vector<Mask> r;
            for (int j = 0; j < g.s_size(); ++j)
                r.push_back(g.neighbors_of_s(bit(j)));
            return r;
        }

        // Rewrites a violated subpartition test of the bipartite reduction
        // as an inequality on subpartitions of V: singletons with a
        // prescribed in-degree go to Y when m_in is given.
        auto translate(const Certificate & c, const Digraph & d, const std::vector<int> & m,
            const std::vector<int> * m_in) -> Certificate
        {
            Certificate out;
            out.condition = m_in ? "branching-indegrees" : "branching-sizes";
            Value rho = 0, ymass = 0;
            for (auto & part : c.parts) {
                if (m_in && part.size() == 1) {
                    out.y.push_back(part[0]);
                    ymass += (*m_in)[part[0]];
                }
                else {
                    out.parts.push_back(part);
                    rho += d.in_degree(indices_to_mask(part, d.n()));
                }
            }
            std::sort(out.y.begin(), out.y.end());
            Value q = static_cast<Value>(c.parts.size());
            Value need = 0;
            for (int mj : m)
                need += std::max<Value>(0, q - mj);
            out.lhs = need;
            out.rhs = ymass + rho;
            return out;
        }

        auto sizes_ok(const Packing & p, const std::vector<int> & mu) -> bool
        {
            for (std::size_t j = 0; j < mu.size(); ++j)
                if (static_cast<int>(p[j].arcs.size()) != mu[j])
                    return false;
            return true;
        }
    }

    auto check_edmonds(const Digraph & d, const std::vector<Mask> & root_sets) -> CheckResult
    {
        require_cap(d);
        for (auto r : root_sets)
            if (! r || (r & ~full_mask(d.n())))
                throw InputError("root sets must be non-empty subsets of V");
        auto c = edmonds_violation(d, root_sets);
        return CheckResult{! c, c};
    }

    auto pack_edmonds(const Digraph & d, const std::vector<Mask> & root_sets, ConstructOptions opts) -> Outcome<Packing>
    {
        Outcome<Packing> out;
        if (auto r = check_edmonds(d, root_sets); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        int n = d.n(), k = static_cast<int>(root_sets.size());
        Mask all = full_mask(n);
        const auto & arcs = d.arcs();
        std::vector<bool> used(arcs.size(), false);
        std::vector<Mask> covered = root_sets;
        std::vector<std::vector<int>> chosen(k);
        std::int64_t nodes = 0;

        // Every remaining branching can still be completed from the unused
        // arcs iff Edmonds' condition holds with the covered sets as roots.
        auto extendable = [&]() {
            for (Mask x = 1; x <= all; ++x) {
                Value need = missing(covered, x);
                if (need == 0)
                    continue;
                Value have = 0;
                for (std::size_t a = 0; a < arcs.size(); ++a)
                    if (! used[a] && ! (x & bit(arcs[a].tail)) && (x & bit(arcs[a].head)))
                        ++have;
                if (have < need)
                    return false;
            }
            return true;
        };

        std::function<bool()> grow = [&]() -> bool {
            int j = 0;
            while (j < k && covered[j] == all)
                ++j;
            if (j == k)
                return true;
            for (std::size_t a = 0; a < arcs.size(); ++a) {
                auto [u, v] = arcs[a];
                if (used[a] || ! (covered[j] & bit(u)) || (covered[j] & bit(v)))
                    continue;
                if (++nodes > opts.budget)
                    throw DefectError("branching packer exceeded its node budget of " + std::to_string(opts.budget));
                used[a] = true;
                covered[j] |= bit(v);
                chosen[j].push_back(static_cast<int>(a));
                if (extendable() && grow())
                    return true;
                chosen[j].pop_back();
                covered[j] &= ~bit(v);
                used[a] = false;
            }
            return false;
        };

        if (! grow())
            throw DefectError("branching packer found no extension although the Edmonds test passed");

        Packing packing;
        for (int j = 0; j < k; ++j) {
            Branching b{root_sets[j], {}};
            for (int a : chosen[j])
                b.arcs.push_back(arcs[a]);
            packing.push_back(std::move(b));
        }
        if (auto problem = verify_packing(d, packing))
            throw DefectError("packing failed verification: " + *problem);
        out.value = std::move(packing);
        return out;
    }

    auto check_pack_sizes(const Digraph & d, const std::vector<int> & mu) -> CheckResult
    {
        require_cap(d);
        validate_sizes(d, mu);
        auto m = root_demands(d, mu);
        auto p = SetFunction::branching(d, static_cast<int>(mu.size()));
        auto r = check_cover_s(m, p);
        if (r)
            return r;
        return CheckResult{false, translate(*r.certificate, d, m, nullptr)};
    }

    auto pack_sizes(const Digraph & d, const std::vector<int> & mu, ConstructOptions opts) -> Outcome<Packing>
    {
        Outcome<Packing> out;
        if (auto r = check_pack_sizes(d, mu); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        auto m = root_demands(d, mu);
        auto g = construct_cover_s(m, SetFunction::branching(d, static_cast<int>(mu.size())), opts);
        if (! g.value)
            throw DefectError("root-set construction rejected a feasible size request");
        auto packed = pack_edmonds(d, root_sets_of(*g.value), opts);
        if (! packed.value)
            throw DefectError("root sets from the covering graph admit no packing");
        if (! sizes_ok(*packed.value, mu))
            throw DefectError("packing has the wrong branching sizes");
        out.value = std::move(packed.value);
        return out;
    }

    auto check_pack_sizes_indeg(const Digraph & d, const std::vector<int> & mu, const std::vector<int> & m_in)
        -> CheckResult
    {
        require_cap(d);
        validate_sizes(d, mu);
        int k = static_cast<int>(mu.size());
        if (static_cast<int>(m_in.size()) != d.n())
            throw InputError("m_in length differs from the node count");
        for (int v = 0; v < d.n(); ++v)
            if (m_in[v] > std::min(d.in_degree_of(v), k))
                throw PreconditionError("m_in(" + std::to_string(v) + ") = " + std::to_string(m_in[v]) +
                    " exceeds min(in-degree, k) = " + std::to_string(std::min(d.in_degree_of(v), k)));
        if (std::accumulate(mu.begin(), mu.end(), 0) != std::accumulate(m_in.begin(), m_in.end(), 0))
            throw PreconditionError("branching sizes and prescribed in-degrees have different sums");
        auto m = root_demands(d, mu);
        auto r = check_cover_s(m, SetFunction::branching(d, k, m_in));
        if (r)
            return r;
        return CheckResult{false, translate(*r.certificate, d, m, &m_in)};
    }

    auto pack_sizes_indeg(const Digraph & d, const std::vector<int> & mu, const std::vector<int> & m_in,
        ConstructOptions opts) -> Outcome<Packing>
    {
        Outcome<Packing> out;
        if (auto r = check_pack_sizes_indeg(d, mu, m_in); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        int k = static_cast<int>(mu.size());
        auto g = construct_cover_s(root_demands(d, mu), SetFunction::branching(d, k, m_in), opts);
        if (! g.value)
            throw DefectError("root-set construction rejected a feasible in-degree request");
        auto packed = pack_edmonds(d, root_sets_of(*g.value), opts);
        if (! packed.value)
            throw DefectError("root sets from the covering graph admit no packing");
        if (! sizes_ok(*packed.value, mu) || packing_indegrees(d.n(), *packed.value) != m_in)
            throw DefectError("packing misses the prescribed sizes or in-degrees");
        out.value = std::move(packed.value);
        return out;
    }

    void PackingBounds::validate(int n) const
    {
        if (k < 1)
            throw InputError("at least one branching is needed");
        if (static_cast<int>(size_lo.size()) != k || static_cast<int>(size_hi.size()) != k)
            throw InputError("size bounds need one entry per branching");
        if (static_cast<int>(indeg_lo.size()) != n || static_cast<int>(indeg_hi.size()) != n)
            throw InputError("in-degree bounds need one entry per node");
        for (int j = 0; j < k; ++j)
            if (size_lo[j] < 0 || size_lo[j] > size_hi[j] || size_hi[j] > n - 1)
                throw PreconditionError("size bounds of branching " + std::to_string(j) + " must satisfy 0 <= lo <= hi <= n-1");
        for (int v = 0; v < n; ++v)
            if (indeg_lo[v] < 0 || indeg_lo[v] > indeg_hi[v] || indeg_hi[v] > k)
                throw PreconditionError("in-degree bounds of node " + std::to_string(v) + " must satisfy 0 <= lo <= hi <= k");
        if (total_lo > total_hi)
            throw PreconditionError("total size lower bound exceeds the upper bound");
    }

    auto PackingBounds::to_degree_bounds(int n) const -> DegreeBounds
    {
        validate(n);
        DegreeBounds b;
        for (int j = 0; j < k; ++j) {
            b.f_s.push_back(n - size_hi[j]);
            b.g_s.push_back(n - size_lo[j]);
        }
        for (int v = 0; v < n; ++v) {
            b.f_t.push_back(k - indeg_hi[v]);
            b.g_t.push_back(k - indeg_lo[v]);
        }
        Value kn = Value{k} * n;
        b.alpha = total_hi >= pos_inf ? neg_inf : kn - total_hi;
        b.beta = total_lo <= neg_inf ? pos_inf : kn - total_lo;
        return b;
    }

    auto rooted_count_preset(int n, int k, const std::vector<int> & f, const std::vector<int> & g) -> PackingBounds
    {
        if (static_cast<int>(f.size()) != n || static_cast<int>(g.size()) != n)
            throw InputError("root-count bounds need one entry per node");
        PackingBounds b;
        b.k = k;
        b.size_lo.assign(k, n - 1);
        b.size_hi.assign(k, n - 1);
        for (int v = 0; v < n; ++v) {
            b.indeg_lo.push_back(k - std::min(g[v], k));
            b.indeg_hi.push_back(k - std::max(f[v], 0));
        }
        return b;
    }

    auto uniform_size_preset(int n, int k, int mu) -> PackingBounds
    {
        PackingBounds b;
        b.k = k;
        b.size_lo.assign(k, mu);
        b.size_hi.assign(k, mu);
        b.indeg_lo.assign(n, 0);
        b.indeg_hi.assign(n, k);
        return b;
    }

    namespace
    {
        auto bounds_certificate(const Certificate & c) -> Certificate
        {
            Certificate out = c;
            out.condition = "packing-" + c.condition;
            return out;
        }
    }

    auto check_pack_bounds(const Digraph & d, const PackingBounds & pb) -> CheckResult
    {
        require_cap(d);
        auto b = pb.to_degree_bounds(d.n());
        auto p = SetFunction::branching(d, pb.k);
        if (auto r = check_bounds(b, p); ! r)
            return CheckResult{false, bounds_certificate(*r.certificate)};
        if (auto r = check_bounds_edges(b, p); ! r)
            return CheckResult{false, bounds_certificate(*r.certificate)};
        return {};
    }

    auto pack_bounds(const Digraph & d, const PackingBounds & pb, ConstructOptions opts) -> Outcome<Packing>
    {
        Outcome<Packing> out;
        if (auto r = check_pack_bounds(d, pb); ! r) {
            out.certificate = r.certificate;
            return out;
        }
        auto g = construct_bounds(pb.to_degree_bounds(d.n()), SetFunction::branching(d, pb.k), opts);
        if (! g.value)
            throw DefectError("root-set construction rejected a feasible bounded request");
        auto packed = pack_edmonds(d, root_sets_of(*g.value), opts);
        if (! packed.value)
            throw DefectError("root sets from the bounded construction admit no packing");
        auto & packing = *packed.value;
        auto indeg = packing_indegrees(d.n(), packing);
        Value total = 0;
        for (int j = 0; j < pb.k; ++j) {
            int size = static_cast<int>(packing[j].arcs.size());
            total += size;
            if (size < pb.size_lo[j] || size > pb.size_hi[j])
                throw DefectError("branching size outside its bounds");
        }
        for (int v = 0; v < d.n(); ++v)
            if (indeg[v] < pb.indeg_lo[v] || indeg[v] > pb.indeg_hi[v])
                throw DefectError("packing in-degree outside its bounds");
        if (total < pb.total_lo || total > pb.total_hi)
            throw DefectError("packing total size outside its bounds");
        out.value = std::move(packed.value);
        out.notes = std::move(g.notes);
        return out;
    }

    auto verify_packing(const Digraph & d, const Packing & packing) -> std::optional<std::string>
    {
        int n = d.n();
        std::map<std::pair<int, int>, int> available;
        for (auto & a : d.arcs())
            ++available[{a.tail, a.head}];
        for (std::size_t j = 0; j < packing.size(); ++j) {
            auto & b = packing[j];
            std::string tag = "branching " + std::to_string(j) + ": ";
            if (b.roots == 0 || (b.roots & ~full_mask(n)))
                return tag + "root set is empty or out of range";
            std::vector<int> parent(n, -1), indeg(n, 0);
            for (auto & a : b.arcs) {
                if (--available[{a.tail, a.head}] < 0)
                    return tag + "uses an arc more often than the digraph has it";
                ++indeg[a.head];
                parent[a.head] = a.tail;
            }
            for (int v = 0; v < n; ++v) {
                bool root = b.roots & bit(v);
                if (root && indeg[v] != 0)
                    return tag + "root " + std::to_string(v) + " has an entering arc";
                if (! root && indeg[v] != 1)
                    return tag + "node " + std::to_string(v) + " does not have exactly one entering arc";
            }
            for (int v = 0; v < n; ++v) {
                int u = v, steps = 0;
                while (parent[u] != -1 && steps <= n) {
                    u = parent[u];
                    ++steps;
                }
                if (steps > n)
                    return tag + "contains a cycle";
            }
        }
        return std::nullopt;
    }

    auto packing_indegrees(int n, const Packing & packing) -> std::vector<int>
    {
        std::vector<int> indeg(n, 0);
        for (auto & b : packing)
            for (auto & a : b.arcs)
                ++indeg[a.head];
        return indeg;
    }
}
