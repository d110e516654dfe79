#include <bisynth/oracle.hh>

#include <algorithm>
#include <numeric>
#include <string>

namespace bisynth::oracle
{
    namespace
    {
        auto ones(Mask m) -> int
        {
            int c = 0;
            for (; m; m >>= 1)
                c += static_cast<int>(m & 1);
            return c;
        }

        auto total(const std::vector<Value> & w, Mask m) -> Value
        {
            Value r = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (m >> i & 1)
                    r += w[i];
            return r;
        }

        auto members(Mask m) -> std::vector<int>
        {
            std::vector<int> r;
            for (int i = 0; m >> i; ++i)
                if (m >> i & 1)
                    r.push_back(i);
            return r;
        }

        // All subpartitions of the elements of ground, as lists of masks.
        void subpartitions(Mask ground, const std::function<void(const std::vector<Mask> &)> & visit)
        {
            auto elems = members(ground);
            if (elems.size() > 12)
                throw CapacityError("oracle subpartition enumeration needs at most 12 elements");
            std::vector<Mask> parts;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == elems.size()) {
                    visit(parts);
                    return;
                }
                Mask b = Mask{1} << elems[i];
                rec(i + 1);
                for (auto & part : parts) {
                    part |= b;
                    rec(i + 1);
                    part &= ~b;
                }
                parts.push_back(b);
                rec(i + 1);
                parts.pop_back();
            };
            rec(0);
        }

        auto rho(const Digraph & d, Mask x) -> Value
        {
            Value r = 0;
            for (auto & a : d.arcs())
                if (! (x >> a.tail & 1) && (x >> a.head & 1))
                    ++r;
            return r;
        }

        auto forest_on(int nodes, const std::vector<std::pair<int, int>> & edges) -> bool
        {
            std::vector<int> comp(nodes);
            std::iota(comp.begin(), comp.end(), 0);
            for (auto [a, b] : edges) {
                int ca = comp[a], cb = comp[b];
                if (ca == cb)
                    return false;
                for (auto & c : comp)
                    if (c == cb)
                        c = ca;
            }
            return true;
        }

        auto plus(Value v) -> Value { return v > 0 ? v : 0; }
    }

    auto Box::exact(const DegreeSpec & m) -> Box
    {
        Box b;
        b.s_lo = b.s_hi = m.m_s;
        if (m.m_t)
            b.t_lo = b.t_hi = *m.m_t;
        return b;
    }

    auto Box::s_only(const std::vector<int> & m_s, int t) -> Box
    {
        Box b;
        b.s_lo = b.s_hi = m_s;
        b.t_lo.assign(t, 0);
        b.t_hi.assign(t, static_cast<int>(m_s.size()));
        return b;
    }

    auto Box::from_bounds(const DegreeBounds & d) -> Box
    {
        Box b;
        int s = d.s_size(), t = d.t_size();
        auto clip = [](Value v, Value lo, Value hi) { return static_cast<int>(std::clamp(v, lo, hi)); };
        for (int i = 0; i < s; ++i) {
            b.s_lo.push_back(clip(d.f_s[i], 0, t + 1));
            b.s_hi.push_back(clip(d.g_s[i], -1, t));
        }
        for (int j = 0; j < t; ++j) {
            b.t_lo.push_back(clip(d.f_t[j], 0, s + 1));
            b.t_hi.push_back(clip(d.g_t[j], -1, s));
        }
        b.edges_lo = clip(d.alpha, 0, s * t + 1);
        b.edges_hi = clip(d.beta, -1, s * t);
        return b;
    }

    void for_each_bigraph(int s, int t, const Box & box, const std::function<bool(const Rows &)> & visit)
    {
        if (s * t > max_cells)
            throw CapacityError("oracle enumerates bigraphs only up to |S||T| <= " + std::to_string(max_cells));
        Rows rows(s, 0);
        std::vector<int> col(t, 0);
        int edges = 0;
        bool stop = false;
        std::function<void(int)> rec = [&](int i) {
            if (stop)
                return;
            if (i == s) {
                for (int j = 0; j < t; ++j)
                    if (col[j] < box.t_lo[j])
                        return;
                if (edges < box.edges_lo || edges > box.edges_hi)
                    return;
                if (! visit(rows))
                    stop = true;
                return;
            }
            for (Mask r = 0; r < (Mask{1} << t) && ! stop; ++r) {
                int deg = ones(r);
                if (deg < box.s_lo[i] || deg > box.s_hi[i])
                    continue;
                bool fits = true;
                for (int j = 0; j < t; ++j)
                    if ((r >> j & 1) && col[j] + 1 > box.t_hi[j])
                        fits = false;
                if (! fits)
                    continue;
                for (int j = 0; j < t; ++j)
                    col[j] += static_cast<int>(r >> j & 1);
                edges += deg;
                rows[i] = r;
                rec(i + 1);
                edges -= deg;
                for (int j = 0; j < t; ++j)
                    col[j] -= static_cast<int>(r >> j & 1);
            }
        };
        rec(0);
    }

    auto find_bigraph(int s, int t, const Box & box, const Predicate & pred) -> std::optional<Bigraph>
    {
        std::optional<Bigraph> found;
        for_each_bigraph(s, t, box, [&](const Rows & rows) {
            if (! pred(rows))
                return true;
            std::vector<Edge> edges;
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < t; ++j)
                    if (rows[i] >> j & 1)
                        edges.push_back(Edge{i, j});
            found = Bigraph(s, t, std::move(edges));
            return false;
        });
        return found;
    }

    auto matching_number(int s, int t, const Rows & rows) -> int
    {
        std::vector<std::vector<int>> memo(s + 1, std::vector<int>(std::size_t{1} << t, -1));
        std::function<int(int, Mask)> best = [&](int i, Mask used) -> int {
            if (i == s)
                return 0;
            int & m = memo[i][used];
            if (m != -1)
                return m;
            m = best(i + 1, used);
            for (int j = 0; j < t; ++j)
                if ((rows[i] >> j & 1) && ! (used >> j & 1))
                    m = std::max(m, 1 + best(i + 1, used | Mask{1} << j));
            return m;
        };
        return best(0, 0);
    }

    auto covers(int t, const Rows & rows, const std::vector<Value> & p) -> bool
    {
        for (Mask y = 1; y < (Mask{1} << t); ++y) {
            Value hit = 0;
            for (Mask r : rows)
                if (r & y)
                    ++hit;
            if (hit < p[y])
                return false;
        }
        return true;
    }

    auto has_forest(int s, int t, const Rows & rows, const std::vector<int> & m_for) -> bool
    {
        std::vector<std::pair<int, int>> chosen;
        std::function<bool(int)> rec = [&](int j) -> bool {
            if (j == t)
                return forest_on(s + t, chosen);
            std::vector<int> nbrs;
            for (int i = 0; i < s; ++i)
                if (rows[i] >> j & 1)
                    nbrs.push_back(i);
            int need = m_for[j];
            if (need > static_cast<int>(nbrs.size()))
                return false;
            // Every need-subset of the neighbours of j.
            for (Mask pick = 0; pick < (Mask{1} << nbrs.size()); ++pick) {
                if (ones(pick) != need)
                    continue;
                auto mark = chosen.size();
                for (std::size_t k = 0; k < nbrs.size(); ++k)
                    if (pick >> k & 1)
                        chosen.emplace_back(nbrs[k], s + j);
                bool ok = rec(j + 1);
                chosen.resize(mark);
                if (ok)
                    return true;
            }
            return false;
        };
        return rec(0);
    }

    auto max_term_rank(const DegreeSpec & m) -> std::optional<int>
    {
        int s = m.s_size(), t = m.t_size();
        std::optional<int> best;
        for_each_bigraph(s, t, Box::exact(m), [&](const Rows & rows) {
            int nu = matching_number(s, t, rows);
            best = std::max(best.value_or(0), nu);
            return true;
        });
        return best;
    }

    auto find_packing(const Digraph & d, const PackingQuery & q) -> std::optional<Packing>
    {
        int n = d.n(), k = q.k;
        const auto & arcs = d.arcs();
        int na = static_cast<int>(arcs.size());
        if (n > max_nodes || na > max_arcs || k > max_branchings)
            throw CapacityError("packing oracle needs n <= 5, |A| <= 9, k <= 3");

        std::vector<int> label(na, -1);
        std::vector<std::vector<int>> indeg(k, std::vector<int>(n, 0));
        std::vector<int> size(k, 0);
        std::optional<Packing> found;

        auto size_cap = [&](int j) {
            if (q.sizes)
                return (*q.sizes)[j];
            if (q.bounds)
                return q.bounds->size_hi[j];
            return n - 1;
        };

        auto accept = [&]() -> bool {
            Packing packing(k);
            std::vector<int> into(n, 0);
            Value sum = 0;
            for (int j = 0; j < k; ++j) {
                Mask roots = 0;
                for (int v = 0; v < n; ++v)
                    if (indeg[j][v] == 0)
                        roots |= Mask{1} << v;
                if (! roots)
                    return false;
                if (q.roots && (*q.roots)[j] != roots)
                    return false;
                if (q.sizes && size[j] != (*q.sizes)[j])
                    return false;
                if (q.bounds && (size[j] < q.bounds->size_lo[j] || size[j] > q.bounds->size_hi[j]))
                    return false;
                std::vector<std::pair<int, int>> pairs;
                packing[j].roots = roots;
                for (int a = 0; a < na; ++a)
                    if (label[a] == j) {
                        pairs.emplace_back(arcs[a].tail, arcs[a].head);
                        packing[j].arcs.push_back(arcs[a]);
                        ++into[arcs[a].head];
                    }
                if (! forest_on(n, pairs))
                    return false;
                sum += size[j];
            }
            if (q.indeg && into != *q.indeg)
                return false;
            if (q.bounds) {
                for (int v = 0; v < n; ++v)
                    if (into[v] < q.bounds->indeg_lo[v] || into[v] > q.bounds->indeg_hi[v])
                        return false;
                if (sum < q.bounds->total_lo || sum > q.bounds->total_hi)
                    return false;
            }
            found = std::move(packing);
            return true;
        };

        std::function<bool(int)> rec = [&](int a) -> bool {
            if (a == na)
                return accept();
            label[a] = -1;
            if (rec(a + 1))
                return true;
            int h = arcs[a].head;
            for (int j = 0; j < k; ++j) {
                if (indeg[j][h] == 1 || size[j] == size_cap(j))
                    continue;
                if (q.roots && ((*q.roots)[j] >> h & 1))
                    continue;
                label[a] = j;
                ++indeg[j][h];
                ++size[j];
                bool ok = rec(a + 1);
                --size[j];
                --indeg[j][h];
                label[a] = -1;
                if (ok)
                    return true;
            }
            return false;
        };
        rec(0);
        return found;
    }

    auto instance(const DegreeSpec & m, const std::vector<Value> & p) -> Instance
    {
        Instance inst;
        inst.s = m.s_size();
        inst.t = m.m_t ? m.t_size() : static_cast<int>(std::countr_zero(p.size()));
        inst.m_s.assign(m.m_s.begin(), m.m_s.end());
        if (m.m_t)
            inst.m_t.assign(m.m_t->begin(), m.m_t->end());
        else
            inst.m_t.assign(inst.t, 0);
        inst.p = p;
        return inst;
    }

    auto instance(const DegreeBounds & b, const std::vector<Value> & p) -> Instance
    {
        Instance inst;
        inst.s = b.s_size();
        inst.t = b.t_size();
        inst.f_s = b.f_s;
        inst.g_s = b.g_s;
        inst.f_t = b.f_t;
        inst.g_t = b.g_t;
        inst.alpha = b.alpha;
        inst.beta = b.beta;
        inst.p = p;
        return inst;
    }

    auto condition(const std::string & id, const Instance & inst) -> Violation
    {
        int s = inst.s, t = inst.t;
        Mask all_s = (Mask{1} << s) - 1, all_t = (Mask{1} << t) - 1;
        std::vector<Value> p = inst.p.empty() ? std::vector<Value>(std::size_t{1} << t, 0) : inst.p;
        Value gamma = std::accumulate(inst.m_s.begin(), inst.m_s.end(), Value{0});

        bool uses_parts = id == "cover-full" || id == "cover-s-sets" || id == "cover-s" || id == "lower-t" || id == "lower-s" ||
            id == "edges-min" || id == "edges-max";
        static const std::vector<std::string> known = {"gale-ryser", "cover-full", "cover-s-sets", "cover-s", "lower-t", "lower-s",
            "edges-min", "edges-max", "termrank", "termrank-lower-t", "termrank-lower-s", "termrank-edges-min", "termrank-edges-max"};
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw InputError("oracle does not know condition " + id);

        auto value = [&](Mask x, Mask y, const std::vector<Mask> & parts) -> Value {
            Value nx = ones(x), ny = ones(y), q = static_cast<Value>(parts.size()), pp = 0;
            for (auto part : parts)
                pp += p[part];
            Value pl = plus(inst.ell - nx - ny);
            Value gs_rest = total(inst.g_s, all_s & ~x), gt_rest = total(inst.g_t, all_t & ~y);
            if (id == "gale-ryser")
                return total(inst.m_s, x) + total(inst.m_t, y) - nx * ny - gamma;
            if (id == "cover-full")
                return total(inst.m_s, x) + total(inst.m_t, y) - nx * ny + pp - q * nx - gamma;
            if (id == "cover-s-sets")
                return total(inst.m_s, x) + pp - q * nx - gamma;
            if (id == "cover-s") {
                Value cap = 0;
                for (auto m : inst.m_s)
                    cap += std::min(m, q);
                return pp - cap;
            }
            if (id == "lower-t")
                return total(inst.f_t, y) - nx * ny + pp - q * nx - gs_rest;
            if (id == "lower-s")
                return total(inst.f_s, x) - nx * ny + pp - q * nx - gt_rest;
            if (id == "edges-min")
                return inst.alpha - (gs_rest + gt_rest + nx * ny - pp + q * nx);
            if (id == "edges-max")
                return total(inst.f_s, x) + total(inst.f_t, y) - nx * ny + pp - q * nx - inst.beta;
            if (id == "termrank")
                return total(inst.m_s, x) + total(inst.m_t, y) - nx * ny + pl - gamma;
            if (id == "termrank-lower-t")
                return total(inst.f_t, y) - nx * ny + pl - gs_rest;
            if (id == "termrank-lower-s")
                return total(inst.f_s, x) - nx * ny + pl - gt_rest;
            if (id == "termrank-edges-min")
                return inst.alpha - (gs_rest + gt_rest + nx * ny - pl);
            return total(inst.f_s, x) + total(inst.f_t, y) - nx * ny + pl - inst.beta;
        };

        Violation best;
        bool first = true;
        auto consider = [&](Mask x, Mask y, const std::vector<Mask> & parts) {
            Value v = value(x, y, parts);
            if (first || v > best.amount) {
                first = false;
                best.amount = v;
                best.x = members(x);
                best.y = members(y);
                best.parts.clear();
                for (auto part : parts)
                    best.parts.push_back(members(part));
            }
        };

        for (Mask x = 0; x <= all_s; ++x) {
            if (id == "cover-s" && x)
                break;
            for (Mask y = 0; y <= all_t; ++y) {
                if ((id == "cover-s-sets" || id == "cover-s") && y)
                    break;
                if (uses_parts)
                    subpartitions(all_t & ~y, [&](const std::vector<Mask> & parts) { consider(x, y, parts); });
                else
                    consider(x, y, {});
            }
        }
        return best;
    }

    auto edmonds_violation(const Digraph & d, const std::vector<Mask> & roots) -> Value
    {
        Value best = 0;
        for (Mask x = 1; x < (Mask{1} << d.n()); ++x) {
            Value missing = 0;
            for (Mask r : roots)
                if (! (r & x))
                    ++missing;
            best = std::max(best, missing - rho(d, x));
        }
        return best;
    }

    auto sizes_violation(const Digraph & d, const std::vector<int> & mu) -> Value
    {
        int n = d.n();
        Value best = 0;
        subpartitions((Mask{1} << n) - 1, [&](const std::vector<Mask> & parts) {
            Value q = static_cast<Value>(parts.size()), need = 0, have = 0;
            for (int m : mu)
                need += plus(q - (n - m));
            for (auto part : parts)
                have += rho(d, part);
            best = std::max(best, need - have);
        });
        return best;
    }

    auto indeg_violation(const Digraph & d, const std::vector<int> & mu, const std::vector<int> & m_in) -> Value
    {
        int n = d.n();
        Mask all = (Mask{1} << n) - 1;
        Value best = 0;
        for (Mask y = 0; y <= all; ++y) {
            Value ymass = 0;
            for (int v : members(y))
                ymass += m_in[v];
            subpartitions(all & ~y, [&](const std::vector<Mask> & parts) {
                Value q = static_cast<Value>(parts.size()) + ones(y), need = 0, have = ymass;
                for (int m : mu)
                    need += plus(q - (n - m));
                for (auto part : parts)
                    have += rho(d, part);
                best = std::max(best, need - have);
            });
        }
        return best;
    }

    auto trimmable(const std::vector<Mask> & hyperedges) -> bool
    {
        int n = 0;
        for (auto h : hyperedges)
            for (int v : members(h))
                n = std::max(n, v + 1);
        std::vector<std::pair<int, int>> chosen;
        std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
            if (i == hyperedges.size())
                return forest_on(n, chosen);
            auto vs = members(hyperedges[i]);
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = a + 1; b < vs.size(); ++b) {
                    chosen.emplace_back(vs[a], vs[b]);
                    bool ok = rec(i + 1);
                    chosen.pop_back();
                    if (ok)
                        return true;
                }
            return false;
        };
        return rec(0);
    }

    auto union_condition(const std::vector<Mask> & hyperedges) -> bool
    {
        std::size_t m = hyperedges.size();
        for (Mask j = 1; j < (Mask{1} << m); ++j) {
            Mask u = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (j >> i & 1)
                    u |= hyperedges[i];
            if (ones(u) < ones(j) + 1)
                return false;
        }
        return true;
    }

    auto find_uniform_wooded(const std::vector<int> & m_s, int ell) -> std::optional<std::vector<Mask>>
    {
        int n = static_cast<int>(m_s.size());
        if (n > 12)
            throw CapacityError("uniform hypergraph oracle needs at most 12 vertices");
        std::vector<Mask> candidates;
        for (Mask h = 0; h < (Mask{1} << n); ++h)
            if (ones(h) == ell)
                candidates.push_back(h);
        std::vector<int> left = m_s;
        std::vector<Mask> chosen;
        std::optional<std::vector<Mask>> found;
        std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
            if (std::all_of(left.begin(), left.end(), [](int v) { return v == 0; })) {
                if (trimmable(chosen)) {
                    found = chosen;
                    return true;
                }
                return false;
            }
            for (std::size_t c = from; c < candidates.size(); ++c) {
                auto vs = members(candidates[c]);
                if (std::any_of(vs.begin(), vs.end(), [&](int v) { return left[v] == 0; }))
                    continue;
                for (int v : vs)
                    --left[v];
                chosen.push_back(candidates[c]);
                bool ok = rec(c);
                chosen.pop_back();
                for (int v : vs)
                    ++left[v];
                if (ok)
                    return true;
            }
            return false;
        };
        rec(0);
        return found;
    }
}
