#include <bisynth/branchings.hh>
#include <bisynth/cli.hh>
#include <bisynth/forests.hh>
#include <bisynth/json_io.hh>
#include <bisynth/oracle.hh>
#include <bisynth/realize.hh>
#include <bisynth/selftest.hh>
#include <bisynth/supermod.hh>
#include <bisynth/termrank.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>

namespace bisynth::cli
{
    namespace
    {
        struct Options
        {
            std::string command;
            std::vector<std::string> positional;
            std::string input, output, format = "json", mode;
            std::string spec, bounds, p, digraph, bigraph, hypergraph, packing_bounds, roots;
            std::vector<int> mu, m_in, m_for, m_s;
            int ell = -1, k = -1, t = -1, criterion = 0;
            bool certificate = false, exhaustive = false;
            std::int64_t budget = ConstructOptions{}.budget;
            std::uint64_t seed = SuiteOptions{}.seed;
            double scale = 1.0;
        };

        // What a subcommand produced; exactly one of witness and
        // certificate is set.
        struct Verdict
        {
            bool feasible = false;
            Json witness;
            std::optional<Certificate> certificate;
            std::vector<std::string> notes;
            Json stats = Json::object();
        };

        // Command-line flags win over keys of the --input document.
        auto gather(const Options & o) -> Json
        {
            Json doc = o.input.empty() ? Json::object() : load_json(o.input);
            if (! doc.is_object())
                throw InputError("--input must hold a JSON object");
            auto put_doc = [&](const char * key, const std::string & v) {
                if (! v.empty())
                    doc[key] = load_json(v);
            };
            put_doc("spec", o.spec);
            put_doc("bounds", o.bounds);
            put_doc("p", o.p);
            put_doc("digraph", o.digraph);
            put_doc("bigraph", o.bigraph);
            put_doc("hypergraph", o.hypergraph);
            put_doc("packing_bounds", o.packing_bounds);
            put_doc("roots", o.roots);
            auto put_list = [&](const char * key, const std::vector<int> & v) {
                if (! v.empty())
                    doc[key] = v;
            };
            put_list("mu", o.mu);
            put_list("m_in", o.m_in);
            put_list("m_for", o.m_for);
            put_list("m_s", o.m_s);
            if (o.ell >= 0)
                doc["ell"] = o.ell;
            if (o.k >= 0)
                doc["k"] = o.k;
            if (o.t >= 0)
                doc["t"] = o.t;
            if (! o.mode.empty())
                doc["mode"] = o.mode;
            return doc;
        }

        auto need(const Json & doc, const char * key) -> const Json &
        {
            if (! doc.contains(key) || doc.at(key).is_null())
                throw InputError(std::string("this command needs \"") + key + "\" (flag or --input key)");
            return doc.at(key);
        }

        template <typename T_>
        auto need_as(const Json & doc, const char * key) -> T_
        {
            try {
                return need(doc, key).get<T_>();
            }
            catch (const nlohmann::json::exception & e) {
                throw InputError(std::string("bad value for \"") + key + "\": " + e.what());
            }
        }

        auto optional_list(const Json & doc, const char * key) -> std::optional<std::vector<int>>
        {
            if (! doc.contains(key) || doc.at(key).is_null())
                return std::nullopt;
            return need_as<std::vector<int>>(doc, key);
        }

        // p on a T of size t; absent p means p = 0.
        auto set_function(const Json & doc, int t) -> SetFunction
        {
            if (! doc.contains("p") || doc.at("p").is_null()) {
                if (t < 0)
                    throw InputError("give p or the size t of T");
                return SetFunction::zero(t);
            }
            Json pj = doc.at("p");
            if (pj.is_object() && pj.value("kind", "") == "termrank" && ! pj.contains("t")) {
                if (t < 0)
                    throw InputError("a termrank p needs \"t\"");
                pj["t"] = t;
            }
            auto p = set_function_from_json(pj);
            if (t >= 0 && p.t_size() != t)
                throw InputError("p lives on " + std::to_string(p.t_size()) + " T-nodes, the instance has " +
                    std::to_string(t));
            return p;
        }

        auto t_hint(const Json & doc) -> int { return doc.contains("t") ? need_as<int>(doc, "t") : -1; }

        auto bigraph_witness(const Bigraph & g, const Options & o) -> Json
        {
            Json w = {{"graph", to_json(g)}};
            if (o.format == "matrix") {
                w["matrix"] = to_matrix(g);
                w["row_sums"] = g.degrees_s();
                w["col_sums"] = g.degrees_t();
            }
            return w;
        }

        auto checked(const CheckResult & r, Json witness) -> Verdict
        {
            Verdict v;
            v.feasible = r.feasible;
            if (r.feasible)
                v.witness = std::move(witness);
            else
                v.certificate = r.certificate;
            return v;
        }

        template <typename T_, typename F_>
        auto from_outcome(Outcome<T_> && out, F_ && to_witness) -> Verdict
        {
            Verdict v;
            v.notes = out.notes;
            if (out.value) {
                v.feasible = true;
                v.witness = to_witness(*out.value);
            }
            else {
                if (! out.certificate)
                    throw DefectError("construction failed without a certificate");
                v.certificate = out.certificate;
            }
            return v;
        }

        auto verdict_text(const std::string & what) -> Json { return {{"verdict", "all conditions hold"}, {"checked", what}}; }

        auto search_of(const Options & o) -> Search { return o.certificate ? Search::maximum : Search::first; }

        auto root_sets(const Json & doc, int n) -> std::vector<Mask>
        {
            std::vector<Mask> roots;
            for (auto & r : need_as<std::vector<std::vector<int>>>(doc, "roots"))
                roots.push_back(indices_to_mask(r, n));
            return roots;
        }

        auto sizes(const Json & doc, int k) -> std::vector<int>
        {
            auto mu = need_as<std::vector<int>>(doc, "mu");
            if (k >= 0 && static_cast<int>(mu.size()) != k)
                throw InputError("--mu lists " + std::to_string(mu.size()) + " sizes but k = " + std::to_string(k));
            return mu;
        }

        auto run_check(const Options & o, const std::string & kind, const Json & doc) -> Verdict
        {
            CheckOptions copts{PartStrategy::automatic, search_of(o)};
            if (kind == "gale-ryser")
                return checked(check_gale_ryser(spec_from_json(need(doc, "spec")), copts.search), verdict_text(kind));
            if (kind == "cover-s" || kind == "cover-s-sets") {
                auto m = spec_from_json(need(doc, "spec"));
                auto p = set_function(doc, m.m_t ? m.t_size() : t_hint(doc));
                auto r = kind == "cover-s" ? check_cover_s(m.m_s, p, copts) : check_cover_s_sets(m.m_s, p, copts);
                return checked(r, verdict_text(kind));
            }
            if (kind == "cover-full") {
                auto m = spec_from_json(need(doc, "spec"));
                return checked(check_cover_full(m, set_function(doc, m.t_size()), copts), verdict_text(kind));
            }
            if (kind == "bounds" || kind == "bounds-edges") {
                auto b = bounds_from_json(need(doc, "bounds"));
                auto p = set_function(doc, b.t_size());
                auto r = kind == "bounds" ? check_bounds(b, p, copts) : check_bounds_edges(b, p, copts);
                auto w = verdict_text(kind);
                if (r.feasible && kind == "bounds-edges")
                    w["min_edges"] = value_to_json(min_edge_count(b, p));
                return checked(r, w);
            }
            if (kind == "member-b0") {
                auto m = spec_from_json(need(doc, "spec"));
                auto p = set_function(doc, m.t_size());
                MasterFunction b(m.s_size(), p);
                auto r = member_in_b0(b, m);
                Verdict v;
                v.feasible = r.member;
                if (r.member)
                    v.witness = verdict_text(kind);
                else {
                    auto [x, y] = b.split(*r.witness);
                    v.certificate = Certificate{"b0-membership", mask_to_indices(x), mask_to_indices(y), {}, r.lhs, r.rhs};
                }
                return v;
            }
            if (kind == "edmonds") {
                auto d = digraph_from_json(need(doc, "digraph"));
                return checked(check_edmonds(d, root_sets(doc, d.n())), verdict_text(kind));
            }
            if (kind == "t2-forest") {
                auto g = bigraph_from_json(need(doc, "bigraph"));
                return checked(check_t2_forest(g, optional_list(doc, "m_for"), copts.search), verdict_text(kind));
            }
            if (kind == "classify") {
                auto p = set_function(doc, t_hint(doc));
                auto f = classify(p);
                auto tri = [](Tri x) { return x == Tri::yes ? "yes" : x == Tri::no ? "no" : "unverified"; };
                Verdict v;
                v.feasible = true;
                v.witness = {{"kind", p.kind()}, {"intersecting_supermodular", tri(f.intersecting)},
                    {"fully_supermodular", tri(f.fully)}, {"monotone", tri(f.monotone)}};
                return v;
            }
            throw InputError("unknown check \"" + kind +
                "\" (gale-ryser, cover-s, cover-s-sets, cover-full, bounds, bounds-edges, member-b0, edmonds, "
                "t2-forest, classify)");
        }

        // A failed check comes first so that --certificate governs the
        // certificate; constructors only run on accepted instances.
        auto run_realize(const Options & o, const std::string & kind, const Json & doc) -> Verdict
        {
            ConstructOptions c{o.budget};
            auto graph = [&](const Bigraph & g) { return bigraph_witness(g, o); };
            if (kind == "gale-ryser") {
                auto m = spec_from_json(need(doc, "spec"));
                auto r = check_gale_ryser(m, search_of(o));
                return r.feasible ? from_outcome(construct_gale_ryser(m), graph) : checked(r, {});
            }
            if (kind == "cover-s") {
                auto m = spec_from_json(need(doc, "spec"));
                auto p = set_function(doc, m.m_t ? m.t_size() : t_hint(doc));
                auto r = check_cover_s(m.m_s, p, {PartStrategy::automatic, search_of(o)});
                return r.feasible ? from_outcome(construct_cover_s(m.m_s, p, c), graph) : checked(r, {});
            }
            if (kind == "cover-full") {
                auto m = spec_from_json(need(doc, "spec"));
                auto p = set_function(doc, m.t_size());
                auto r = check_cover_full(m, p, {PartStrategy::automatic, search_of(o)});
                return r.feasible ? from_outcome(construct_cover_full(m, p, c), graph) : checked(r, {});
            }
            if (kind == "bounds") {
                auto b = bounds_from_json(need(doc, "bounds"));
                auto p = set_function(doc, b.t_size());
                CheckOptions copts{PartStrategy::automatic, search_of(o)};
                auto r = check_bounds(b, p, copts);
                if (r.feasible)
                    r = check_bounds_edges(b, p, copts);
                return r.feasible ? from_outcome(construct_bounds(b, p, c), graph) : checked(r, {});
            }
            throw InputError("unknown realize target \"" + kind + "\" (gale-ryser, cover-s, cover-full, bounds)");
        }

        auto run_termrank(const Options & o, const Json & doc) -> Verdict
        {
            int ell = need_as<int>(doc, "ell");
            ConstructOptions c{o.budget};
            auto graph = [&](const Bigraph & g) {
                auto w = bigraph_witness(g, o);
                w["matching_number"] = max_matching(g).size();
                return w;
            };
            if (doc.contains("bounds")) {
                auto b = bounds_from_json(doc.at("bounds"));
                auto r = check_termrank_bounds(b, ell, search_of(o));
                return r.feasible ? from_outcome(construct_termrank(b, ell, c), graph) : checked(r, {});
            }
            auto m = spec_from_json(need(doc, "spec"));
            auto r = check_termrank(m, ell, search_of(o));
            return r.feasible ? from_outcome(construct_termrank(m, ell, c), graph) : checked(r, {});
        }

        auto packing_witness(const Digraph & d, const Packing & p) -> Json
        {
            Json sizes_json = Json::array();
            for (auto & b : p)
                sizes_json.push_back(d.n() - popcount(b.roots));
            return {{"packing", to_json(p)}, {"sizes", sizes_json}, {"indegrees", packing_indegrees(d.n(), p)}};
        }

        auto run_branchings(const Options & o, const Json & doc) -> Verdict
        {
            auto d = digraph_from_json(need(doc, "digraph"));
            auto mode = doc.value("mode", std::string("sizes"));
            int k = doc.contains("k") ? need_as<int>(doc, "k") : -1;
            ConstructOptions c{o.budget};
            auto witness = [&](const Packing & p) { return packing_witness(d, p); };
            if (mode == "edmonds") {
                auto roots = root_sets(doc, d.n());
                auto r = check_edmonds(d, roots);
                return r.feasible ? from_outcome(pack_edmonds(d, roots, c), witness) : checked(r, {});
            }
            if (mode == "sizes") {
                auto mu = sizes(doc, k);
                auto r = check_pack_sizes(d, mu);
                return r.feasible ? from_outcome(pack_sizes(d, mu, c), witness) : checked(r, {});
            }
            if (mode == "sizes-indeg") {
                auto mu = sizes(doc, k);
                auto m_in = need_as<std::vector<int>>(doc, "m_in");
                auto r = check_pack_sizes_indeg(d, mu, m_in);
                return r.feasible ? from_outcome(pack_sizes_indeg(d, mu, m_in, c), witness) : checked(r, {});
            }
            if (mode == "bounds") {
                Json pb = need(doc, "packing_bounds");
                if (! pb.contains("k") && k >= 0)
                    pb["k"] = k;
                auto b = packing_bounds_from_json(pb, d.n());
                auto r = check_pack_bounds(d, b);
                return r.feasible ? from_outcome(pack_bounds(d, b, c), witness) : checked(r, {});
            }
            throw InputError("unknown branching mode \"" + mode + "\" (edmonds, sizes, sizes-indeg, bounds)");
        }

        auto forest_witness(const Bigraph & g, const std::vector<Edge> & forest) -> Json
        {
            Json edges = Json::array();
            for (auto & e : forest)
                edges.push_back({e.s, e.t});
            return {{"forest", edges}, {"parents", forest_parents(g.s_size(), g.t_size(), forest)}};
        }

        auto run_forest(const Options & o, const Json & doc) -> Verdict
        {
            auto m_for = optional_list(doc, "m_for");
            if (doc.contains("bigraph")) {
                auto g = bigraph_from_json(doc.at("bigraph"));
                auto r = check_t2_forest(g, m_for, search_of(o));
                if (! r.feasible)
                    return checked(r, {});
                return from_outcome(extract_forest(g, m_for), [&](const auto & f) { return forest_witness(g, f); });
            }
            auto m = spec_from_json(need(doc, "spec"));
            if (! m_for)
                throw InputError("realizing a graph with a forest needs m_for");
            auto r = check_with_forest(m, *m_for, search_of(o));
            if (! r.feasible)
                return checked(r, {});
            return from_outcome(realize_with_forest(m, *m_for, {o.budget}), [&](const ForestRealization & fr) {
                auto w = bigraph_witness(fr.graph, o);
                w.update(forest_witness(fr.graph, fr.forest));
                return w;
            });
        }

        auto run_wooded(const Options & o, const Json & doc) -> Verdict
        {
            if (doc.contains("hypergraph")) {
                auto h = hypergraph_from_json(doc.at("hypergraph"));
                auto g = hypergraph_to_bigraph(h);
                auto r = check_t2_forest(g, std::nullopt, search_of(o));
                if (! r.feasible)
                    return checked(r, {});
                return from_outcome(extract_forest(g), [&](const std::vector<Edge> & f) {
                    std::vector<std::pair<int, int>> trimmed(h.edges.size(), {-1, -1});
                    for (auto & e : f)
                        (trimmed[e.t].first < 0 ? trimmed[e.t].first : trimmed[e.t].second) = e.s;
                    return Json{{"trimmed", trimmed}};
                });
            }
            auto m_s = need_as<std::vector<int>>(doc, "m_s");
            int ell = need_as<int>(doc, "ell");
            auto r = check_wooded_uniform(m_s, ell);
            if (! r.feasible)
                return checked(r, {});
            return from_outcome(realize_wooded_uniform(m_s, ell, {o.budget}), [](const WoodedHypergraph & w) {
                return Json{{"hypergraph", to_json(w.hypergraph)}, {"trimmed", w.trimmed}};
            });
        }

        // Exhaustive search mirrors. Rejections carry the largest raw
        // violation when one exists, else a bare search marker.
        auto exhaustive_certificate(const std::string & id, const oracle::Violation & v) -> Certificate
        {
            return Certificate{id, v.x, v.y, v.parts, v.amount, 0};
        }

        auto search_marker(std::string what) -> Certificate
        {
            return Certificate{"exhaustive-search: no " + std::move(what), {}, {}, {}, 1, 0};
        }

        auto oracle_graph(const std::optional<Bigraph> & g, const Options & o, Certificate otherwise) -> Verdict
        {
            Verdict v;
            v.feasible = g.has_value();
            if (g)
                v.witness = bigraph_witness(*g, o);
            else
                v.certificate = std::move(otherwise);
            return v;
        }

        auto worst(const std::vector<std::string> & ids, const oracle::Instance & inst) -> Certificate
        {
            std::optional<Certificate> best;
            for (auto & id : ids) {
                auto v = oracle::condition(id, inst);
                if (! best || v.amount > best->lhs)
                    best = exhaustive_certificate(id, v);
            }
            return *best;
        }

        auto run_oracle(const Options & o, const std::string & target, const std::string & kind, const Json & doc)
            -> Verdict
        {
            auto any = [](const oracle::Rows &) { return true; };
            if (target == "check" || target == "realize") {
                if (kind == "gale-ryser" || kind == "cover-full") {
                    auto m = spec_from_json(need(doc, "spec"));
                    m.validate();
                    auto p = set_function(doc, m.t_size());
                    auto table = p.table();
                    int s = m.s_size(), t = m.t_size();
                    auto g = kind == "gale-ryser" ? oracle::find_bigraph(s, t, oracle::Box::exact(m), any)
                                                  : oracle::find_bigraph(s, t, oracle::Box::exact(m),
                                                        [&](const oracle::Rows & r) { return oracle::covers(t, r, table); });
                    return oracle_graph(g, o, worst({kind}, oracle::instance(m, table)));
                }
                if (kind == "cover-s") {
                    auto m = spec_from_json(need(doc, "spec"));
                    auto p = set_function(doc, m.m_t ? m.t_size() : t_hint(doc));
                    auto table = p.table();
                    int s = m.s_size(), t = p.t_size();
                    auto g = oracle::find_bigraph(s, t, oracle::Box::s_only(m.m_s, t),
                        [&](const oracle::Rows & r) { return oracle::covers(t, r, table); });
                    return oracle_graph(g, o, worst({"cover-s"}, oracle::instance(DegreeSpec{m.m_s, std::nullopt}, table)));
                }
                if (kind == "bounds" || kind == "bounds-edges") {
                    auto b = bounds_from_json(need(doc, "bounds"));
                    auto p = set_function(doc, b.t_size());
                    auto table = p.table();
                    int s = b.s_size(), t = b.t_size();
                    auto g = oracle::find_bigraph(s, t, oracle::Box::from_bounds(b),
                        [&](const oracle::Rows & r) { return oracle::covers(t, r, table); });
                    return oracle_graph(
                        g, o, worst({"lower-t", "lower-s", "edges-min", "edges-max"}, oracle::instance(b.normalized(), table)));
                }
                throw InputError("the oracle mirrors check/realize gale-ryser, cover-s, cover-full, bounds");
            }
            if (target == "termrank") {
                int ell = need_as<int>(doc, "ell");
                if (doc.contains("bounds")) {
                    auto b = bounds_from_json(doc.at("bounds"));
                    int s = b.s_size(), t = b.t_size();
                    auto g = oracle::find_bigraph(s, t, oracle::Box::from_bounds(b),
                        [&](const oracle::Rows & r) { return oracle::matching_number(s, t, r) >= ell; });
                    auto inst = oracle::instance(b.normalized(), {});
                    inst.ell = ell;
                    return oracle_graph(
                        g, o, worst({"termrank-lower-t", "termrank-lower-s", "termrank-edges-min", "termrank-edges-max"}, inst));
                }
                auto m = spec_from_json(need(doc, "spec"));
                m.validate();
                int s = m.s_size(), t = m.t_size();
                auto g = oracle::find_bigraph(s, t, oracle::Box::exact(m),
                    [&](const oracle::Rows & r) { return oracle::matching_number(s, t, r) >= ell; });
                auto inst = oracle::instance(m, {});
                inst.ell = ell;
                return oracle_graph(g, o, worst({"termrank"}, inst));
            }
            if (target == "branchings") {
                auto d = digraph_from_json(need(doc, "digraph"));
                auto mode = doc.value("mode", std::string("sizes"));
                oracle::PackingQuery q;
                int k = doc.contains("k") ? need_as<int>(doc, "k") : -1;
                if (mode == "edmonds") {
                    q.roots = root_sets(doc, d.n());
                    q.k = static_cast<int>(q.roots->size());
                }
                else if (mode == "sizes" || mode == "sizes-indeg") {
                    q.sizes = sizes(doc, k);
                    q.k = static_cast<int>(q.sizes->size());
                    if (mode == "sizes-indeg")
                        q.indeg = need_as<std::vector<int>>(doc, "m_in");
                }
                else if (mode == "bounds") {
                    Json pb = need(doc, "packing_bounds");
                    if (! pb.contains("k") && k >= 0)
                        pb["k"] = k;
                    q.bounds = packing_bounds_from_json(pb, d.n());
                    q.k = q.bounds->k;
                }
                else
                    throw InputError("unknown branching mode \"" + mode + "\"");
                auto p = oracle::find_packing(d, q);
                Verdict v;
                v.feasible = p.has_value();
                if (p)
                    v.witness = packing_witness(d, *p);
                else
                    v.certificate = search_marker("packing");
                return v;
            }
            if (target == "forest") {
                std::optional<std::vector<int>> m_for = optional_list(doc, "m_for");
                if (doc.contains("bigraph")) {
                    auto g = bigraph_from_json(doc.at("bigraph"));
                    oracle::Rows rows(g.s_size(), 0);
                    for (auto & e : g.edges())
                        rows[e.s] |= bit(e.t);
                    bool ok = oracle::has_forest(g.s_size(), g.t_size(), rows,
                        m_for.value_or(std::vector<int>(g.t_size(), 2)));
                    Verdict v;
                    v.feasible = ok;
                    if (ok)
                        v.witness = verdict_text("forest exists");
                    else
                        v.certificate = search_marker("forest");
                    return v;
                }
                auto m = spec_from_json(need(doc, "spec"));
                m.validate();
                if (! m_for)
                    throw InputError("realizing a graph with a forest needs m_for");
                int s = m.s_size(), t = m.t_size();
                auto g = oracle::find_bigraph(s, t, oracle::Box::exact(m),
                    [&](const oracle::Rows & r) { return oracle::has_forest(s, t, r, *m_for); });
                return oracle_graph(g, o, search_marker("graph with the forest"));
            }
            if (target == "wooded") {
                Verdict v;
                if (doc.contains("hypergraph")) {
                    auto h = hypergraph_from_json(doc.at("hypergraph"));
                    std::vector<Mask> masks;
                    for (auto & e : h.edges)
                        masks.push_back(indices_to_mask(e, h.n));
                    v.feasible = oracle::trimmable(masks);
                    if (v.feasible)
                        v.witness = verdict_text("trimmable");
                    else
                        v.certificate = search_marker("trimming");
                    return v;
                }
                auto m_s = need_as<std::vector<int>>(doc, "m_s");
                auto found = oracle::find_uniform_wooded(m_s, need_as<int>(doc, "ell"));
                v.feasible = found.has_value();
                if (found) {
                    Json edges = Json::array();
                    for (auto e : *found)
                        edges.push_back(mask_to_indices(e));
                    v.witness = {{"hypergraph", {{"n", m_s.size()}, {"edges", edges}}}};
                }
                else
                    v.certificate = search_marker("wooded hypergraph");
                return v;
            }
            throw InputError("the oracle mirrors check, realize, termrank, branchings, forest and wooded");
        }

        auto error_kind(const std::exception & e) -> std::pair<const char *, int>
        {
            if (dynamic_cast<const DefectError *>(&e))
                return {"defect", exit_defect};
            if (dynamic_cast<const CapacityError *>(&e))
                return {"capacity", exit_error};
            if (dynamic_cast<const PreconditionError *>(&e))
                return {"precondition", exit_error};
            if (dynamic_cast<const InputError *>(&e))
                return {"input", exit_error};
            return {"defect", exit_defect};
        }

        auto emit(const Options & o, const Json & doc, std::ostream & out, std::ostream & err) -> bool
        {
            if (o.output.empty()) {
                out << doc.dump(2) << "\n";
                return true;
            }
            std::ofstream f(o.output);
            f << doc.dump(2) << "\n";
            if (! f) {
                err << "bisynth: cannot write " << o.output << "\n";
                return false;
            }
            return true;
        }

        auto positional(const Options & o, std::size_t i, const char * what) -> std::string
        {
            if (o.positional.size() <= i)
                throw InputError(std::string("missing ") + what);
            return o.positional[i];
        }

        auto dispatch(const Options & o, const Json & doc) -> Verdict
        {
            bool exhaustive = o.exhaustive || o.command == "oracle";
            std::string command = o.command;
            std::size_t next = 0;
            if (o.command == "oracle")
                command = positional(o, next++, "the command to mirror");
            bool with_kind = command == "check" || command == "realize";
            std::string kind = with_kind ? positional(o, next++, "the check or realize target") : "";
            if (o.positional.size() > next)
                throw InputError("unexpected argument \"" + o.positional[next] + "\"");
            if (exhaustive)
                return run_oracle(o, command, kind, doc);
            if (command == "check")
                return run_check(o, kind, doc);
            if (command == "realize")
                return run_realize(o, kind, doc);
            if (command == "termrank")
                return run_termrank(o, doc);
            if (command == "branchings")
                return run_branchings(o, doc);
            if (command == "forest")
                return run_forest(o, doc);
            if (command == "wooded")
                return run_wooded(o, doc);
            throw InputError("unknown command \"" + command + "\"");
        }

        auto run_selftest(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            SuiteOptions so{o.seed, o.scale};
            std::vector<CriterionResult> results;
            if (o.criterion)
                results.push_back(run_criterion(o.criterion, so));
            else
                results = run_suite(so);
            Json list = Json::array();
            bool all = true;
            for (auto & r : results) {
                list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                    {"seconds", r.seconds}});
                all = all && r.passed;
            }
            Json doc = {{"command", "selftest"}, {"stats", {{"seed", o.seed}, {"scale", o.scale}}}};
            if (all) {
                doc["status"] = "feasible";
                doc["witness"] = {{"criteria", list}};
            }
            else {
                doc["status"] = "error";
                doc["error"] = {{"kind", "defect"}, {"message", "self-test failures"}, {"criteria", list}};
            }
            if (! emit(o, doc, out, err))
                return exit_error;
            return all ? exit_feasible : exit_defect;
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{"Synthesis of bipartite graphs, branchings and forests under covering and degree constraints"};
        app.name("bisynth");
        app.require_subcommand(1);
        app.fallthrough();

        app.add_option("--input", o.input, "instance document (file or inline JSON)");
        app.add_option("--output", o.output, "write the result here instead of standard output");
        app.add_flag("--certificate", o.certificate, "report the maximum violation instead of the first one found");
        app.add_option("--format", o.format, "json or matrix")->check(CLI::IsMember({"json", "matrix"}));
        app.add_option("--budget", o.budget, "backtracking node budget for constructions");
        app.add_option("--seed", o.seed, "seed for selftest generators");
        app.add_option("--spec", o.spec, "degree specification {\"m_s\", \"m_t\"}");
        app.add_option("--bounds", o.bounds, "degree bounds {\"f_s\", \"g_s\", \"f_t\", \"g_t\", \"alpha\", \"beta\"}");
        app.add_option("--p", o.p, "set function on T");
        app.add_option("--ell", o.ell, "matching size or hyperedge size");
        app.add_option("--t", o.t, "size of T when nothing else fixes it");
        app.add_option("--digraph", o.digraph, "digraph {\"n\", \"arcs\"}");
        app.add_option("--bigraph", o.bigraph, "bigraph {\"s\", \"t\", \"edges\"}");
        app.add_option("--hypergraph", o.hypergraph, "hypergraph {\"n\", \"edges\"}");
        app.add_option("--k", o.k, "number of branchings");
        app.add_option("--mu", o.mu, "branching sizes, comma separated")->delimiter(',');
        app.add_option("--m-in", o.m_in, "in-degrees of the packing, comma separated")->delimiter(',');
        app.add_option("--m-for", o.m_for, "forest degrees of the T-nodes, comma separated")->delimiter(',');
        app.add_option("--m-s", o.m_s, "vertex degrees of a uniform hypergraph, comma separated")->delimiter(',');
        app.add_option("--roots", o.roots, "root sets for the edmonds mode, e.g. [[0],[0,2]]");
        app.add_option("--mode", o.mode, "branchings mode: edmonds, sizes, sizes-indeg, bounds");
        app.add_option("--packing-bounds", o.packing_bounds, "bounds for the branchings bounds mode");
        app.add_flag("--exhaustive", o.exhaustive, "answer with the exhaustive oracle");

        for (auto [name, help] : std::initializer_list<std::pair<const char *, const char *>>{
                 {"check", "feasibility check with certificate"}, {"realize", "check, then construct"},
                 {"termrank", "bigraph with a matching of size ell"}, {"branchings", "arc-disjoint branchings"},
                 {"forest", "forests with prescribed T-degrees"}, {"wooded", "hypergraphs trimmable to a forest"},
                 {"oracle", "exhaustive answer to another command"}, {"selftest", "property suites"}}) {
            auto sub = app.add_subcommand(name, help);
            sub->add_option("args", o.positional, "target");
            sub->callback([&o, name] { o.command = name; });
            if (std::string(name) == "selftest") {
                sub->add_option("--scale", o.scale, "instance count multiplier");
                sub->add_option("--criterion", o.criterion, "run one criterion")->check(CLI::Range(1, criterion_count));
            }
        }

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_feasible;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_feasible;
        }
        catch (const CLI::ParseError & e) {
            err << "bisynth: " << e.what() << "\n";
            Json doc = {{"status", "error"}, {"error", {{"kind", "usage"}, {"message", e.what()}}}};
            emit(o, doc, out, err);
            return exit_error;
        }

        auto start = std::chrono::steady_clock::now();
        try {
            if (o.command == "selftest")
                return run_selftest(o, out, err);
            auto doc = gather(o);
            auto v = dispatch(o, doc);
            if (v.feasible == v.certificate.has_value())
                throw DefectError("verdict and certificate disagree");
            Json result = {{"command", o.command}, {"status", v.feasible ? "feasible" : "infeasible"}};
            if (v.feasible)
                result["witness"] = v.witness;
            else
                result["certificate"] = to_json(*v.certificate);
            v.stats["elapsed_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            result["stats"] = v.stats;
            result["notes"] = v.notes;
            if (! emit(o, result, out, err))
                return exit_error;
            return v.feasible ? exit_feasible : exit_infeasible;
        }
        catch (const std::exception & e) {
            auto [kind, code] = error_kind(e);
            err << "bisynth: " << kind << " error: " << e.what() << "\n";
            Json doc = {{"command", o.command}, {"status", "error"}, {"error", {{"kind", kind}, {"message", e.what()}}}};
            emit(o, doc, out, err);
            return code;
        }
    }
}
