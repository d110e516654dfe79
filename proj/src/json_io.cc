#include <bisynth/json_io.hh>

#include <fstream>
#include <sstream>

namespace bisynth
{
    namespace
    {
        auto require(const Json & j, const char * key) -> const Json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InputError(std::string("missing key \"") + key + "\"");
            return j.at(key);
        }

        template <typename T_>
        auto get(const Json & j, const char * key) -> T_
        {
            try {
                return require(j, key).get<T_>();
            }
            catch (const nlohmann::json::exception & e) {
                throw InputError(std::string("bad value for \"") + key + "\": " + e.what());
            }
        }

        auto bound_value(const Json & j, Value unbounded) -> Value
        {
            if (j.is_null())
                return unbounded;
            if (j.is_string()) {
                auto s = j.get<std::string>();
                if (s == "-inf" || s == "+inf" || s == "inf")
                    return s == "-inf" ? neg_inf : pos_inf;
                throw InputError("bound strings must be \"-inf\" or \"+inf\", got \"" + s + "\"");
            }
            if (! j.is_number_integer())
                throw InputError("bounds must be integers, null or infinity strings");
            return j.get<Value>();
        }

        auto bound_vector(const Json & j, const char * key, std::size_t n, Value unbounded) -> std::vector<Value>
        {
            if (! j.contains(key) || j.at(key).is_null())
                return std::vector<Value>(n, unbounded);
            const auto & a = j.at(key);
            if (! a.is_array() || a.size() != n)
                throw InputError(std::string("\"") + key + "\" must be an array of length " + std::to_string(n));
            std::vector<Value> r;
            for (const auto & v : a)
                r.push_back(bound_value(v, unbounded));
            return r;
        }
    }

    auto value_to_json(Value v) -> Json
    {
        if (v <= neg_inf)
            return "-inf";
        if (v >= pos_inf)
            return "+inf";
        return v;
    }

    auto load_json(const std::string & text_or_path) -> Json
    {
        std::string text = text_or_path;
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
            std::ifstream in(text_or_path);
            if (! in)
                throw InputError("cannot read \"" + text_or_path + "\" (not inline JSON and not a readable file)");
            std::stringstream buffer;
            buffer << in.rdbuf();
            text = buffer.str();
        }
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
        }
    }

    auto digraph_from_json(const Json & j) -> Digraph
    {
        int n = get<int>(j, "n");
        std::vector<Arc> arcs;
        for (const auto & a : require(j, "arcs")) {
            if (! a.is_array() || a.size() != 2)
                throw InputError("arcs must be [tail, head] pairs");
            arcs.push_back(Arc{a[0].get<int>(), a[1].get<int>()});
        }
        return Digraph(n, std::move(arcs));
    }

    auto to_json(const Digraph & d) -> Json
    {
        Json arcs = Json::array();
        for (auto & a : d.arcs())
            arcs.push_back({a.tail, a.head});
        return {{"n", d.n()}, {"arcs", arcs}};
    }

    auto bigraph_from_json(const Json & j) -> Bigraph
    {
        int s = get<int>(j, "s"), t = get<int>(j, "t");
        std::vector<Edge> edges;
        for (const auto & e : require(j, "edges")) {
            if (! e.is_array() || e.size() != 2)
                throw InputError("edges must be [s, t] pairs");
            edges.push_back(Edge{e[0].get<int>(), e[1].get<int>()});
        }
        bool simple = j.value("simple", false);
        return Bigraph(s, t, std::move(edges), simple ? Simplicity::required : Simplicity::allow_parallel);
    }

    auto to_json(const Bigraph & g) -> Json
    {
        Json edges = Json::array();
        for (auto & e : g.edges())
            edges.push_back({e.s, e.t});
        return {{"s", g.s_size()}, {"t", g.t_size()}, {"edges", edges}, {"simple", g.is_simple()}};
    }

    auto set_function_from_json(const Json & j) -> SetFunction
    {
        auto kind = get<std::string>(j, "kind");
        if (kind == "explicit") {
            int t = get<int>(j, "t");
            if (t < 0 || t > max_table_size)
                throw CapacityError("explicit tables need 0 <= t <= " + std::to_string(max_table_size));
            const auto & values = require(j, "values");
            if (! values.is_object())
                throw InputError("\"values\" must be an object keyed by decimal bitmasks");
            std::vector<Value> table(std::size_t{1} << t, 0);
            std::vector<bool> seen(table.size(), false);
            for (auto it = values.begin(); it != values.end(); ++it) {
                std::size_t pos = 0;
                unsigned long long key = 0;
                try {
                    key = std::stoull(it.key(), &pos);
                }
                catch (const std::exception &) {
                    pos = 0;
                }
                if (pos != it.key().size() || key >= table.size())
                    throw InputError("bad set-function key \"" + it.key() + "\"");
                if (! it.value().is_number_integer())
                    throw InputError("set-function values must be integers");
                table[key] = it.value().get<Value>();
                seen[key] = true;
            }
            for (Mask y = 1; y < table.size(); ++y)
                if (! seen[y])
                    throw InputError("set-function table misses key \"" + std::to_string(y) + "\"");
            if (seen[0] && table[0] != 0)
                throw InputError("p(empty set) must be 0");
            return SetFunction::from_table(t, std::move(table));
        }
        if (kind == "termrank")
            return SetFunction::term_rank(get<int>(j, "t"), get<int>(j, "ell"));
        if (kind == "forest")
            return SetFunction::forest(get<std::vector<int>>(j, "m_for"));
        if (kind == "branching") {
            std::optional<std::vector<int>> m_in;
            if (j.contains("m_in") && ! j.at("m_in").is_null())
                m_in = get<std::vector<int>>(j, "m_in");
            return SetFunction::branching(digraph_from_json(require(j, "digraph")), get<int>(j, "k"), m_in);
        }
        throw InputError("unknown set-function kind \"" + kind + "\"");
    }

    auto to_json(const SetFunction & p) -> Json
    {
        const auto & form = p.form();
        if (auto tr = std::get_if<TermRankForm>(&form))
            return {{"kind", "termrank"}, {"t", p.t_size()}, {"ell", tr->ell}};
        if (auto fo = std::get_if<ForestForm>(&form))
            return {{"kind", "forest"}, {"m_for", fo->m_for}};
        if (auto br = std::get_if<BranchingForm>(&form)) {
            Json j = {{"kind", "branching"}, {"digraph", to_json(br->digraph)}, {"k", br->k}};
            if (br->m_in)
                j["m_in"] = *br->m_in;
            return j;
        }
        Json values = Json::object();
        auto table = p.table();
        for (Mask y = 1; y < table.size(); ++y)
            values[std::to_string(y)] = table[y];
        return {{"kind", "explicit"}, {"t", p.t_size()}, {"values", values}};
    }

    auto spec_from_json(const Json & j) -> DegreeSpec
    {
        DegreeSpec m;
        m.m_s = get<std::vector<int>>(j, "m_s");
        if (j.contains("m_t") && ! j.at("m_t").is_null())
            m.m_t = get<std::vector<int>>(j, "m_t");
        return m;
    }

    auto to_json(const DegreeSpec & m) -> Json
    {
        Json j = {{"m_s", m.m_s}};
        if (m.m_t)
            j["m_t"] = *m.m_t;
        return j;
    }

    auto bounds_from_json(const Json & j) -> DegreeBounds
    {
        if (! j.is_object())
            throw InputError("bounds must be a JSON object");
        auto size_of = [&](const char * a, const char * b) -> std::size_t {
            for (auto key : {a, b})
                if (j.contains(key) && j.at(key).is_array())
                    return j.at(key).size();
            throw InputError(std::string("bounds need \"") + a + "\" or \"" + b + "\" to fix the side size");
        };
        std::size_t s = size_of("f_s", "g_s"), t = size_of("f_t", "g_t");
        DegreeBounds b;
        b.f_s = bound_vector(j, "f_s", s, neg_inf);
        b.g_s = bound_vector(j, "g_s", s, pos_inf);
        b.f_t = bound_vector(j, "f_t", t, neg_inf);
        b.g_t = bound_vector(j, "g_t", t, pos_inf);
        b.alpha = j.contains("alpha") ? bound_value(j.at("alpha"), neg_inf) : neg_inf;
        b.beta = j.contains("beta") ? bound_value(j.at("beta"), pos_inf) : pos_inf;
        return b;
    }

    auto to_json(const DegreeBounds & b) -> Json
    {
        auto vec = [](const std::vector<Value> & v) {
            Json a = Json::array();
            for (auto x : v)
                a.push_back(is_finite(x) ? Json(x) : Json(nullptr));
            return a;
        };
        return {{"f_s", vec(b.f_s)}, {"g_s", vec(b.g_s)}, {"f_t", vec(b.f_t)}, {"g_t", vec(b.g_t)},
            {"alpha", is_finite(b.alpha) ? Json(b.alpha) : Json(nullptr)},
            {"beta", is_finite(b.beta) ? Json(b.beta) : Json(nullptr)}};
    }

    auto certificate_from_json(const Json & j) -> Certificate
    {
        Certificate c;
        c.condition = get<std::string>(j, "condition");
        c.x = j.value("x", std::vector<int>{});
        c.y = j.value("y", std::vector<int>{});
        c.parts = j.value("parts", std::vector<std::vector<int>>{});
        c.lhs = get<Value>(j, "lhs");
        c.rhs = get<Value>(j, "rhs");
        return c;
    }

    auto to_json(const Certificate & c) -> Json
    {
        return {{"condition", c.condition}, {"x", c.x}, {"y", c.y}, {"parts", c.parts}, {"lhs", value_to_json(c.lhs)},
            {"rhs", value_to_json(c.rhs)}};
    }

    auto packing_from_json(const Json & j) -> Packing
    {
        if (! j.is_array())
            throw InputError("a packing is an array of branchings");
        Packing p;
        for (const auto & b : j) {
            Branching br;
            br.roots = indices_to_mask(get<std::vector<int>>(b, "roots"), 64);
            for (const auto & a : require(b, "arcs")) {
                if (! a.is_array() || a.size() != 2)
                    throw InputError("arcs must be [tail, head] pairs");
                br.arcs.push_back(Arc{a[0].get<int>(), a[1].get<int>()});
            }
            p.push_back(std::move(br));
        }
        return p;
    }

    auto to_json(const Packing & p) -> Json
    {
        Json a = Json::array();
        for (auto & b : p) {
            Json arcs = Json::array();
            for (auto & arc : b.arcs)
                arcs.push_back({arc.tail, arc.head});
            a.push_back({{"roots", mask_to_indices(b.roots)}, {"arcs", arcs}});
        }
        return a;
    }

    auto packing_bounds_from_json(const Json & j, int n) -> PackingBounds
    {
        int k = get<int>(j, "k");
        if (j.contains("preset")) {
            auto preset = get<std::string>(j, "preset");
            if (preset == "rooted-count")
                return rooted_count_preset(n, k, get<std::vector<int>>(j, "f"), get<std::vector<int>>(j, "g"));
            if (preset == "uniform-size")
                return uniform_size_preset(n, k, get<int>(j, "mu"));
            throw InputError("unknown packing preset \"" + preset + "\"");
        }
        PackingBounds b;
        b.k = k;
        b.size_lo = j.value("size_lo", std::vector<int>(k, 0));
        b.size_hi = j.value("size_hi", std::vector<int>(k, n - 1));
        b.indeg_lo = j.value("indeg_lo", std::vector<int>(n, 0));
        b.indeg_hi = j.value("indeg_hi", std::vector<int>(n, k));
        b.total_lo = j.contains("total_lo") ? bound_value(j.at("total_lo"), neg_inf) : neg_inf;
        b.total_hi = j.contains("total_hi") ? bound_value(j.at("total_hi"), pos_inf) : pos_inf;
        return b;
    }

    auto hypergraph_from_json(const Json & j) -> Hypergraph
    {
        Hypergraph h{get<int>(j, "n"), get<std::vector<std::vector<int>>>(j, "edges")};
        h.validate();
        return h;
    }

    auto to_json(const Hypergraph & h) -> Json
    {
        return {{"n", h.n}, {"edges", h.edges}};
    }
}
