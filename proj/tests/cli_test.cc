#include "support.hh"

#include <bisynth/branchings.hh>
#include <bisynth/cli.hh>
#include <bisynth/forests.hh>
#include <bisynth/json_io.hh>
#include <bisynth/realize.hh>
#include <bisynth/termrank.hh>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace bisynth;
using namespace test_support;

namespace
{
    const std::string data = BISYNTH_TEST_DATA;

    struct Run
    {
        int code;
        Json doc;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        Json doc = out.str().empty() ? Json() : Json::parse(out.str());
        return {code, doc};
    }
}

TEST_CASE("termrank command")
{
    auto r = run({"termrank", "--spec", R"({"m_s":[1,1],"m_t":[1,1]})", "--ell", "2"});
    CHECK(r.code == 0);
    CHECK(r.doc["status"] == "feasible");
    auto g = bigraph_from_json(r.doc["witness"]["graph"]);
    CHECK(g.edge_count() == 2);
    CHECK(max_matching(g).size() == 2);
    CHECK_FALSE(r.doc.contains("certificate"));
}

TEST_CASE("worked counterexample through the command line")
{
    auto r = run({"check", "cover-full", "--spec", data + "/counterexample_spec.json", "--p",
        data + "/counterexample_p.json", "--certificate"});
    CHECK(r.code == 2);
    CHECK(r.doc["status"] == "infeasible");
    auto c = certificate_from_json(r.doc["certificate"]);
    CHECK(c.lhs == 14);
    CHECK(c.rhs == 13);
    auto m = spec_from_json(load_json(data + "/counterexample_spec.json"));
    auto p = set_function_from_json(load_json(data + "/counterexample_p.json"));
    auto [lhs, rhs] = evaluate_certificate(c, &m, nullptr, p);
    CHECK(lhs == 14);
    CHECK(rhs == 13);

    auto first = run({"check", "cover-full", "--spec", data + "/counterexample_spec.json", "--p",
        data + "/counterexample_p.json"});
    CHECK(first.code == 2);
    CHECK(certificate_from_json(first.doc["certificate"]).violation() > 0);
}

TEST_CASE("branchings command")
{
    auto r = run({"branchings", "--mode", "sizes", "--digraph", data + "/path.json", "--k", "2", "--mu", "2,2"});
    CHECK(r.code == 2);
    CHECK(r.doc["certificate"]["parts"].size() == 3);

    auto ok = run({"branchings", "--mode", "sizes", "--digraph", data + "/four_arcs.json", "--k", "2", "--mu", "2,2"});
    REQUIRE(ok.code == 0);
    auto d = digraph_from_json(load_json(data + "/four_arcs.json"));
    auto packing = packing_from_json(ok.doc["witness"]["packing"]);
    CHECK_FALSE(verify_packing(d, packing));

    auto indeg = run({"branchings", "--mode", "sizes-indeg", "--digraph", data + "/four_arcs.json", "--mu", "2,2",
        "--m-in", "0,2,2"});
    REQUIRE(indeg.code == 0);
    CHECK(indeg.doc["witness"]["indegrees"] == Json::array({0, 2, 2}));

    auto bounds = run({"branchings", "--mode", "bounds", "--digraph", data + "/four_arcs.json", "--packing-bounds",
        R"({"preset":"rooted-count","k":2,"f":[0,0,0],"g":[2,2,2]})"});
    CHECK(bounds.code == 0);

    auto mismatch = run({"branchings", "--digraph", data + "/path.json", "--k", "3", "--mu", "2,2"});
    CHECK(mismatch.code == 1);
}

TEST_CASE("realize round trip")
{
    auto r = run({"realize", "cover-full", "--spec", R"({"m_s":[2,1,1],"m_t":[2,2]})", "--p",
        R"({"kind":"forest","m_for":[2,2]})", "--format", "matrix"});
    REQUIRE(r.code == 0);
    auto g = bigraph_from_json(r.doc["witness"]["graph"]);
    CHECK(fits(g, {2, 1, 1}, std::vector<int>{2, 2}, SetFunction::forest({2, 2}).table()));
    CHECK(r.doc["witness"]["row_sums"] == Json::array({2, 1, 1}));
    CHECK(r.doc["witness"]["col_sums"] == Json::array({2, 2}));
    CHECK(r.doc["witness"]["matrix"].size() == 3);

    auto b = run({"realize", "bounds", "--bounds",
        R"({"f_s":[0,0],"g_s":[1,1],"f_t":[0,0],"g_t":[1,1],"alpha":2,"beta":2})"});
    REQUIRE(b.code == 0);
    CHECK(bigraph_from_json(b.doc["witness"]["graph"]).edge_count() == 2);

    auto tr = run({"realize", "cover-s", "--spec", R"({"m_s":[1,1,1]})", "--p", R"({"kind":"termrank","ell":3})",
        "--t", "3"});
    REQUIRE(tr.code == 0);
    CHECK(max_matching(bigraph_from_json(tr.doc["witness"]["graph"])).size() == 3);
}

TEST_CASE("input documents and output files")
{
    std::string path = "cli_test_output.json";
    auto r = run({"check", "gale-ryser", "--input", R"({"spec":{"m_s":[2],"m_t":[2]}})", "--output", path});
    CHECK(r.code == 2);
    CHECK(r.doc.is_null());
    std::ifstream in(path);
    auto doc = Json::parse(in);
    CHECK(doc["certificate"]["lhs"] == 3);
    CHECK(doc["certificate"]["rhs"] == 2);
    std::remove(path.c_str());
}

TEST_CASE("errors and exit codes")
{
    auto bad = run({"check", "gale-ryser", "--spec", R"({"m_s": [1,, 2]})"});
    CHECK(bad.code == 1);
    CHECK(bad.doc["status"] == "error");
    CHECK(bad.doc["error"]["message"].get<std::string>().find("byte") != std::string::npos);

    CHECK(run({"check", "gale-ryser", "--spec", R"({"m_s":[2],"m_t":[1]})"}).code == 1);
    CHECK(run({"check", "nonsense"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"check", "gale-ryser", "--spec", "/no/such/file.json"}).code == 1);
    auto explicit_missing = run({"check", "classify", "--p", R"({"kind":"explicit","t":2,"values":{"1":1,"2":1}})"});
    CHECK(explicit_missing.code == 1);
}

TEST_CASE("check subcommands")
{
    auto c = run({"check", "classify", "--p", R"({"kind":"forest","m_for":[2,2,2]})"});
    REQUIRE(c.code == 0);
    CHECK(c.doc["witness"]["fully_supermodular"] == "no");
    CHECK(c.doc["witness"]["intersecting_supermodular"] == "yes");

    auto m = run({"check", "member-b0", "--spec", data + "/counterexample_spec.json", "--p",
        data + "/counterexample_p.json"});
    CHECK(m.code == 2);
    auto e = run({"check", "edmonds", "--digraph", data + "/path.json", "--roots", "[[0],[1]]"});
    CHECK(e.code == 2);
    CHECK(e.doc["certificate"]["x"] == Json::array({0}));
    auto t = run({"check", "t2-forest", "--bigraph", R"({"s":2,"t":2,"edges":[[0,0],[1,0],[0,1],[1,1]]})"});
    CHECK(t.code == 2);
    auto s = run({"check", "bounds-edges", "--bounds", R"({"f_s":[0,0],"f_t":[0,0],"alpha":5})"});
    CHECK(s.code == 2);
    CHECK(s.doc["certificate"]["condition"] == "edges-min");
}

TEST_CASE("forest and wooded commands")
{
    auto f = run({"forest", "--spec", R"({"m_s":[2,1,1],"m_t":[2,2]})", "--m-for", "2,2"});
    REQUIRE(f.code == 0);
    CHECK(f.doc["witness"]["forest"].size() == 4);
    CHECK(f.doc["witness"]["parents"].size() == 5);

    auto w = run({"wooded", "--m-s", "2,1,1", "--ell", "2"});
    REQUIRE(w.code == 0);
    auto h = hypergraph_from_json(w.doc["witness"]["hypergraph"]);
    CHECK(h.edges.size() == 2);
    CHECK(run({"wooded", "--m-s", "2,2", "--ell", "2"}).code == 2);

    auto hg = run({"wooded", "--hypergraph", R"({"n":3,"edges":[[0,1],[1,2]]})"});
    REQUIRE(hg.code == 0);
    CHECK(hg.doc["witness"]["trimmed"].size() == 2);
}

TEST_CASE("oracle mirrors agree with the main commands")
{
    std::vector<std::vector<std::string>> commands = {
        {"check", "cover-full", "--spec", data + "/counterexample_spec.json", "--p", data + "/counterexample_p.json"},
        {"realize", "cover-full", "--spec", R"({"m_s":[2,1,1],"m_t":[2,2]})", "--p",
            R"({"kind":"forest","m_for":[2,2]})"},
        {"check", "gale-ryser", "--spec", R"({"m_s":[2],"m_t":[2]})"},
        {"check", "cover-s", "--spec", R"({"m_s":[1,1]})", "--p", R"({"kind":"explicit","t":2,"values":{"1":2,"2":2,"3":2}})"},
        {"check", "bounds", "--bounds", R"({"f_s":[0,0],"g_s":[1,1],"f_t":[2,2,2]})"},
        {"termrank", "--spec", R"({"m_s":[1,1],"m_t":[2,0]})", "--ell", "2"},
        {"termrank", "--bounds", R"({"f_s":[1,1,1],"g_s":[2,2,2],"f_t":[1,1,1],"g_t":[2,2,2],"alpha":3,"beta":4})",
            "--ell", "3"},
        {"branchings", "--mode", "sizes", "--digraph", data + "/path.json", "--mu", "2,2"},
        {"branchings", "--mode", "sizes", "--digraph", data + "/four_arcs.json", "--mu", "2,2"},
        {"branchings", "--mode", "edmonds", "--digraph", data + "/path.json", "--roots", "[[0]]"},
        {"forest", "--spec", R"({"m_s":[2,2],"m_t":[2,2]})", "--m-for", "2,2"},
        {"forest", "--bigraph", R"({"s":3,"t":2,"edges":[[0,0],[1,0],[2,0],[0,1],[1,1],[2,1]]})"},
        {"wooded", "--m-s", "2,1,1", "--ell", "2"},
        {"wooded", "--m-s", "2,2", "--ell", "2"},
    };
    for (auto & args : commands) {
        auto main = run(args);
        auto mirrored = args;
        mirrored.insert(mirrored.begin(), "oracle");
        auto exhaustive = run(mirrored);
        auto flagged = args;
        flagged.push_back("--exhaustive");
        CAPTURE(args[0]);
        CAPTURE(args[1]);
        CHECK(main.code == exhaustive.code);
        CHECK(main.code == run(flagged).code);
        CHECK((main.code == 0 || main.code == 2));
    }
}

TEST_CASE("selftest command")
{
    auto r = run({"selftest", "--criterion", "1"});
    CHECK(r.code == 0);
    CHECK(r.doc["witness"]["criteria"][0]["passed"] == true);
}
