#pragma once

#include <bisynth/branchings.hh>
#include <bisynth/degrees.hh>
#include <bisynth/forests.hh>
#include <bisynth/graph.hh>
#include <bisynth/supermod.hh>

#include <json.hpp>

#include <string>

namespace bisynth
{
    using Json = nlohmann::json;

    // Accepts inline JSON (starting with '{' or '[') or a file path. Parse
    // errors become InputError with the byte offset.
    auto load_json(const std::string & text_or_path) -> Json;

    auto digraph_from_json(const Json & j) -> Digraph;
    auto to_json(const Digraph & d) -> Json;

    auto bigraph_from_json(const Json & j) -> Bigraph;
    auto to_json(const Bigraph & g) -> Json;

    // kind: explicit (t, values keyed by decimal bitmask), termrank (t, ell),
    // forest (m_for), branching (digraph, k, optional m_in).
    auto set_function_from_json(const Json & j) -> SetFunction;
    auto to_json(const SetFunction & p) -> Json;

    auto spec_from_json(const Json & j) -> DegreeSpec;
    auto to_json(const DegreeSpec & m) -> Json;

    // null, missing, "-inf" and "+inf" mean unbounded.
    auto bounds_from_json(const Json & j) -> DegreeBounds;
    auto to_json(const DegreeBounds & b) -> Json;

    auto certificate_from_json(const Json & j) -> Certificate;
    auto to_json(const Certificate & c) -> Json;

    auto packing_from_json(const Json & j) -> Packing;
    auto to_json(const Packing & p) -> Json;

    // Either explicit fields or {"preset": "rooted-count", "k", "f", "g"} /
    // {"preset": "uniform-size", "k", "mu"}; needs the node count.
    auto packing_bounds_from_json(const Json & j, int n) -> PackingBounds;

    auto hypergraph_from_json(const Json & j) -> Hypergraph;
    auto to_json(const Hypergraph & h) -> Json;

    auto value_to_json(Value v) -> Json;
}
