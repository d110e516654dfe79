#pragma once

#include <bisynth/degrees.hh>
#include <bisynth/forests.hh>
#include <bisynth/graph.hh>
#include <bisynth/supermod.hh>

#include <random>
#include <vector>

// Seeded random instances for the property suites.
namespace bisynth::gen
{
    using Rng = std::mt19937_64;

    auto uniform(Rng & rng, int lo, int hi) -> int;
    auto coin(Rng & rng, double p = 0.5) -> bool;

    // Each cell present with probability density.
    auto random_bigraph(Rng & rng, int s, int t, double density) -> Bigraph;

    // Balanced, entries in [0, max_entry]; about half come from an actual
    // simple bigraph, the rest are rebalanced noise.
    auto random_spec(Rng & rng, int s, int t, int max_entry) -> DegreeSpec;

    auto random_digraph(Rng & rng, int n, int arcs) -> Digraph;

    // Non-negative and positively intersecting supermodular:
    // max(0, w(Y) + c - |Gamma_H(Y)| + a * C(|Y|, 2)) on non-empty Y.
    auto random_intersecting_table(Rng & rng, int t, int max_value) -> SetFunction;

    // Fully supermodular and monotone: w(Y) + a * C(|Y|, 2), w >= 0.
    auto random_monotone_fully(Rng & rng, int t, int max_value) -> SetFunction;

    // One of the named closed forms or a random intersecting table.
    auto random_set_function(Rng & rng, int t, int max_value) -> SetFunction;

    // Bounds around the degrees of a random bigraph, with random slack and
    // some entries dropped to unbounded; sometimes tightened past feasibility.
    auto random_bounds(Rng & rng, int s, int t, double density, int slack) -> DegreeBounds;

    auto random_hypergraph(Rng & rng, int n, int edges, int max_size) -> Hypergraph;
}
