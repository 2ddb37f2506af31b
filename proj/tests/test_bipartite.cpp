#include <doctest.h>

#include "ged/bipartite.hpp"
#include "ged/exact.hpp"
#include "test_util.hpp"

using namespace ged;
namespace tu = ged::testutil;

namespace {
const CostModel unit = make_constant_model(ConstantCosts{});
}

TEST_CASE("bipartite of a graph with itself is zero") {
    tu::Rng rng(401);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = tu::random_graph(rng, 6, trial % 2 == 0);
        for (BagStrategy s : {BagStrategy::NodeOnly, BagStrategy::IncidentEdges}) {
            BipartiteResult r = bipartite_ged(g, g, unit, s);
            CHECK(r.value == 0.0);
            CHECK(validate_path(r.path, g, g).empty());
        }
    }
}

TEST_CASE("bipartite finds the single substitution") {
    Graph g1 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");
    Graph g2 = tu::parse_text("graph undirected\nv 0 A\nv 1 C\ne 0 1 x\n");
    for (BagStrategy s : {BagStrategy::NodeOnly, BagStrategy::IncidentEdges}) {
        BipartiteResult r = bipartite_ged(g1, g2, unit, s);
        CHECK(r.value == 1.0);
    }
}

TEST_CASE("bipartite value overestimates the exact GED and equals its own path cost") {
    tu::Rng rng(402);
    for (int trial = 0; trial < 300; ++trial) {
        bool directed = trial % 2 == 0;
        Graph g1 = tu::random_graph(rng, 6, directed);
        Graph g2 = tu::random_graph(rng, 6, directed);
        CostModel m = trial % 3 == 0 ? tu::random_table_model(rng)
                                     : make_constant_model(tu::random_costs(rng));
        BagStrategy s = trial % 2 == 0 ? BagStrategy::NodeOnly : BagStrategy::IncidentEdges;
        BipartiteResult r = bipartite_ged(g1, g2, m, s);
        CHECK(r.value == path_cost(r.path, m, g1, g2));
        double exact = brute_force_ged(g1, g2, m);
        CHECK(r.value >= exact - 1e-9);
        CHECK(validate_path(r.path, g1, g2).empty());
    }
}

TEST_CASE("bipartite is deterministic") {
    tu::Rng rng(403);
    Graph g1 = tu::random_graph(rng, 6, false);
    Graph g2 = tu::random_graph(rng, 6, false);
    BipartiteResult first = bipartite_ged(g1, g2, unit, BagStrategy::IncidentEdges);
    for (int repeat = 0; repeat < 3; ++repeat) {
        BipartiteResult again = bipartite_ged(g1, g2, unit, BagStrategy::IncidentEdges);
        CHECK(again.assignment == first.assignment);
        CHECK(again.value == first.value);
    }
}
