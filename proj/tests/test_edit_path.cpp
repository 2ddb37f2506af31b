#include <doctest.h>

#include "ged/edit_path.hpp"
#include "ged/exact.hpp"
#include "test_util.hpp"

using namespace ged;
namespace tu = ged::testutil;

namespace {
const CostModel unit = make_constant_model(ConstantCosts{});
}

TEST_CASE("assignment_to_path: identity mapping gives zero-cost substitutions") {
    Graph g = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");
    EpsAssignment a = EpsAssignment::identity(2);
    RestrictedEditPath p = assignment_to_path(a, g, g);
    CHECK(p.node_removals.empty());
    CHECK(p.node_inserts.empty());
    CHECK(p.edge_removals.empty());
    CHECK(p.edge_inserts.empty());
    CHECK(p.node_subs.size() == 2);  // identity subs stored explicitly
    CHECK(p.edge_subs.size() == 1);
    CHECK(path_cost(p, unit, g, g) == 0.0);
    CHECK(validate_path(p, g, g).empty());
}

TEST_CASE("assignment_to_path: empty mapping removes then inserts everything") {
    Graph g1 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");
    Graph g2 = tu::parse_text("graph undirected\nv 0 C\n");
    EpsAssignment phi0 = EpsAssignment::empty(2, 1);
    RestrictedEditPath p = assignment_to_path(phi0, g1, g2);
    CHECK(p.edge_removals.size() == 1);
    CHECK(p.node_removals.size() == 2);
    CHECK(p.node_subs.empty());
    CHECK(p.node_inserts.size() == 1);
    CHECK(validate_path(p, g1, g2).empty());
    CHECK(path_cost(p, unit, g1, g2) == 4.0);  // edge + 2 nodes out, 1 node in
}

TEST_CASE("assignment_to_path: target edge missing forces a removal") {
    Graph g1 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");
    Graph g2 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\n");
    EpsAssignment a = EpsAssignment::identity(2);
    RestrictedEditPath p = assignment_to_path(a, g1, g2);
    REQUIRE(p.edge_removals.size() == 1);
    CHECK(p.edge_removals[0] == EdgeRef{0, 1});
    CHECK(p.edge_subs.empty());
    CHECK(validate_path(p, g1, g2).empty());
}

TEST_CASE("path/assignment roundtrip is the identity") {
    tu::Rng rng(301);
    for (int trial = 0; trial < 500; ++trial) {
        bool directed = trial % 2 == 0;
        Graph g1 = tu::random_graph(rng, 6, directed);
        Graph g2 = tu::random_graph(rng, 6, directed);
        EpsAssignment a = tu::random_eps(rng, g1.node_count(), g2.node_count());
        RestrictedEditPath p = assignment_to_path(a, g1, g2);
        CHECK(path_to_assignment(p) == a);
        // Same operation sets when rebuilt from the recovered assignment.
        CHECK(assignment_to_path(path_to_assignment(p), g1, g2) == p);
    }
}

TEST_CASE("path with no substitutions recovers the empty mapping") {
    Graph g1 = tu::parse_text("graph directed\nv 0 A\n");
    Graph g2 = tu::parse_text("graph directed\nv 0 B\n");
    RestrictedEditPath p = assignment_to_path(EpsAssignment::empty(1, 1), g1, g2);
    EpsAssignment back = path_to_assignment(p);
    CHECK(back == EpsAssignment::empty(1, 1));
}

TEST_CASE("path_cost derived examples") {
    // A-B vs A-C, same edge label: substituting B->C is optimal.
    Graph g1 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");
    Graph g2 = tu::parse_text("graph undirected\nv 0 A\nv 1 C\ne 0 1 x\n");
    CHECK(tu::min_over_assignments(g1, g2, unit) == 1.0);

    // Single node vs a connected pair: insert one node and one edge.
    Graph h1 = tu::parse_text("graph undirected\nv 0 A\n");
    Graph h2 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");
    CHECK(tu::min_over_assignments(h1, h2, unit) == 2.0);
}

TEST_CASE("generated paths always validate and hit g2 exactly") {
    tu::Rng rng(302);
    for (int trial = 0; trial < 300; ++trial) {
        bool directed = trial % 2 == 1;
        Graph g1 = tu::random_graph(rng, 6, directed);
        Graph g2 = tu::random_graph(rng, 6, directed);
        EpsAssignment a = tu::random_eps(rng, g1.node_count(), g2.node_count());
        RestrictedEditPath p = assignment_to_path(a, g1, g2);
        auto violations = validate_path(p, g1, g2);
        if (!violations.empty()) FAIL_CHECK(violations.front());
        CHECK(violations.empty());
    }
}

TEST_CASE("validate_path catches broken paths") {
    Graph g1 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");
    Graph g2 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\ne 0 1 x\n");

    SUBCASE("edge inserted before its endpoint exists") {
        RestrictedEditPath p;
        p.edge_removals = {{0, 1}};
        p.node_removals = {0, 1};
        p.node_inserts = {0};  // node 1 never produced
        p.edge_inserts = {{0, 1}};
        auto v = validate_path(p, g1, g2);
        bool flagged = false;
        for (const auto& s : v)
            if (s.find("does not exist yet") != std::string::npos) flagged = true;
        CHECK(flagged);
    }

    SUBCASE("node removed before its incident edge") {
        RestrictedEditPath p;
        p.node_removals = {0, 1};  // edge (0,1) still present
        p.edge_removals = {};
        p.node_inserts = {0, 1};
        p.edge_inserts = {{0, 1}};
        auto v = validate_path(p, g1, g2);
        bool flagged = false;
        for (const auto& s : v)
            if (s.find("removed before incident edge") != std::string::npos) flagged = true;
        CHECK(flagged);
    }

    SUBCASE("final graph differs from g2") {
        RestrictedEditPath p = assignment_to_path(EpsAssignment::identity(2), g1, g2);
        p.edge_subs.clear();  // the G1 edge is no longer consumed
        auto v = validate_path(p, g1, g2);
        CHECK(!v.empty());
    }

    SUBCASE("element substituted and removed") {
        RestrictedEditPath p = assignment_to_path(EpsAssignment::identity(2), g1, g2);
        p.node_removals.push_back(0);
        auto v = validate_path(p, g1, g2);
        bool flagged = false;
        for (const auto& s : v)
            if (s.find("both substituted and removed") != std::string::npos) flagged = true;
        CHECK(flagged);
    }

    SUBCASE("edge removed then re-inserted at the same mapped position") {
        RestrictedEditPath p;
        p.edge_removals = {{0, 1}};
        p.node_subs = {{0, 0}, {1, 1}};
        p.edge_inserts = {{0, 1}};
        auto v = validate_path(p, g1, g2);
        bool flagged = false;
        for (const auto& s : v)
            if (s.find("re-inserted") != std::string::npos) flagged = true;
        CHECK(flagged);
    }
}

TEST_CASE("path serialization format") {
    Graph g1 = tu::parse_text("graph undirected\nv 0 A\nv 1 B\nv 2 C\ne 0 1 x\n");
    Graph g2 = tu::parse_text("graph undirected\nv 0 A\nv 1 D\ne 0 1 y\n");
    EpsAssignment a = EpsAssignment::empty(3, 2);
    a.map[0] = 0;
    a.map[1] = 1;
    RestrictedEditPath p = assignment_to_path(a, g1, g2);
    CHECK(serialize_path(p) ==
          "rn 2\n"
          "sn 0 0\n"
          "sn 1 1\n"
          "se 0 1 0 1\n");
}
