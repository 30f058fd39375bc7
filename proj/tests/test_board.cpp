#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cgb/board.hpp"
#include "cgb/errors.hpp"
#include "cgb/generators.hpp"
#include "test_helpers.hpp"

using namespace cgb;
using testutil::minimal_hex_board;
using testutil::minimal_y_board;

TEST_CASE("build derives edges, adjacency and boundary for one triangle") {
    Board b = minimal_y_board();
    CHECK(b.vertex_count == 3);
    CHECK(b.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(b.adjacency[0] == std::vector<int>{1, 2});
    CHECK(b.boundary_cycle.size() == 3);
    CHECK(b.kind() == BoardKind::Y);
}

TEST_CASE("build of the two-triangle hex board finds all five edges") {
    // hand enumeration: (0,1,2) gives 01 12 02, (0,2,3) gives 02 23 03
    Board b = minimal_hex_board();
    CHECK(b.edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(b.has_edge(0, 2));
    CHECK_FALSE(b.has_edge(1, 3));
    CHECK(b.kind() == BoardKind::Hex);
}

TEST_CASE("build rejects malformed triangles") {
    CHECK_THROWS_AS(build(3, {{0, 1, 1}}, {}), InputError);
    CHECK_THROWS_AS(build(3, {{0, 1, 3}}, {}), InputError);
    CHECK_THROWS_AS(build(4, {{0, 1, 2}, {2, 0, 1}}, {}), InputError);  // duplicate
    CHECK_THROWS_AS(build(0, {}, {}), InputError);
}

TEST_CASE("validate accepts the minimal boards") {
    CHECK(validate(minimal_y_board()).ok());   // V-E+T = 3-3+1
    CHECK(validate(minimal_hex_board()).ok()); // V-E+T = 4-5+2
}

TEST_CASE("validate rejects a bowtie: boundary is not a single cycle") {
    Board b = build(5, {{0, 1, 2}, {0, 3, 4}},
                    {{"l1", {1, 2}}, {"l2", {2, 0, 3}}, {"l3", {3, 4, 1}}});
    auto report = validate(b);
    REQUIRE_FALSE(report.ok());
    bool boundary_rule = false;
    for (const auto& v : report.violations)
        if (v.rule == "boundary-cycle" || v.rule == "vertex-link") boundary_rule = true;
    CHECK(boundary_rule);
}

TEST_CASE("validate reports side decomposition problems") {
    SUBCASE("swapped side order breaks concatenation") {
        Board b = build(4, {{0, 1, 2}, {0, 2, 3}},
                        {{"R1", {0, 1}}, {"B1", {2, 3}}, {"R2", {1, 2}}, {"B2", {3, 0}}});
        auto report = validate(b);
        REQUIRE_FALSE(report.ok());
        CHECK(report.violations[0].rule == "side-concat");
    }
    SUBCASE("side without an edge") {
        Board b = build(4, {{0, 1, 2}, {0, 2, 3}},
                        {{"R1", {0}}, {"B1", {0, 1, 2}}, {"R2", {2, 3}}, {"B2", {3, 0}}});
        CHECK_FALSE(validate(b).ok());
    }
    SUBCASE("wrong labels for the side count") {
        Board b = build(3, {{0, 1, 2}}, {{"R1", {0, 1}}, {"B1", {1, 2}}, {"R2", {2, 0}}});
        auto report = validate(b);
        REQUIRE_FALSE(report.ok());
        CHECK(report.violations[0].rule == "side-labels");
    }
    SUBCASE("side step not on the boundary") {
        Board b = build(4, {{0, 1, 2}, {0, 2, 3}},
                        {{"R1", {0, 2}}, {"B1", {2, 1}}, {"R2", {1, 0}}, {"B2", {0, 3}}});
        CHECK_FALSE(validate(b).ok());
    }
}

TEST_CASE("validate rejects an edge shared by three triangles") {
    Board b = build(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}},
                    {{"l1", {2, 0}}, {"l2", {0, 3}}, {"l3", {3, 1, 2}}});
    auto report = validate(b);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.rule == "edge-triangles") found = true;
    CHECK(found);
}

TEST_CASE("validate rejects a sphere-like complex without boundary") {
    // tetrahedron surface: every edge in two triangles, V-E+T = 4-6+4 = 2
    Board b = build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
                    {{"l1", {0, 1}}, {"l2", {1, 2}}, {"l3", {2, 0}}});
    auto report = validate(b);
    REQUIRE_FALSE(report.ok());
    bool euler = false;
    for (const auto& v : report.violations)
        if (v.rule == "euler") euler = true;
    CHECK(euler);
}

TEST_CASE("side_vertices returns endpoints and interior, corners shared") {
    Board y = minimal_y_board();
    CHECK(side_vertices(y, "l1") == std::vector<int>{0, 1});
    Board h = minimal_hex_board();
    CHECK(side_vertices(h, "R1") == std::vector<int>{0, 1});
    // the R1/B1 corner belongs to both sides
    auto r1 = side_vertices(h, "R1");
    auto b1 = side_vertices(h, "B1");
    CHECK(std::binary_search(r1.begin(), r1.end(), 1));
    CHECK(std::binary_search(b1.begin(), b1.end(), 1));
    CHECK_THROWS_AS(side_vertices(h, "l1"), InputError);
}

TEST_CASE("boundary structure properties hold on generated boards") {
    std::vector<Board> boards = {minimal_y_board(), minimal_hex_board(), gen_hex_dual(3, 4),
                                 gen_y_dual(4)};
    for (uint64_t seed = 0; seed < 8; ++seed)
        boards.push_back(gen_random(11, seed % 2 ? 3 : 4, seed));

    for (const Board& b : boards) {
        CAPTURE(b.vertex_count);
        REQUIRE(validate(b).ok());
        CHECK(b.vertex_count - static_cast<int>(b.edges.size()) +
                  static_cast<int>(b.triangles.size()) ==
              1);

        // union of side vertices == boundary cycle vertices; non-corners in
        // exactly one side, corners in exactly two
        std::set<int> boundary(b.boundary_cycle.begin(), b.boundary_cycle.end());
        std::map<int, int> membership;
        for (const auto& s : b.sides)
            for (int v : side_vertices(b, s.label)) membership[v]++;
        std::set<int> from_sides;
        for (auto [v, count] : membership) from_sides.insert(v);
        CHECK(from_sides == boundary);
        int corners = 0;
        for (auto [v, count] : membership) {
            CHECK((count == 1 || count == 2));
            if (count == 2) ++corners;
        }
        CHECK(corners == static_cast<int>(b.sides.size()));

        // adjacency symmetric, every edge in >= 1 triangle (by construction
        // edges come from triangles, so check incidence is consistent)
        for (auto [u, v] : b.edges) {
            CHECK(std::binary_search(b.adjacency[u].begin(), b.adjacency[u].end(), v));
            CHECK(std::binary_search(b.adjacency[v].begin(), b.adjacency[v].end(), u));
        }
    }
}
