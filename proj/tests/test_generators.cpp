#include <doctest.h>

#include "cgb/errors.hpp"
#include "cgb/generators.hpp"

using namespace cgb;

TEST_CASE("gen_hex_dual minimal lattice") {
    Board b = gen_hex_dual(2, 2);
    CHECK(b.vertex_count == 4);
    CHECK(b.edges.size() == 5);
    CHECK(b.triangles.size() == 2);
    CHECK(validate(b).ok());
}

TEST_CASE("gen_hex_dual 3x3") {
    Board b = gen_hex_dual(3, 3);
    CHECK(b.vertex_count == 9);
    CHECK(validate(b).ok());
    for (const char* label : {"R1", "B1", "R2", "B2"})
        CHECK(side_vertices(b, label).size() == 3);
    // boundary of an n x n lattice has 4(n-1) edges
    CHECK(b.boundary_cycle.size() == 8);
}

TEST_CASE("gen_hex_dual rejects undersized boards") {
    CHECK_THROWS_AS(gen_hex_dual(1, 3), InputError);
    CHECK_THROWS_AS(gen_hex_dual(3, 1), InputError);
}

TEST_CASE("gen_y_dual sizes: V = n(n+1)/2, T = (n-1)^2") {
    Board b2 = gen_y_dual(2);
    CHECK(b2.vertex_count == 3);
    CHECK(b2.triangles.size() == 1);
    for (const char* label : {"l1", "l2", "l3"})
        CHECK(side_vertices(b2, label).size() == 2);

    Board b3 = gen_y_dual(3);
    CHECK(b3.vertex_count == 6);
    CHECK(b3.triangles.size() == 4);
    CHECK(validate(b3).ok());

    Board b4 = gen_y_dual(4);
    CHECK(b4.vertex_count == 10);
    CHECK(b4.triangles.size() == 9);
    CHECK(b4.boundary_cycle.size() == 9);  // 3(n-1) edges
    CHECK(validate(b4).ok());

    CHECK_THROWS_AS(gen_y_dual(1), InputError);
}

TEST_CASE("gen_random minimum size is the single triangle") {
    for (uint64_t seed : {0, 7, 123}) {
        Board b = gen_random(3, 3, seed);
        CHECK(b.vertex_count == 3);
        CHECK(b.triangles.size() == 1);
        CHECK(validate(b).ok());
    }
}

TEST_CASE("gen_random is deterministic per seed and always validates") {
    Board a = gen_random(10, 4, 1);
    Board b = gen_random(10, 4, 1);
    CHECK(a == b);
    CHECK(validate(a).ok());

    Board c = gen_random(10, 4, 2);
    CHECK(validate(c).ok());  // different seed, still a disk

    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n_sides = seed % 2 ? 3 : 4;
        int n_vertices = 3 + static_cast<int>(seed % 12);
        if (n_vertices < n_sides) n_vertices = n_sides;
        Board r = gen_random(n_vertices, n_sides, seed);
        CAPTURE(seed);
        CHECK(r.vertex_count == n_vertices);
        CHECK(validate(r).ok());
    }
}

TEST_CASE("gen_random rejects impossible requests") {
    CHECK_THROWS_AS(gen_random(2, 3, 0), InputError);
    CHECK_THROWS_AS(gen_random(3, 4, 0), InputError);  // triangle boundary cannot host 4 sides
    CHECK_THROWS_AS(gen_random(5, 5, 0), InputError);
}

TEST_CASE("gen_random stays a valid disk at larger sizes") {
    for (uint64_t seed = 100; seed < 112; ++seed) {
        Board b = gen_random(60, seed % 2 ? 3 : 4, seed);
        CAPTURE(seed);
        CHECK(b.vertex_count == 60);
        CHECK(validate(b).ok());
    }
}
