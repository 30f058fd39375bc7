#include <doctest.h>

#include <algorithm>
#include <random>

#include "cgb/errors.hpp"
#include "cgb/generators.hpp"
#include "cgb/rules.hpp"
#include "naive_oracle.hpp"
#include "test_helpers.hpp"

using namespace cgb;
using testutil::coloring_of;
using testutil::minimal_hex_board;
using testutil::minimal_y_board;

TEST_CASE("monochrome components") {
    Board y = minimal_y_board();
    auto chains = monochrome_components(y, coloring_of("RRR"), Color::Red);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].vertices == std::vector<int>{0, 1, 2});

    // no edge (1,3) on the minimal hex board, so two singletons
    Board h = minimal_hex_board();
    chains = monochrome_components(h, coloring_of(".R.R"), Color::Red);
    REQUIRE(chains.size() == 2);
    CHECK(chains[0].vertices == std::vector<int>{1});
    CHECK(chains[1].vertices == std::vector<int>{3});

    CHECK(monochrome_components(h, coloring_of("...."), Color::Red).empty());
    CHECK(monochrome_components(h, coloring_of("...."), Color::Blue).empty());
}

TEST_CASE("winner on the minimal Y board") {
    Board y = minimal_y_board();
    Outcome o = winner(y, coloring_of("RRB"));
    CHECK(o.kind == Outcome::Kind::RedWins);
    REQUIRE(o.witness);
    CHECK(o.witness->vertices == std::vector<int>{0, 1});
    // witness touches all three sides: l1 = {0,1}, l2 = {1,2}, l3 = {2,0}
    for (const char* label : {"l1", "l2", "l3"}) {
        auto vs = side_vertices(y, label);
        bool meets = false;
        for (int v : o.witness->vertices)
            if (std::binary_search(vs.begin(), vs.end(), v)) meets = true;
        CHECK(meets);
    }
}

TEST_CASE("winner on the minimal hex board") {
    Board h = minimal_hex_board();

    Outcome red = winner(h, coloring_of("RBRB"));
    CHECK(red.kind == Outcome::Kind::RedWins);
    REQUIRE(red.witness);
    CHECK(red.witness->vertices == std::vector<int>{0, 2});  // the diagonal chain

    Outcome blue = winner(h, coloring_of("BRBR"));
    CHECK(blue.kind == Outcome::Kind::BlueWins);
    REQUIRE(blue.witness);
    CHECK(blue.witness->vertices == std::vector<int>{0, 2});  // 0 in B2, 2 in B1

    CHECK(winner(h, coloring_of("....")).kind == Outcome::Kind::Undecided);
}

TEST_CASE("winner witnesses satisfy the side-touching postcondition") {
    Board h = gen_hex_dual(3, 3);
    for (uint64_t index = 0; index < 512; ++index) {
        Coloring colors(9);
        for (int i = 0; i < 9; ++i)
            colors[i] = (index >> i) & 1 ? Color::Blue : Color::Red;
        Outcome o = winner(h, colors);  // throws TheoremViolation on a double win
        REQUIRE(o.decided());           // full coloring must have a winner
        REQUIRE(o.witness);
        auto touches = [&](const char* label) {
            auto vs = side_vertices(h, label);
            for (int v : o.witness->vertices)
                if (std::binary_search(vs.begin(), vs.end(), v)) return true;
            return false;
        };
        if (o.kind == Outcome::Kind::RedWins) {
            CHECK(touches("R1"));
            CHECK(touches("R2"));
        } else {
            CHECK(touches("B1"));
            CHECK(touches("B2"));
        }
    }
}

TEST_CASE("winner never leaves a full coloring undecided on small Y boards") {
    Board y = gen_y_dual(3);
    for (uint64_t index = 0; index < 64; ++index) {
        Coloring colors(6);
        for (int i = 0; i < 6; ++i) colors[i] = (index >> i) & 1 ? Color::Blue : Color::Red;
        CHECK(winner(y, colors).decided());
    }
}

TEST_CASE("winner is monotone under color-preserving extension") {
    std::mt19937_64 rng(99);
    for (const Board& board : {gen_hex_dual(3, 3), gen_y_dual(3)}) {
        for (int trial = 0; trial < 200; ++trial) {
            Coloring partial(board.vertex_count, Color::Empty);
            for (auto& c : partial) {
                switch (rng() % 3) {
                    case 0: c = Color::Red; break;
                    case 1: c = Color::Blue; break;
                    default: break;
                }
            }
            Outcome before = winner(board, partial);
            if (!before.decided()) continue;
            Coloring full = partial;
            for (auto& c : full)
                if (c == Color::Empty) c = (rng() % 2) ? Color::Blue : Color::Red;
            // extending with the winner's color everywhere cannot flip, and
            // any extension keeps the winning chain intact
            Outcome after = winner(board, full);
            if (before.kind == Outcome::Kind::RedWins) {
                // the red witness persists; blue can no longer win
                CHECK(after.kind == Outcome::Kind::RedWins);
            } else {
                CHECK(after.kind == Outcome::Kind::BlueWins);
            }
        }
    }
}

TEST_CASE("winner agrees with the naive oracle on random partial colorings") {
    std::mt19937_64 rng(4242);
    Board boards[] = {gen_hex_dual(3, 3), gen_y_dual(4), gen_random(12, 4, 5),
                      gen_random(12, 3, 6)};
    for (const Board& board : boards) {
        for (int trial = 0; trial < 300; ++trial) {
            Coloring colors(board.vertex_count, Color::Empty);
            for (auto& c : colors) {
                switch (rng() % 3) {
                    case 0: c = Color::Red; break;
                    case 1: c = Color::Blue; break;
                    default: break;
                }
            }
            naive::Goals expected = naive::goals(board, colors);
            if (expected.red && expected.blue) {
                CHECK_THROWS_AS(winner(board, colors), TheoremViolation);
                continue;
            }
            Outcome o = winner(board, colors);
            CHECK(o.kind == (expected.red    ? Outcome::Kind::RedWins
                             : expected.blue ? Outcome::Kind::BlueWins
                                             : Outcome::Kind::Undecided));
        }
    }
}

TEST_CASE("witness_path finds shortest embedded paths") {
    Board h = minimal_hex_board();
    Chain diag{Color::Red, {0, 2}};
    auto path = witness_path(h, coloring_of("RBRB"), diag, "R1", "R2");
    CHECK(path == std::vector<int>{0, 2});

    Board big = gen_hex_dual(3, 3);
    Coloring all_red(9, Color::Red);
    Chain whole{Color::Red, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
    auto col = witness_path(big, all_red, whole, "R1", "R2");
    CHECK(col.size() == 3);  // BFS column, one vertex per row
    for (size_t i = 0; i + 1 < col.size(); ++i) CHECK(big.has_edge(col[i], col[i + 1]));

    Chain stuck{Color::Red, {0}};
    CHECK_THROWS_AS(witness_path(h, coloring_of("R..."), stuck, "R1", "R2"), InputError);
}
