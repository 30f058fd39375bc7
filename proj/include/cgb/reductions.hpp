#pragma once

#include <string>
#include <vector>

#include "cgb/board.hpp"
#include "cgb/rules.hpp"

namespace cgb {

// Total map between the vertex sets of two boards.
struct VertexMap {
    std::vector<int> image;       // image[v] for every source vertex
    int target_vertex_count = 0;

    int operator()(int v) const { return image.at(v); }
    int source_vertex_count() const { return static_cast<int>(image.size()); }

    // Sorted, deduplicated image of a vertex set.
    std::vector<int> apply(const std::vector<int>& vertices) const;

    bool operator==(const VertexMap&) const = default;
};

// Every source edge maps to a target edge or collapses to one vertex, and
// every source triangle image is a simplex of the target.
bool is_simplicial(const Board& source, const VertexMap& map, const Board& target,
                   std::string* why = nullptr);

bool preserves_colors(const VertexMap& map, const Coloring& source_colors,
                      const Coloring& target_colors);

// Hex board turned into a Y position: apex r0 fanned to R2 (pre-colored
// Red), apex b0 fanned to B1 (pre-colored Blue).
struct Extension {
    Board y_board;
    Coloring pre_coloring;  // exactly the apexes colored
    VertexMap embed;        // hex board into y_board (identity on ids)
    int apex_r0 = -1;
    int apex_b0 = -1;
};

// Y board glued to its mirror image along l1, treated as a Hex board with
// sides [R1=l3, B1=l3', R2=l2', B2=l2]. Vertices of l1 keep their ids;
// each vertex off l1 gets a mirror partner.
struct Doubling {
    Board y_board;
    Board hex_board;            // the double
    VertexMap embed;            // y_board into hex_board (identity)
    VertexMap reflect;          // s: involution of the double fixing l1
    VertexMap fold;             // p: double onto y_board, identity on the embed
    std::vector<int> l1_vertices;  // shared ids, ascending
};

Extension extend_y_from_hex(const Board& hex_board);

// True iff the Y game on the extension (apexes pre-colored, the rest copied
// through the embedding) has the same winning color as the Hex game.
bool check_extension_equivalence(const Board& hex_board, const Coloring& full_coloring);

// Throws InputError when the input is not a valid 3-sided board or when two
// l1 vertices are joined by an edge off the l1 path (the glued complex would
// not be simplicial).
Doubling double_y_to_hex(const Board& y_board);

// Coloring of the double with every vertex matching its fold image;
// invariant under reflect by construction.
Coloring mirror_coloring(const Doubling& doubling, const Coloring& y_coloring);

// Image of a chain under fold/reflect. `double_coloring` must be invariant
// under reflect, otherwise the image might be bichromatic and the call
// throws InputError.
Chain fold_chain(const Doubling& doubling, const Chain& chain, const Coloring& double_coloring);
Chain reflect_chain(const Doubling& doubling, const Chain& chain,
                    const Coloring& double_coloring);

// Decides the Y game by doubling: mirror the coloring, run Hex winner
// detection on the double, fold the witness back. Asserts along the way
// that the Hex witness meets l1, the folded chain meets all three sides,
// and the color agrees with direct detection; any failure is a
// TheoremViolation.
Outcome y_winner_via_hex(const Board& y_board, const Coloring& full_coloring);

} // namespace cgb
