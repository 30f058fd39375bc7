#pragma once

#include <string>
#include <vector>

#include "cgb/board.hpp"
#include "cgb/reductions.hpp"
#include "cgb/rules.hpp"

namespace cgb {

// Hex board enclosed in a slightly larger disk D: apexes r-, r+, b-, b+
// fanned to the four sides, boundary cycle S = (r-, b-, r+, b+).
struct GaleBoard {
    Board d_board;
    int r_minus = -1;
    int r_plus = -1;
    int b_minus = -1;
    int b_plus = -1;
    VertexMap embed;        // hex board into D (identity on ids)
    Coloring pre_coloring;  // exactly the apexes colored
};

// Partition of the colored vertices of D: V+ holds the red vertices
// red-connected to r+, W+ the blue vertices blue-connected to b+.
struct GalePartition {
    std::vector<int> v_plus;
    std::vector<int> v_minus;
    std::vector<int> w_plus;
    std::vector<int> w_minus;
    int r_minus = -1;  // apex ids, copied from the GaleBoard
    int r_plus = -1;
    int b_minus = -1;
    int b_plus = -1;

    bool in_v_plus(int v) const;
    bool in_w_plus(int v) const;
};

struct RetractionReport {
    // Every triangle of D maps into a vertex or an edge of the 4-cycle S
    // under V- -> r-, V+ -> r+, W- -> b-, W+ -> b+.
    bool simplicial = false;
    // The map fixes S pointwise, i.e. r- lands in V- and b- in W-. A true
    // value would exhibit a retraction of the disk onto its boundary.
    bool identity_on_s = false;
    std::vector<std::pair<int, int>> cross_edges;  // V+/V- or W+/W- edges
};

GaleBoard augment(const Board& hex_board);

// Requires the coloring to be full on D and to agree with the apex
// pre-coloring.
GalePartition classify(const GaleBoard& gale_board, const Coloring& full_coloring);

RetractionReport retraction_check(const GaleBoard& gale_board, const GalePartition& partition);

// RedWins iff r- lies in V+, BlueWins iff b- lies in W+; the witness is
// the connected component through the apex pair (V+ or W+). Both at once
// is a TheoremViolation; neither leaves the outcome Undecided.
Outcome winner_from_classification(const GalePartition& partition);

} // namespace cgb
