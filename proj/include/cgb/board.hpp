#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cgb {

enum class BoardKind { Hex, Y };

// One boundary path. Consecutive path vertices are joined by a board edge;
// the endpoints are corners shared with the neighboring sides.
struct Side {
    std::string label;      // R1 B1 R2 B2 (Hex) or l1 l2 l3 (Y)
    std::vector<int> path;  // vertex sequence along the boundary

    bool operator==(const Side&) const = default;
};

// A triangulation of a 2-disk with its boundary cycle decomposed into sides.
// build() populates the derived fields; it does not check the disk or side
// conditions. Immutable after construction, safe to share across threads.
struct Board {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<Side> sides;

    // derived
    std::vector<std::pair<int, int>> edges;   // normalized (lo, hi), sorted
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
    std::vector<int> boundary_cycle;          // empty if not a single simple cycle

    BoardKind kind() const;
    bool has_edge(int a, int b) const;
    bool on_boundary(int v) const;
    const Side* find_side(std::string_view label) const;
    int side_index(std::string_view label) const;  // -1 if absent

    bool operator==(const Board& other) const {
        return vertex_count == other.vertex_count && triangles == other.triangles &&
               sides == other.sides;
    }
};

struct Violation {
    std::string rule;
    std::string message;
    std::vector<std::vector<int>> offenders;  // offending simplices as vertex lists
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Throws InputError on out-of-range ids, degenerate or duplicate triangles.
Board build(int vertex_count, std::vector<std::array<int, 3>> triangles,
            std::vector<Side> sides);

// Checks the full disk and side-decomposition invariants. Failures are
// reported, not thrown, so deliberately broken complexes can be probed.
ValidationReport validate(const Board& board);

// All vertices on the side's path, endpoints included, ascending.
// Throws InputError for an unknown label.
std::vector<int> side_vertices(const Board& board, std::string_view label);

} // namespace cgb
