#pragma once

#include <cstdint>

#include "cgb/board.hpp"

namespace cgb {

// Parallelogram triangular lattice, rows x cols vertices, id = j*cols + i.
// Sides R1 = row j=0, B1 = column i=0, R2 = row j=rows-1, B2 = column
// i=cols-1, listed in cyclic order [R1, B1, R2, B2].
Board gen_hex_dual(int rows, int cols);

// Triangular lattice with n vertices per side, n*(n+1)/2 vertices total.
// Sides l1, l2, l3 are the three lattice edges.
Board gen_y_dual(int n);

// Seeded random disk triangulation: grow a single triangle by star
// subdivision and boundary attachment, then cut the boundary into n_sides
// paths at random corners. Deterministic for a fixed seed. Always passes
// validate(). Throws InputError when n_vertices < 3, n_sides is not 3 or 4,
// or the boundary cannot host the requested sides (n_vertices < n_sides).
Board gen_random(int n_vertices, int n_sides, uint64_t seed);

} // namespace cgb
