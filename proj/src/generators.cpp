#include "cgb/generators.hpp"

#include <algorithm>
#include <random>

#include "cgb/errors.hpp"

namespace cgb {

Board gen_hex_dual(int rows, int cols) {
    if (rows < 2 || cols < 2)
        throw InputError("gen_hex_dual requires rows, cols >= 2, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    auto id = [cols](int i, int j) { return j * cols + i; };

    std::vector<std::array<int, 3>> tris;
    tris.reserve(static_cast<size_t>(rows - 1) * (cols - 1) * 2);
    for (int j = 0; j + 1 < rows; ++j) {
        for (int i = 0; i + 1 < cols; ++i) {
            tris.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
            tris.push_back({id(i + 1, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    }

    Side r1{"R1", {}}, b1{"B1", {}}, r2{"R2", {}}, b2{"B2", {}};
    for (int i = cols - 1; i >= 0; --i) r1.path.push_back(id(i, 0));
    for (int j = 0; j < rows; ++j) b1.path.push_back(id(0, j));
    for (int i = 0; i < cols; ++i) r2.path.push_back(id(i, rows - 1));
    for (int j = rows - 1; j >= 0; --j) b2.path.push_back(id(cols - 1, j));

    return build(rows * cols, std::move(tris), {r1, b1, r2, b2});
}

Board gen_y_dual(int n) {
    if (n < 2) throw InputError("gen_y_dual requires n >= 2, got " + std::to_string(n));
    auto id = [](int j, int i) { return j * (j + 1) / 2 + i; };  // row j, position i <= j

    std::vector<std::array<int, 3>> tris;
    tris.reserve(static_cast<size_t>(n - 1) * (n - 1));
    for (int j = 0; j + 1 < n; ++j) {
        for (int i = 0; i <= j; ++i) tris.push_back({id(j, i), id(j + 1, i), id(j + 1, i + 1)});
        for (int i = 0; i < j; ++i) tris.push_back({id(j, i), id(j, i + 1), id(j + 1, i + 1)});
    }

    // l1: left lattice edge from bottom-left corner to the apex; l2: right
    // edge from the apex down; l3: bottom row back to the start.
    Side l1{"l1", {}}, l2{"l2", {}}, l3{"l3", {}};
    for (int j = n - 1; j >= 0; --j) l1.path.push_back(id(j, 0));
    for (int j = 0; j < n; ++j) l2.path.push_back(id(j, j));
    for (int i = n - 1; i >= 0; --i) l3.path.push_back(id(n - 1, i));

    return build(n * (n + 1) / 2, std::move(tris), {l1, l2, l3});
}

namespace {

uint64_t next_below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

} // namespace

Board gen_random(int n_vertices, int n_sides, uint64_t seed) {
    if (n_vertices < 3)
        throw InputError("gen_random requires n_vertices >= 3, got " + std::to_string(n_vertices));
    if (n_sides != 3 && n_sides != 4)
        throw InputError("gen_random requires n_sides in {3, 4}, got " + std::to_string(n_sides));
    if (n_vertices < n_sides)
        throw InputError("boundary of a " + std::to_string(n_vertices) +
                         "-vertex triangulation cannot host " + std::to_string(n_sides) +
                         " sides");

    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 3>> tris = {{0, 1, 2}};
    std::vector<std::pair<int, int>> boundary = {{0, 1}, {1, 2}, {0, 2}};
    int vertices = 3;

    while (vertices < n_vertices) {
        int moves_left = n_vertices - vertices;
        int growth_needed = n_sides - static_cast<int>(boundary.size());
        // Attaching is the only move that grows the boundary; force it when
        // the remaining moves are exactly what the side count still needs.
        bool attach = (growth_needed >= moves_left) || (next_below(rng, 2) == 0);
        if (attach) {
            size_t e = next_below(rng, boundary.size());
            auto [a, b] = boundary[e];
            int w = vertices++;
            tris.push_back({a, b, w});
            boundary[e] = {a, w};
            boundary.push_back({w, b});
        } else {
            size_t t = next_below(rng, tris.size());
            auto [a, b, c] = tris[t];
            int w = vertices++;
            tris[t] = {a, b, w};
            tris.push_back({b, c, w});
            tris.push_back({a, c, w});
        }
    }

    Board unsided = build(vertices, tris, {});
    const auto& cycle = unsided.boundary_cycle;
    int len = static_cast<int>(cycle.size());

    // Pick n_sides distinct cut positions on the cycle; each arc between
    // consecutive cuts becomes one side (>= 1 edge since cuts are distinct).
    std::vector<int> positions(len);
    for (int i = 0; i < len; ++i) positions[i] = i;
    for (int i = 0; i < n_sides; ++i) {
        int j = i + static_cast<int>(next_below(rng, len - i));
        std::swap(positions[i], positions[j]);
    }
    std::vector<int> cuts(positions.begin(), positions.begin() + n_sides);
    std::sort(cuts.begin(), cuts.end());

    const std::vector<std::string> labels =
        (n_sides == 4) ? std::vector<std::string>{"R1", "B1", "R2", "B2"}
                       : std::vector<std::string>{"l1", "l2", "l3"};
    std::vector<Side> sides;
    for (int s = 0; s < n_sides; ++s) {
        int from = cuts[s];
        int to = cuts[(s + 1) % n_sides];
        Side side{labels[s], {}};
        for (int p = from; p != to; p = (p + 1) % len) side.path.push_back(cycle[p]);
        side.path.push_back(cycle[to]);
        sides.push_back(std::move(side));
    }

    return build(vertices, std::move(tris), std::move(sides));
}

} // namespace cgb
