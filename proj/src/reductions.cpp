#include "cgb/reductions.hpp"

#include <algorithm>

#include "cgb/errors.hpp"

namespace cgb {

std::vector<int> VertexMap::apply(const std::vector<int>& vertices) const {
    std::vector<int> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(image.at(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_simplicial(const Board& source, const VertexMap& map, const Board& target,
                   std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (map.source_vertex_count() != source.vertex_count)
        return fail("map is not total on the source vertices");
    for (auto [a, b] : source.edges) {
        int ia = map(a), ib = map(b);
        if (ia == ib) continue;  // edge collapses to a vertex
        if (!target.has_edge(ia, ib))
            return fail("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") maps to non-edge (" + std::to_string(ia) + "," + std::to_string(ib) +
                        ")");
    }
    std::vector<std::array<int, 3>> target_tris;
    target_tris.reserve(target.triangles.size());
    for (auto t : target.triangles) {
        std::sort(t.begin(), t.end());
        target_tris.push_back(t);
    }
    std::sort(target_tris.begin(), target_tris.end());
    for (const auto& t : source.triangles) {
        std::array<int, 3> img = {map(t[0]), map(t[1]), map(t[2])};
        std::sort(img.begin(), img.end());
        int distinct = 1 + (img[0] != img[1]) + (img[1] != img[2]);
        if (distinct == 3 && !std::binary_search(target_tris.begin(), target_tris.end(), img))
            return fail("triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                        std::to_string(t[2]) + ") maps to a non-triangle");
        // distinct == 2 was already checked edge-by-edge above
    }
    return true;
}

bool preserves_colors(const VertexMap& map, const Coloring& source_colors,
                      const Coloring& target_colors) {
    for (int v = 0; v < map.source_vertex_count(); ++v)
        if (source_colors[v] != target_colors[map(v)]) return false;
    return true;
}

namespace {

void require_valid(const Board& board, int side_count, const char* what) {
    if (static_cast<int>(board.sides.size()) != side_count)
        throw InputError(std::string(what) + " needs a " + std::to_string(side_count) +
                         "-sided board, got " + std::to_string(board.sides.size()) + " sides");
    auto report = validate(board);
    if (!report.ok())
        throw InputError(std::string(what) + " needs a valid board:\n" + report.to_string());
}

} // namespace

Extension extend_y_from_hex(const Board& hex_board) {
    require_valid(hex_board, 4, "extend_y_from_hex");

    const int v = hex_board.vertex_count;
    const int r0 = v;
    const int b0 = v + 1;
    const Side& r1 = hex_board.sides[0];
    const Side& b1 = hex_board.sides[1];
    const Side& r2 = hex_board.sides[2];
    const Side& b2 = hex_board.sides[3];

    auto tris = hex_board.triangles;
    for (size_t i = 0; i + 1 < r2.path.size(); ++i)
        tris.push_back({r2.path[i], r2.path[i + 1], r0});
    for (size_t i = 0; i + 1 < b1.path.size(); ++i)
        tris.push_back({b1.path[i], b1.path[i + 1], b0});

    // Boundary after fanning: R1, then b0 replaces the interior of B1, the
    // B1/R2 corner, r0 replaces the interior of R2, then B2.
    const int corner_b1_r2 = b1.path.back();  // == r2.path.front()
    Side l1{"l1", {b0, corner_b1_r2, r0}};
    Side l2{"l2", {r0}};
    l2.path.insert(l2.path.end(), b2.path.begin(), b2.path.end());
    Side l3{"l3", r1.path};
    l3.path.push_back(b0);

    Extension ext;
    ext.y_board = build(v + 2, std::move(tris), {l1, l2, l3});
    ext.apex_r0 = r0;
    ext.apex_b0 = b0;
    ext.pre_coloring.assign(v + 2, Color::Empty);
    ext.pre_coloring[r0] = Color::Red;
    ext.pre_coloring[b0] = Color::Blue;
    ext.embed.image.resize(v);
    for (int u = 0; u < v; ++u) ext.embed.image[u] = u;
    ext.embed.target_vertex_count = v + 2;

    auto report = validate(ext.y_board);
    if (!report.ok())
        throw TheoremViolation("extension of a valid Hex board failed validation:\n" +
                               report.to_string());
    return ext;
}

bool check_extension_equivalence(const Board& hex_board, const Coloring& full_coloring) {
    if (static_cast<int>(full_coloring.size()) != hex_board.vertex_count ||
        !is_full(full_coloring))
        throw InputError("check_extension_equivalence needs a full coloring of the hex board");
    Extension ext = extend_y_from_hex(hex_board);
    Coloring y_colors = ext.pre_coloring;
    for (int u = 0; u < hex_board.vertex_count; ++u)
        y_colors[ext.embed(u)] = full_coloring[u];
    Outcome hex_outcome = winner(hex_board, full_coloring);
    Outcome y_outcome = winner(ext.y_board, y_colors);
    return hex_outcome.kind == y_outcome.kind;
}

Doubling double_y_to_hex(const Board& y_board) {
    require_valid(y_board, 3, "double_y_to_hex");

    const int v = y_board.vertex_count;
    const Side& l1 = y_board.sides[0];
    const Side& l2 = y_board.sides[1];
    const Side& l3 = y_board.sides[2];

    std::vector<char> on_l1(v, 0);
    for (int u : l1.path) on_l1[u] = 1;

    // An edge joining two l1 vertices off the l1 path would coincide with
    // its own mirror image; the glued complex would not be simplicial.
    std::vector<std::pair<int, int>> l1_steps;
    for (size_t i = 0; i + 1 < l1.path.size(); ++i) {
        auto [a, b] = std::minmax(l1.path[i], l1.path[i + 1]);
        l1_steps.push_back({a, b});
    }
    std::sort(l1_steps.begin(), l1_steps.end());
    for (auto [a, b] : y_board.edges) {
        if (on_l1[a] && on_l1[b] &&
            !std::binary_search(l1_steps.begin(), l1_steps.end(), std::make_pair(a, b)))
            throw InputError("cannot double along l1: edge (" + std::to_string(a) + "," +
                             std::to_string(b) + ") joins l1 vertices off the l1 path");
    }

    // l1 vertices keep their ids; vertices off l1 get mirror ids v, v+1, ...
    // in ascending order of the original id.
    std::vector<int> mirror(v);
    int next_id = v;
    for (int u = 0; u < v; ++u) mirror[u] = on_l1[u] ? u : next_id++;
    const int double_count = next_id;

    auto tris = y_board.triangles;
    tris.reserve(2 * tris.size());
    for (const auto& t : y_board.triangles)
        tris.push_back({mirror[t[0]], mirror[t[1]], mirror[t[2]]});

    auto mirrored_path = [&](const Side& s) {
        std::vector<int> path;
        path.reserve(s.path.size());
        for (auto it = s.path.rbegin(); it != s.path.rend(); ++it) path.push_back(mirror[*it]);
        return path;
    };
    // Boundary of the double: l2, l3, then the mirrored l3 and l2 walked
    // backwards. As a Hex board: R1=l3, B1=l3', R2=l2', B2=l2.
    Side hr1{"R1", l3.path};
    Side hb1{"B1", mirrored_path(l3)};
    Side hr2{"R2", mirrored_path(l2)};
    Side hb2{"B2", l2.path};

    Doubling d;
    d.y_board = y_board;
    d.hex_board = build(double_count, std::move(tris), {hr1, hb1, hr2, hb2});

    auto report = validate(d.hex_board);
    if (!report.ok())
        throw InputError("doubling along l1 is not a valid board:\n" + report.to_string());

    d.embed.image.resize(v);
    for (int u = 0; u < v; ++u) d.embed.image[u] = u;
    d.embed.target_vertex_count = double_count;

    d.reflect.image.resize(double_count);
    d.fold.image.resize(double_count);
    for (int u = 0; u < v; ++u) {
        d.reflect.image[u] = mirror[u];
        d.reflect.image[mirror[u]] = u;
        d.fold.image[u] = u;
        d.fold.image[mirror[u]] = u;
    }
    d.reflect.target_vertex_count = double_count;
    d.fold.target_vertex_count = v;

    d.l1_vertices = side_vertices(y_board, "l1");
    return d;
}

Coloring mirror_coloring(const Doubling& doubling, const Coloring& y_coloring) {
    if (static_cast<int>(y_coloring.size()) != doubling.y_board.vertex_count)
        throw InputError("coloring size does not match the Y board");
    Coloring colors(doubling.hex_board.vertex_count, Color::Empty);
    for (int u = 0; u < doubling.hex_board.vertex_count; ++u)
        colors[u] = y_coloring[doubling.fold(u)];
    return colors;
}

namespace {

void require_s_invariant(const Doubling& doubling, const Coloring& double_coloring) {
    if (static_cast<int>(double_coloring.size()) != doubling.hex_board.vertex_count)
        throw InputError("coloring size does not match the doubled board");
    for (int u = 0; u < doubling.hex_board.vertex_count; ++u)
        if (double_coloring[u] != double_coloring[doubling.reflect(u)])
            throw InputError("coloring is not invariant under the reflection (vertex " +
                             std::to_string(u) + ")");
}

} // namespace

Chain fold_chain(const Doubling& doubling, const Chain& chain, const Coloring& double_coloring) {
    require_s_invariant(doubling, double_coloring);
    return {chain.color, doubling.fold.apply(chain.vertices)};
}

Chain reflect_chain(const Doubling& doubling, const Chain& chain,
                    const Coloring& double_coloring) {
    require_s_invariant(doubling, double_coloring);
    return {chain.color, doubling.reflect.apply(chain.vertices)};
}

Outcome y_winner_via_hex(const Board& y_board, const Coloring& full_coloring) {
    if (static_cast<int>(full_coloring.size()) != y_board.vertex_count || !is_full(full_coloring))
        throw InputError("y_winner_via_hex needs a full coloring of the Y board");

    Doubling d = double_y_to_hex(y_board);
    Coloring mirrored = mirror_coloring(d, full_coloring);
    Outcome hex_outcome = winner(d.hex_board, mirrored);
    if (!hex_outcome.decided() || !hex_outcome.witness)
        throw TheoremViolation("doubled board has no winner on a full coloring " +
                               coloring_to_string(mirrored));

    const Chain& hex_chain = *hex_outcome.witness;
    bool meets_l1 = std::any_of(hex_chain.vertices.begin(), hex_chain.vertices.end(), [&](int u) {
        return std::binary_search(d.l1_vertices.begin(), d.l1_vertices.end(), u);
    });
    if (!meets_l1)
        throw TheoremViolation("hex witness chain on the double avoids l1 on coloring " +
                               coloring_to_string(full_coloring));

    Chain folded = fold_chain(d, hex_chain, mirrored);
    for (const auto& side : d.y_board.sides) {
        auto vs = side_vertices(d.y_board, side.label);
        bool meets = std::any_of(folded.vertices.begin(), folded.vertices.end(), [&](int u) {
            return std::binary_search(vs.begin(), vs.end(), u);
        });
        if (!meets)
            throw TheoremViolation("folded chain misses side " + side.label + " on coloring " +
                                   coloring_to_string(full_coloring));
    }

    Outcome direct = winner(y_board, full_coloring);
    if (direct.kind != hex_outcome.kind)
        throw TheoremViolation("via-hex winner disagrees with direct winner on coloring " +
                               coloring_to_string(full_coloring));

    return {hex_outcome.kind, folded};
}

} // namespace cgb
