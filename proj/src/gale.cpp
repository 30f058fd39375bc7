#include "cgb/gale.hpp"

#include <algorithm>

#include "cgb/errors.hpp"

namespace cgb {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

} // namespace

bool GalePartition::in_v_plus(int v) const { return contains(v_plus, v); }
bool GalePartition::in_w_plus(int v) const { return contains(w_plus, v); }

GaleBoard augment(const Board& hex_board) {
    if (hex_board.sides.size() != 4)
        throw InputError("augment needs a 4-sided board, got " +
                         std::to_string(hex_board.sides.size()) + " sides");
    auto report = validate(hex_board);
    if (!report.ok()) throw InputError("augment needs a valid board:\n" + report.to_string());

    const int v = hex_board.vertex_count;
    GaleBoard g;
    g.r_minus = v;
    g.b_minus = v + 1;
    g.r_plus = v + 2;
    g.b_plus = v + 3;

    const Side& r1 = hex_board.sides[0];
    const Side& b1 = hex_board.sides[1];
    const Side& r2 = hex_board.sides[2];
    const Side& b2 = hex_board.sides[3];

    auto tris = hex_board.triangles;
    auto fan = [&tris](const Side& side, int apex) {
        for (size_t i = 0; i + 1 < side.path.size(); ++i)
            tris.push_back({side.path[i], side.path[i + 1], apex});
    };
    fan(r1, g.r_minus);
    fan(b1, g.b_minus);
    fan(r2, g.r_plus);
    fan(b2, g.b_plus);
    // One triangle per corner closes the annulus between the old boundary
    // and the apex 4-cycle.
    tris.push_back({g.r_minus, g.b_minus, r1.path.back()});   // R1/B1 corner
    tris.push_back({g.b_minus, g.r_plus, b1.path.back()});    // B1/R2 corner
    tris.push_back({g.r_plus, g.b_plus, r2.path.back()});     // R2/B2 corner
    tris.push_back({g.b_plus, g.r_minus, b2.path.back()});    // B2/R1 corner

    std::vector<Side> sides = {
        {"R1", {g.r_minus, g.b_minus}},
        {"B1", {g.b_minus, g.r_plus}},
        {"R2", {g.r_plus, g.b_plus}},
        {"B2", {g.b_plus, g.r_minus}},
    };
    g.d_board = build(v + 4, std::move(tris), std::move(sides));

    report = validate(g.d_board);
    if (!report.ok())
        throw TheoremViolation("augmentation of a valid Hex board failed validation:\n" +
                               report.to_string());

    g.embed.image.resize(v);
    for (int u = 0; u < v; ++u) g.embed.image[u] = u;
    g.embed.target_vertex_count = v + 4;
    g.pre_coloring.assign(v + 4, Color::Empty);
    g.pre_coloring[g.r_minus] = g.pre_coloring[g.r_plus] = Color::Red;
    g.pre_coloring[g.b_minus] = g.pre_coloring[g.b_plus] = Color::Blue;
    return g;
}

GalePartition classify(const GaleBoard& gale_board, const Coloring& full_coloring) {
    const Board& d = gale_board.d_board;
    if (static_cast<int>(full_coloring.size()) != d.vertex_count || !is_full(full_coloring))
        throw InputError("classify needs a full coloring of D");
    for (int u = 0; u < d.vertex_count; ++u) {
        Color pre = gale_board.pre_coloring[u];
        if (pre != Color::Empty && full_coloring[u] != pre)
            throw InputError("coloring overrides the pre-colored apex " + std::to_string(u));
    }

    auto reach = [&d, &full_coloring](int start) {
        Color color = full_coloring[start];
        std::vector<char> seen(d.vertex_count, 0);
        std::vector<int> stack = {start};
        seen[start] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : d.adjacency[u])
                if (!seen[w] && full_coloring[w] == color) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return seen;
    };
    auto from_r_plus = reach(gale_board.r_plus);
    auto from_b_plus = reach(gale_board.b_plus);

    GalePartition p;
    p.r_minus = gale_board.r_minus;
    p.r_plus = gale_board.r_plus;
    p.b_minus = gale_board.b_minus;
    p.b_plus = gale_board.b_plus;
    for (int u = 0; u < d.vertex_count; ++u) {
        if (full_coloring[u] == Color::Red)
            (from_r_plus[u] ? p.v_plus : p.v_minus).push_back(u);
        else
            (from_b_plus[u] ? p.w_plus : p.w_minus).push_back(u);
    }
    return p;
}

RetractionReport retraction_check(const GaleBoard& gale_board, const GalePartition& partition) {
    const Board& d = gale_board.d_board;
    // classes: 0 = V-, 1 = V+, 2 = W-, 3 = W+
    std::vector<int> cls(d.vertex_count, -1);
    for (int u : partition.v_minus) cls[u] = 0;
    for (int u : partition.v_plus) cls[u] = 1;
    for (int u : partition.w_minus) cls[u] = 2;
    for (int u : partition.w_plus) cls[u] = 3;
    for (int u = 0; u < d.vertex_count; ++u)
        if (cls[u] < 0)
            throw InputError("partition does not cover vertex " + std::to_string(u));

    RetractionReport report;
    for (auto [a, b] : d.edges) {
        bool red_cross = (cls[a] == 0 && cls[b] == 1) || (cls[a] == 1 && cls[b] == 0);
        bool blue_cross = (cls[a] == 2 && cls[b] == 3) || (cls[a] == 3 && cls[b] == 2);
        if (red_cross || blue_cross) report.cross_edges.push_back({a, b});
    }

    // Images on S: V- -> r-, V+ -> r+, W- -> b-, W+ -> b+. The diagonals
    // (r-, r+) and (b-, b+) are the only vertex pairs of S without an edge.
    report.simplicial = true;
    for (const auto& t : d.triangles) {
        bool has[4] = {false, false, false, false};
        for (int u : t) has[cls[u]] = true;
        if ((has[0] && has[1]) || (has[2] && has[3])) {
            report.simplicial = false;
            break;
        }
    }

    report.identity_on_s =
        !partition.in_v_plus(partition.r_minus) && !partition.in_w_plus(partition.b_minus);
    return report;
}

Outcome winner_from_classification(const GalePartition& partition) {
    bool red = partition.in_v_plus(partition.r_minus);
    bool blue = partition.in_w_plus(partition.b_minus);
    if (red && blue)
        throw TheoremViolation("both apex pairs are joined by a chain of their color");
    if (red) return {Outcome::Kind::RedWins, Chain{Color::Red, partition.v_plus}};
    if (blue) return {Outcome::Kind::BlueWins, Chain{Color::Blue, partition.w_plus}};
    return {Outcome::Kind::Undecided, std::nullopt};
}

} // namespace cgb
