#include "cgb/board.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cgb/errors.hpp"

namespace cgb {

namespace {

std::pair<int, int> norm_edge(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::array<int, 3> norm_tri(const std::array<int, 3>& t) {
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end());
    return s;
}

std::string tri_str(const std::array<int, 3>& t) {
    std::ostringstream os;
    os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
    return os.str();
}

// Counts triangle incidences per normalized edge.
std::map<std::pair<int, int>, int> edge_triangle_counts(const Board& board) {
    std::map<std::pair<int, int>, int> counts;
    for (const auto& t : board.triangles) {
        counts[norm_edge(t[0], t[1])]++;
        counts[norm_edge(t[1], t[2])]++;
        counts[norm_edge(t[0], t[2])]++;
    }
    return counts;
}

// Assembles boundary edges into a cycle. Returns empty unless they form
// exactly one simple cycle covering every boundary edge. Deterministic:
// starts at the smallest boundary vertex and walks toward its smaller
// boundary neighbor.
std::vector<int> assemble_boundary_cycle(int vertex_count,
                                         const std::vector<std::pair<int, int>>& boundary_edges) {
    if (boundary_edges.empty()) return {};
    std::vector<std::vector<int>> nbr(vertex_count);
    for (auto [a, b] : boundary_edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    int start = -1;
    for (int v = 0; v < vertex_count; ++v) {
        if (!nbr[v].empty()) {
            if (nbr[v].size() != 2) return {};
            if (start < 0) start = v;
            std::sort(nbr[v].begin(), nbr[v].end());
        }
    }
    std::vector<int> cycle;
    cycle.reserve(boundary_edges.size());
    int prev = -1;
    int cur = start;
    do {
        cycle.push_back(cur);
        int next = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = next;
        if (cycle.size() > boundary_edges.size()) return {};
    } while (cur != start);
    if (cycle.size() != boundary_edges.size()) return {};  // second component exists
    return cycle;
}

const std::vector<std::string> kHexLabels = {"R1", "B1", "R2", "B2"};
const std::vector<std::string> kYLabels = {"l1", "l2", "l3"};

} // namespace

BoardKind Board::kind() const {
    if (sides.size() == 4) return BoardKind::Hex;
    if (sides.size() == 3) return BoardKind::Y;
    throw InputError("board has " + std::to_string(sides.size()) +
                     " sides; expected 3 (Y) or 4 (Hex)");
}

bool Board::has_edge(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) return false;
    const auto& n = adjacency[a];
    return std::binary_search(n.begin(), n.end(), b);
}

bool Board::on_boundary(int v) const {
    for (int u : boundary_cycle)
        if (u == v) return true;
    return false;
}

const Side* Board::find_side(std::string_view label) const {
    for (const auto& s : sides)
        if (s.label == label) return &s;
    return nullptr;
}

int Board::side_index(std::string_view label) const {
    for (size_t i = 0; i < sides.size(); ++i)
        if (sides[i].label == label) return static_cast<int>(i);
    return -1;
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.rule << ": " << v.message;
        if (!v.offenders.empty()) {
            os << " [";
            for (size_t i = 0; i < v.offenders.size() && i < 8; ++i) {
                if (i) os << " ";
                os << "(";
                for (size_t j = 0; j < v.offenders[i].size(); ++j) {
                    if (j) os << ",";
                    os << v.offenders[i][j];
                }
                os << ")";
            }
            if (v.offenders.size() > 8) os << " ...";
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

Board build(int vertex_count, std::vector<std::array<int, 3>> triangles,
            std::vector<Side> sides) {
    if (vertex_count <= 0)
        throw InputError("vertex_count must be positive, got " + std::to_string(vertex_count));

    std::set<std::array<int, 3>> seen;
    for (const auto& t : triangles) {
        for (int v : t)
            if (v < 0 || v >= vertex_count)
                throw InputError("triangle " + tri_str(t) + " has out-of-range vertex id");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw InputError("degenerate triangle " + tri_str(t));
        if (!seen.insert(norm_tri(t)).second)
            throw InputError("duplicate triangle " + tri_str(t));
    }
    for (const auto& s : sides)
        for (int v : s.path)
            if (v < 0 || v >= vertex_count)
                throw InputError("side " + s.label + " has out-of-range vertex id " +
                                 std::to_string(v));

    Board board;
    board.vertex_count = vertex_count;
    board.triangles = std::move(triangles);
    board.sides = std::move(sides);

    auto counts = edge_triangle_counts(board);
    board.edges.reserve(counts.size());
    std::vector<std::pair<int, int>> boundary_edges;
    for (const auto& [e, c] : counts) {
        board.edges.push_back(e);
        if (c == 1) boundary_edges.push_back(e);
    }

    board.adjacency.assign(vertex_count, {});
    for (auto [a, b] : board.edges) {
        board.adjacency[a].push_back(b);
        board.adjacency[b].push_back(a);
    }
    for (auto& n : board.adjacency) std::sort(n.begin(), n.end());

    board.boundary_cycle = assemble_boundary_cycle(vertex_count, boundary_edges);
    return board;
}

namespace {

void check_complex(const Board& board, const std::map<std::pair<int, int>, int>& counts,
                   const std::vector<std::pair<int, int>>& boundary_edges,
                   std::vector<Violation>& out) {
    for (const auto& [e, c] : counts) {
        if (c > 2)
            out.push_back({"edge-triangles",
                           "edge lies in " + std::to_string(c) + " triangles",
                           {{e.first, e.second}}});
    }

    // Connectivity over vertices; a vertex in no triangle is unreachable.
    {
        std::vector<char> visited(board.vertex_count, 0);
        std::vector<int> stack = {0};
        visited[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : board.adjacency[v]) {
                if (!visited[u]) {
                    visited[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        if (reached != board.vertex_count) {
            std::vector<int> missing;
            for (int v = 0; v < board.vertex_count; ++v)
                if (!visited[v]) missing.push_back(v);
            out.push_back({"connected",
                           std::to_string(board.vertex_count - reached) +
                               " vertices unreachable from vertex 0",
                           {missing}});
        }
    }

    {
        long long euler = static_cast<long long>(board.vertex_count) -
                          static_cast<long long>(board.edges.size()) +
                          static_cast<long long>(board.triangles.size());
        if (euler != 1)
            out.push_back({"euler",
                           "V - E + T = " + std::to_string(euler) + ", expected 1", {}});
    }

    if (board.boundary_cycle.empty()) {
        out.push_back({"boundary-cycle",
                       "boundary edges do not form a single simple cycle", {}});
    }

    // Vertex links: interior vertices need a single cycle, boundary vertices
    // a single path. Link nodes are the neighbors of v, link edges the
    // opposite edges of triangles containing v.
    {
        std::vector<char> on_boundary(board.vertex_count, 0);
        for (auto [a, b] : boundary_edges) {
            on_boundary[a] = 1;
            on_boundary[b] = 1;
        }
        std::vector<std::vector<std::pair<int, int>>> link(board.vertex_count);
        for (const auto& t : board.triangles) {
            link[t[0]].push_back({t[1], t[2]});
            link[t[1]].push_back({t[0], t[2]});
            link[t[2]].push_back({t[0], t[1]});
        }
        for (int v = 0; v < board.vertex_count; ++v) {
            const auto& nodes = board.adjacency[v];
            if (nodes.empty()) continue;  // reported by "connected"
            std::map<int, std::vector<int>> lnbr;
            for (int u : nodes) lnbr[u];
            for (auto [a, b] : link[v]) {
                lnbr[a].push_back(b);
                lnbr[b].push_back(a);
            }
            // walk the link graph from an arbitrary node
            std::vector<int> stack = {nodes[0]};
            std::set<int> seen = {nodes[0]};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : lnbr[u])
                    if (seen.insert(w).second) stack.push_back(w);
            }
            bool connected = seen.size() == nodes.size();
            int deg1 = 0;
            bool deg_ok = true;
            size_t link_edges = link[v].size();
            for (const auto& [u, ns] : lnbr) {
                if (ns.size() == 1)
                    ++deg1;
                else if (ns.size() != 2)
                    deg_ok = false;
            }
            bool good;
            if (on_boundary[v])
                good = connected && deg_ok && deg1 == 2 && link_edges + 1 == nodes.size();
            else
                good = connected && deg_ok && deg1 == 0 && link_edges == nodes.size();
            if (!good)
                out.push_back({"vertex-link",
                               std::string("link of vertex ") + std::to_string(v) +
                                   " is not a single " +
                                   (on_boundary[v] ? "path" : "cycle"),
                               {{v}}});
        }
    }
}

void check_sides(const Board& board, const std::vector<std::pair<int, int>>& boundary_edges,
                 std::vector<Violation>& out) {
    const auto& sides = board.sides;
    const std::vector<std::string>* expected = nullptr;
    if (sides.size() == 4)
        expected = &kHexLabels;
    else if (sides.size() == 3)
        expected = &kYLabels;
    if (!expected) {
        out.push_back({"side-labels",
                       "board has " + std::to_string(sides.size()) +
                           " sides; expected 3 (Y) or 4 (Hex)", {}});
        return;
    }
    for (size_t i = 0; i < sides.size(); ++i) {
        if (sides[i].label != (*expected)[i]) {
            out.push_back({"side-labels",
                           "side " + std::to_string(i) + " is labeled '" + sides[i].label +
                               "', expected '" + (*expected)[i] + "' (cyclic order)", {}});
            return;
        }
    }

    std::set<std::pair<int, int>> boundary_set(boundary_edges.begin(), boundary_edges.end());
    bool paths_ok = true;
    for (const auto& s : sides) {
        if (s.path.size() < 2) {
            out.push_back({"side-edges", "side " + s.label + " has no edge", {s.path}});
            paths_ok = false;
            continue;
        }
        std::set<int> uniq(s.path.begin(), s.path.end());
        if (uniq.size() != s.path.size()) {
            out.push_back({"side-edges", "side " + s.label + " repeats a vertex", {s.path}});
            paths_ok = false;
        }
        for (size_t i = 0; i + 1 < s.path.size(); ++i) {
            auto e = norm_edge(s.path[i], s.path[i + 1]);
            if (!boundary_set.count(e)) {
                out.push_back({"side-edges",
                               "side " + s.label + " step (" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + ") is not a boundary edge",
                               {{e.first, e.second}}});
                paths_ok = false;
            }
        }
    }
    if (!paths_ok) return;

    for (size_t i = 0; i < sides.size(); ++i) {
        const auto& cur = sides[i];
        const auto& next = sides[(i + 1) % sides.size()];
        if (cur.path.back() != next.path.front()) {
            out.push_back({"side-concat",
                           "side " + cur.label + " ends at " + std::to_string(cur.path.back()) +
                               " but side " + next.label + " starts at " +
                               std::to_string(next.path.front()), {}});
            return;
        }
    }

    // The concatenation covers the boundary exactly once iff every boundary
    // edge is used by exactly one side step (an Euler circuit of a cycle is
    // the cycle itself).
    std::map<std::pair<int, int>, int> used;
    for (const auto& s : sides)
        for (size_t i = 0; i + 1 < s.path.size(); ++i) used[norm_edge(s.path[i], s.path[i + 1])]++;
    for (const auto& [e, c] : used) {
        if (c != 1) {
            out.push_back({"side-concat",
                           "boundary edge traversed " + std::to_string(c) + " times",
                           {{e.first, e.second}}});
            return;
        }
    }
    if (used.size() != boundary_edges.size()) {
        out.push_back({"side-concat",
                       "sides cover " + std::to_string(used.size()) + " of " +
                           std::to_string(boundary_edges.size()) + " boundary edges", {}});
    }
}

} // namespace

ValidationReport validate(const Board& board) {
    ValidationReport report;
    auto counts = edge_triangle_counts(board);
    std::vector<std::pair<int, int>> boundary_edges;
    for (const auto& [e, c] : counts)
        if (c == 1) boundary_edges.push_back(e);

    check_complex(board, counts, boundary_edges, report.violations);
    check_sides(board, boundary_edges, report.violations);
    return report;
}

std::vector<int> side_vertices(const Board& board, std::string_view label) {
    const Side* side = board.find_side(label);
    if (!side) throw InputError("unknown side label '" + std::string(label) + "'");
    std::vector<int> vs(side->path.begin(), side->path.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

} // namespace cgb
