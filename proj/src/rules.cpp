#include "cgb/rules.hpp"

#include <algorithm>
#include <deque>

#include "cgb/errors.hpp"

namespace cgb {

char color_char(Color c) {
    switch (c) {
        case Color::Red: return 'R';
        case Color::Blue: return 'B';
        default: return '.';
    }
}

std::string coloring_to_string(const Coloring& coloring) {
    std::string s;
    s.reserve(coloring.size());
    for (Color c : coloring) s.push_back(color_char(c));
    return s;
}

GoalEvaluator::GoalEvaluator(const Board& board)
    : board_(&board),
      side_bits_(board.vertex_count, 0),
      parent_(board.vertex_count),
      rank_(board.vertex_count),
      touched_(board.vertex_count) {
    if (board.sides.size() == 4) {
        red_goal_ = 0b0101;   // R1, R2
        blue_goal_ = 0b1010;  // B1, B2
    } else if (board.sides.size() == 3) {
        red_goal_ = blue_goal_ = 0b0111;  // l1, l2, l3
    } else {
        throw InputError("winner detection needs a 3- or 4-sided board");
    }
    for (size_t s = 0; s < board.sides.size(); ++s)
        for (int v : board.sides[s].path) side_bits_[v] |= uint8_t(1u << s);
}

int GoalEvaluator::find(int v) {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

void GoalEvaluator::unite(std::span<const Color> colors) {
    const int n = board_->vertex_count;
    for (int v = 0; v < n; ++v) {
        parent_[v] = v;
        rank_[v] = 0;
        touched_[v] = 0;
    }
    for (auto [a, b] : board_->edges) {
        if (colors[a] == Color::Empty || colors[a] != colors[b]) continue;
        int ra = find(a), rb = find(b);
        if (ra == rb) continue;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
    }
    for (int v = 0; v < n; ++v)
        if (colors[v] != Color::Empty) touched_[find(v)] |= side_bits_[v];
}

GoalResult GoalEvaluator::evaluate(std::span<const Color> colors) {
    unite(colors);
    GoalResult result;
    const int n = board_->vertex_count;
    for (int v = 0; v < n; ++v) {
        if (colors[v] == Color::Empty || parent_[v] != v) continue;
        if (colors[v] == Color::Red && (touched_[v] & red_goal_) == red_goal_) result.red = true;
        if (colors[v] == Color::Blue && (touched_[v] & blue_goal_) == blue_goal_)
            result.blue = true;
    }
    return result;
}

std::optional<Chain> GoalEvaluator::winning_chain(std::span<const Color> colors, Color player) {
    unite(colors);
    uint8_t goal = (player == Color::Red) ? red_goal_ : blue_goal_;
    const int n = board_->vertex_count;
    for (int v = 0; v < n; ++v) {
        if (colors[v] != player || parent_[v] != v) continue;
        if ((touched_[v] & goal) != goal) continue;
        Chain chain{player, {}};
        for (int u = 0; u < n; ++u)
            if (colors[u] == player && find(u) == v) chain.vertices.push_back(u);
        return chain;
    }
    return std::nullopt;
}

std::vector<Chain> monochrome_components(const Board& board, const Coloring& coloring,
                                         Color color) {
    if (static_cast<int>(coloring.size()) != board.vertex_count)
        throw InputError("coloring size does not match board vertex count");
    const int n = board.vertex_count;
    std::vector<int> comp(n, -1);
    std::vector<Chain> chains;
    for (int start = 0; start < n; ++start) {
        if (coloring[start] != color || comp[start] >= 0) continue;
        int c = static_cast<int>(chains.size());
        chains.push_back({color, {}});
        std::vector<int> stack = {start};
        comp[start] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            chains[c].vertices.push_back(v);
            for (int u : board.adjacency[v]) {
                if (coloring[u] == color && comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
            }
        }
        std::sort(chains[c].vertices.begin(), chains[c].vertices.end());
    }
    return chains;
}

Outcome winner(const Board& board, const Coloring& coloring) {
    if (static_cast<int>(coloring.size()) != board.vertex_count)
        throw InputError("coloring size does not match board vertex count");
    GoalEvaluator eval(board);
    GoalResult goals = eval.evaluate(coloring);
    if (goals.red && goals.blue)
        throw TheoremViolation("both players meet their goal on coloring " +
                               coloring_to_string(coloring));
    if (goals.red) return {Outcome::Kind::RedWins, eval.winning_chain(coloring, Color::Red)};
    if (goals.blue) return {Outcome::Kind::BlueWins, eval.winning_chain(coloring, Color::Blue)};
    return {Outcome::Kind::Undecided, std::nullopt};
}

std::vector<int> witness_path(const Board& board, const Coloring& coloring, const Chain& chain,
                              std::string_view side_a, std::string_view side_b) {
    auto a_set = side_vertices(board, side_a);
    auto b_set = side_vertices(board, side_b);
    std::vector<char> in_chain(board.vertex_count, 0);
    for (int v : chain.vertices) {
        if (v < 0 || v >= board.vertex_count || coloring[v] != chain.color)
            throw InputError("chain vertex " + std::to_string(v) +
                             " does not carry the chain color in this coloring");
        in_chain[v] = 1;
    }
    std::vector<char> is_b(board.vertex_count, 0);
    for (int v : b_set) is_b[v] = 1;

    // multi-source BFS from the chain's side_a vertices
    std::vector<int> prev(board.vertex_count, -2);
    std::deque<int> queue;
    for (int v : a_set) {
        if (in_chain[v]) {
            prev[v] = -1;
            queue.push_back(v);
        }
    }
    if (queue.empty())
        throw InputError("chain has no vertex on side " + std::string(side_a));
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (is_b[v]) {
            std::vector<int> path;
            for (int u = v; u != -1; u = prev[u]) path.push_back(u);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int u : board.adjacency[v]) {
            if (in_chain[u] && prev[u] == -2) {
                prev[u] = v;
                queue.push_back(u);
            }
        }
    }
    throw InputError("chain has no vertex on side " + std::string(side_b));
}

} // namespace cgb
