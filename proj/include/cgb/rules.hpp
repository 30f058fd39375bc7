#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgb/board.hpp"

namespace cgb {

enum class Color : uint8_t { Empty = 0, Red = 1, Blue = 2 };

// Per-vertex assignment; size equals the board's vertex_count.
using Coloring = std::vector<Color>;

char color_char(Color c);  // 'R', 'B', '.'

inline bool is_full(const Coloring& coloring) {
    for (Color c : coloring)
        if (c == Color::Empty) return false;
    return true;
}

// A connected set of same-colored vertices.
struct Chain {
    Color color = Color::Empty;
    std::vector<int> vertices;  // ascending

    bool operator==(const Chain&) const = default;
};

struct Outcome {
    enum class Kind { RedWins, BlueWins, Undecided } kind = Kind::Undecided;
    std::optional<Chain> witness;

    bool decided() const { return kind != Kind::Undecided; }
    Color winning_color() const {
        return kind == Kind::RedWins  ? Color::Red
               : kind == Kind::BlueWins ? Color::Blue
                                         : Color::Empty;
    }
};

// Whether each player's side-touching condition holds, evaluated
// independently (no short-circuit: double wins must be observable).
struct GoalResult {
    bool red = false;
    bool blue = false;
};

// Reusable winner detection over one board: union same-colored edges, then
// test which components touch the goal sides. Keep one instance per thread
// and call evaluate() per coloring; the scratch arrays are reused.
class GoalEvaluator {
public:
    explicit GoalEvaluator(const Board& board);

    GoalResult evaluate(std::span<const Color> colors);

    // Maximal component of `player`'s color meeting that player's goal, with
    // the smallest root id; nullopt when the goal is not met.
    std::optional<Chain> winning_chain(std::span<const Color> colors, Color player);

private:
    int find(int v);
    void unite(std::span<const Color> colors);

    const Board* board_;
    uint8_t red_goal_;   // side bits a red component must cover
    uint8_t blue_goal_;
    std::vector<uint8_t> side_bits_;  // per vertex
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<uint8_t> touched_;  // per root: side bits of its component
};

// Maximal monochromatic components of the given color.
std::vector<Chain> monochrome_components(const Board& board, const Coloring& coloring,
                                         Color color);

// Hex: red connects R1-R2, blue connects B1-B2. Y: either color connects
// l1, l2 and l3. Witness is the maximal winning component. Throws
// TheoremViolation when both players' conditions hold.
Outcome winner(const Board& board, const Coloring& coloring);

// Shortest path inside the chain from side_a to side_b (embedded, BFS).
// Throws InputError when the chain does not meet both sides.
std::vector<int> witness_path(const Board& board, const Coloring& coloring, const Chain& chain,
                              std::string_view side_a, std::string_view side_b);

std::string coloring_to_string(const Coloring& coloring);

} // namespace cgb
