#include "cgb/dot.hpp"

#include <algorithm>
#include <sstream>

namespace cgb {

std::string export_dot(const Board& board, const Coloring& coloring,
                       const std::optional<Chain>& highlight_chain) {
    std::vector<char> in_chain(board.vertex_count, 0);
    if (highlight_chain)
        for (int v : highlight_chain->vertices)
            if (v >= 0 && v < board.vertex_count) in_chain[v] = 1;

    std::ostringstream os;
    os << "graph cgb {\n";
    os << "  node [shape=circle, style=filled];\n";
    for (int v = 0; v < board.vertex_count; ++v) {
        os << "  v" << v << " [label=\"" << v;
        for (const auto& side : board.sides) {
            if (std::find(side.path.begin(), side.path.end(), v) != side.path.end())
                os << " " << side.label;
        }
        os << "\", fillcolor=";
        Color c = v < static_cast<int>(coloring.size()) ? coloring[v] : Color::Empty;
        os << (c == Color::Red ? "red" : c == Color::Blue ? "lightblue" : "white");
        os << "];\n";
    }
    for (auto [a, b] : board.edges) {
        os << "  v" << a << " -- v" << b;
        if (in_chain[a] && in_chain[b]) os << " [penwidth=3]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace cgb
