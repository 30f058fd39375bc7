#pragma once

#include <set>
#include <vector>

#include "cgb/board.hpp"
#include "cgb/rules.hpp"
#include "cgb/verify.hpp"

// Test-only oracle: evaluates both side-goal conditions by plain set-based
// breadth-first search over the colored subgraph. Kept deliberately simple
// and independent of the library's union-find evaluator so tallies can be
// cross-checked against it.
namespace naive {

struct Goals {
    bool red = false;
    bool blue = false;
};

inline Goals goals(const cgb::Board& board, const cgb::Coloring& colors) {
    Goals result;
    for (cgb::Color color : {cgb::Color::Red, cgb::Color::Blue}) {
        std::set<int> unvisited;
        for (int v = 0; v < board.vertex_count; ++v)
            if (colors[v] == color) unvisited.insert(v);
        bool wins = false;
        while (!unvisited.empty() && !wins) {
            std::vector<int> frontier = {*unvisited.begin()};
            unvisited.erase(unvisited.begin());
            std::set<int> component(frontier.begin(), frontier.end());
            while (!frontier.empty()) {
                int v = frontier.back();
                frontier.pop_back();
                for (int u : board.adjacency[v]) {
                    if (unvisited.count(u)) {
                        unvisited.erase(u);
                        component.insert(u);
                        frontier.push_back(u);
                    }
                }
            }
            // side membership straight from the side paths
            std::vector<bool> touches(board.sides.size(), false);
            for (size_t s = 0; s < board.sides.size(); ++s)
                for (int v : board.sides[s].path)
                    if (component.count(v)) touches[s] = true;
            if (board.sides.size() == 4)
                wins = (color == cgb::Color::Red) ? (touches[0] && touches[2])
                                                  : (touches[1] && touches[3]);
            else
                wins = touches[0] && touches[1] && touches[2];
        }
        if (color == cgb::Color::Red)
            result.red = wins;
        else
            result.blue = wins;
    }
    return result;
}

// Same bit convention as the library: bit i of the index colors the i-th
// free vertex, 0 = Red, 1 = Blue.
inline cgb::Tally tally_all(const cgb::Board& board, cgb::Coloring base = {}) {
    if (base.empty()) base.assign(board.vertex_count, cgb::Color::Empty);
    std::vector<int> free;
    for (int v = 0; v < board.vertex_count; ++v)
        if (base[v] == cgb::Color::Empty) free.push_back(v);
    cgb::Tally tally;
    for (uint64_t index = 0; index < (uint64_t(1) << free.size()); ++index) {
        cgb::Coloring colors = base;
        for (size_t i = 0; i < free.size(); ++i)
            colors[free[i]] = (index >> i) & 1 ? cgb::Color::Blue : cgb::Color::Red;
        Goals g = goals(board, colors);
        ++tally.total;
        if (g.red && g.blue)
            ++tally.double_wins;
        else if (g.red)
            ++tally.red_wins;
        else if (g.blue)
            ++tally.blue_wins;
        else
            ++tally.draws;
    }
    return tally;
}

} // namespace naive
