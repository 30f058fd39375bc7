#pragma once

#include <optional>
#include <string>

#include "cgb/board.hpp"
#include "cgb/rules.hpp"

namespace cgb {

// DOT text for a board: one node per vertex labeled with its id and side
// memberships, filled with its color; edges induced by `highlight_chain`
// are emphasized. Output ordering is fixed (vertices ascending, edges
// lexicographic), so identical inputs render byte-identically.
std::string export_dot(const Board& board, const Coloring& coloring,
                       const std::optional<Chain>& highlight_chain = std::nullopt);

} // namespace cgb
