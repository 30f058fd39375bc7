#pragma once

#include <string>
#include <utility>

#include "cgb/board.hpp"
#include "cgb/rules.hpp"

namespace cgb {

// Plain-text board format, LF line endings, space-separated tokens,
// '#' starts a comment:
//
//   cgb 1
//   vertices <N>
//   triangles <T>
//   t <i> <j> <k>
//   sides <S>
//   s <label> <v0> ... <vk>
//   coloring <M>          (optional section)
//   c <v> <R|B>
//
// parse_board_text reports syntax errors with their line number and does
// not validate the board; parse_board_file additionally requires
// validate() to pass. render is the exact inverse of parsing.

std::pair<Board, Coloring> parse_board_text(const std::string& text);
std::pair<Board, Coloring> parse_board_file(const std::string& text);

std::string render_board_file(const Board& board, const Coloring& coloring);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cgb
