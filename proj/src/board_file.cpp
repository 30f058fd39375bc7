#include "cgb/board_file.hpp"

#include <fstream>
#include <sstream>

#include "cgb/errors.hpp"

namespace cgb {

namespace {

struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, tokens)
    size_t next = 0;

    bool done() const { return next >= rows.size(); }
    const std::pair<int, std::vector<std::string>>& peek() const { return rows[next]; }
    const std::pair<int, std::vector<std::string>>& take() { return rows[next++]; }
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(int line, const std::string& token, const char* what) {
    try {
        size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        fail(line, std::string("expected ") + what + ", got '" + token + "'");
    }
}

Lines tokenize(const std::string& text) {
    Lines lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.rows.push_back({number, std::move(tokens)});
    }
    return lines;
}

// Takes a "<keyword> <count>" header line.
int take_count(Lines& lines, const char* keyword) {
    if (lines.done()) throw InputError("unexpected end of file: expected '" + std::string(keyword) + " <N>'");
    const auto& [line, tokens] = lines.take();
    if (tokens.size() != 2 || tokens[0] != keyword)
        fail(line, "expected '" + std::string(keyword) + " <N>'");
    return parse_int(line, tokens[1], "a count");
}

} // namespace

std::pair<Board, Coloring> parse_board_text(const std::string& text) {
    Lines lines = tokenize(text);
    if (lines.done()) throw InputError("empty board file");
    {
        const auto& [line, tokens] = lines.take();
        if (tokens.size() != 2 || tokens[0] != "cgb" || tokens[1] != "1")
            fail(line, "expected header 'cgb 1'");
    }
    int vertex_count = take_count(lines, "vertices");
    int triangle_count = take_count(lines, "triangles");
    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(triangle_count);
    for (int i = 0; i < triangle_count; ++i) {
        if (lines.done()) throw InputError("unexpected end of file inside triangle list");
        const auto& [line, tokens] = lines.take();
        if (tokens.size() != 4 || tokens[0] != "t") fail(line, "expected 't <i> <j> <k>'");
        triangles.push_back({parse_int(line, tokens[1], "a vertex id"),
                             parse_int(line, tokens[2], "a vertex id"),
                             parse_int(line, tokens[3], "a vertex id")});
    }
    int side_count = take_count(lines, "sides");
    std::vector<Side> sides;
    sides.reserve(side_count);
    for (int i = 0; i < side_count; ++i) {
        if (lines.done()) throw InputError("unexpected end of file inside side list");
        const auto& [line, tokens] = lines.take();
        if (tokens.size() < 3 || tokens[0] != "s") fail(line, "expected 's <label> <v0> ... <vk>'");
        Side side{tokens[1], {}};
        for (size_t j = 2; j < tokens.size(); ++j)
            side.path.push_back(parse_int(line, tokens[j], "a vertex id"));
        sides.push_back(std::move(side));
    }

    Coloring coloring(vertex_count, Color::Empty);
    if (!lines.done()) {
        int colored = take_count(lines, "coloring");
        for (int i = 0; i < colored; ++i) {
            if (lines.done()) throw InputError("unexpected end of file inside coloring list");
            const auto& [line, tokens] = lines.take();
            if (tokens.size() != 3 || tokens[0] != "c") fail(line, "expected 'c <v> <R|B>'");
            int v = parse_int(line, tokens[1], "a vertex id");
            if (v < 0 || v >= vertex_count) fail(line, "coloring vertex id out of range");
            if (tokens[2] == "R")
                coloring[v] = Color::Red;
            else if (tokens[2] == "B")
                coloring[v] = Color::Blue;
            else
                fail(line, "expected color R or B, got '" + tokens[2] + "'");
        }
    }
    if (!lines.done()) fail(lines.peek().first, "unexpected trailing content");

    return {build(vertex_count, std::move(triangles), std::move(sides)), std::move(coloring)};
}

std::pair<Board, Coloring> parse_board_file(const std::string& text) {
    auto parsed = parse_board_text(text);
    auto report = validate(parsed.first);
    if (!report.ok()) throw InputError("board fails validation:\n" + report.to_string());
    return parsed;
}

std::string render_board_file(const Board& board, const Coloring& coloring) {
    std::ostringstream os;
    os << "cgb 1\n";
    os << "vertices " << board.vertex_count << "\n";
    os << "triangles " << board.triangles.size() << "\n";
    for (const auto& t : board.triangles) os << "t " << t[0] << " " << t[1] << " " << t[2] << "\n";
    os << "sides " << board.sides.size() << "\n";
    for (const auto& s : board.sides) {
        os << "s " << s.label;
        for (int v : s.path) os << " " << v;
        os << "\n";
    }
    size_t colored = 0;
    for (Color c : coloring)
        if (c != Color::Empty) ++colored;
    if (colored > 0) {
        os << "coloring " << colored << "\n";
        for (size_t v = 0; v < coloring.size(); ++v)
            if (coloring[v] != Color::Empty)
                os << "c " << v << " " << color_char(coloring[v]) << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << content;
}

} // namespace cgb
