#include "cgb/cli.hpp"

#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "cgb/board_file.hpp"
#include "cgb/dot.hpp"
#include "cgb/errors.hpp"
#include "cgb/gale.hpp"
#include "cgb/generators.hpp"
#include "cgb/reductions.hpp"
#include "cgb/rules.hpp"

namespace cgb::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTheorem = 2;
constexpr int kExitUsage = 3;

std::pair<Board, Coloring> load(const std::string& path) {
    return parse_board_file(read_file(path));
}

std::string outcome_name(const Outcome& outcome) {
    switch (outcome.kind) {
        case Outcome::Kind::RedWins: return "red";
        case Outcome::Kind::BlueWins: return "blue";
        default: return "undecided";
    }
}

int tally_exit(const Tally& tally) { return tally.compliant() ? kExitOk : kExitTheorem; }

int cmd_validate(const std::string& path, std::ostream& out) {
    auto [board, coloring] = parse_board_text(read_file(path));
    (void)coloring;
    auto report = validate(board);
    if (report.ok())
        out << "ok\n";
    else
        out << report.to_string();
    return report.ok() ? kExitOk : kExitInput;
}

int cmd_winner(const std::string& path, std::ostream& out) {
    auto [board, coloring] = load(path);
    Outcome outcome = winner(board, coloring);
    out << outcome_name(outcome) << "\n";
    if (outcome.witness) {
        out << "witness";
        for (int v : outcome.witness->vertices) out << " " << v;
        out << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& path, int guard, const Hooks& hooks, std::ostream& out) {
    auto [board, coloring] = load(path);
    Tally tally = enumerate_exhaustive(board, coloring, guard, hooks.evaluate);
    out << tally.to_string() << "\n";
    return tally_exit(tally);
}

int cmd_sample(const std::string& path, uint64_t trials, uint64_t seed, const Hooks& hooks,
               std::ostream& out) {
    auto [board, coloring] = load(path);
    Tally tally = sample_random(board, trials, seed, coloring, hooks.evaluate);
    out << tally.to_string() << "\n";
    return tally_exit(tally);
}

int cmd_suite(const std::string& path, int guard, std::ostream& out) {
    auto [board, coloring] = load(path);
    (void)coloring;
    SuiteReport report = invariant_suite(board, guard);
    for (const auto& check : report.checks) {
        out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) out << ": " << check.detail;
        out << "\n";
    }
    if (report.all_pass()) return kExitOk;
    return report.bad_tally ? kExitTheorem : kExitInput;
}

int cmd_reduce(const std::string& path, bool to_y, const std::string& out_path,
               std::ostream& out) {
    auto [board, coloring] = load(path);
    Board result;
    Coloring result_colors;
    if (to_y) {
        Extension ext = extend_y_from_hex(board);
        result = ext.y_board;
        result_colors = ext.pre_coloring;
        for (int v = 0; v < board.vertex_count; ++v)
            if (coloring[v] != Color::Empty) result_colors[ext.embed(v)] = coloring[v];
    } else {
        Doubling d = double_y_to_hex(board);
        result = d.hex_board;
        result_colors = mirror_coloring(d, coloring);
    }
    write_file(out_path, render_board_file(result, result_colors));
    out << "vertices=" << result.vertex_count << " triangles=" << result.triangles.size()
        << " sides=" << result.sides.size() << "\n";
    return kExitOk;
}

int cmd_gale(const std::string& path, int guard, std::ostream& out) {
    auto [board, coloring] = load(path);
    if (board.sides.size() != 4) throw InputError("gale needs a 4-sided board");
    GaleBoard gale = augment(board);
    out << "augmented vertices=" << gale.d_board.vertex_count
        << " edges=" << gale.d_board.edges.size()
        << " triangles=" << gale.d_board.triangles.size() << "\n";

    Coloring base = gale.pre_coloring;
    for (int v = 0; v < board.vertex_count; ++v)
        if (coloring[v] != Color::Empty) base[gale.embed(v)] = coloring[v];

    if (is_full(base)) {
        GalePartition part = classify(gale, base);
        RetractionReport rr = retraction_check(gale, part);
        Outcome via = winner_from_classification(part);
        Outcome direct = winner(board, coloring);
        out << "v+=" << part.v_plus.size() << " v-=" << part.v_minus.size()
            << " w+=" << part.w_plus.size() << " w-=" << part.w_minus.size() << "\n";
        out << "simplicial=" << (rr.simplicial ? "true" : "false")
            << " identity_on_s=" << (rr.identity_on_s ? "true" : "false")
            << " cross_edges=" << rr.cross_edges.size() << "\n";
        bool agrees = via.kind == direct.kind;
        out << "winner=" << outcome_name(via) << " agrees=" << (agrees ? "true" : "false")
            << "\n";
        if (!via.decided()) return kExitTheorem;  // full coloring must have a winner
        return agrees && rr.simplicial && !rr.identity_on_s && rr.cross_edges.empty()
                   ? kExitOk
                   : kExitInput;
    }

    int free = 0;
    for (Color c : base)
        if (c == Color::Empty) ++free;
    if (free > guard)
        throw InputError("board has " + std::to_string(free) +
                         " free vertices, over the exhaustive guard of " + std::to_string(guard));
    uint64_t colorings = uint64_t(1) << free;
    uint64_t cross_failures = 0, simplicial_failures = 0, identity_failures = 0, mismatches = 0;
    Tally tally;
    Coloring colors = base;
    std::vector<int> free_ids;
    for (int v = 0; v < gale.d_board.vertex_count; ++v)
        if (base[v] == Color::Empty) free_ids.push_back(v);
    for (uint64_t index = 0; index < colorings; ++index) {
        for (size_t i = 0; i < free_ids.size(); ++i)
            colors[free_ids[i]] = (index >> i) & 1 ? Color::Blue : Color::Red;
        GalePartition part = classify(gale, colors);
        RetractionReport rr = retraction_check(gale, part);
        if (!rr.cross_edges.empty()) ++cross_failures;
        if (!rr.simplicial) ++simplicial_failures;
        if (rr.identity_on_s) ++identity_failures;
        bool red = part.in_v_plus(part.r_minus);
        bool blue = part.in_w_plus(part.b_minus);
        ++tally.total;
        if (red && blue)
            ++tally.double_wins;
        else if (red)
            ++tally.red_wins;
        else if (blue)
            ++tally.blue_wins;
        else
            ++tally.draws;
        if (!(red && blue)) {
            Coloring hex_colors(colors.begin(), colors.begin() + board.vertex_count);
            Outcome direct = winner(board, hex_colors);
            Outcome::Kind via = red    ? Outcome::Kind::RedWins
                                : blue ? Outcome::Kind::BlueWins
                                       : Outcome::Kind::Undecided;
            if (via != direct.kind) ++mismatches;
        }
    }
    out << "colorings=" << colorings << " cross_edge_failures=" << cross_failures
        << " simplicial_failures=" << simplicial_failures
        << " identity_failures=" << identity_failures << " winner_mismatches=" << mismatches
        << " draw=" << tally.draws << " both=" << tally.double_wins << "\n";
    if (!tally.compliant()) return kExitTheorem;
    if (cross_failures || simplicial_failures || identity_failures || mismatches)
        return kExitInput;
    return kExitOk;
}

int cmd_selfplay(const std::string& path, uint64_t games, uint64_t seed, std::ostream& out) {
    auto [board, coloring] = load(path);
    (void)coloring;
    SelfplayResult result = selfplay(board, games, seed);
    out << result.tally.to_string() << "\n";
    return tally_exit(result.tally);
}

int cmd_export(const std::string& path, const std::string& dot_path, std::ostream& out) {
    auto [board, coloring] = load(path);
    Outcome outcome = winner(board, coloring);
    std::string dot = export_dot(board, coloring, outcome.witness);
    if (dot_path.empty())
        out << dot;
    else
        write_file(dot_path, dot);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
    CLI::App app{"generalized Hex and Y boards: validation, winners, reductions, enumeration"};
    app.name("cgb");
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file, out_path, dot_path;
    int guard = kDefaultGuard;
    uint64_t trials = 0, seed = 0, games = 0;

    auto* validate_cmd = app.add_subcommand("validate", "check the disk and side conditions");
    validate_cmd->add_option("FILE", file)->required();
    validate_cmd->callback([&] { action = [&] { return cmd_validate(file, out); }; });

    auto* winner_cmd = app.add_subcommand("winner", "decide the file's coloring");
    winner_cmd->add_option("FILE", file)->required();
    winner_cmd->callback([&] { action = [&] { return cmd_winner(file, out); }; });

    auto* enum_cmd = app.add_subcommand("enumerate", "tally all full colorings");
    enum_cmd->add_option("FILE", file)->required();
    enum_cmd->add_option("--guard", guard, "max free vertices for exhaustive runs");
    enum_cmd->callback([&] { action = [&] { return cmd_enumerate(file, guard, hooks, out); }; });

    auto* sample_cmd = app.add_subcommand("sample", "tally random full colorings");
    sample_cmd->add_option("FILE", file)->required();
    sample_cmd->add_option("--trials", trials)->required();
    sample_cmd->add_option("--seed", seed);
    sample_cmd->callback(
        [&] { action = [&] { return cmd_sample(file, trials, seed, hooks, out); }; });

    auto* suite_cmd = app.add_subcommand("suite", "run the cross-construction checks");
    suite_cmd->add_option("FILE", file)->required();
    suite_cmd->add_option("--guard", guard);
    suite_cmd->callback([&] { action = [&] { return cmd_suite(file, guard, out); }; });

    auto* reduce_cmd = app.add_subcommand("reduce", "apply the apex extension or the doubling");
    bool to_y = false, to_hex = false;
    auto* to_y_flag = reduce_cmd->add_flag("--to-y", to_y, "extend a Hex board to a Y position");
    auto* to_hex_flag =
        reduce_cmd->add_flag("--to-hex", to_hex, "double a Y board along l1");
    to_y_flag->excludes(to_hex_flag);
    reduce_cmd->add_option("FILE", file)->required();
    reduce_cmd->add_option("-o,--output", out_path)->required();
    reduce_cmd->callback([&] {
        if (!to_y && !to_hex) throw CLI::ValidationError("reduce", "need --to-y or --to-hex");
        action = [&] { return cmd_reduce(file, to_y, out_path, out); };
    });

    auto* gale_cmd = app.add_subcommand("gale", "augment with the four apexes and check");
    gale_cmd->add_option("FILE", file)->required();
    gale_cmd->add_option("--guard", guard);
    gale_cmd->callback([&] { action = [&] { return cmd_gale(file, guard, out); }; });

    auto* selfplay_cmd = app.add_subcommand("selfplay", "random games to a full board");
    selfplay_cmd->add_option("FILE", file)->required();
    selfplay_cmd->add_option("--games", games)->required();
    selfplay_cmd->add_option("--seed", seed);
    selfplay_cmd->callback(
        [&] { action = [&] { return cmd_selfplay(file, games, seed, out); }; });

    auto* gen_cmd = app.add_subcommand("gen", "generate a standard or random board");
    gen_cmd->require_subcommand(1);
    int rows = 0, cols = 0, n = 0, n_sides = 0;
    auto* gen_hex = gen_cmd->add_subcommand("hex", "dual Hex lattice");
    gen_hex->add_option("ROWS", rows)->required();
    gen_hex->add_option("COLS", cols)->required();
    gen_hex->add_option("-o,--output", out_path)->required();
    auto* gen_y = gen_cmd->add_subcommand("y", "dual Y lattice");
    gen_y->add_option("N", n)->required();
    gen_y->add_option("-o,--output", out_path)->required();
    auto* gen_rand = gen_cmd->add_subcommand("random", "seeded random disk triangulation");
    gen_rand->add_option("N", n)->required();
    gen_rand->add_option("SIDES", n_sides)->required();
    gen_rand->add_option("--seed", seed);
    gen_rand->add_option("-o,--output", out_path)->required();
    gen_cmd->callback([&, gen_hex, gen_y] {
        action = [&, gen_hex, gen_y] {
            Board board;
            if (gen_hex->parsed())
                board = gen_hex_dual(rows, cols);
            else if (gen_y->parsed())
                board = gen_y_dual(n);
            else
                board = gen_random(n, n_sides, seed);
            write_file(out_path, render_board_file(board, Coloring(board.vertex_count,
                                                                   Color::Empty)));
            return kExitOk;
        };
    });

    auto* export_cmd = app.add_subcommand("export", "DOT graph, winner chain highlighted");
    export_cmd->add_option("FILE", file)->required();
    export_cmd->add_option("--dot", dot_path, "write to a file instead of stdout");
    export_cmd->callback([&] { action = [&] { return cmd_export(file, dot_path, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return kExitTheorem;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace cgb::cli
