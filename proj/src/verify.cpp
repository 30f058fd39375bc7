#include "cgb/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "cgb/errors.hpp"
#include "cgb/gale.hpp"
#include "cgb/reductions.hpp"

namespace cgb {

std::string Tally::to_string() const {
    std::ostringstream os;
    os << "total=" << total << " red=" << red_wins << " blue=" << blue_wins
       << " draw=" << draws << " both=" << double_wins;
    return os.str();
}

namespace {

std::vector<int> free_vertices(const Board& board, const Coloring& base) {
    std::vector<int> free;
    for (int v = 0; v < board.vertex_count; ++v)
        if (base.empty() || base[v] == Color::Empty) free.push_back(v);
    return free;
}

Coloring expand_base(const Board& board, const Coloring& base) {
    if (base.empty()) return Coloring(board.vertex_count, Color::Empty);
    if (static_cast<int>(base.size()) != board.vertex_count)
        throw InputError("base coloring size does not match board vertex count");
    return base;
}

void record(Tally& tally, GoalResult goals) {
    ++tally.total;
    if (goals.red && goals.blue)
        ++tally.double_wins;
    else if (goals.red)
        ++tally.red_wins;
    else if (goals.blue)
        ++tally.blue_wins;
    else
        ++tally.draws;
}

} // namespace

Tally enumerate_indices(const Board& board, const Coloring& base, uint64_t begin, uint64_t end,
                        const EvaluateFn& evaluate) {
    Coloring colors = expand_base(board, base);
    auto free = free_vertices(board, colors);
    Tally tally;
    GoalEvaluator eval(board);
    for (uint64_t index = begin; index < end; ++index) {
        for (size_t i = 0; i < free.size(); ++i)
            colors[free[i]] = (index >> i) & 1 ? Color::Blue : Color::Red;
        GoalResult goals = evaluate ? evaluate(board, colors) : eval.evaluate(colors);
        record(tally, goals);
    }
    return tally;
}

Tally enumerate_exhaustive(const Board& board, const Coloring& base, int guard,
                           const EvaluateFn& evaluate) {
    auto free = free_vertices(board, expand_base(board, base));
    if (static_cast<int>(free.size()) > guard)
        throw InputError("board has " + std::to_string(free.size()) +
                         " free vertices, over the exhaustive guard of " + std::to_string(guard) +
                         "; use sampling instead");
    const uint64_t count = uint64_t(1) << free.size();

    unsigned workers = std::thread::hardware_concurrency();
    if (free.size() < 18 || workers < 2 || evaluate) return enumerate_indices(board, base, 0, count, evaluate);

    // The tally is a sum over indices, so any partition of the range gives
    // the same result.
    std::vector<Tally> parts(workers);
    std::vector<std::thread> threads;
    uint64_t chunk = count / workers + 1;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = std::min(count, w * chunk);
        uint64_t hi = std::min(count, lo + chunk);
        threads.emplace_back(
            [&, lo, hi, w] { parts[w] = enumerate_indices(board, base, lo, hi, {}); });
    }
    for (auto& t : threads) t.join();
    Tally tally;
    for (const auto& part : parts) tally += part;
    return tally;
}

Tally sample_random(const Board& board, uint64_t trials, uint64_t seed, const Coloring& base,
                    const EvaluateFn& evaluate) {
    if (trials == 0) throw InputError("sample_random needs trials >= 1");
    Coloring colors = expand_base(board, base);
    auto free = free_vertices(board, colors);
    std::mt19937_64 rng(seed);
    GoalEvaluator eval(board);
    Tally tally;
    uint64_t bits = 0;
    int bits_left = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        for (int v : free) {
            if (bits_left == 0) {
                bits = rng();
                bits_left = 64;
            }
            colors[v] = (bits & 1) ? Color::Blue : Color::Red;
            bits >>= 1;
            --bits_left;
        }
        GoalResult goals = evaluate ? evaluate(board, colors) : eval.evaluate(colors);
        record(tally, goals);
    }
    return tally;
}

namespace {

struct SuiteBuilder {
    SuiteReport report;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back({name, pass, detail});
    }
};

std::string first_failure_coloring(const Board& board, const Coloring& colors) {
    return "board V=" + std::to_string(board.vertex_count) +
           " coloring=" + coloring_to_string(colors);
}

// Walks every full coloring of the free vertices, calling fn; fn returns an
// empty string on pass, a failure detail otherwise. Stops at the first
// failure.
std::string for_each_full_coloring(const Board& board, const Coloring& base,
                                   const std::function<std::string(const Coloring&)>& fn) {
    Coloring colors = base;
    auto free = free_vertices(board, colors);
    const uint64_t count = uint64_t(1) << free.size();
    for (uint64_t index = 0; index < count; ++index) {
        for (size_t i = 0; i < free.size(); ++i)
            colors[free[i]] = (index >> i) & 1 ? Color::Blue : Color::Red;
        std::string fail = fn(colors);
        if (!fail.empty()) return fail;
    }
    return "";
}

void suite_for_y(const Board& board, int guard, SuiteBuilder& sb) {
    Doubling d;
    try {
        d = double_y_to_hex(board);
    } catch (const InputError& e) {
        sb.check("double-construction", false, e.what());
        return;
    }
    sb.check("double-construction", true,
             "doubled board has " + std::to_string(d.hex_board.vertex_count) + " vertices");

    std::string why;
    sb.check("fold-simplicial", is_simplicial(d.hex_board, d.fold, d.y_board, &why), why);
    sb.check("reflect-simplicial", is_simplicial(d.hex_board, d.reflect, d.hex_board, &why), why);

    bool involution = true, fixes_l1_exactly = true, fold_after_reflect = true, fold_id = true;
    for (int v = 0; v < d.hex_board.vertex_count; ++v) {
        if (d.reflect(d.reflect(v)) != v) involution = false;
        bool fixed = d.reflect(v) == v;
        bool on_l1 = std::binary_search(d.l1_vertices.begin(), d.l1_vertices.end(), v);
        if (fixed != on_l1) fixes_l1_exactly = false;
        if (d.fold(d.reflect(v)) != d.fold(v)) fold_after_reflect = false;
    }
    for (int v = 0; v < d.y_board.vertex_count; ++v)
        if (d.fold(d.embed(v)) != v) fold_id = false;
    sb.check("reflect-involution", involution);
    sb.check("reflect-fixes-l1-exactly", fixes_l1_exactly);
    sb.check("fold-after-reflect-is-fold", fold_after_reflect);
    sb.check("fold-identity-on-embed", fold_id);

    if (board.vertex_count > guard) return;  // exhaustive parts need free <= guard
    std::string fail = for_each_full_coloring(
        board, Coloring(board.vertex_count, Color::Empty), [&](const Coloring& colors) {
            try {
                y_winner_via_hex(board, colors);  // asserts agreement and side-touching
            } catch (const TheoremViolation& e) {
                return std::string(e.what());
            }
            return std::string();
        });
    sb.check("via-hex-agreement", fail.empty(), fail);
}

void suite_for_hex(const Board& board, int guard, SuiteBuilder& sb) {
    Extension ext;
    try {
        ext = extend_y_from_hex(board);
    } catch (const std::runtime_error& e) {
        sb.check("extension-valid", false, e.what());
        return;
    }
    sb.check("extension-valid", ext.y_board.vertex_count == board.vertex_count + 2,
             "extension has " + std::to_string(ext.y_board.vertex_count) + " vertices");

    GaleBoard gale;
    try {
        gale = augment(board);
    } catch (const std::runtime_error& e) {
        sb.check("gale-valid", false, e.what());
        return;
    }
    bool apex_cycle = gale.d_board.boundary_cycle.size() == 4;
    sb.check("gale-valid", apex_cycle && gale.d_board.vertex_count == board.vertex_count + 4);

    if (board.vertex_count > guard) return;  // exhaustive parts need free <= guard
    std::string fail = for_each_full_coloring(
        board, Coloring(board.vertex_count, Color::Empty), [&](const Coloring& colors) {
            if (!check_extension_equivalence(board, colors))
                return first_failure_coloring(board, colors);
            return std::string();
        });
    sb.check("extension-agreement", fail.empty(), fail);

    std::string cross_fail, simp_fail, identity_fail, agree_fail;
    for_each_full_coloring(
        gale.d_board, gale.pre_coloring, [&](const Coloring& colors) {
            GalePartition part = classify(gale, colors);
            RetractionReport rr = retraction_check(gale, part);
            if (!rr.cross_edges.empty() && cross_fail.empty())
                cross_fail = first_failure_coloring(gale.d_board, colors);
            if (!rr.simplicial && simp_fail.empty())
                simp_fail = first_failure_coloring(gale.d_board, colors);
            if (rr.identity_on_s && identity_fail.empty())
                identity_fail = first_failure_coloring(gale.d_board, colors);
            Outcome via = winner_from_classification(part);
            Coloring hex_colors(colors.begin(), colors.begin() + board.vertex_count);
            Outcome direct = winner(board, hex_colors);
            if (via.kind != direct.kind && agree_fail.empty())
                agree_fail = first_failure_coloring(gale.d_board, colors);
            return std::string();  // keep walking: all four kinds are collected
        });
    sb.check("gale-cross-edges-empty", cross_fail.empty(), cross_fail);
    sb.check("gale-simplicial", simp_fail.empty(), simp_fail);
    sb.check("gale-identity-on-s-false", identity_fail.empty(), identity_fail);
    sb.check("gale-winner-agreement", agree_fail.empty(), agree_fail);
}

} // namespace

SuiteReport invariant_suite(const Board& board, int guard) {
    SuiteBuilder sb;
    auto report = validate(board);
    sb.check("validate", report.ok(), report.ok() ? "" : report.to_string());
    if (!report.ok()) return sb.report;  // nothing below is meaningful

    if (board.vertex_count <= guard) {
        Tally tally = enumerate_exhaustive(board, {}, guard);
        sb.check("exhaustive-one-winner", tally.compliant(), tally.to_string());
        if (!tally.compliant()) sb.report.bad_tally = true;
    } else {
        Tally tally = sample_random(board, 4096, 0x5eed);
        sb.check("sampled-one-winner", tally.compliant(), tally.to_string());
        if (!tally.compliant()) sb.report.bad_tally = true;
    }

    try {
        if (board.kind() == BoardKind::Y)
            suite_for_y(board, guard, sb);
        else
            suite_for_hex(board, guard, sb);
    } catch (const TheoremViolation& e) {
        sb.report.bad_tally = true;
        sb.check("no-theorem-violation", false, e.what());
    }
    return sb.report;
}

SelfplayResult selfplay(const Board& board, uint64_t games, uint64_t seed) {
    if (games == 0) throw InputError("selfplay needs games >= 1");
    std::mt19937_64 rng(seed);
    GoalEvaluator eval(board);
    SelfplayResult result;
    result.games.reserve(games);
    for (uint64_t g = 0; g < games; ++g) {
        std::vector<int> open(board.vertex_count);
        for (int v = 0; v < board.vertex_count; ++v) open[v] = v;
        Coloring colors(board.vertex_count, Color::Empty);
        std::vector<int> moves;
        moves.reserve(board.vertex_count);
        Color to_move = Color::Red;
        while (!open.empty()) {
            size_t pick = rng() % open.size();
            int v = open[pick];
            open[pick] = open.back();
            open.pop_back();
            colors[v] = to_move;
            moves.push_back(v);
            to_move = (to_move == Color::Red) ? Color::Blue : Color::Red;
        }
        record(result.tally, eval.evaluate(colors));
        result.games.push_back(std::move(moves));
    }
    return result;
}

} // namespace cgb
