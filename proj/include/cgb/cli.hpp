#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cgb/verify.hpp"

namespace cgb::cli {

// Test seam: a replacement goal evaluation wired into the tally-producing
// subcommands, so the theorem-violation exit path can be exercised from a
// test build. Production main() leaves it empty.
struct Hooks {
    EvaluateFn evaluate;
};

// Exit codes: 0 success, 1 invalid input or board, 2 theorem violation
// (draws or double wins observed), 3 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

} // namespace cgb::cli
