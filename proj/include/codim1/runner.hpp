#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "codim1/report.hpp"
#include "codim1/session.hpp"

namespace codim1 {

struct RunOptions {
    std::uint64_t max_spair_reductions = 1'000'000;
    // Re-derive heights modulo this prime as a cross-check; notes only,
    // never verdicts.
    std::optional<std::uint32_t> advisory_prime;
    bool verbose = false; // Groebner statistics in the notes
    bool timings = false; // wall-clock per task
};

struct RunOutcome {
    Report report;
    int exit_code = 0;      // 0 decided, 1 input error, 2 undecided,
                            // 3 inconsistent evidence, 4 resource cap
    std::string diagnostic; // non-empty when a task aborted the run
};

// Executes the session's tasks in order.  A failing task is reported and
// stops the run; otherwise the exit code is 2 when some verdict stayed
// undecided and 0 when every task reached a conclusion.
RunOutcome run_session(const Session& s, const RunOptions& opts = {});

// Bundled example sessions by name, in presentation order.
const std::vector<std::pair<std::string, std::string>>& builtin_sessions();
const std::string* find_builtin_session(const std::string& name);

// The command-line program behind tools/codim-one.cpp.
int cli_main(int argc, char** argv);

} // namespace codim1
