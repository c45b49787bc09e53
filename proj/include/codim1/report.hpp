#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codim1 {

// Outcome of one task directive, ready for rendering.  `verdict` is
// uppercase for the algebraic tasks (AFFINE / NOT AFFINE / UNKNOWN /
// INCONSISTENT); surface tasks carry the curve module's verdict sentence
// verbatim.  The interval is the superheight bracket [lower, upper] when the
// task produced one.
struct TaskResult {
    std::string kind;    // ledger | monoid-affine | surface | purity
    std::string subject; // ideal or config name
    std::string verdict;

    bool has_interval = false;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::string lower_tag;
    std::string upper_tag;
    std::string verdict_tag;

    std::vector<std::string> evidence;   // per-evidence outcome lines
    std::vector<std::string> assertions; // unproven inputs the verdict rests on
    std::vector<std::string> citations;  // rule tags that entered the verdict
    std::vector<std::string> notes;
    std::optional<double> seconds; // only with timing enabled
};

struct Report {
    std::vector<TaskResult> tasks;
};

// Human-readable rendering, one indented block per task.
std::string render_text(const Report& r);

// One JSON object per line per task, stable key order, same content as the
// text rendering.
std::string render_json_lines(const Report& r);

} // namespace codim1
