#pragma once

#include "relaxlab/heuristics.hpp"
#include "relaxlab/task.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relaxlab {

enum class SearchOutcome { Solved, Failed, ResourceExhausted };

std::string to_string(SearchOutcome o);

struct SearchStats {
    std::uint64_t evaluations = 0;
    std::vector<int> depths; // breadth-first depth of each improving step
    int max_depth = 0;
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Failed;
    std::vector<int> plan;
    SearchStats stats;
    // Lowest-h state evaluated, for diagnosing failures.
    State best_state;
    HeuristicValue best_h = HeuristicValue::infinity();
};

// Enforced hill-climbing. Each episode is a breadth-first search from the
// current state (duplicates skipped within the episode, h = inf pruned) that
// stops at the first strictly better state.
SearchResult enforced_hill_climbing(const Task &task, const Evaluator &h, std::uint64_t budget = 1'000'000);

// Builds a plan from Result(init, trace): undo the trace backwards through
// (at least) inverse actions, remembering actions that cannot be inverted,
// then run base_plan skipping the remembered ones. Throws
// PreconditionViolated unless every action is at least invertible or has
// static add effects and no relevant deletes, or if trace/base_plan are not
// applicable/solving from init.
std::vector<int> invert_and_replay(const Task &task, const std::vector<int> &trace, const std::vector<int> &base_plan);

} // namespace relaxlab
