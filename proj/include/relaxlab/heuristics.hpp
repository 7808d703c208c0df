#pragma once

#include "relaxlab/task.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace relaxlab {

// Natural number or infinity; arithmetic with infinity absorbs.
class HeuristicValue {
    static constexpr std::int64_t kInf = INT64_MAX;
    std::int64_t v_ = 0;

public:
    constexpr HeuristicValue() = default;
    constexpr HeuristicValue(std::int64_t v) : v_(v < 0 ? 0 : v) {}
    static constexpr HeuristicValue infinity() {
        HeuristicValue h;
        h.v_ = kInf;
        return h;
    }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr bool is_finite() const { return v_ != kInf; }
    // Throws UsageError on infinity.
    std::int64_t value() const;
    std::string str() const;

    friend constexpr HeuristicValue operator+(HeuristicValue a, HeuristicValue b) {
        if (a.is_infinite() || b.is_infinite())
            return infinity();
        return HeuristicValue(a.v_ + b.v_);
    }
    friend constexpr auto operator<=>(HeuristicValue, HeuristicValue) = default;
    friend constexpr bool operator==(HeuristicValue, HeuristicValue) = default;
};

struct RelaxedPlanningGraph {
    std::vector<FactSet> fact_layers;
    // action_layers[i]: actions whose preconditions hold in fact_layers[i].
    std::vector<std::vector<int>> action_layers;
    // -1 when never reached.
    std::vector<int> first_level;
    bool goal_reached = false;
    // Index m of the first fact layer containing the goal (valid if goal_reached).
    int goal_layer = -1;
};

RelaxedPlanningGraph build_rpg(const Task &task, const State &s);

struct RelaxedPlan {
    std::vector<int> actions;
    std::size_t length() const { return actions.size(); }
};

// Chooses among the minimum-weight achievers of `fact` (sorted by id).
using TieBreak = std::function<int(const Task &task, int fact, const std::vector<int> &candidates)>;

struct FFResult {
    HeuristicValue value;
    std::optional<RelaxedPlan> plan;
};

FFResult h_ff(const Task &task, const State &s, const TieBreak &tie_break = {});

struct HPlusOptions {
    // Expanded search nodes before ResourceExhausted.
    std::uint64_t node_budget = 10'000'000;
};

struct HPlusResult {
    HeuristicValue value;
    // An optimal relaxed plan when value is finite.
    std::vector<int> plan;
    std::uint64_t expanded = 0;
};

// Exact h+: iterative-deepening branch and bound over relaxed states, with a
// transposition table, LM-cut lower bounds and the h^FF plan as upper bound.
// Keeps per-task preprocessing; safe to call repeatedly from one thread.
class HPlusSolver {
public:
    explicit HPlusSolver(const Task &task, HPlusOptions options = {});
    HPlusResult solve(const State &s) const;
    HeuristicValue operator()(const State &s) const { return solve(s).value; }

private:
    const Task &task_;
    HPlusOptions options_;
    // Actions that can contribute to some relaxed plan for the goal.
    std::vector<int> relevant_;
    FactSet relevant_facts_;
    std::vector<std::vector<int>> achievers_;
    friend class HPlusSearch;
};

HeuristicValue h_plus(const Task &task, const State &s, HPlusOptions options = {});

// Brute force: iterative deepening over relaxed action sequences in which every
// action adds a fact not yet present. Exponential; for small tasks only.
HeuristicValue h_plus_oracle(const Task &task, const State &s, std::uint64_t node_budget = 10'000'000);

HeuristicValue h_goalcount(const Task &task, const State &s);

// Admissible lower bound used inside the h+ search; exposed for tests.
HeuristicValue h_max(const Task &task, const State &s);
HeuristicValue h_lmcut(const Task &task, const State &s);

enum class HeuristicKind { HPlus, HFF, GoalCount, Oracle };

// "hplus", "hff", "goalcount", "oracle"; throws UsageError otherwise.
HeuristicKind parse_heuristic_kind(const std::string &name);
std::string to_string(HeuristicKind kind);

// Uniform entry point used by search, enumeration and sampling.
class Evaluator {
public:
    Evaluator(const Task &task, HeuristicKind kind, HPlusOptions options = {});
    HeuristicValue operator()(const State &s) const;
    HeuristicKind kind() const { return kind_; }
    const Task &task() const { return task_; }

private:
    const Task &task_;
    HeuristicKind kind_;
    HPlusOptions options_;
    std::optional<HPlusSolver> hplus_;
};

} // namespace relaxlab
