#pragma once

#include "relaxlab/fact_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace relaxlab {

// A state is the set of facts true in it.
using State = FactSet;

struct Fact {
    int id;
    std::string name;
};

struct GroundAction {
    int id = -1;
    std::string name;
    std::vector<int> pre;
    std::vector<int> add;
    std::vector<int> del;
    FactSet pre_set;
    FactSet add_set;
    FactSet del_set;
};

// Input form for building a Task; ids in pre/add/del refer to the fact list.
struct ActionSpec {
    std::string name;
    std::vector<int> pre;
    std::vector<int> add;
    std::vector<int> del;
};

// Grounded STRIPS task. Fact and action tables are frozen at construction.
// Facts listed both in add and del of an action are kept as add-only.
class Task {
    std::vector<Fact> facts_;
    std::vector<GroundAction> actions_;
    State init_;
    std::vector<int> goal_;
    FactSet goal_set_;
    std::unordered_map<std::string, int> fact_index_;
    std::unordered_map<std::string, int> action_index_;

public:
    Task(std::vector<std::string> fact_names, std::vector<ActionSpec> actions,
         std::vector<int> init, std::vector<int> goal);

    std::size_t num_facts() const { return facts_.size(); }
    std::size_t num_actions() const { return actions_.size(); }
    const std::vector<Fact> &facts() const { return facts_; }
    const std::vector<GroundAction> &actions() const { return actions_; }
    const GroundAction &action(int id) const;
    const State &init() const { return init_; }
    const std::vector<int> &goal() const { return goal_; }
    const FactSet &goal_set() const { return goal_set_; }

    std::optional<int> find_fact(const std::string &name) const;
    std::optional<int> find_action(const std::string &name) const;
    // Throws UsageError for unknown names.
    int fact_id(const std::string &name) const;
    int action_id(const std::string &name) const;

    State make_state(std::span<const int> fact_ids) const;
    State make_state(const std::vector<std::string> &fact_names) const;
    std::string format_state(const State &s) const;
    std::vector<int> action_ids(const std::vector<std::string> &names) const;
};

std::optional<State> apply(const Task &task, const State &s, const GroundAction &a);
std::optional<State> apply(const Task &task, const State &s, int action_id);
std::optional<State> apply_sequence(const Task &task, const State &s, std::span<const int> seq);
GroundAction relax(const GroundAction &a);
bool is_goal(const Task &task, const State &s);
bool validate_plan(const Task &task, std::span<const int> seq, bool relaxed);
// As validate_plan but starting from an arbitrary state.
bool validate_plan_from(const Task &task, const State &start, std::span<const int> seq, bool relaxed);

} // namespace relaxlab
