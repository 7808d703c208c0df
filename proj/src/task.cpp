#include "relaxlab/task.hpp"

#include "relaxlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace relaxlab {

namespace {
std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_ids(const std::vector<int> &ids, std::size_t n, const std::string &what) {
    for (int id : ids)
        if (id < 0 || static_cast<std::size_t>(id) >= n)
            throw UsageError("fact id " + std::to_string(id) + " out of range in " + what);
}
} // namespace

Task::Task(std::vector<std::string> fact_names, std::vector<ActionSpec> actions,
           std::vector<int> init, std::vector<int> goal) {
    const std::size_t n = fact_names.size();
    facts_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!fact_index_.emplace(fact_names[i], static_cast<int>(i)).second)
            throw UsageError("duplicate fact name " + fact_names[i]);
        facts_.push_back(Fact{static_cast<int>(i), std::move(fact_names[i])});
    }
    check_ids(init, n, "init");
    check_ids(goal, n, "goal");
    init_ = State(n, init);
    goal_ = sorted_unique(std::move(goal));
    goal_set_ = FactSet(n, goal_);

    actions_.reserve(actions.size());
    for (std::size_t i = 0; i < actions.size(); ++i) {
        ActionSpec &spec = actions[i];
        check_ids(spec.pre, n, spec.name);
        check_ids(spec.add, n, spec.name);
        check_ids(spec.del, n, spec.name);
        GroundAction a;
        a.id = static_cast<int>(i);
        a.name = std::move(spec.name);
        a.pre = sorted_unique(std::move(spec.pre));
        a.add = sorted_unique(std::move(spec.add));
        // add-after-delete: a fact both added and deleted stays true.
        std::vector<int> del;
        for (int f : sorted_unique(std::move(spec.del)))
            if (!std::binary_search(a.add.begin(), a.add.end(), f))
                del.push_back(f);
        a.del = std::move(del);
        a.pre_set = FactSet(n, a.pre);
        a.add_set = FactSet(n, a.add);
        a.del_set = FactSet(n, a.del);
        if (!action_index_.emplace(a.name, a.id).second)
            throw UsageError("duplicate action name " + a.name);
        actions_.push_back(std::move(a));
    }
}

const GroundAction &Task::action(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= actions_.size())
        throw UsageError("action id " + std::to_string(id) + " out of range");
    return actions_[static_cast<std::size_t>(id)];
}

std::optional<int> Task::find_fact(const std::string &name) const {
    auto it = fact_index_.find(name);
    if (it == fact_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> Task::find_action(const std::string &name) const {
    auto it = action_index_.find(name);
    if (it == action_index_.end())
        return std::nullopt;
    return it->second;
}

int Task::fact_id(const std::string &name) const {
    if (auto id = find_fact(name))
        return *id;
    throw UsageError("unknown fact " + name);
}

int Task::action_id(const std::string &name) const {
    if (auto id = find_action(name))
        return *id;
    throw UsageError("unknown action " + name);
}

State Task::make_state(std::span<const int> fact_ids) const {
    std::vector<int> ids(fact_ids.begin(), fact_ids.end());
    check_ids(ids, facts_.size(), "state");
    return State(facts_.size(), ids);
}

State Task::make_state(const std::vector<std::string> &fact_names) const {
    State s(facts_.size());
    for (const auto &name : fact_names)
        s.insert(fact_id(name));
    return s;
}

std::string Task::format_state(const State &s) const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    s.for_each([&](int f) {
        if (!first)
            out << ", ";
        first = false;
        out << facts_[static_cast<std::size_t>(f)].name;
    });
    out << '}';
    return out.str();
}

std::vector<int> Task::action_ids(const std::vector<std::string> &names) const {
    std::vector<int> ids;
    ids.reserve(names.size());
    for (const auto &name : names)
        ids.push_back(action_id(name));
    return ids;
}

std::optional<State> apply(const Task &, const State &s, const GroundAction &a) {
    if (!a.pre_set.is_subset_of(s))
        return std::nullopt;
    State next = s;
    next |= a.add_set;
    next -= a.del_set;
    return next;
}

std::optional<State> apply(const Task &task, const State &s, int action_id) {
    return apply(task, s, task.action(action_id));
}

std::optional<State> apply_sequence(const Task &task, const State &s, std::span<const int> seq) {
    State current = s;
    for (int id : seq) {
        auto next = apply(task, current, id);
        if (!next)
            return std::nullopt;
        current = std::move(*next);
    }
    return current;
}

GroundAction relax(const GroundAction &a) {
    GroundAction r = a;
    r.del.clear();
    r.del_set = FactSet(a.del_set.universe_size());
    return r;
}

bool is_goal(const Task &task, const State &s) {
    return task.goal_set().is_subset_of(s);
}

bool validate_plan_from(const Task &task, const State &start, std::span<const int> seq, bool relaxed) {
    State current = start;
    for (int id : seq) {
        const GroundAction &a = task.action(id);
        if (!a.pre_set.is_subset_of(current))
            return false;
        current |= a.add_set;
        if (!relaxed)
            current -= a.del_set;
    }
    return is_goal(task, current);
}

bool validate_plan(const Task &task, std::span<const int> seq, bool relaxed) {
    return validate_plan_from(task, task.init(), seq, relaxed);
}

} // namespace relaxlab
