#include "relaxlab/search.hpp"

#include "relaxlab/domain_analysis.hpp"
#include "relaxlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace relaxlab {

std::string to_string(SearchOutcome o) {
    switch (o) {
    case SearchOutcome::Solved:
        return "solved";
    case SearchOutcome::Failed:
        return "failed";
    case SearchOutcome::ResourceExhausted:
        return "resource-exhausted";
    }
    return "?";
}

SearchResult enforced_hill_climbing(const Task &task, const Evaluator &h, std::uint64_t budget) {
    SearchResult r;
    auto evaluate = [&](const State &s) -> std::optional<HeuristicValue> {
        if (r.stats.evaluations >= budget)
            return std::nullopt;
        ++r.stats.evaluations;
        HeuristicValue v = h(s);
        if (v < r.best_h) {
            r.best_h = v;
            r.best_state = s;
        }
        return v;
    };

    State current = task.init();
    auto h0 = evaluate(current);
    if (!h0) {
        r.outcome = SearchOutcome::ResourceExhausted;
        return r;
    }
    HeuristicValue hcur = *h0;
    r.best_state = current;

    struct Node {
        State state;
        int parent;
        int action;
        int depth;
    };
    while (!is_goal(task, current)) {
        if (hcur.is_infinite()) {
            r.outcome = SearchOutcome::Failed;
            return r;
        }
        std::vector<Node> nodes{{current, -1, -1, 0}};
        std::unordered_set<State> seen{current};
        std::deque<int> open{0};
        int found = -1;
        HeuristicValue hfound;
        while (!open.empty() && found < 0) {
            int idx = open.front();
            open.pop_front();
            for (const auto &a : task.actions()) {
                const State &s = nodes[static_cast<std::size_t>(idx)].state;
                if (!a.pre_set.is_subset_of(s))
                    continue;
                State next = s;
                next |= a.add_set;
                next -= a.del_set;
                if (!seen.insert(next).second)
                    continue;
                auto v = evaluate(next);
                if (!v) {
                    r.outcome = SearchOutcome::ResourceExhausted;
                    return r;
                }
                if (v->is_infinite())
                    continue;
                nodes.push_back({std::move(next), idx, a.id, nodes[static_cast<std::size_t>(idx)].depth + 1});
                if (*v < hcur) {
                    found = static_cast<int>(nodes.size()) - 1;
                    hfound = *v;
                    break;
                }
                open.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
        if (found < 0) {
            r.outcome = SearchOutcome::Failed;
            return r;
        }
        std::vector<int> path;
        for (int n = found; nodes[static_cast<std::size_t>(n)].parent >= 0; n = nodes[static_cast<std::size_t>(n)].parent)
            path.push_back(nodes[static_cast<std::size_t>(n)].action);
        r.plan.insert(r.plan.end(), path.rbegin(), path.rend());
        const int depth = nodes[static_cast<std::size_t>(found)].depth;
        r.stats.depths.push_back(depth);
        r.stats.max_depth = std::max(r.stats.max_depth, depth);
        current = nodes[static_cast<std::size_t>(found)].state;
        hcur = hfound;
    }
    r.outcome = SearchOutcome::Solved;
    return r;
}

std::vector<int> invert_and_replay(const Task &task, const std::vector<int> &trace, const std::vector<int> &base_plan) {
    const ActionFlags flags = action_flags(task, compute_mutexes(task));
    for (const auto &a : task.actions()) {
        const ActionFlag &f = flags[static_cast<std::size_t>(a.id)];
        if (f.applicable && !f.at_least_invertible && !(f.static_add_effects && !f.relevant_delete_effects))
            throw PreconditionViolated("action " + a.name +
                                       " is neither at least invertible nor free of static-add/relevant-delete issues");
    }
    if (!apply_sequence(task, task.init(), trace))
        throw PreconditionViolated("trace is not applicable from the initial state");
    if (!validate_plan(task, base_plan, false))
        throw PreconditionViolated("base plan does not solve the task");

    std::vector<char> memory(task.num_actions(), 0);
    std::vector<int> out;
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        const ActionFlag &f = flags[static_cast<std::size_t>(*it)];
        if (f.at_least_invertible) {
            if (!memory[static_cast<std::size_t>(f.weak_inverse)])
                out.push_back(f.weak_inverse);
        } else {
            memory[static_cast<std::size_t>(*it)] = 1;
        }
    }
    for (int p : base_plan)
        if (!memory[static_cast<std::size_t>(p)])
            out.push_back(p);
    return out;
}

} // namespace relaxlab
