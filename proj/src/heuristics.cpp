#include "relaxlab/heuristics.hpp"

#include "relaxlab/errors.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace relaxlab {

std::int64_t HeuristicValue::value() const {
    if (is_infinite())
        throw UsageError("heuristic value is infinite");
    return v_;
}

std::string HeuristicValue::str() const {
    return is_infinite() ? "inf" : std::to_string(v_);
}

RelaxedPlanningGraph build_rpg(const Task &task, const State &s) {
    RelaxedPlanningGraph g;
    g.first_level.assign(task.num_facts(), -1);
    s.for_each([&](int f) { g.first_level[static_cast<std::size_t>(f)] = 0; });
    g.fact_layers.push_back(s);
    for (;;) {
        const FactSet &layer = g.fact_layers.back();
        if (task.goal_set().is_subset_of(layer)) {
            g.goal_reached = true;
            g.goal_layer = static_cast<int>(g.fact_layers.size()) - 1;
            return g;
        }
        std::vector<int> applicable;
        FactSet next = layer;
        for (const auto &a : task.actions()) {
            if (a.pre_set.is_subset_of(layer)) {
                applicable.push_back(a.id);
                next |= a.add_set;
            }
        }
        if (next == layer)
            return g;
        const int level = static_cast<int>(g.fact_layers.size());
        (next - layer).for_each([&](int f) { g.first_level[static_cast<std::size_t>(f)] = level; });
        g.action_layers.push_back(std::move(applicable));
        g.fact_layers.push_back(std::move(next));
    }
}

FFResult h_ff(const Task &task, const State &s, const TieBreak &tie_break) {
    RelaxedPlanningGraph g = build_rpg(task, s);
    if (!g.goal_reached)
        return {HeuristicValue::infinity(), std::nullopt};
    const int m = g.goal_layer;
    const std::size_t n = task.num_facts();

    std::vector<std::vector<int>> goals(static_cast<std::size_t>(m) + 1);
    std::vector<FactSet> queued(static_cast<std::size_t>(m) + 1, FactSet(n));
    auto push_goal = [&](int layer, int f) {
        if (layer == 0)
            return;
        auto l = static_cast<std::size_t>(layer);
        if (!queued[l].contains(f)) {
            queued[l].insert(f);
            goals[l].push_back(f);
        }
    };
    for (int f : task.goal())
        push_goal(m, f);

    std::vector<std::vector<int>> selected(static_cast<std::size_t>(m));
    for (int i = m; i >= 1; --i) {
        const auto li = static_cast<std::size_t>(i);
        const FactSet &below = g.fact_layers[li - 1];
        FactSet achieved(n);
        for (std::size_t k = 0; k < goals[li].size(); ++k) {
            const int f = goals[li][k];
            if (achieved.contains(f))
                continue;
            if (below.contains(f)) {
                push_goal(i - 1, f);
                continue;
            }
            std::vector<int> best;
            long best_weight = -1;
            for (int a : g.action_layers[li - 1]) {
                const GroundAction &act = task.action(a);
                if (!act.add_set.contains(f))
                    continue;
                long w = 0;
                for (int p : act.pre)
                    w += g.first_level[static_cast<std::size_t>(p)];
                if (best_weight < 0 || w < best_weight) {
                    best_weight = w;
                    best.assign(1, a);
                } else if (w == best_weight) {
                    best.push_back(a);
                }
            }
            int chosen = best.front();
            if (tie_break && best.size() > 1) {
                chosen = tie_break(task, f, best);
                if (std::find(best.begin(), best.end(), chosen) == best.end())
                    throw UsageError("tie-break returned a non-candidate action");
            }
            selected[li - 1].push_back(chosen);
            const GroundAction &act = task.action(chosen);
            achieved |= act.add_set;
            for (int p : act.pre)
                push_goal(i - 1, p);
        }
    }

    RelaxedPlan plan;
    for (auto &layer : selected)
        plan.actions.insert(plan.actions.end(), layer.begin(), layer.end());
    return {HeuristicValue(static_cast<std::int64_t>(plan.length())), std::move(plan)};
}

HeuristicValue h_goalcount(const Task &task, const State &s) {
    return HeuristicValue(static_cast<std::int64_t>((task.goal_set() - s).count()));
}

HeuristicValue h_max(const Task &task, const State &s) {
    RelaxedPlanningGraph g = build_rpg(task, s);
    return g.goal_reached ? HeuristicValue(g.goal_layer) : HeuristicValue::infinity();
}

namespace {

// LM-cut on the unit-cost delete relaxation restricted to a subset of actions.
// Two artificial facts: kInit feeds precondition-free actions, kGoal is added
// by the zero-cost goal action.
class LmCut {
    static constexpr int kInf = INT32_MAX;
    const Task &task_;
    int n_;
    int init_fact_;
    int goal_fact_;
    struct Op {
        std::vector<int> pre;
        std::vector<int> add;
        int base_cost;
    };
    std::vector<Op> ops_;
    std::vector<std::vector<int>> pre_of_;
    std::vector<std::vector<int>> add_of_;

    // Scratch.
    mutable std::vector<int> dist_, cost_, counter_, hop_, pcf_;
    mutable std::vector<char> zone_, reached_;

    void hmax(const State &s) const {
        std::fill(dist_.begin(), dist_.end(), kInf);
        std::fill(pcf_.begin(), pcf_.end(), -1);
        for (std::size_t o = 0; o < ops_.size(); ++o)
            counter_[o] = static_cast<int>(ops_[o].pre.size());
        using Item = std::pair<int, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        auto seed = [&](int f) {
            dist_[static_cast<std::size_t>(f)] = 0;
            pq.push({0, f});
        };
        s.for_each([&](int f) { seed(f); });
        seed(init_fact_);
        while (!pq.empty()) {
            auto [d, f] = pq.top();
            pq.pop();
            if (d != dist_[static_cast<std::size_t>(f)])
                continue;
            for (int o : pre_of_[static_cast<std::size_t>(f)]) {
                auto uo = static_cast<std::size_t>(o);
                if (--counter_[uo] != 0)
                    continue;
                hop_[uo] = d;
                pcf_[uo] = f;
                const int nd = d + cost_[uo];
                for (int q : ops_[uo].add) {
                    auto uq = static_cast<std::size_t>(q);
                    if (nd < dist_[uq]) {
                        dist_[uq] = nd;
                        pq.push({nd, q});
                    }
                }
            }
        }
    }

public:
    LmCut(const Task &task, const std::vector<int> &actions)
        : task_(task), n_(static_cast<int>(task.num_facts())), init_fact_(n_), goal_fact_(n_ + 1) {
        for (int a : actions) {
            const GroundAction &act = task.action(a);
            Op op{act.pre, act.add, 1};
            if (op.pre.empty())
                op.pre.push_back(init_fact_);
            ops_.push_back(std::move(op));
        }
        Op goal{task.goal(), {goal_fact_}, 0};
        if (goal.pre.empty())
            goal.pre.push_back(init_fact_);
        ops_.push_back(std::move(goal));
        pre_of_.resize(static_cast<std::size_t>(n_) + 2);
        add_of_.resize(static_cast<std::size_t>(n_) + 2);
        for (std::size_t o = 0; o < ops_.size(); ++o) {
            for (int p : ops_[o].pre)
                pre_of_[static_cast<std::size_t>(p)].push_back(static_cast<int>(o));
            for (int q : ops_[o].add)
                add_of_[static_cast<std::size_t>(q)].push_back(static_cast<int>(o));
        }
        dist_.resize(static_cast<std::size_t>(n_) + 2);
        zone_.resize(static_cast<std::size_t>(n_) + 2);
        reached_.resize(static_cast<std::size_t>(n_) + 2);
        cost_.resize(ops_.size());
        counter_.resize(ops_.size());
        hop_.resize(ops_.size());
        pcf_.resize(ops_.size());
    }

    HeuristicValue operator()(const State &s) const {
        if (task_.goal_set().is_subset_of(s))
            return 0;
        for (std::size_t o = 0; o < ops_.size(); ++o)
            cost_[o] = ops_[o].base_cost;
        std::int64_t total = 0;
        std::vector<int> stack;
        for (;;) {
            hmax(s);
            const int hg = dist_[static_cast<std::size_t>(goal_fact_)];
            if (hg == kInf)
                return HeuristicValue::infinity();
            if (hg == 0)
                return total;

            std::fill(zone_.begin(), zone_.end(), 0);
            zone_[static_cast<std::size_t>(goal_fact_)] = 1;
            stack.assign(1, goal_fact_);
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (int o : add_of_[static_cast<std::size_t>(f)]) {
                    auto uo = static_cast<std::size_t>(o);
                    if (pcf_[uo] < 0 || cost_[uo] != 0)
                        continue;
                    int p = pcf_[uo];
                    if (!zone_[static_cast<std::size_t>(p)]) {
                        zone_[static_cast<std::size_t>(p)] = 1;
                        stack.push_back(p);
                    }
                }
            }

            std::fill(reached_.begin(), reached_.end(), 0);
            stack.clear();
            auto reach = [&](int f) {
                auto uf = static_cast<std::size_t>(f);
                if (!reached_[uf] && !zone_[uf]) {
                    reached_[uf] = 1;
                    stack.push_back(f);
                }
            };
            s.for_each(reach);
            reach(init_fact_);
            std::vector<int> cut;
            int m = kInf;
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (int o : pre_of_[static_cast<std::size_t>(f)]) {
                    auto uo = static_cast<std::size_t>(o);
                    if (pcf_[uo] != f)
                        continue;
                    bool in_cut = false;
                    for (int q : ops_[uo].add) {
                        if (zone_[static_cast<std::size_t>(q)])
                            in_cut = true;
                        else
                            reach(q);
                    }
                    if (in_cut) {
                        cut.push_back(o);
                        m = std::min(m, cost_[uo]);
                    }
                }
            }
            std::sort(cut.begin(), cut.end());
            cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
            for (int o : cut)
                cost_[static_cast<std::size_t>(o)] -= m;
            total += m;
        }
    }
};

std::vector<int> all_actions(const Task &task) {
    std::vector<int> ids(task.num_actions());
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = static_cast<int>(i);
    return ids;
}

} // namespace

HeuristicValue h_lmcut(const Task &task, const State &s) {
    return LmCut(task, all_actions(task))(s);
}

HPlusSolver::HPlusSolver(const Task &task, HPlusOptions options)
    : task_(task), options_(options), relevant_facts_(task.num_facts()) {
    std::vector<char> used(task.num_actions(), 0);
    std::vector<int> open(task.goal().begin(), task.goal().end());
    for (int f : open)
        relevant_facts_.insert(f);
    achievers_.resize(task.num_facts());
    for (const auto &a : task.actions())
        for (int f : a.add)
            achievers_[static_cast<std::size_t>(f)].push_back(a.id);
    while (!open.empty()) {
        int f = open.back();
        open.pop_back();
        for (int a : achievers_[static_cast<std::size_t>(f)]) {
            if (used[static_cast<std::size_t>(a)])
                continue;
            used[static_cast<std::size_t>(a)] = 1;
            for (int p : task.action(a).pre)
                if (!relevant_facts_.contains(p)) {
                    relevant_facts_.insert(p);
                    open.push_back(p);
                }
        }
    }
    for (std::size_t a = 0; a < used.size(); ++a)
        if (used[a])
            relevant_.push_back(static_cast<int>(a));
}

class HPlusSearch {
    static constexpr std::int64_t kInf = INT64_MAX;
    const HPlusSolver &solver_;
    const Task &task_;
    LmCut lmcut_;
    struct Entry {
        std::int64_t value;
        bool exact;
        int best_action;
    };
    std::unordered_map<FactSet, Entry> memo_;

public:
    std::uint64_t expanded = 0;

    explicit HPlusSearch(const HPlusSolver &solver)
        : solver_(solver), task_(solver.task_), lmcut_(solver.task_, solver.relevant_) {}

    // Returns h+(s) exactly when the result is <= bound, otherwise a lower
    // bound on h+(s) that exceeds bound.
    std::int64_t search(const State &s, std::int64_t bound) {
        if (task_.goal_set().is_subset_of(s))
            return 0;
        auto it = memo_.find(s);
        if (it == memo_.end()) {
            HeuristicValue lb = lmcut_(s);
            Entry e{lb.is_infinite() ? kInf : lb.value(), lb.is_infinite(), -1};
            it = memo_.emplace(s, e).first;
        }
        if (it->second.exact || it->second.value > bound)
            return it->second.value;

        if (++expanded > solver_.options_.node_budget)
            throw ResourceExhausted("h+ search exceeded " + std::to_string(solver_.options_.node_budget) +
                                    " expanded nodes");

        std::int64_t best = kInf;
        int best_action = -1;
        std::int64_t min_lb = kInf;
        for (int a : solver_.relevant_) {
            const GroundAction &act = task_.action(a);
            if (!act.pre_set.is_subset_of(s))
                continue;
            if (!((act.add_set & solver_.relevant_facts_) - s).empty()) {
                const std::int64_t cap = std::min(bound, best == kInf ? kInf : best - 1) - 1;
                if (cap < 0)
                    break;
                const std::int64_t v = search(s | act.add_set, cap);
                if (v <= cap) {
                    best = v + 1;
                    best_action = a;
                } else if (v != kInf) {
                    min_lb = std::min(min_lb, v + 1);
                }
            }
        }
        Entry &e = memo_.at(s);
        if (best != kInf) {
            e = {best, true, best_action};
            return best;
        }
        if (min_lb == kInf) {
            e = {kInf, true, -1};
            return kInf;
        }
        e.value = std::max(e.value, min_lb);
        return e.value;
    }

    std::vector<int> plan_from(State s) const {
        std::vector<int> plan;
        while (!task_.goal_set().is_subset_of(s)) {
            const Entry &e = memo_.at(s);
            plan.push_back(e.best_action);
            s |= task_.action(e.best_action).add_set;
        }
        return plan;
    }
};

HPlusResult HPlusSolver::solve(const State &s) const {
    HPlusResult r;
    if (task_.goal_set().is_subset_of(s))
        return r;
    FFResult ff = h_ff(task_, s);
    if (ff.value.is_infinite()) {
        r.value = HeuristicValue::infinity();
        return r;
    }
    const std::int64_t ub = ff.value.value();
    HPlusSearch search(*this);
    std::int64_t bound = 0;
    while (bound < ub) {
        std::int64_t v = search.search(s, bound);
        if (v <= bound) {
            r.value = v;
            r.plan = search.plan_from(s);
            r.expanded = search.expanded;
            return r;
        }
        bound = v;
    }
    r.value = ub;
    r.plan = ff.plan->actions;
    r.expanded = search.expanded;
    return r;
}

HeuristicValue h_plus(const Task &task, const State &s, HPlusOptions options) {
    return HPlusSolver(task, options).solve(s).value;
}

namespace {
struct Oracle {
    const Task &task;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    bool dfs(const State &s, int depth) {
        if (task.goal_set().is_subset_of(s))
            return true;
        if (depth == 0)
            return false;
        if (++nodes > budget)
            throw ResourceExhausted("oracle exceeded " + std::to_string(budget) + " nodes");
        for (const auto &a : task.actions()) {
            if (!a.pre_set.is_subset_of(s) || a.add_set.is_subset_of(s))
                continue;
            if (dfs(s | a.add_set, depth - 1))
                return true;
        }
        return false;
    }
};
} // namespace

HeuristicValue h_plus_oracle(const Task &task, const State &s, std::uint64_t node_budget) {
    FactSet closure = s;
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto &a : task.actions())
            if (a.pre_set.is_subset_of(closure) && !a.add_set.is_subset_of(closure)) {
                closure |= a.add_set;
                grew = true;
            }
    }
    if (!task.goal_set().is_subset_of(closure))
        return HeuristicValue::infinity();
    Oracle o{task, node_budget};
    for (int d = 0;; ++d)
        if (o.dfs(s, d))
            return d;
}

HeuristicKind parse_heuristic_kind(const std::string &name) {
    if (name == "hplus")
        return HeuristicKind::HPlus;
    if (name == "hff")
        return HeuristicKind::HFF;
    if (name == "goalcount")
        return HeuristicKind::GoalCount;
    if (name == "oracle")
        return HeuristicKind::Oracle;
    throw UsageError("unknown heuristic '" + name + "' (hplus, hff, goalcount, oracle)");
}

std::string to_string(HeuristicKind kind) {
    switch (kind) {
    case HeuristicKind::HPlus:
        return "hplus";
    case HeuristicKind::HFF:
        return "hff";
    case HeuristicKind::GoalCount:
        return "goalcount";
    case HeuristicKind::Oracle:
        return "oracle";
    }
    return "?";
}

Evaluator::Evaluator(const Task &task, HeuristicKind kind, HPlusOptions options)
    : task_(task), kind_(kind), options_(options) {
    if (kind == HeuristicKind::HPlus)
        hplus_.emplace(task, options);
}

HeuristicValue Evaluator::operator()(const State &s) const {
    switch (kind_) {
    case HeuristicKind::HPlus:
        return (*hplus_)(s);
    case HeuristicKind::HFF:
        return h_ff(task_, s).value;
    case HeuristicKind::GoalCount:
        return h_goalcount(task_, s);
    case HeuristicKind::Oracle:
        return h_plus_oracle(task_, s, options_.node_budget);
    }
    return HeuristicValue::infinity();
}

} // namespace relaxlab
