#include "relaxlab/state_space.hpp"

#include "relaxlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <thread>

namespace relaxlab {

int StateSpace::find(const State &s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
}

namespace {

void evaluate_all(const Evaluator &h, StateSpace &space) {
    const std::size_t n = space.size();
    space.h.assign(n, HeuristicValue());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (h.kind() == HeuristicKind::GoalCount || h.kind() == HeuristicKind::HFF || n < 64)
        workers = 1;
    workers = std::min<unsigned>(workers, 16);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < n; i += workers)
                space.h[i] = h(space.states[i]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto &t : pool)
            t.join();
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::vector<std::vector<int>> predecessors(const StateSpace &space) {
    std::vector<std::vector<int>> pred(space.size());
    for (std::size_t s = 0; s < space.size(); ++s)
        for (const auto &t : space.succ[s])
            pred[static_cast<std::size_t>(t.target)].push_back(static_cast<int>(s));
    return pred;
}

// Iterative Tarjan on the subgraph given by keep(u, v). Components come out
// in reverse topological order (sinks first).
template <class Keep>
std::vector<std::vector<int>> tarjan(const StateSpace &space, Keep keep) {
    const std::size_t n = space.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> call;
    int counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        call.push_back({static_cast<int>(root), 0});
        while (!call.empty()) {
            Frame &f = call.back();
            auto v = static_cast<std::size_t>(f.v);
            if (f.next == 0 && index[v] < 0) {
                index[v] = low[v] = counter++;
                stack.push_back(f.v);
                on_stack[v] = 1;
            }
            bool descended = false;
            const auto &edges = space.succ[v];
            while (f.next < edges.size()) {
                int w = edges[f.next++].target;
                auto uw = static_cast<std::size_t>(w);
                if (!keep(f.v, w))
                    continue;
                if (index[uw] < 0) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[uw])
                    low[v] = std::min(low[v], index[uw]);
            }
            if (descended)
                continue;
            if (low[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                } while (w != f.v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            int finished = f.v;
            call.pop_back();
            if (!call.empty()) {
                auto parent = static_cast<std::size_t>(call.back().v);
                low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return comps;
}

// Shortest distance from each state to the nearest exit at its own level,
// by one backward breadth-first search per level.
std::vector<std::optional<HeuristicValue>> all_exit_distances(const StateSpace &space) {
    const std::size_t n = space.size();
    std::vector<std::optional<HeuristicValue>> ed(n);
    auto pred = predecessors(space);
    std::map<std::int64_t, std::vector<int>> exits_by_level;
    std::map<std::int64_t, bool> levels;
    for (std::size_t s = 0; s < n; ++s) {
        const HeuristicValue h = space.h[s];
        if (h.is_infinite() || h == 0)
            continue;
        levels[h.value()] = true;
        if (is_exit(space, static_cast<int>(s)))
            exits_by_level[h.value()].push_back(static_cast<int>(s));
    }
    std::vector<int> dist(n);
    for (auto &[level, _] : levels) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue;
        for (int e : exits_by_level[level]) {
            dist[static_cast<std::size_t>(e)] = 0;
            queue.push_back(e);
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : pred[static_cast<std::size_t>(v)])
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(u);
                }
        }
        for (std::size_t s = 0; s < n; ++s)
            if (space.h[s].is_finite() && space.h[s] == level)
                ed[s] = dist[s] < 0 ? HeuristicValue::infinity() : HeuristicValue(dist[s]);
    }
    return ed;
}

} // namespace

StateSpace enumerate(const Task &task, const Evaluator &h, std::size_t max_states) {
    StateSpace space;
    auto add = [&](const State &s) {
        auto [it, fresh] = space.index.emplace(s, static_cast<int>(space.states.size()));
        if (fresh) {
            if (space.states.size() >= max_states)
                throw ResourceExhausted("state space exceeds " + std::to_string(max_states) + " states");
            space.states.push_back(s);
            space.succ.emplace_back();
        }
        return it->second;
    };
    add(task.init());
    for (std::size_t i = 0; i < space.states.size(); ++i) {
        std::vector<Transition> out;
        for (const auto &a : task.actions()) {
            if (!a.pre_set.is_subset_of(space.states[i]))
                continue;
            State next = space.states[i];
            next |= a.add_set;
            next -= a.del_set;
            out.push_back({a.id, add(next)});
        }
        space.succ[i] = std::move(out);
    }

    const std::size_t n = space.size();
    space.gd.assign(n, HeuristicValue::infinity());
    auto pred = predecessors(space);
    std::deque<int> queue;
    std::vector<int> dist(n, -1);
    for (std::size_t s = 0; s < n; ++s)
        if (is_goal(task, space.states[s])) {
            dist[s] = 0;
            queue.push_back(static_cast<int>(s));
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : pred[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
    }
    for (std::size_t s = 0; s < n; ++s)
        if (dist[s] >= 0)
            space.gd[s] = dist[s];

    evaluate_all(h, space);
    return space;
}

StateSpace enumerate(const Task &task, HeuristicKind kind, std::size_t max_states) {
    return enumerate(task, Evaluator(task, kind), max_states);
}

std::string to_string(DeadEndClass c) {
    switch (c) {
    case DeadEndClass::Undirected:
        return "undirected";
    case DeadEndClass::Harmless:
        return "harmless";
    case DeadEndClass::Recognized:
        return "recognized";
    case DeadEndClass::Unrecognized:
        return "unrecognized";
    }
    return "?";
}

std::string to_string(PlateauClass c) {
    switch (c) {
    case PlateauClass::RecognizedDeadEnd:
        return "recognized-dead-end";
    case PlateauClass::LocalMinimum:
        return "local-minimum";
    case PlateauClass::Bench:
        return "bench";
    case PlateauClass::Contour:
        return "contour";
    case PlateauClass::GlobalMinimum:
        return "global-minimum";
    }
    return "?";
}

DeadEndClass dead_end_class(const StateSpace &space) {
    bool undirected = true;
    for (std::size_t s = 0; s < space.size() && undirected; ++s) {
        for (const auto &t : space.succ[s]) {
            const auto &back = space.succ[static_cast<std::size_t>(t.target)];
            if (std::none_of(back.begin(), back.end(),
                             [&](const Transition &b) { return b.target == static_cast<int>(s); })) {
                undirected = false;
                break;
            }
        }
    }
    if (undirected)
        return DeadEndClass::Undirected;
    bool harmless = true, recognized = true;
    for (std::size_t s = 0; s < space.size(); ++s) {
        if (space.gd[s].is_infinite()) {
            harmless = false;
            if (space.h[s].is_finite())
                recognized = false;
        }
    }
    if (harmless)
        return DeadEndClass::Harmless;
    return recognized ? DeadEndClass::Recognized : DeadEndClass::Unrecognized;
}

bool is_exit(const StateSpace &space, int s) {
    const HeuristicValue h = space.h[static_cast<std::size_t>(s)];
    const auto &out = space.succ[static_cast<std::size_t>(s)];
    return std::any_of(out.begin(), out.end(),
                       [&](const Transition &t) { return space.h[static_cast<std::size_t>(t.target)] < h; });
}

PlateauClass classify_plateau(const StateSpace &space, const Plateau &p) {
    if (p.level.is_infinite())
        return PlateauClass::RecognizedDeadEnd;
    if (p.level == 0)
        return PlateauClass::GlobalMinimum;
    bool all_exits = true;
    for (int s : p.members)
        if (!is_exit(space, s))
            all_exits = false;
    if (all_exits)
        return PlateauClass::Contour;
    std::vector<char> seen(space.size(), 0);
    std::vector<int> stack(p.members.begin(), p.members.end());
    for (int s : stack)
        seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (is_exit(space, v))
            return PlateauClass::Bench;
        for (const auto &t : space.succ[static_cast<std::size_t>(v)]) {
            auto w = static_cast<std::size_t>(t.target);
            if (!seen[w] && space.h[w] == p.level) {
                seen[w] = 1;
                stack.push_back(t.target);
            }
        }
    }
    return PlateauClass::LocalMinimum;
}

std::vector<Plateau> plateaus(const StateSpace &space) {
    auto comps = tarjan(space, [&](int u, int v) {
        return space.h[static_cast<std::size_t>(u)] == space.h[static_cast<std::size_t>(v)];
    });
    // Flat reachability of an exit, propagated over the condensation
    // (components arrive sinks first).
    std::vector<int> comp_of(space.size(), -1);
    std::vector<char> reaches_exit(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (int s : comps[c])
            comp_of[static_cast<std::size_t>(s)] = static_cast<int>(c);
        bool r = false;
        for (int s : comps[c]) {
            if (is_exit(space, s))
                r = true;
            for (const auto &t : space.succ[static_cast<std::size_t>(s)]) {
                auto w = static_cast<std::size_t>(t.target);
                if (space.h[w] == space.h[static_cast<std::size_t>(s)] && comp_of[w] != static_cast<int>(c) &&
                    reaches_exit[static_cast<std::size_t>(comp_of[w])])
                    r = true;
            }
        }
        reaches_exit[c] = r;
    }
    std::vector<Plateau> out;
    out.reserve(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        Plateau p;
        p.level = space.h[static_cast<std::size_t>(comps[c].front())];
        p.members = comps[c];
        if (p.level.is_infinite()) {
            p.cls = PlateauClass::RecognizedDeadEnd;
        } else if (p.level == 0) {
            p.cls = PlateauClass::GlobalMinimum;
        } else if (!reaches_exit[c]) {
            p.cls = PlateauClass::LocalMinimum;
        } else {
            bool all = std::all_of(p.members.begin(), p.members.end(), [&](int s) { return is_exit(space, s); });
            p.cls = all ? PlateauClass::Contour : PlateauClass::Bench;
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const Plateau &a, const Plateau &b) { return a.members.front() < b.members.front(); });
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].id = static_cast<int>(i);
    return out;
}

std::optional<HeuristicValue> exit_distance(const StateSpace &space, int s) {
    const HeuristicValue level = space.h[static_cast<std::size_t>(s)];
    if (level.is_infinite() || level == 0)
        return std::nullopt;
    std::vector<int> dist(space.size(), -1);
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (space.h[static_cast<std::size_t>(v)] == level && is_exit(space, v))
            return HeuristicValue(dist[static_cast<std::size_t>(v)]);
        for (const auto &t : space.succ[static_cast<std::size_t>(v)]) {
            auto w = static_cast<std::size_t>(t.target);
            if (dist[w] < 0) {
                dist[w] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(t.target);
            }
        }
    }
    return HeuristicValue::infinity();
}

std::size_t TopologyReport::count(PlateauClass c) const {
    return static_cast<std::size_t>(
        std::count_if(plateaus.begin(), plateaus.end(), [&](const Plateau &p) { return p.cls == c; }));
}

PlateauClass TopologyReport::class_of(int state) const {
    return plateaus[static_cast<std::size_t>(plateau_of[static_cast<std::size_t>(state)])].cls;
}

TopologyReport topology_report(const StateSpace &space) {
    TopologyReport r;
    r.dead_ends = dead_end_class(space);
    r.plateaus = plateaus(space);
    r.plateau_of.assign(space.size(), -1);
    for (const auto &p : r.plateaus)
        for (int s : p.members)
            r.plateau_of[static_cast<std::size_t>(s)] = p.id;
    r.ed = all_exit_distances(space);
    for (std::size_t s = 0; s < space.size(); ++s) {
        if (!r.ed[s])
            continue;
        const PlateauClass c = r.class_of(static_cast<int>(s));
        if (c == PlateauClass::LocalMinimum)
            r.mlmed = std::max(r.mlmed, *r.ed[s]);
        else if (c == PlateauClass::Bench)
            r.mbed = std::max(r.mbed, *r.ed[s]);
    }

    auto unrecognized = [&](std::size_t s) { return space.gd[s].is_infinite() && space.h[s].is_finite(); };
    std::vector<int> mark(space.size(), -1);
    for (std::size_t u = 0; u < space.size(); ++u) {
        if (!unrecognized(u))
            continue;
        int count = 0;
        std::vector<int> stack{static_cast<int>(u)};
        mark[u] = static_cast<int>(u);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (const auto &t : space.succ[static_cast<std::size_t>(v)]) {
                auto w = static_cast<std::size_t>(t.target);
                if (unrecognized(w) && mark[w] != static_cast<int>(u)) {
                    mark[w] = static_cast<int>(u);
                    stack.push_back(t.target);
                }
            }
        }
        r.unrecognized_depths[static_cast<int>(u)] = count;
    }
    return r;
}

void export_dot(const Task &task, const StateSpace &space, std::ostream &out) {
    out << "digraph statespace {\n  rankdir=TB;\n  node [shape=circle];\n";
    std::map<HeuristicValue, std::vector<int>> ranks;
    for (std::size_t s = 0; s < space.size(); ++s)
        ranks[space.h[s]].push_back(static_cast<int>(s));
    for (auto &[h, members] : ranks) {
        out << "  { rank=same;";
        for (int s : members) {
            out << " s" << s << " [label=\"" << s << "\\nh=" << h.str() << "\"";
            if (space.gd[static_cast<std::size_t>(s)] == 0)
                out << ", shape=doublecircle";
            out << "];";
        }
        out << " }\n";
    }
    for (std::size_t s = 0; s < space.size(); ++s)
        for (const auto &t : space.succ[s])
            out << "  s" << s << " -> s" << t.target << " [label=\"" << task.action(t.action).name << "\"];\n";
    out << "}\n";
}

void export_csv(const StateSpace &space, const TopologyReport &report, std::ostream &out) {
    out << "state_id,h,gd,plateau_id,plateau_class,exit_distance\n";
    for (std::size_t s = 0; s < space.size(); ++s) {
        out << s << ',' << space.h[s].str() << ',' << space.gd[s].str() << ',' << report.plateau_of[s] << ','
            << to_string(report.class_of(static_cast<int>(s))) << ',';
        if (report.ed[s])
            out << report.ed[s]->str();
        out << '\n';
    }
}

} // namespace relaxlab
