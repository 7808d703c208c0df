// Acceptance criteria, one PASS/FAIL line each. Exit status 1 if any fails.
#include "random_tasks.hpp"

#include "relaxlab/domain_analysis.hpp"
#include "relaxlab/errors.hpp"
#include "relaxlab/generators.hpp"
#include "relaxlab/heuristics.hpp"
#include "relaxlab/sampling.hpp"
#include "relaxlab/search.hpp"
#include "relaxlab/state_space.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

using namespace relaxlab;
using relaxlab::test::random_task;
using relaxlab::test::RandomShape;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string &what) {
        if (!ok)
            failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A &actual, const B &expected, const std::string &what) {
        if (!(actual == expected)) {
            std::ostringstream s;
            s << what << ": got " << show(actual) << ", expected " << show(expected);
            failures.push_back(s.str());
        }
    }

private:
    static std::string show(const HeuristicValue &v) { return v.str(); }
    static std::string show(const std::string &v) { return v; }
    template <class T>
    static std::string show(const T &v) {
        std::ostringstream s;
        s << v;
        return s.str();
    }
};

Task make(const std::string &spec) { return generate(parse_generator_spec(spec)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

State after(const Task &t, const std::vector<std::string> &actions) {
    auto s = apply_sequence(t, t.init(), t.action_ids(actions));
    if (!s)
        throw PreconditionViolated("fixture sequence not applicable");
    return *s;
}

std::vector<int> random_walk(const Task &t, Rng &rng, int len) {
    std::vector<int> walk;
    State s = t.init();
    for (int i = 0; i < len; ++i) {
        std::vector<int> app;
        for (const auto &a : t.actions())
            if (a.pre_set.is_subset_of(s))
                app.push_back(a.id);
        if (app.empty())
            break;
        int a = app[static_cast<std::size_t>(rng.below(app.size()))];
        walk.push_back(a);
        s = *apply(t, s, a);
    }
    return walk;
}

std::string fgt_outline(const Task &t, const Fgt &f, int n = 0, int indent = 0) {
    const FgtNode &x = f.nodes[static_cast<std::size_t>(n)];
    std::string label = x.kind == FgtNode::Kind::Root   ? "root"
                        : x.kind == FgtNode::Kind::Fact ? t.facts()[static_cast<std::size_t>(x.label)].name
                                                        : t.action(x.label).name;
    std::string out = std::string(static_cast<std::size_t>(indent) * 2, ' ') + label + "\n";
    for (int c : x.children)
        out += fgt_outline(t, f, c, indent + 1);
    return out;
}

bool hplus_equals_gd(const StateSpace &sp) { return std::equal(sp.h.begin(), sp.h.end(), sp.gd.begin()); }

// --- criteria ----------------------------------------------------------------

void arm_fixture(Check &c) {
    Task t = make("fig4");
    Evaluator h(t, HeuristicKind::HPlus);
    c.equal(h(t.init()), HeuristicValue(3), "h+(init)");
    c.equal(h(after(t, {"put-down(c)"})), HeuristicValue(4), "h+ after put-down(c)");
    c.equal(h(after(t, {"stack(c,b)"})), HeuristicValue(3), "h+ after stack(c,b)");
    StateSpace sp = enumerate(t, h);
    TopologyReport r = topology_report(sp);
    c.expect(r.class_of(0) == PlateauClass::LocalMinimum, "init plateau is a local minimum");
    c.expect(r.ed[0] && *r.ed[0] == 2, "ed(init) = 2");
}

void transport_fixture(Check &c) {
    Task t = make("fig2");
    StateSpace sp = enumerate(t, HeuristicKind::HPlus);
    TopologyReport r = topology_report(sp);
    c.expect(r.dead_ends == DeadEndClass::Undirected, "undirected");
    c.equal(sp.h[0], HeuristicValue(5), "h+(init)");
    c.equal(sp.gd[0], HeuristicValue(6), "gd(init)");
    c.equal(r.mlmed, HeuristicValue(0), "mlmed");
    c.expect(r.mbed <= 1, "mbed <= 1");
    for (const auto &v : validate_respected(t, sp))
        c.expect(v.respected, t.action(v.action).name + " respected");
    SearchResult base = enforced_hill_climbing(t, Evaluator(t, HeuristicKind::HPlus));
    c.expect(base.outcome == SearchOutcome::Solved, "base plan");
    Rng rng(1);
    for (int k = 0; k < 20; ++k) {
        std::vector<int> trace = random_walk(t, rng, 8);
        State s = *apply_sequence(t, t.init(), trace);
        c.expect(validate_plan_from(t, s, invert_and_replay(t, trace, base.plan), false), "invert and replay");
    }
}

void two_achiever_fixture(Check &c) {
    Task t = make("fig6");
    c.equal(h_plus(t, t.init()), HeuristicValue(3), "h+");
    TieBreak adversarial = [](const Task &task, int, const std::vector<int> &cands) {
        for (int a : cands)
            if (task.action(a).name.find("pprime") != std::string::npos)
                return a;
        return cands.front();
    };
    c.equal(h_ff(t, t.init(), adversarial).value, HeuristicValue(4), "adversarial h^FF");
    FFResult d = h_ff(t, t.init());
    c.expect(d.value >= h_plus(t, t.init()), "h^FF >= h+");
    for (int i = 0; i < 5; ++i)
        c.expect(h_ff(t, t.init()).plan->actions == d.plan->actions, "deterministic extraction");
}

void road_fixture(Check &c) {
    Task t = make("fig10");
    c.equal(h_plus(t, t.init()), HeuristicValue(4), "h+ at a without coin");
    Fgt f = build_fgt(t);
    const std::string expected = "root\n"
                                 "  at(e)\n"
                                 "    mv-pay(d,e)\n"
                                 "      at(d)\n"
                                 "        mv(b,d)\n"
                                 "          at(b)\n"
                                 "            mv(a,b)\n"
                                 "              at(a)\n"
                                 "        mv(c,d)\n"
                                 "          at(c)\n"
                                 "      eur\n"
                                 "        mv-earn(d,c)\n";
    c.equal(fgt_outline(t, f), expected, "fact generation tree");
    auto conflicts = find_conflicts(f, t);
    c.equal(conflicts.size(), std::size_t(1), "conflict count");
    if (conflicts.size() == 1) {
        const Conflict &k = conflicts.front();
        c.equal(to_string(k.kind), std::string("allied"), "conflict kind");
        std::string pair = t.action(k.deleter).name + "/" + (k.victim < 0 ? "goal" : t.action(k.victim).name);
        c.equal(pair, std::string("mv-earn(d,c)/mv-pay(d,e)"), "conflict actions");
        c.expect(k.repairable != Tristate::True, "not repairable");
    }
    c.expect(no_local_minima_criterion(t) == LocalMinimaVerdict::Unknown, "criterion unknown");
}

void goal_order_fixture(Check &c) {
    Task t = make("fig11");
    StateSpace sp = enumerate(t, HeuristicKind::HPlus);
    c.equal(sp.gd[0], HeuristicValue(3), "gd(init)");
    c.expect(validate_plan(t, t.action_ids({"opp", "opg2", "opg1"}), false), "<opp, opg2, opg1> is a plan");
    Fgt f = build_fgt(t);
    int opp = t.action_id("opp");
    bool found = std::any_of(f.nodes.begin(), f.nodes.end(),
                             [&](const FgtNode &n) { return n.kind == FgtNode::Kind::Action && n.label == opp; });
    c.expect(!found, "no opp node");
}

void gripper(Check &c) {
    for (int balls = 1; balls <= 4; ++balls) {
        std::string spec = "gripper:balls=" + std::to_string(balls);
        Task t = make(spec);
        StateSpace sp = enumerate(t, HeuristicKind::HPlus);
        TopologyReport r = topology_report(sp);
        c.expect(r.dead_ends == DeadEndClass::Undirected, spec + " undirected");
        c.equal(r.mlmed, HeuristicValue(0), spec + " mlmed");
        c.expect(r.mbed <= 1, spec + " mbed <= 1");
        SearchResult e = enforced_hill_climbing(t, Evaluator(t, HeuristicKind::HPlus));
        c.expect(e.outcome == SearchOutcome::Solved && e.stats.max_depth <= 2, spec + " EHC depth <= 2");
    }
    std::vector<GeneratorSpec> specs;
    for (int balls = 1; balls <= 4; ++balls)
        for (int k = 1; k <= 3; ++k)
            specs.push_back(parse_generator_spec("gripper:balls=" + std::to_string(balls) + ",seed=" + std::to_string(k)));
    for (HeuristicKind kind : {HeuristicKind::HPlus, HeuristicKind::HFF}) {
        SampleConfig cfg;
        cfg.seed = 7;
        cfg.samples_per_instance = 50;
        cfg.heuristic = kind;
        for (const auto &row : run_experiment(specs, cfg).instances) {
            std::string id = to_string(kind) + " " + row.params + " seed " + std::to_string(row.instance_seed);
            c.expect(row.flagged_errors.empty(), id + " ran: " + row.flagged_errors);
            c.expect(row.valley_pct == 0, id + " no valleys");
            c.expect(row.max_exit_distance <= 1, id + " sampled exit distance <= 1");
        }
    }
}

void simple_tsp(Check &c) {
    for (int n = 2; n <= 6; ++n) {
        std::string spec = "simple-tsp:locations=" + std::to_string(n);
        Task t = make(spec);
        StateSpace sp = enumerate(t, HeuristicKind::HPlus);
        c.expect(hplus_equals_gd(sp), spec + " h+ = gd everywhere");
        c.equal(topology_report(sp).mbed, HeuristicValue(0), spec + " mbed");
        c.equal(to_string(interaction_free_verdict(t)), std::string("hplus-equals-gd-via-repairs"),
                spec + " interaction verdict");
    }
    for (int n = 2; n <= 8; ++n) {
        Task t = make("simple-tsp:locations=" + std::to_string(n));
        auto t0 = std::chrono::steady_clock::now();
        interaction_free_verdict(t);
        double secs = seconds_since(t0);
        c.expect(secs < 5.0, "analysis of " + std::to_string(n) + " locations took " + std::to_string(secs) + " s");
    }
}

void movie(Check &c) {
    Task t = make("movie");
    auto t0 = std::chrono::steady_clock::now();
    LocalMinimaVerdict v = no_local_minima_criterion(t);
    double secs = seconds_since(t0);
    c.expect(v == LocalMinimaVerdict::NoLocalMinima, "criterion proves no local minima");
    c.expect(secs < 1.0, "criterion took " + std::to_string(secs) + " s");
    TopologyReport r = topology_report(enumerate(t, HeuristicKind::HPlus));
    c.equal(r.mlmed, HeuristicValue(0), "mlmed");
    c.expect(r.mbed <= 1, "mbed <= 1");
}

// A disc is in its final position when its goal support holds and that
// support is a peg or a disc in its final position.
int discs_out_of_place(const Task &t, const State &s) {
    std::map<std::string, std::string> target;
    std::map<std::string, int> goal_fact;
    for (int g : t.goal()) {
        const std::string &name = t.facts()[static_cast<std::size_t>(g)].name;
        auto open = name.find('('), comma = name.find(','), close = name.find(')');
        std::string disc = name.substr(open + 1, comma - open - 1);
        target[disc] = name.substr(comma + 1, close - comma - 1);
        goal_fact[disc] = g;
    }
    std::function<bool(const std::string &)> placed = [&](const std::string &d) {
        if (!s.contains(goal_fact.at(d)))
            return false;
        const std::string &below = target.at(d);
        return !target.contains(below) || placed(below);
    };
    int out = 0;
    for (const auto &[d, _] : target)
        out += placed(d) ? 0 : 1;
    return out;
}

void hanoi(Check &c) {
    for (int n : {3, 4}) {
        std::string spec = "hanoi:discs=" + std::to_string(n);
        Task t = make(spec);
        StateSpace sp = enumerate(t, HeuristicKind::HPlus);
        bool all = true;
        for (std::size_t i = 0; i < sp.size(); ++i)
            all = all && sp.h[i] == discs_out_of_place(t, sp.states[i]);
        c.expect(all, spec + " h+ = discs not in final position");
        TopologyReport r = topology_report(sp);
        c.equal(r.ed[0] ? *r.ed[0] : HeuristicValue::infinity(), HeuristicValue(1 << (n - 1)), spec + " ed(init)");
        c.equal(r.mlmed, HeuristicValue(0), spec + " mlmed");
    }
}

void tireworld(Check &c) {
    Task t = make("tireworld");
    TopologyReport r = topology_report(enumerate(t, HeuristicKind::HPlus));
    c.equal(r.mlmed, HeuristicValue(0), "mlmed");
    c.expect(r.mbed <= 6, "mbed <= 6");
    c.expect(check_lemmas(t).lemma2, "at-least-invertible lemma applies");
    SearchResult base = enforced_hill_climbing(t, Evaluator(t, HeuristicKind::HFF));
    c.expect(base.outcome == SearchOutcome::Solved, "base plan");
    int inflate = t.action_id("inflate(r1)");
    std::vector<std::vector<int>> traces{
        t.action_ids({"open(boot)", "fetch(pump,boot)", "fetch(r1,boot)", "inflate(r1)", "fetch(wrench,boot)"})};
    Rng rng(5);
    while (traces.size() < 20) {
        std::vector<int> w = random_walk(t, rng, 25);
        if (std::find(w.begin(), w.end(), inflate) != w.end())
            traces.push_back(std::move(w));
    }
    for (const auto &trace : traces) {
        State s = *apply_sequence(t, t.init(), trace);
        c.expect(validate_plan_from(t, s, invert_and_replay(t, trace, base.plan), false),
                 "invert and replay after inflate");
    }
}

void logistics(Check &c) {
    Task small = make("logistics:cities=1,size=2,trucks=1,airplanes=0,packages=1");
    c.expect(no_local_minima_criterion(small) == LocalMinimaVerdict::NoLocalMinima, "criterion on 1/2/1/1");
    for (int seed = 1; seed <= 3; ++seed) {
        std::string spec = "logistics:cities=2,size=2,trucks=1,airplanes=1,packages=2,seed=" + std::to_string(seed);
        TopologyReport r = topology_report(enumerate(make(spec), HeuristicKind::HPlus));
        c.expect(r.dead_ends == DeadEndClass::Undirected, spec + " undirected");
        c.equal(r.mlmed, HeuristicValue(0), spec + " mlmed");
        c.expect(r.mbed <= 1, spec + " mbed <= 1");
    }
}

void blocksworld(Check &c) {
    HeuristicValue last = -1;
    for (int n = 3; n <= 5; ++n) {
        std::string spec = "bw-arm-stack:n=" + std::to_string(n);
        StateSpace sp = enumerate(make(spec), HeuristicKind::HPlus);
        TopologyReport r = topology_report(sp);
        c.expect(r.class_of(0) == PlateauClass::LocalMinimum, spec + " init on a local minimum");
        HeuristicValue ed = r.ed[0] ? *r.ed[0] : HeuristicValue::infinity();
        c.expect(ed.is_finite() && ed > last, spec + " exit distance " + ed.str() + " increases");
        last = ed;
    }
    StateSpace sp = enumerate(make("bw-no-arm-stack:n=4"), HeuristicKind::HPlus);
    TopologyReport r = topology_report(sp);
    c.equal(r.mlmed, HeuristicValue(0), "no-arm mlmed");
    c.equal(sp.h[0], HeuristicValue(4), "no-arm h+(init)");
    c.equal(r.ed[0] ? *r.ed[0] : HeuristicValue::infinity(), HeuristicValue(4), "no-arm ed(init)");
}

void properties(Check &c) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Task t = random_task(seed);
        std::string id = "task " + std::to_string(seed);
        StateSpace sp = enumerate(t, HeuristicKind::HPlus);
        for (std::size_t i = 0; i < sp.size(); ++i) {
            const State &s = sp.states[i];
            c.expect(sp.h[i] == h_plus_oracle(t, s), id + " h+ = oracle");
            FFResult ff = h_ff(t, s);
            c.expect(ff.value >= sp.h[i], id + " h^FF >= h+");
            c.expect(ff.value.is_infinite() == sp.h[i].is_infinite(), id + " h^FF infinite iff h+ infinite");
            if (ff.plan)
                c.expect(validate_plan_from(t, s, ff.plan->actions, true) &&
                             HeuristicValue(static_cast<std::int64_t>(ff.plan->length())) == ff.value,
                         id + " relaxed plan valid");
        }
        TopologyReport r = topology_report(sp);
        if (r.dead_ends == DeadEndClass::Unrecognized)
            c.expect(r.count(PlateauClass::LocalMinimum) > 0 && r.mlmed.is_infinite(), id + " proposition 1");
        MutexTable mx = compute_mutexes(t);
        for (const State &s : sp.states) {
            std::vector<int> f = s.to_vector();
            for (int p : f)
                for (int q : f)
                    if (mx.mutex(p, q))
                        c.expect(false, id + " mutex holds in a reachable state");
        }
        for (RandomShape shape : {RandomShape::SingleAchiever, RandomShape::SinglePrecondition}) {
            Task u = random_task(seed, shape);
            StateSpace su = enumerate(u, HeuristicKind::HPlus);
            for (std::size_t i = 0; i < su.size(); ++i)
                c.expect(h_ff(u, su.states[i]).value == su.h[i], id + " restricted syntax h^FF = h+");
        }
    }
}

void lemma_checks(Check &c) {
    std::vector<std::pair<std::string, Task>> tasks;
    for (const char *spec : {"fig2", "fig4", "fig10", "fig11", "movie", "tireworld", "gripper:balls=3",
                             "simple-tsp:locations=4", "hanoi:discs=3", "bw-arm-stack:n=3", "bw-no-arm-stack:n=3",
                             "logistics:cities=1,size=2,trucks=1,airplanes=0,packages=1", "ferry:locations=2,cars=2"})
        tasks.emplace_back(spec, make(spec));
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        tasks.emplace_back("task " + std::to_string(seed), random_task(seed));
    for (const auto &[id, t] : tasks) {
        StateSpace sp = enumerate(t, HeuristicKind::HPlus);
        TopologyReport r = topology_report(sp);
        LemmaReport l = check_lemmas(t);
        if (l.lemma1)
            c.expect(r.dead_ends == DeadEndClass::Undirected, id + " all-invertible implies undirected");
        // The at-least-invertible lemma is stated for solvable tasks.
        if (l.lemma2 && sp.gd[0].is_finite())
            c.expect(r.dead_ends <= DeadEndClass::Harmless, id + " at-least-invertible implies harmless");
        if (no_local_minima_criterion(t) == LocalMinimaVerdict::NoLocalMinima)
            c.expect(r.count(PlateauClass::LocalMinimum) == 0, id + " criterion implies no local minima");
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, void (*)(Check &)>> criteria{
        {"arm fixture: h+ values, local minimum, ed(init)=2", arm_fixture},
        {"transport fixture: undirected, h+=5, gd=6, respected, invert and replay", transport_fixture},
        {"two-achiever fixture: h+=3, adversarial h^FF=4, deterministic extraction", two_achiever_fixture},
        {"road fixture: h+=4, tree, one allied conflict, criterion unknown", road_fixture},
        {"goal-order fixture: gd=3, no opp node", goal_order_fixture},
        {"gripper 1..4: topology, EHC depth, sampled valleys", gripper},
        {"simple-tsp 2..6: h+=gd, mbed=0, verdict via repairs, runtime", simple_tsp},
        {"movie: criterion, mlmed=0, mbed<=1", movie},
        {"hanoi 3..4: h+ formula, ed(init)=2^(n-1), mlmed=0", hanoi},
        {"tireworld: mlmed=0, mbed<=6, lemma, invert and replay", tireworld},
        {"logistics: criterion on the small instance, topology on 2 cities", logistics},
        {"blocksworld stacks: arm exit distance grows, no-arm values", blocksworld},
        {"property suites on 200 random tasks", properties},
        {"static verdicts agree with enumeration", lemma_checks},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception &e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("%s %2zu %s (%.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds_since(t0));
        for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k)
            std::printf("       - %s\n", c.failures[k].c_str());
        if (c.failures.size() > 5)
            std::printf("       - ... %zu more\n", c.failures.size() - 5);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
