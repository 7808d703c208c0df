#include "doctest.h"
#include "helpers.hpp"
#include "random_tasks.hpp"

#include "relaxlab/errors.hpp"
#include "relaxlab/sampling.hpp"
#include "relaxlab/state_space.hpp"

#include <algorithm>
#include <sstream>

using namespace relaxlab;
using namespace relaxlab::test;

namespace {

std::vector<GeneratorSpec> specs(const std::string &domain, const std::string &param, int lo, int hi, int per_group,
                                 const std::string &extra = "") {
    std::vector<GeneratorSpec> out;
    for (int v = lo; v <= hi; ++v)
        for (int k = 0; k < per_group; ++k)
            out.push_back(parse_generator_spec(domain + ":" + param + "=" + std::to_string(v) + extra +
                                               ",seed=" + std::to_string(k + 1)));
    return out;
}

} // namespace

TEST_SUITE("sampling") {

TEST_CASE("walk factor parsing") {
    SampleConfig cfg;
    set_walk_factor(cfg, "3/2");
    CHECK(cfg.factor_num == 3);
    CHECK(cfg.factor_den == 2);
    set_walk_factor(cfg, "0.25");
    CHECK(cfg.factor_num == 25);
    CHECK(cfg.factor_den == 100);
    set_walk_factor(cfg, "0");
    CHECK(cfg.factor_num == 0);
    CHECK_THROWS_AS(set_walk_factor(cfg, "-1"), UsageError);
    CHECK_THROWS_AS(set_walk_factor(cfg, "x"), UsageError);
    CHECK_THROWS_AS(set_walk_factor(cfg, "1/0"), UsageError);
}

TEST_CASE("sampling basics") {
    Task g = make("gripper:balls=2");
    SampleConfig cfg;
    cfg.seed = 11;
    cfg.factor_num = 0;
    for (const State &s : sample_states(g, cfg))
        CHECK(s == g.init());

    cfg.factor_num = 2;
    auto a = sample_states(g, cfg), b = sample_states(g, cfg);
    CHECK(a.size() == 100);
    CHECK(a == b);
    StateSpace sp = enumerate(g, HeuristicKind::GoalCount);
    for (const State &s : a)
        CHECK(sp.find(s) >= 0);
    cfg.seed = 12;
    CHECK(sample_states(g, cfg) != a);

    // Every walk dead-ends after one step.
    Task stuck({"p", "q"}, {ActionSpec{"go", {0}, {1}, {0}}}, {0}, {1});
    cfg.samples_per_instance = 20;
    for (const State &s : sample_states(stuck, cfg, 10))
        CHECK((s == stuck.init() || s == state(stuck, {"q"})));
    cfg.samples_per_instance = 0;
    CHECK_THROWS_AS(sample_states(g, cfg), UsageError);
}

TEST_CASE("reference plan") {
    CHECK(reference_plan_length(make("gripper:balls=2")) == 5);
    Task none({"p", "g"}, {ActionSpec{"a", {}, {0}, {}}}, {}, {1});
    CHECK_THROWS_AS(reference_plan_length(none), NoReferencePlan);
    SampleConfig cfg;
    CHECK_THROWS_AS(sample_states(none, cfg), NoReferencePlan);
}

TEST_CASE("valleys and exit distances on the arm example") {
    Task t = make("fig4");
    Evaluator h(t, HeuristicKind::HPlus);
    CHECK(on_valley(t, t.init(), h));
    CHECK(sampled_exit_distance(t, t.init(), h) == 2);
    State goal = state(t, {"ontable(a)", "ontable(b)", "on(c,b)", "clear(a)", "clear(c)", "handempty"});
    REQUIRE(is_goal(t, goal));
    CHECK_FALSE(on_valley(t, goal, h));
    CHECK_THROWS_AS(sampled_exit_distance(t, goal, h), PreconditionViolated);
    CHECK_THROWS_AS(on_valley(t, t.init(), h, 1), ResourceExhausted);
}

TEST_CASE("sampled measures agree with the enumerated topology") {
    std::vector<Task> tasks;
    for (const char *spec : {"fig4", "fig2", "hanoi:discs=3", "bw-arm-stack:n=3", "tireworld"})
        tasks.push_back(make(spec));
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        tasks.push_back(random_task(seed));
    for (const Task &t : tasks) {
        for (HeuristicKind kind : {HeuristicKind::HPlus, HeuristicKind::HFF}) {
            Evaluator h(t, kind);
            StateSpace sp = enumerate(t, h);
            TopologyReport r = topology_report(sp);
            // Oracle: backward closure from the goals over non-increasing edges.
            std::vector<char> good(sp.size(), 0);
            for (bool changed = true; changed;) {
                changed = false;
                for (std::size_t v = 0; v < sp.size(); ++v) {
                    if (good[v])
                        continue;
                    bool ok = is_goal(t, sp.states[v]);
                    for (const auto &tr : sp.succ[v])
                        ok = ok || (good[static_cast<std::size_t>(tr.target)] &&
                                    sp.h[static_cast<std::size_t>(tr.target)] <= sp.h[v]);
                    if (ok) {
                        good[v] = 1;
                        changed = true;
                    }
                }
            }
            for (std::size_t s = 0; s < sp.size(); ++s) {
                const State &st = sp.states[s];
                CHECK(on_valley(t, st, h) == !good[s]);
                if (r.class_of(static_cast<int>(s)) == PlateauClass::LocalMinimum)
                    CHECK_FALSE(good[s]);
                if (r.ed[s])
                    CHECK(sampled_exit_distance(t, st, h) == *r.ed[s]);
            }
        }
    }
}

TEST_CASE("gripper samples have no valleys and exit distance at most one") {
    SampleConfig cfg;
    cfg.seed = 7;
    cfg.samples_per_instance = 30;
    for (HeuristicKind kind : {HeuristicKind::HFF, HeuristicKind::HPlus}) {
        cfg.heuristic = kind;
        SampleReport r = run_experiment(specs("gripper", "balls", 1, 4, 1), cfg);
        REQUIRE(r.groups.size() == 4);
        for (const auto &row : r.instances) {
            CHECK(row.flagged_errors.empty());
            CHECK(row.valley_pct == 0.0);
            CHECK(row.max_exit_distance <= 1);
        }
    }
}

TEST_CASE("experiment reports") {
    SampleConfig cfg;
    cfg.samples_per_instance = 10;
    cfg.seed = 3;
    auto input = specs("blocksworld-no-arm", "blocks", 2, 4, 2);
    SampleReport a = run_experiment(input, cfg), b = run_experiment(input, cfg);
    std::ostringstream ca, cb, ga;
    write_instances_csv(a, ca);
    write_instances_csv(b, cb);
    CHECK(ca.str() == cb.str());
    CHECK(ca.str().rfind("domain,params,instance_seed,valley_pct,max_exit_distance,samples,flagged_errors\n", 0) == 0);
    CHECK(a.instances.size() == 6);
    CHECK(a.groups.size() == 3);
    CHECK(a.groups[0].params == "blocks=2");
    write_groups_csv(a, ga);
    const std::string groups = ga.str();
    CHECK(std::count(groups.begin(), groups.end(), '\n') == 4);

    SampleReport empty = run_experiment({}, cfg);
    CHECK(empty.instances.empty());
    CHECK(empty.groups.empty());

    // Bad instances are flagged, not fatal.
    GeneratorSpec bad = parse_generator_spec("logistics:cities=2,airplanes=0");
    SampleReport flagged = run_experiment({bad, parse_generator_spec("gripper:balls=1")}, cfg);
    REQUIRE(flagged.instances.size() == 2);
    CHECK_FALSE(flagged.instances[0].flagged_errors.empty());
    CHECK(flagged.instances[1].flagged_errors.empty());
    CHECK(flagged.groups[0].instances == 0);
}

TEST_CASE("blocksworld-no-arm exit distance grows with size") {
    SampleConfig cfg;
    cfg.samples_per_instance = 40;
    cfg.seed = 5;
    SampleReport r = run_experiment(specs("blocksworld-no-arm", "blocks", 2, 6, 4), cfg);
    REQUIRE(r.groups.size() == 5);
    CHECK(r.groups.front().mean_max_exit_distance < r.groups.back().mean_max_exit_distance);
}

}
