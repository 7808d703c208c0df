#include "doctest.h"
#include "helpers.hpp"
#include "random_tasks.hpp"

#include "relaxlab/domain_analysis.hpp"
#include "relaxlab/errors.hpp"

#include <chrono>

using namespace relaxlab;
using namespace relaxlab::test;

namespace {

int fact(const Task &t, const std::string &name) { return t.fact_id(name); }
int act(const Task &t, const std::string &name) { return t.action_id(name); }

// Children labels of a node, as names.
std::vector<std::string> kids(const Task &t, const Fgt &fgt, int n) {
    std::vector<std::string> out;
    for (int c : fgt.nodes[static_cast<std::size_t>(n)].children) {
        const FgtNode &node = fgt.nodes[static_cast<std::size_t>(c)];
        out.push_back(node.kind == FgtNode::Kind::Fact ? t.facts()[static_cast<std::size_t>(node.label)].name
                                                       : t.action(node.label).name);
    }
    return out;
}

int child(const Task &t, const Fgt &fgt, int n, const std::string &name) {
    for (int c : fgt.nodes[static_cast<std::size_t>(n)].children) {
        const FgtNode &node = fgt.nodes[static_cast<std::size_t>(c)];
        const std::string &label = node.kind == FgtNode::Kind::Fact
                                       ? t.facts()[static_cast<std::size_t>(node.label)].name
                                       : t.action(node.label).name;
        if (label == name)
            return c;
    }
    FAIL("no child " << name);
    return -1;
}

bool has_action_label(const Fgt &fgt, int a) {
    return std::any_of(fgt.nodes.begin(), fgt.nodes.end(),
                       [&](const FgtNode &n) { return n.kind == FgtNode::Kind::Action && n.label == a; });
}

} // namespace

TEST_SUITE("domain_analysis") {

TEST_CASE("mutexes on the transport example") {
    Task t = make("fig2");
    MutexTable mx = compute_mutexes(t);
    CHECK(mx.mutex(fact(t, "at(v,l1)"), fact(t, "at(v,l2)")));
    CHECK(mx.mutex(fact(t, "at(o1,l1)"), fact(t, "in(o1,v)")));
    CHECK_FALSE(mx.mutex(fact(t, "at(o1,l1)"), fact(t, "at(o2,l2)")));
    CHECK_FALSE(mx.mutex(fact(t, "in(o1,v)"), fact(t, "in(o2,v)")));
}

TEST_CASE("mutexes are sound against enumeration") {
    std::vector<Task> tasks;
    for (const char *spec : {"fig2", "fig4", "fig10", "gripper:balls=2", "hanoi:discs=3", "tireworld", "movie",
                             "blocksworld-arm:blocks=3", "logistics:cities=1,size=2,packages=2"})
        tasks.push_back(make(spec));
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        tasks.push_back(random_task(seed));
    for (const Task &t : tasks) {
        MutexTable mx = compute_mutexes(t);
        StateSpace sp = enumerate(t, HeuristicKind::GoalCount);
        for (const State &s : sp.states) {
            std::vector<int> f = s.to_vector();
            for (int p : f)
                for (int q : f)
                    CHECK_FALSE(mx.mutex(p, q));
        }
    }
}

TEST_CASE("action flags") {
    Task t = make("fig2");
    ActionFlags f = action_flags(t, compute_mutexes(t));
    const ActionFlag &mv = f[static_cast<std::size_t>(act(t, "move(l1,l2)"))];
    CHECK(mv.invertible);
    CHECK(mv.inverse == act(t, "move(l2,l1)"));
    CHECK(mv.at_least_invertible);
    CHECK(f[static_cast<std::size_t>(act(t, "load(o1,l1)"))].inverse == act(t, "unload(o1,l1)"));

    Task tsp = make("simple-tsp:locations=3");
    ActionFlags g = action_flags(tsp, compute_mutexes(tsp));
    for (const auto &a : tsp.actions()) {
        CHECK_FALSE(g[static_cast<std::size_t>(a.id)].invertible);
        CHECK(g[static_cast<std::size_t>(a.id)].at_least_invertible);
    }

    Task tw = make("tireworld");
    ActionFlags h = action_flags(tw, compute_mutexes(tw));
    int inflate = act(tw, "inflate(r1)");
    CHECK(h[static_cast<std::size_t>(inflate)].static_add_effects);
    CHECK_FALSE(h[static_cast<std::size_t>(inflate)].relevant_delete_effects);
    CHECK_FALSE(h[static_cast<std::size_t>(inflate)].at_least_invertible);

    for (const auto &flag : h)
        if (flag.invertible)
            CHECK(flag.at_least_invertible);
}

TEST_CASE("lemma and proposition checks") {
    CHECK(check_lemmas(make("gripper:balls=3")).lemma1);
    CHECK(check_lemmas(make("fig2")).lemma1);
    LemmaReport movie = check_lemmas(make("movie"));
    CHECK(movie.lemma2);
    CHECK_FALSE(movie.lemma1);
    CHECK(check_lemmas(make("tireworld")).lemma2);
    CHECK(check_lemmas(make("graph-search")).prop4);
    CHECK_FALSE(check_lemmas(make("fig10")).prop4);
    CHECK_FALSE(check_lemmas(make("simple-tsp:locations=3")).prop3);
}

TEST_CASE("lemma verdicts hold on enumerated spaces") {
    std::vector<Task> tasks;
    for (const char *spec : {"fig2", "gripper:balls=2", "tireworld", "movie", "simple-tsp:locations=4", "hanoi:discs=3",
                             "ferry:locations=2,cars=2", "fig10", "fig11"})
        tasks.push_back(make(spec));
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        tasks.push_back(random_task(seed));
    for (const Task &t : tasks) {
        LemmaReport r = check_lemmas(t);
        StateSpace sp = enumerate(t, HeuristicKind::GoalCount);
        DeadEndClass c = dead_end_class(sp);
        if (r.lemma1)
            CHECK(c == DeadEndClass::Undirected);
        if (r.lemma2 && sp.gd[0].is_finite())
            CHECK((c == DeadEndClass::Undirected || c == DeadEndClass::Harmless));
    }
}

TEST_CASE("fact generation tree of the road example") {
    Task t = make("fig10");
    Fgt fgt = build_fgt(t);
    REQUIRE_FALSE(fgt.truncated);
    CHECK(kids(t, fgt, 0) == std::vector<std::string>{"at(e)"});
    int at_e = child(t, fgt, 0, "at(e)");
    CHECK(kids(t, fgt, at_e) == std::vector<std::string>{"mv-pay(d,e)"});
    int pay = child(t, fgt, at_e, "mv-pay(d,e)");
    CHECK(kids(t, fgt, pay) == std::vector<std::string>{"at(d)", "eur"});
    int at_d = child(t, fgt, pay, "at(d)");
    CHECK(kids(t, fgt, at_d) == std::vector<std::string>{"mv(b,d)", "mv(c,d)"}); // rule 1 drops mv(e,d)
    int bd = child(t, fgt, at_d, "mv(b,d)");
    int at_b = child(t, fgt, bd, "at(b)");
    CHECK(kids(t, fgt, at_b) == std::vector<std::string>{"mv(a,b)"});
    int ab = child(t, fgt, at_b, "mv(a,b)");
    CHECK(kids(t, fgt, child(t, fgt, ab, "at(a)")).empty());
    int cd = child(t, fgt, at_d, "mv(c,d)");
    CHECK(kids(t, fgt, child(t, fgt, cd, "at(c)")).empty());
    int eur = child(t, fgt, pay, "eur");
    CHECK(kids(t, fgt, eur) == std::vector<std::string>{"mv-earn(d,c)"});
    CHECK(kids(t, fgt, child(t, fgt, eur, "mv-earn(d,c)")).empty()); // rule 2 drops at(d)
    CHECK(fgt.nodes.size() == 12);
}

TEST_CASE("fact generation tree edge cases") {
    Task f11 = make("fig11");
    CHECK_FALSE(has_action_label(build_fgt(f11), act(f11, "opp")));

    Task empty({"p"}, {ActionSpec{"a", {}, {0}, {}}}, {}, {});
    Fgt e = build_fgt(empty);
    CHECK(e.nodes.size() == 1);
    CHECK(e.root().children.empty());

    Task tsp = make("simple-tsp:locations=5");
    Fgt small = build_fgt(tsp, 20);
    CHECK(small.truncated);
    CHECK(small.nodes.size() == 20);
    CHECK_THROWS_AS(find_conflicts(small, tsp), Truncated);
    CHECK(interaction_free_verdict(tsp, 20) == InteractionVerdict::Unknown);
    CHECK(no_local_minima_criterion(tsp, 20) == LocalMinimaVerdict::Unknown);
}

TEST_CASE("conflicts in the road example") {
    Task t = make("fig10");
    auto conflicts = find_conflicts(build_fgt(t), t);
    REQUIRE(conflicts.size() == 1);
    const Conflict &c = conflicts.front();
    CHECK(c.deleter == act(t, "mv-earn(d,c)"));
    CHECK(c.victim == act(t, "mv-pay(d,e)"));
    CHECK(c.fact == fact(t, "at(d)"));
    // mv-earn(d,c) sits below the eur precondition of mv-pay(d,e), so by the
    // structural definitions this pair is an ancestor/descendant conflict.
    CHECK(c.kind == ConflictKind::AncestorDelete);
    CHECK(c.repairable == Tristate::Unknown);
    CHECK(interaction_free_verdict(t) == InteractionVerdict::Unknown);

    // Had the pair been allied, no single action could repair it.
    Conflict as_allied = c;
    as_allied.kind = ConflictKind::Allied;
    CHECK(repairable(as_allied, t) == Tristate::False);
}

TEST_CASE("simple-tsp conflicts are repairable") {
    Task t = make("simple-tsp:locations=3");
    auto conflicts = find_conflicts(build_fgt(t), t);
    REQUIRE_FALSE(conflicts.empty());
    bool seen = false;
    for (const auto &c : conflicts) {
        CHECK(c.kind == ConflictKind::Allied);
        CHECK(c.repairable == Tristate::True);
        if (c.deleter == act(t, "move(loc0,loc1)") && c.victim == act(t, "move(loc0,loc2)")) {
            seen = true;
            CHECK(c.fact == fact(t, "at(loc0)"));
            CHECK(c.repair_witness == act(t, "move(loc1,loc2)"));
        }
    }
    CHECK(seen);
    // Two locations give a single goal and no conflicts at all.
    CHECK(interaction_free_verdict(make("simple-tsp:locations=2")) == InteractionVerdict::HplusEqualsGd);
    for (int n = 3; n <= 8; ++n) {
        auto start = std::chrono::steady_clock::now();
        InteractionVerdict v = interaction_free_verdict(make("simple-tsp:locations=" + std::to_string(n)));
        CAPTURE(n);
        // At 8 locations the tree outgrows the default node cap.
        CHECK(v == (n <= 7 ? InteractionVerdict::HplusEqualsGdViaRepairs : InteractionVerdict::Unknown));
        CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
    }
}

TEST_CASE("graph search is interaction free") {
    Task t = make("graph-search");
    CHECK(find_conflicts(build_fgt(t), t).empty());
    CHECK(interaction_free_verdict(t) == InteractionVerdict::HplusEqualsGd);
}

TEST_CASE("interaction-free verdicts imply h+ = gd") {
    std::vector<Task> tasks;
    for (const char *spec : {"graph-search", "simple-tsp:locations=3", "simple-tsp:locations=4", "fig10", "fig2"})
        tasks.push_back(make(spec));
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        tasks.push_back(random_task(seed));
    int positive = 0;
    for (const Task &t : tasks) {
        if (interaction_free_verdict(t) == InteractionVerdict::Unknown)
            continue;
        ++positive;
        StateSpace sp = enumerate(t, HeuristicKind::HPlus);
        for (std::size_t s = 0; s < sp.size(); ++s)
            CHECK(sp.h[s] == sp.gd[s]);
    }
    CHECK(positive >= 3);
}

TEST_CASE("no-local-minima criterion") {
    auto start = std::chrono::steady_clock::now();
    CHECK(no_local_minima_criterion(make("movie")) == LocalMinimaVerdict::NoLocalMinima);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
    CHECK(no_local_minima_criterion(make("logistics:cities=1,size=2,trucks=1,airplanes=0,packages=1")) ==
          LocalMinimaVerdict::NoLocalMinima);

    Task f10 = make("fig10");
    CriterionResult r = no_local_minima_check(f10);
    CHECK(r.verdict == LocalMinimaVerdict::Unknown);
    // The only way back from e is the toll road, which needs the coin.
    CHECK(r.not_invertible == std::vector<int>{act(f10, "mv(e,d)")});
    CHECK(r.failing_actions == std::vector<int>{act(f10, "mv(b,a)"), act(f10, "mv(d,b)")});

    // The occurrence variant is stricter and also rejects mv(e,d).
    CriterionResult occ = no_local_minima_check(f10, 1'000'000, LeafTest::Occurrence);
    CHECK(occ.verdict == LocalMinimaVerdict::Unknown);
    CHECK(std::find(occ.failing_actions.begin(), occ.failing_actions.end(), act(f10, "mv(e,d)")) !=
          occ.failing_actions.end());

    CHECK(no_local_minima_criterion(make("tireworld")) == LocalMinimaVerdict::Unknown); // inflate
}

TEST_CASE("criterion verdicts are sound on enumerated spaces") {
    std::vector<Task> tasks;
    for (const char *spec : {"movie", "logistics:cities=1,size=2,airplanes=0,packages=1", "fig2", "gripper:balls=2",
                             "simple-tsp:locations=4", "graph-search", "hanoi:discs=3"})
        tasks.push_back(make(spec));
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        tasks.push_back(random_task(seed));
    int proved = 0;
    for (const Task &t : tasks)
        for (LeafTest test : {LeafTest::Leaf, LeafTest::Occurrence}) {
            if (no_local_minima_criterion(t, 1'000'000, test) != LocalMinimaVerdict::NoLocalMinima)
                continue;
            ++proved;
            TopologyReport r = topology_report(enumerate(t, HeuristicKind::HPlus));
            CHECK(r.count(PlateauClass::LocalMinimum) == 0);
        }
    CHECK(proved >= 4);
}

TEST_CASE("respected by the relaxation") {
    Task f2 = make("fig2");
    auto v2 = validate_respected(f2, enumerate(f2, HeuristicKind::HPlus));
    CHECK(v2.size() == 10);
    for (const auto &v : v2)
        CHECK(v.respected);

    Task f4 = make("fig4");
    auto v4 = validate_respected(f4, enumerate(f4, HeuristicKind::HPlus));
    const auto &putdown = v4[static_cast<std::size_t>(act(f4, "put-down(c)"))];
    CHECK_FALSE(putdown.respected);
    CHECK(std::find(putdown.counterexamples.begin(), putdown.counterexamples.end(), 0) !=
          putdown.counterexamples.end());

    Task tsp = make("simple-tsp:locations=3");
    for (const auto &v : validate_respected(tsp, enumerate(tsp, HeuristicKind::HPlus)))
        CHECK(v.respected);
}

TEST_CASE("respected actions without relevant deletes leave no local minima") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Task t = random_task(seed);
        StateSpace sp = enumerate(t, HeuristicKind::HPlus);
        auto respected = validate_respected(t, sp);
        ActionFlags flags = action_flags(t, compute_mutexes(t));
        bool premise = true;
        for (const auto &a : t.actions()) {
            const ActionFlag &f = flags[static_cast<std::size_t>(a.id)];
            premise = premise && respected[static_cast<std::size_t>(a.id)].respected &&
                      (f.at_least_invertible || !f.relevant_delete_effects);
        }
        if (premise)
            CHECK(topology_report(sp).count(PlateauClass::LocalMinimum) == 0);
    }
}

TEST_CASE("relaxed-plan relevant deletes") {
    Task f2 = make("fig2");
    State after_load = *apply(f2, f2.init(), act(f2, "load(o1,l1)"));
    CHECK_FALSE(validate_rp_irrelevant_deletes(f2, after_load, act(f2, "move(l1,l2)")));

    State at_l2 = state(f2, {"at(v,l2)", "in(o1,v)", "at(o2,l2)"});
    CHECK(validate_rp_irrelevant_deletes(f2, at_l2, act(f2, "unload(o1,l2)")));
    CHECK_THROWS_AS(validate_rp_irrelevant_deletes(f2, f2.init(), act(f2, "unload(o1,l2)")), PreconditionViolated);

    Task movie = make("movie");
    CHECK_FALSE(validate_rp_irrelevant_deletes(movie, movie.init(), act(movie, "rewind-movie")));
}

TEST_CASE("actions that can never apply do not block the lemmas") {
    // Grounding keeps e.g. move(d1,d1,d2), whose precondition on(d1,d1) is unreachable.
    Task t = make("hanoi:discs=3");
    ActionFlags flags = action_flags(t, compute_mutexes(t));
    CHECK_FALSE(flags[static_cast<std::size_t>(act(t, "move(d1,d1,d2)"))].applicable);
    const ActionFlag &real = flags[static_cast<std::size_t>(act(t, "move(d1,d2,p2)"))];
    CHECK(real.applicable);
    CHECK(real.inverse == act(t, "move(d1,p2,d2)"));
    LemmaReport l = check_lemmas(t, flags);
    CHECK(l.lemma1);
    CHECK(topology_report(enumerate(t, HeuristicKind::HPlus)).dead_ends == DeadEndClass::Undirected);
    CHECK(no_local_minima_check(t).not_invertible.empty());
}

}
