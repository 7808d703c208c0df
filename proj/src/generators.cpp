#include "relaxlab/generators.hpp"

#include "relaxlab/errors.hpp"
#include "relaxlab/rng.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace relaxlab {

namespace {

const char *kGripper = R"(
(define (domain gripper)
  (:requirements :strips :typing :equality)
  (:types room ball gripper)
  (:predicates (at-robby ?r - room) (at ?b - ball ?r - room)
               (free ?g - gripper) (carry ?b - ball ?g - gripper))
  (:action move
    :parameters (?from ?to - room)
    :precondition (and (at-robby ?from) (not (= ?from ?to)))
    :effect (and (at-robby ?to) (not (at-robby ?from))))
  (:action pick
    :parameters (?b - ball ?r - room ?g - gripper)
    :precondition (and (at ?b ?r) (at-robby ?r) (free ?g))
    :effect (and (carry ?b ?g) (not (at ?b ?r)) (not (free ?g))))
  (:action drop
    :parameters (?b - ball ?r - room ?g - gripper)
    :precondition (and (carry ?b ?g) (at-robby ?r))
    :effect (and (at ?b ?r) (free ?g) (not (carry ?b ?g)))))
)";

const char *kLogistics = R"(
(define (domain logistics)
  (:requirements :strips :typing :equality)
  (:types truck airplane - vehicle
          package vehicle - physobj
          airport - location
          location city)
  (:predicates (in-city ?l - location ?c - city) (at ?o - physobj ?l - location)
               (in ?p - package ?v - vehicle))
  (:action load-truck
    :parameters (?p - package ?t - truck ?l - location)
    :precondition (and (at ?t ?l) (at ?p ?l))
    :effect (and (in ?p ?t) (not (at ?p ?l))))
  (:action load-airplane
    :parameters (?p - package ?a - airplane ?l - airport)
    :precondition (and (at ?a ?l) (at ?p ?l))
    :effect (and (in ?p ?a) (not (at ?p ?l))))
  (:action unload-truck
    :parameters (?p - package ?t - truck ?l - location)
    :precondition (and (at ?t ?l) (in ?p ?t))
    :effect (and (at ?p ?l) (not (in ?p ?t))))
  (:action unload-airplane
    :parameters (?p - package ?a - airplane ?l - airport)
    :precondition (and (at ?a ?l) (in ?p ?a))
    :effect (and (at ?p ?l) (not (in ?p ?a))))
  (:action drive-truck
    :parameters (?t - truck ?from ?to - location ?c - city)
    :precondition (and (at ?t ?from) (in-city ?from ?c) (in-city ?to ?c) (not (= ?from ?to)))
    :effect (and (at ?t ?to) (not (at ?t ?from))))
  (:action fly-airplane
    :parameters (?a - airplane ?from ?to - airport)
    :precondition (and (at ?a ?from) (not (= ?from ?to)))
    :effect (and (at ?a ?to) (not (at ?a ?from)))))
)";

const char *kFerry = R"(
(define (domain ferry)
  (:requirements :strips :typing :equality)
  (:types car location)
  (:predicates (at-ferry ?l - location) (at ?c - car ?l - location)
               (empty-ferry) (on ?c - car))
  (:action sail
    :parameters (?from ?to - location)
    :precondition (and (at-ferry ?from) (not (= ?from ?to)))
    :effect (and (at-ferry ?to) (not (at-ferry ?from))))
  (:action board
    :parameters (?c - car ?l - location)
    :precondition (and (at ?c ?l) (at-ferry ?l) (empty-ferry))
    :effect (and (on ?c) (not (at ?c ?l)) (not (empty-ferry))))
  (:action debark
    :parameters (?c - car ?l - location)
    :precondition (and (on ?c) (at-ferry ?l))
    :effect (and (at ?c ?l) (empty-ferry) (not (on ?c)))))
)";

const char *kSimpleTsp = R"(
(define (domain simple-tsp)
  (:requirements :strips :typing :equality)
  (:types location)
  (:predicates (at ?l - location) (visited ?l - location))
  (:action move
    :parameters (?from ?to - location)
    :precondition (and (at ?from) (not (= ?from ?to)))
    :effect (and (at ?to) (visited ?to) (not (at ?from)))))
)";

const char *kMovie = R"(
(define (domain movie)
  (:requirements :strips :typing)
  (:types chips dip pop cheese crackers)
  (:predicates (movie-rewound) (counter-at-zero)
               (have-chips) (have-dip) (have-pop) (have-cheese) (have-crackers))
  (:action rewind-movie
    :parameters ()
    :effect (and (movie-rewound) (not (counter-at-zero))))
  (:action reset-counter
    :parameters ()
    :effect (counter-at-zero))
  (:action get-chips :parameters (?x - chips) :effect (have-chips))
  (:action get-dip :parameters (?x - dip) :effect (have-dip))
  (:action get-pop :parameters (?x - pop) :effect (have-pop))
  (:action get-cheese :parameters (?x - cheese) :effect (have-cheese))
  (:action get-crackers :parameters (?x - crackers) :effect (have-crackers)))
)";

const char *kHanoi = R"(
(define (domain hanoi)
  (:requirements :strips :equality)
  (:predicates (on ?x ?y) (clear ?x) (smaller ?x ?y))
  (:action move
    :parameters (?x ?y ?z)
    :precondition (and (on ?x ?y) (clear ?x) (clear ?z) (smaller ?x ?z) (not (= ?y ?z)))
    :effect (and (on ?x ?z) (clear ?y) (not (on ?x ?y)) (not (clear ?z)))))
)";

const char *kTireworld = R"(
(define (domain tireworld)
  (:requirements :strips :typing)
  (:types tool wheel nut - obj
          obj container hub - object)
  (:constants wrench jack pump - tool)
  (:predicates (open ?x - container) (closed ?x - container) (have ?x - obj)
               (in ?x - obj ?y - container) (loose ?x - nut ?y - hub) (tight ?x - nut ?y - hub)
               (unlocked ?x - container) (on-ground ?x - hub) (not-on-ground ?x - hub)
               (inflated ?x - wheel) (not-inflated ?x - wheel) (fastened ?x - hub)
               (unfastened ?x - hub) (free ?x - hub) (on ?x - wheel ?y - hub) (intact ?x - wheel))
  (:action open
    :parameters (?x - container)
    :precondition (and (unlocked ?x) (closed ?x))
    :effect (and (open ?x) (not (closed ?x))))
  (:action close
    :parameters (?x - container)
    :precondition (open ?x)
    :effect (and (closed ?x) (not (open ?x))))
  (:action fetch
    :parameters (?x - obj ?y - container)
    :precondition (and (in ?x ?y) (open ?y))
    :effect (and (have ?x) (not (in ?x ?y))))
  (:action put-away
    :parameters (?x - obj ?y - container)
    :precondition (and (have ?x) (open ?y))
    :effect (and (in ?x ?y) (not (have ?x))))
  (:action loosen
    :parameters (?x - nut ?y - hub)
    :precondition (and (have wrench) (tight ?x ?y) (on-ground ?y))
    :effect (and (loose ?x ?y) (not (tight ?x ?y))))
  (:action tighten
    :parameters (?x - nut ?y - hub)
    :precondition (and (have wrench) (loose ?x ?y) (on-ground ?y))
    :effect (and (tight ?x ?y) (not (loose ?x ?y))))
  (:action jack-up
    :parameters (?y - hub)
    :precondition (and (on-ground ?y) (have jack))
    :effect (and (not-on-ground ?y) (not (on-ground ?y)) (not (have jack))))
  (:action jack-down
    :parameters (?x - hub)
    :precondition (not-on-ground ?x)
    :effect (and (on-ground ?x) (have jack) (not (not-on-ground ?x))))
  (:action undo
    :parameters (?x - nut ?y - hub)
    :precondition (and (not-on-ground ?y) (fastened ?y) (have wrench) (loose ?x ?y))
    :effect (and (have ?x) (unfastened ?y) (not (fastened ?y)) (not (loose ?x ?y))))
  (:action do-up
    :parameters (?x - nut ?y - hub)
    :precondition (and (have wrench) (unfastened ?y) (not-on-ground ?y) (have ?x))
    :effect (and (loose ?x ?y) (fastened ?y) (not (unfastened ?y)) (not (have ?x))))
  (:action remove-wheel
    :parameters (?x - wheel ?y - hub)
    :precondition (and (not-on-ground ?y) (on ?x ?y) (unfastened ?y))
    :effect (and (have ?x) (free ?y) (not (on ?x ?y))))
  (:action put-on-wheel
    :parameters (?x - wheel ?y - hub)
    :precondition (and (have ?x) (free ?y) (unfastened ?y) (not-on-ground ?y))
    :effect (and (on ?x ?y) (not (have ?x)) (not (free ?y))))
  (:action inflate
    :parameters (?x - wheel)
    :precondition (and (have pump) (not-inflated ?x) (intact ?x))
    :effect (and (inflated ?x) (not (not-inflated ?x)))))
)";

const char *kBlocksArm = R"(
(define (domain blocksworld-arm)
  (:requirements :strips :typing :equality)
  (:types block)
  (:predicates (on ?x ?y - block) (ontable ?x - block) (clear ?x - block)
               (handempty) (holding ?x - block))
  (:action pick-up
    :parameters (?x - block)
    :precondition (and (clear ?x) (ontable ?x) (handempty))
    :effect (and (holding ?x) (not (ontable ?x)) (not (clear ?x)) (not (handempty))))
  (:action put-down
    :parameters (?x - block)
    :precondition (holding ?x)
    :effect (and (ontable ?x) (clear ?x) (handempty) (not (holding ?x))))
  (:action stack
    :parameters (?x ?y - block)
    :precondition (and (holding ?x) (clear ?y) (not (= ?x ?y)))
    :effect (and (on ?x ?y) (clear ?x) (handempty) (not (holding ?x)) (not (clear ?y))))
  (:action unstack
    :parameters (?x ?y - block)
    :precondition (and (on ?x ?y) (clear ?x) (handempty) (not (= ?x ?y)))
    :effect (and (holding ?x) (clear ?y) (not (on ?x ?y)) (not (clear ?x)) (not (handempty)))))
)";

const char *kBlocksNoArm = R"(
(define (domain blocksworld-no-arm)
  (:requirements :strips :typing :equality)
  (:types block)
  (:predicates (on ?x ?y - block) (ontable ?x - block) (clear ?x - block))
  (:action move-b-to-b
    :parameters (?x ?y ?z - block)
    :precondition (and (on ?x ?y) (clear ?x) (clear ?z) (not (= ?x ?z)) (not (= ?y ?z)))
    :effect (and (on ?x ?z) (clear ?y) (not (on ?x ?y)) (not (clear ?z))))
  (:action move-t-to-b
    :parameters (?x ?z - block)
    :precondition (and (ontable ?x) (clear ?x) (clear ?z) (not (= ?x ?z)))
    :effect (and (on ?x ?z) (not (ontable ?x)) (not (clear ?z))))
  (:action move-b-to-t
    :parameters (?x ?y - block)
    :precondition (and (on ?x ?y) (clear ?x))
    :effect (and (ontable ?x) (clear ?y) (not (on ?x ?y)))))
)";

const char *kTransport = R"(
(define (domain transport)
  (:requirements :strips :typing :equality)
  (:types vehicle obj - locatable
          location)
  (:constants v - vehicle)
  (:predicates (at ?x - locatable ?l - location) (in ?o - obj ?v - vehicle))
  (:action move
    :parameters (?l ?m - location)
    :precondition (and (at v ?l) (not (= ?l ?m)))
    :effect (and (at v ?m) (not (at v ?l))))
  (:action load
    :parameters (?o - obj ?l - location)
    :precondition (and (at v ?l) (at ?o ?l))
    :effect (and (in ?o v) (not (at ?o ?l))))
  (:action unload
    :parameters (?o - obj ?l - location)
    :precondition (and (at v ?l) (in ?o v))
    :effect (and (at ?o ?l) (not (in ?o v)))))
)";

const char *kTransportProblem = R"(
(define (problem transport-fig2)
  (:domain transport)
  (:objects l1 l2 - location o1 o2 - obj)
  (:init (at v l1) (at o1 l1) (at o2 l2))
  (:goal (and (at o1 l2) (at o2 l1))))
)";

const char *kFig4Problem = R"(
(define (problem bw-arm-fig4)
  (:domain blocksworld-arm)
  (:objects a b c - block)
  (:init (on b a) (ontable a) (clear b) (holding c))
  (:goal (and (ontable b) (on c b))))
)";

const char *kFig6 = R"(
(define (domain ff-choice)
  (:requirements :strips)
  (:predicates (g1) (g2) (p) (pprime))
  (:action op-g1 :parameters () :precondition (p) :effect (g1))
  (:action op-g2-p :parameters () :precondition (p) :effect (g2))
  (:action op-g2-pprime :parameters () :precondition (pprime) :effect (g2))
  (:action op-p :parameters () :effect (p))
  (:action op-pprime :parameters () :effect (pprime)))
)";

const char *kFig6Problem = R"(
(define (problem ff-choice-1)
  (:domain ff-choice)
  (:init)
  (:goal (and (g1) (g2))))
)";

// Roads are bi-directional; the d->c edge earns the coin that the d->e edge needs.
const char *kRoads = R"(
(define (domain roads)
  (:requirements :strips :typing)
  (:types place)
  (:predicates (at ?x - place) (road ?x ?y - place) (bank ?x ?y - place)
               (toll ?x ?y - place) (eur))
  (:action mv
    :parameters (?x ?y - place)
    :precondition (and (at ?x) (road ?x ?y))
    :effect (and (at ?y) (not (at ?x))))
  (:action mv-earn
    :parameters (?x ?y - place)
    :precondition (and (at ?x) (bank ?x ?y))
    :effect (and (at ?y) (eur) (not (at ?x))))
  (:action mv-pay
    :parameters (?x ?y - place)
    :precondition (and (at ?x) (eur) (toll ?x ?y))
    :effect (and (at ?y) (not (at ?x)))))
)";

const char *kFig10Problem = R"(
(define (problem roads-fig10)
  (:domain roads)
  (:objects a b c d e - place)
  (:init (at a)
         (road a b) (road b a) (road b d) (road d b) (road c d) (road e d)
         (bank d c) (toll d e))
  (:goal (at e)))
)";

const char *kGraphSearchProblem = R"(
(define (problem roads-plain)
  (:domain roads)
  (:objects a b c d e - place)
  (:init (at a)
         (road a b) (road b a) (road b d) (road d b) (road c d) (road d c)
         (road d e) (road e d))
  (:goal (at e)))
)";

const char *kFig11 = R"(
(define (domain regrow)
  (:requirements :strips)
  (:predicates (g1) (g2) (p))
  (:action opp :parameters () :precondition (g1) :effect (p))
  (:action opg2 :parameters () :effect (and (g2) (not (g1))))
  (:action opg1 :parameters () :precondition (p) :effect (g1)))
)";

const char *kFig11Problem = R"(
(define (problem regrow-1)
  (:domain regrow)
  (:init (g1))
  (:goal (and (g1) (g2))))
)";

struct Problem {
    std::string name;
    std::string domain;
    std::vector<std::pair<std::string, std::vector<std::string>>> objects; // type -> names
    std::vector<std::string> init;
    std::vector<std::string> goal;

    std::string text() const {
        std::ostringstream out;
        out << "(define (problem " << name << ")\n  (:domain " << domain << ")\n  (:objects";
        for (auto &[type, names] : objects) {
            if (names.empty())
                continue;
            for (auto &n : names)
                out << ' ' << n;
            out << " - " << type;
        }
        out << ")\n  (:init";
        for (auto &a : init)
            out << "\n    " << a;
        out << ")\n  (:goal (and";
        for (auto &a : goal)
            out << "\n    " << a;
        out << ")))\n";
        return out.str();
    }
};

std::vector<std::string> numbered(const std::string &prefix, int n, int first = 1) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(first + i));
    return out;
}

std::string atom(const std::string &pred, std::initializer_list<std::string> args) {
    std::string s = "(" + pred;
    for (auto &a : args)
        s += " " + a;
    return s + ")";
}

// below[i] = index of the block under block i, or -1 for the table.
// Distribution: shuffle the blocks, then walk the order and put each block on
// the table or on the previously placed block with probability 1/2 each.
std::vector<int> random_towers(Rng &rng, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
    std::vector<int> below(static_cast<std::size_t>(n), -1);
    for (int k = 1; k < n; ++k)
        if (rng.coin())
            below[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = order[static_cast<std::size_t>(k - 1)];
    return below;
}

void tower_atoms(const std::vector<std::string> &blocks, const std::vector<int> &below,
                 std::vector<std::string> &out, bool with_table_and_clear) {
    std::vector<bool> covered(blocks.size(), false);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (below[i] >= 0) {
            out.push_back(atom("on", {blocks[i], blocks[static_cast<std::size_t>(below[i])]}));
            covered[static_cast<std::size_t>(below[i])] = true;
        } else if (with_table_and_clear) {
            out.push_back(atom("ontable", {blocks[i]}));
        }
    }
    if (with_table_and_clear)
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (!covered[i])
                out.push_back(atom("clear", {blocks[i]}));
}

// Stack b1 on b2 ... on bn on the table with b{n+1} beside it; goal is the
// same stack on top of b{n+1}.
Problem stack_problem(const std::string &domain, int n, bool arm) {
    Problem p{"stack-" + std::to_string(n), domain, {}, {}, {}};
    auto blocks = numbered("b", n + 1);
    p.objects.push_back({"block", blocks});
    for (int i = 0; i + 1 < n; ++i)
        p.init.push_back(atom("on", {blocks[static_cast<std::size_t>(i)], blocks[static_cast<std::size_t>(i + 1)]}));
    p.init.push_back(atom("ontable", {blocks[static_cast<std::size_t>(n - 1)]}));
    p.init.push_back(atom("ontable", {blocks[static_cast<std::size_t>(n)]}));
    p.init.push_back(atom("clear", {blocks[0]}));
    p.init.push_back(atom("clear", {blocks[static_cast<std::size_t>(n)]}));
    if (arm)
        p.init.push_back("(handempty)");
    for (int i = 0; i < n; ++i)
        p.goal.push_back(atom("on", {blocks[static_cast<std::size_t>(i)], blocks[static_cast<std::size_t>(i + 1)]}));
    return p;
}

using Params = std::map<std::string, int>;

std::pair<std::string, std::string> build(const std::string &domain, const Params &k, std::uint64_t seed) {
    Rng rng(seed);
    auto pick = [&](const std::vector<std::string> &v) {
        return v[static_cast<std::size_t>(rng.below(v.size()))];
    };

    if (domain == "gripper") {
        Problem p{"gripper-" + std::to_string(k.at("balls")), "gripper", {}, {}, {}};
        auto balls = numbered("ball", k.at("balls"));
        p.objects = {{"room", {"rooma", "roomb"}}, {"gripper", {"left", "right"}}, {"ball", balls}};
        p.init = {"(at-robby rooma)", "(free left)", "(free right)"};
        for (auto &b : balls) {
            p.init.push_back(atom("at", {b, "rooma"}));
            p.goal.push_back(atom("at", {b, "roomb"}));
        }
        return {kGripper, p.text()};
    }
    if (domain == "logistics") {
        const int cities = k.at("cities"), size = k.at("size"), trucks = k.at("trucks");
        const int planes = k.at("airplanes"), packages = k.at("packages");
        if (cities > 1 && planes == 0)
            throw UsageError("logistics with more than one city needs an airplane");
        Problem p{"logistics", "logistics", {}, {}, {}};
        std::vector<std::string> city_names = numbered("city", cities), airports, others, all, truck_names;
        for (int c = 1; c <= cities; ++c) {
            std::vector<std::string> in_city;
            for (int j = 1; j <= size; ++j) {
                std::string loc = "loc" + std::to_string(c) + "-" + std::to_string(j);
                (j == 1 ? airports : others).push_back(loc);
                all.push_back(loc);
                in_city.push_back(loc);
                p.init.push_back(atom("in-city", {loc, city_names[static_cast<std::size_t>(c - 1)]}));
            }
            for (int t = 1; t <= trucks; ++t) {
                std::string name = "truck" + std::to_string(c) + "-" + std::to_string(t);
                truck_names.push_back(name);
                p.init.push_back(atom("at", {name, pick(in_city)}));
            }
        }
        auto plane_names = numbered("plane", planes);
        for (auto &a : plane_names)
            p.init.push_back(atom("at", {a, pick(airports)}));
        auto package_names = numbered("pkg", packages);
        for (auto &o : package_names) {
            p.init.push_back(atom("at", {o, pick(all)}));
            p.goal.push_back(atom("at", {o, pick(all)}));
        }
        p.objects = {{"city", city_names}, {"airport", airports}, {"location", others},
                     {"truck", truck_names}, {"airplane", plane_names}, {"package", package_names}};
        return {kLogistics, p.text()};
    }
    if (domain == "ferry") {
        auto locs = numbered("l", k.at("locations"));
        auto cars = numbered("car", k.at("cars"));
        Problem p{"ferry", "ferry", {{"location", locs}, {"car", cars}}, {}, {}};
        p.init.push_back(atom("at-ferry", {pick(locs)}));
        p.init.push_back("(empty-ferry)");
        for (auto &c : cars) {
            p.init.push_back(atom("at", {c, pick(locs)}));
            p.goal.push_back(atom("at", {c, pick(locs)}));
        }
        return {kFerry, p.text()};
    }
    if (domain == "simple-tsp") {
        auto locs = numbered("loc", k.at("locations"), 0);
        Problem p{"tsp", "simple-tsp", {{"location", locs}}, {}, {}};
        p.init = {atom("at", {locs[0]}), atom("visited", {locs[0]})};
        for (auto &l : locs)
            p.goal.push_back(atom("visited", {l}));
        return {kSimpleTsp, p.text()};
    }
    if (domain == "movie") {
        const int n = k.at("items");
        Problem p{"movie", "movie", {}, {}, {}};
        for (const char *sort : {"chips", "dip", "pop", "cheese", "crackers"})
            p.objects.push_back({sort, numbered(std::string(sort), n)});
        p.goal = {"(movie-rewound)", "(counter-at-zero)", "(have-chips)", "(have-dip)",
                  "(have-pop)", "(have-cheese)", "(have-crackers)"};
        return {kMovie, p.text()};
    }
    if (domain == "hanoi") {
        const int n = k.at("discs");
        auto discs = numbered("d", n);
        auto pegs = numbered("p", 3);
        Problem p{"hanoi", "hanoi", {{"object", discs}, {"object", pegs}}, {}, {}};
        for (int i = 0; i < n; ++i) {
            const auto &d = discs[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                p.init.push_back(atom("smaller", {d, discs[static_cast<std::size_t>(j)]}));
            for (auto &peg : pegs)
                p.init.push_back(atom("smaller", {d, peg}));
            const std::string &under = i + 1 < n ? discs[static_cast<std::size_t>(i + 1)] : pegs[0];
            const std::string &goal_under = i + 1 < n ? discs[static_cast<std::size_t>(i + 1)] : pegs[2];
            p.init.push_back(atom("on", {d, under}));
            p.goal.push_back(atom("on", {d, goal_under}));
        }
        p.init.push_back(atom("clear", {discs[0]}));
        p.init.push_back("(clear p2)");
        p.init.push_back("(clear p3)");
        return {kHanoi, p.text()};
    }
    if (domain == "tireworld") {
        const int n = k.at("tires");
        auto hubs = numbered("hub", n), nuts = numbered("nut", n);
        auto flats = numbered("w", n), spares = numbered("r", n);
        std::vector<std::string> wheels = flats;
        wheels.insert(wheels.end(), spares.begin(), spares.end());
        Problem p{"tireworld", "tireworld",
                  {{"container", {"boot"}}, {"hub", hubs}, {"nut", nuts}, {"wheel", wheels}}, {}, {}};
        p.init = {"(in jack boot)", "(in pump boot)", "(in wrench boot)", "(unlocked boot)", "(closed boot)"};
        for (int i = 0; i < n; ++i) {
            auto u = static_cast<std::size_t>(i);
            p.init.push_back(atom("intact", {spares[u]}));
            p.init.push_back(atom("in", {spares[u], "boot"}));
            p.init.push_back(atom("not-inflated", {spares[u]}));
            p.init.push_back(atom("on", {flats[u], hubs[u]}));
            p.init.push_back(atom("on-ground", {hubs[u]}));
            p.init.push_back(atom("tight", {nuts[u], hubs[u]}));
            p.init.push_back(atom("fastened", {hubs[u]}));
            p.goal.push_back(atom("on", {spares[u], hubs[u]}));
            p.goal.push_back(atom("inflated", {spares[u]}));
            p.goal.push_back(atom("tight", {nuts[u], hubs[u]}));
            p.goal.push_back(atom("in", {flats[u], "boot"}));
        }
        for (const char *g : {"(in wrench boot)", "(in jack boot)", "(in pump boot)", "(closed boot)"})
            p.goal.push_back(g);
        return {kTireworld, p.text()};
    }
    if (domain == "blocksworld-arm" || domain == "blocksworld-no-arm") {
        const bool arm = domain == "blocksworld-arm";
        auto blocks = numbered("b", k.at("blocks"));
        Problem p{"blocks", domain, {{"block", blocks}}, {}, {}};
        tower_atoms(blocks, random_towers(rng, k.at("blocks")), p.init, true);
        if (arm)
            p.init.push_back("(handempty)");
        tower_atoms(blocks, random_towers(rng, k.at("blocks")), p.goal, false);
        return {arm ? kBlocksArm : kBlocksNoArm, p.text()};
    }
    if (domain == "bw-arm-stack")
        return {kBlocksArm, stack_problem("blocksworld-arm", k.at("n"), true).text()};
    if (domain == "bw-no-arm-stack")
        return {kBlocksNoArm, stack_problem("blocksworld-no-arm", k.at("n"), false).text()};
    if (domain == "fig2")
        return {kTransport, kTransportProblem};
    if (domain == "fig4")
        return {kBlocksArm, kFig4Problem};
    if (domain == "fig6")
        return {kFig6, kFig6Problem};
    if (domain == "fig10")
        return {kRoads, kFig10Problem};
    if (domain == "graph-search")
        return {kRoads, kGraphSearchProblem};
    if (domain == "fig11")
        return {kFig11, kFig11Problem};
    throw UsageError("unknown generator " + domain);
}

const std::map<std::string, std::vector<ParamRange>> &param_table() {
    static const std::map<std::string, std::vector<ParamRange>> table = {
        {"gripper", {{"balls", 1, 100, 2}}},
        {"logistics",
         {{"cities", 1, 5, 2}, {"size", 1, 5, 2}, {"trucks", 1, 3, 1}, {"airplanes", 0, 4, 1}, {"packages", 1, 8, 1}}},
        {"ferry", {{"locations", 1, 10, 2}, {"cars", 1, 8, 1}}},
        {"simple-tsp", {{"locations", 1, 20, 3}}},
        {"movie", {{"items", 1, 20, 1}}},
        {"hanoi", {{"discs", 1, 12, 3}}},
        {"tireworld", {{"tires", 1, 5, 1}}},
        {"blocksworld-arm", {{"blocks", 1, 12, 3}}},
        {"blocksworld-no-arm", {{"blocks", 1, 12, 3}}},
        {"fig2", {}},
        {"fig4", {}},
        {"fig6", {}},
        {"fig10", {}},
        {"graph-search", {}},
        {"fig11", {}},
        {"bw-arm-stack", {{"n", 1, 10, 3}}},
        {"bw-no-arm-stack", {{"n", 1, 10, 4}}},
    };
    return table;
}

} // namespace

const std::vector<std::string> &generator_names() {
    static const std::vector<std::string> names = {
        "gripper", "logistics", "ferry", "simple-tsp", "movie", "hanoi", "tireworld",
        "blocksworld-arm", "blocksworld-no-arm", "fig2", "fig4", "fig6", "fig10",
        "graph-search", "fig11", "bw-arm-stack", "bw-no-arm-stack"};
    return names;
}

bool is_benchmark_family(const std::string &domain) {
    const auto &n = generator_names();
    auto it = std::find(n.begin(), n.end(), domain);
    return it != n.end() && it - n.begin() < 9;
}

const std::vector<ParamRange> &generator_params(const std::string &domain) {
    auto it = param_table().find(domain);
    if (it == param_table().end()) {
        std::string known;
        for (auto &n : generator_names())
            known += (known.empty() ? "" : ", ") + n;
        throw UsageError("unknown generator '" + domain + "' (known: " + known + ")");
    }
    return it->second;
}

GeneratorSpec normalize(const GeneratorSpec &spec) {
    const auto &ranges = generator_params(spec.domain);
    GeneratorSpec out{spec.domain, {}, spec.seed};
    for (auto &[name, value] : spec.params)
        if (std::none_of(ranges.begin(), ranges.end(), [&](const ParamRange &r) { return r.name == name; }))
            throw UsageError("generator " + spec.domain + " has no parameter '" + name + "'");
    for (auto &r : ranges) {
        auto it = spec.params.find(r.name);
        int v = it == spec.params.end() ? r.fallback : it->second;
        if (v < r.lo || v > r.hi)
            throw UsageError(spec.domain + ": " + r.name + "=" + std::to_string(v) + " outside [" +
                             std::to_string(r.lo) + "," + std::to_string(r.hi) + "]");
        out.params[r.name] = v;
    }
    return out;
}

std::pair<std::string, std::string> generate_pddl(const GeneratorSpec &spec) {
    GeneratorSpec n = normalize(spec);
    return build(n.domain, n.params, n.seed);
}

LiftedTask generate_lifted(const GeneratorSpec &spec) {
    auto [domain, problem] = generate_pddl(spec);
    return parse_task(domain, problem);
}

Task generate(const GeneratorSpec &spec) {
    return ground(generate_lifted(spec));
}

GeneratorSpec parse_generator_spec(const std::string &text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    spec.domain = text.substr(0, colon);
    if (colon == std::string::npos)
        return spec;
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw UsageError("bad generator parameter '" + item + "', expected name=value");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            if (key == "seed") {
                spec.seed = std::stoull(value, &used);
            } else {
                spec.params[key] = std::stoi(value, &used);
            }
            if (used != value.size())
                throw std::invalid_argument(value);
        } catch (const std::logic_error &) {
            throw UsageError("bad value in generator parameter '" + item + "'");
        }
    }
    return spec;
}

std::string format_generator_spec(const GeneratorSpec &spec) {
    std::string s = spec.domain;
    char sep = ':';
    for (auto &[k, v] : spec.params) {
        s += sep + k + "=" + std::to_string(v);
        sep = ',';
    }
    if (spec.seed != 0) {
        s += sep;
        s += "seed=" + std::to_string(spec.seed);
    }
    return s;
}

} // namespace relaxlab
