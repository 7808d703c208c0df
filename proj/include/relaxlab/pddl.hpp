#pragma once

#include "relaxlab/task.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace relaxlab {

struct TypedName {
    std::string name;
    std::string type = "object";

    friend bool operator==(const TypedName &, const TypedName &) = default;
};

// Arguments are either variables ("?x") or object/constant names.
struct Atom {
    std::string predicate;
    std::vector<std::string> args;

    friend bool operator==(const Atom &, const Atom &) = default;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> params;
};

struct Schema {
    std::string name;
    std::vector<TypedName> params;
    std::vector<Atom> pre;
    // Pairs of terms that must be bound to different objects: (not (= ?a ?b)).
    std::vector<std::pair<std::string, std::string>> distinct;
    std::vector<Atom> add;
    std::vector<Atom> del;
};

// A parsed STRIPS task before grounding. Identifiers are lower case.
struct LiftedTask {
    std::string domain_name;
    std::string problem_name;
    std::vector<std::string> requirements;
    // type -> parent type; "object" is the implicit root.
    std::vector<std::pair<std::string, std::string>> types;
    std::vector<TypedName> constants;
    std::vector<PredicateDecl> predicates;
    std::vector<Schema> schemas;
    std::vector<TypedName> objects;
    std::vector<Atom> init;
    std::vector<Atom> goal;
};

// Accepts the :strips, :typing and :equality subset. Inequality is allowed
// only as (not (= t1 t2)) inside action preconditions.
LiftedTask parse_task(const std::string &domain_text, const std::string &problem_text);

// Instantiates every schema over the typed objects. Atoms of static predicates
// (never added or deleted) are evaluated against init and removed: actions
// whose static preconditions fail are dropped. Facts and actions get ids in
// lexicographic name order.
Task ground(const LiftedTask &lifted);

std::pair<std::string, std::string> write_pddl(const LiftedTask &lifted);

// "pred(a,b)" or "pred" for nullary atoms.
std::string ground_name(const std::string &head, const std::vector<std::string> &args);

} // namespace relaxlab
