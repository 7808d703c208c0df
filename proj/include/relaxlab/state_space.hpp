#pragma once

#include "relaxlab/heuristics.hpp"
#include "relaxlab/task.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace relaxlab {

struct Transition {
    int action;
    int target;
};

struct StateSpace {
    std::vector<State> states; // states[0] is init
    std::vector<std::vector<Transition>> succ;
    std::vector<HeuristicValue> h;
    std::vector<HeuristicValue> gd;
    std::unordered_map<State, int> index;

    std::size_t size() const { return states.size(); }
    // -1 when s is not reachable.
    int find(const State &s) const;
};

// Breadth-first from init in action-id order. Throws ResourceExhausted
// rather than truncating when more than max_states states are reachable.
StateSpace enumerate(const Task &task, const Evaluator &h, std::size_t max_states = 200'000);
StateSpace enumerate(const Task &task, HeuristicKind kind, std::size_t max_states = 200'000);

enum class DeadEndClass { Undirected, Harmless, Recognized, Unrecognized };
enum class PlateauClass { RecognizedDeadEnd, LocalMinimum, Bench, Contour, GlobalMinimum };

std::string to_string(DeadEndClass c);
std::string to_string(PlateauClass c);

struct Plateau {
    int id = -1;
    HeuristicValue level;
    std::vector<int> members; // sorted state ids
    PlateauClass cls = PlateauClass::Contour;
};

DeadEndClass dead_end_class(const StateSpace &space);

// Strongly connected components of the equal-h subgraph, classified, ordered
// by their smallest member id.
std::vector<Plateau> plateaus(const StateSpace &space);
PlateauClass classify_plateau(const StateSpace &space, const Plateau &p);

// Exit: a state with a strictly better successor. ed(s) is the shortest path
// length from s to an exit at level h(s). nullopt when h(s) is 0 or infinite.
bool is_exit(const StateSpace &space, int s);
std::optional<HeuristicValue> exit_distance(const StateSpace &space, int s);

struct TopologyReport {
    DeadEndClass dead_ends = DeadEndClass::Undirected;
    std::vector<Plateau> plateaus;
    std::vector<int> plateau_of;
    // Set for every state with finite non-zero h.
    std::vector<std::optional<HeuristicValue>> ed;
    HeuristicValue mlmed = 0;
    HeuristicValue mbed = 0;
    // Unrecognized dead end -> number of unrecognized dead ends reachable
    // from it through unrecognized dead ends only (itself included).
    std::map<int, int> unrecognized_depths;

    std::size_t count(PlateauClass c) const;
    PlateauClass class_of(int state) const;
};

TopologyReport topology_report(const StateSpace &space);

void export_dot(const Task &task, const StateSpace &space, std::ostream &out);
// Columns: state_id,h,gd,plateau_id,plateau_class,exit_distance
void export_csv(const StateSpace &space, const TopologyReport &report, std::ostream &out);

} // namespace relaxlab
