#pragma once

#include "relaxlab/state_space.hpp"
#include "relaxlab/task.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relaxlab {

// Pairwise reachability fixpoint. mutex(p, q) means p and q provably never
// hold together in a reachable state; the relation errs toward "consistent".
class MutexTable {
    std::size_t n_ = 0;
    std::vector<char> reach_; // n*n, diagonal = singleton reachability

public:
    MutexTable() = default;
    explicit MutexTable(std::size_t n) : n_(n), reach_(n * n, 0) {}
    std::size_t size() const { return n_; }
    bool reachable(int p) const { return reach_[idx(p, p)] != 0; }
    bool reachable(int p, int q) const { return reach_[idx(p, q)] != 0; }
    bool mutex(int p, int q) const { return !reachable(p, q); }
    void mark(int p, int q) { reach_[idx(p, q)] = reach_[idx(q, p)] = 1; }

    // Every fact of `a` is mutex with at least one fact of `b`.
    bool inconsistent(std::span<const int> a, std::span<const int> b) const;

private:
    std::size_t idx(int p, int q) const { return static_cast<std::size_t>(p) * n_ + static_cast<std::size_t>(q); }
};

MutexTable compute_mutexes(const Task &task);

struct ActionFlag {
    // False when the mutex table shows pre(a) never holds; the other flags are
    // then irrelevant and the lemma checks ignore the action.
    bool applicable = true;
    bool invertible = false;
    int inverse = -1; // witness when invertible
    bool at_least_invertible = false;
    int weak_inverse = -1; // witness when at least invertible; may be the action itself
    bool static_add_effects = false;
    bool relevant_delete_effects = false;
};

using ActionFlags = std::vector<ActionFlag>;

ActionFlags action_flags(const Task &task, const MutexTable &mx);

struct LemmaReport {
    bool lemma1 = false; // all actions invertible
    bool lemma2 = false; // each action at least invertible, or static adds without relevant deletes
    bool prop2 = false;  // every fact has at most one achiever
    bool prop3 = false;  // |G| <= 1 and every action has at most one precondition
    bool prop4 = false;  // prop3 and del(a) within pre(a) for all a
};

LemmaReport check_lemmas(const Task &task, const ActionFlags &flags);
LemmaReport check_lemmas(const Task &task);

// Fact generation tree. Node 0 is the artificial goal-achievement action.
struct FgtNode {
    enum class Kind { Root, Action, Fact };
    Kind kind = Kind::Root;
    int label = -1; // action or fact id; -1 at the root
    int parent = -1;
    int depth = 0;
    std::vector<int> children;
};

struct Fgt {
    std::vector<FgtNode> nodes;
    bool truncated = false;

    const FgtNode &root() const { return nodes.front(); }
    bool is_action(int n) const { return nodes[static_cast<std::size_t>(n)].kind != FgtNode::Kind::Fact; }
    bool is_ancestor(int a, int n) const; // strict
};

Fgt build_fgt(const Task &task, std::size_t node_cap = 1'000'000);

enum class ConflictKind { Allied, AncestorDelete, GoalDelete };
enum class Tristate { False, True, Unknown };

std::string to_string(ConflictKind k);
std::string to_string(Tristate t);

struct Conflict {
    ConflictKind kind = ConflictKind::Allied;
    // `deleter` deletes `fact`, which `victim` needs (a precondition, or a
    // goal for GoalDelete where victim is the root). Nodes are one witness.
    int deleter_node = -1;
    int victim_node = -1;
    int deleter = -1;
    int victim = -1;
    int fact = -1;
    Tristate repairable = Tristate::Unknown;
    int repair_witness = -1;
};

// One conflict per distinct (kind, deleter, victim, fact). Throws Truncated.
std::vector<Conflict> find_conflicts(const Fgt &fgt, const Task &task);

// Sets c.repair_witness when a repair exists.
Tristate repairable(Conflict &c, const Task &task);

enum class InteractionVerdict { HplusEqualsGd, HplusEqualsGdViaRepairs, Unknown };
enum class LocalMinimaVerdict { NoLocalMinima, Unknown };

std::string to_string(InteractionVerdict v);
std::string to_string(LocalMinimaVerdict v);

InteractionVerdict interaction_free_verdict(const Task &task, std::size_t cap = 1'000'000);

// Leaf: a fails only if some conflict-carrying sub-tree avoiding a can have a
// leaf fact that a deletes. Occurrence: a fails if the tree without a's
// branches has a conflict and a deletes any fact labelling one of its nodes.
enum class LeafTest { Leaf, Occurrence };

struct CriterionResult {
    LocalMinimaVerdict verdict = LocalMinimaVerdict::Unknown;
    bool truncated = false;
    std::vector<int> not_invertible;  // actions lacking an (at least) inverse
    std::vector<int> failing_actions; // actions violating the sub-tree test
};

CriterionResult no_local_minima_check(const Task &task, std::size_t cap = 1'000'000, LeafTest test = LeafTest::Leaf);
LocalMinimaVerdict no_local_minima_criterion(const Task &task, std::size_t cap = 1'000'000,
                                             LeafTest test = LeafTest::Leaf);

struct RespectedVerdict {
    int action = -1;
    bool respected = true;
    std::vector<int> counterexamples; // state ids
};

// Needs h populated with h+.
std::vector<RespectedVerdict> validate_respected(const Task &task, const StateSpace &space);

// True iff a has no relaxed-plan relevant delete effects in s.
bool validate_rp_irrelevant_deletes(const Task &task, const State &s, int action);

struct AnalysisReport {
    MutexTable mutexes;
    ActionFlags flags;
    LemmaReport lemmas;
    bool fgt_truncated = false;
    std::size_t fgt_nodes = 0;
    std::vector<Conflict> conflicts;
    InteractionVerdict interaction = InteractionVerdict::Unknown;
    CriterionResult criterion;
};

AnalysisReport analyze(const Task &task, std::size_t fgt_cap = 1'000'000, LeafTest test = LeafTest::Leaf);

} // namespace relaxlab
