#include "relaxlab/domain_analysis.hpp"

#include "relaxlab/errors.hpp"
#include "relaxlab/heuristics.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

namespace relaxlab {

bool MutexTable::inconsistent(std::span<const int> a, std::span<const int> b) const {
    for (int f : a)
        if (std::none_of(b.begin(), b.end(), [&](int g) { return mutex(f, g); }))
            return false;
    return true;
}

MutexTable compute_mutexes(const Task &task) {
    const int n = static_cast<int>(task.num_facts());
    MutexTable mx(static_cast<std::size_t>(n));
    std::vector<int> init = task.init().to_vector();
    for (int p : init)
        for (int q : init)
            mx.mark(p, q);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &a : task.actions()) {
            bool ok = true;
            for (std::size_t i = 0; i < a.pre.size() && ok; ++i)
                for (std::size_t j = i; j < a.pre.size() && ok; ++j)
                    ok = mx.reachable(a.pre[i], a.pre[j]);
            if (!ok)
                continue;
            for (int p : a.add)
                for (int q : a.add)
                    if (!mx.reachable(p, q)) {
                        mx.mark(p, q);
                        changed = true;
                    }
            for (int q = 0; q < n; ++q) {
                if (!mx.reachable(q) || a.add_set.contains(q) || a.del_set.contains(q))
                    continue;
                if (!std::all_of(a.pre.begin(), a.pre.end(), [&](int r) { return mx.reachable(q, r); }))
                    continue;
                for (int p : a.add)
                    if (!mx.reachable(p, q)) {
                        mx.mark(p, q);
                        changed = true;
                    }
            }
        }
    }
    return mx;
}

ActionFlags action_flags(const Task &task, const MutexTable &mx) {
    const std::size_t n = task.num_facts();
    FactSet any_del(n);
    std::vector<int> pre_count(n, 0);
    for (const auto &a : task.actions()) {
        any_del |= a.del_set;
        for (int p : a.pre)
            ++pre_count[static_cast<std::size_t>(p)];
    }
    ActionFlags flags(task.num_actions());
    for (const auto &a : task.actions()) {
        ActionFlag &f = flags[static_cast<std::size_t>(a.id)];
        for (int p : a.pre)
            for (int q : a.pre)
                f.applicable = f.applicable && mx.reachable(p, q);
        f.static_add_effects = !a.add_set.intersects(any_del);
        for (int p : a.del) {
            int others = pre_count[static_cast<std::size_t>(p)] - (a.pre_set.contains(p) ? 1 : 0);
            if (task.goal_set().contains(p) || others > 0)
                f.relevant_delete_effects = true;
        }
        const FactSet after = (a.pre_set | a.add_set) - a.del_set;
        const bool effects_occur = mx.inconsistent(a.add, a.pre) && a.del_set.is_subset_of(a.pre_set);
        for (const auto &b : task.actions()) {
            if (!b.pre_set.is_subset_of(after))
                continue;
            if (f.inverse < 0 && effects_occur && b.add_set == a.del_set && b.del_set == a.add_set)
                f.inverse = b.id;
            if (f.weak_inverse < 0 && a.del_set.is_subset_of(b.add_set) && mx.inconsistent(b.del, a.pre))
                f.weak_inverse = b.id;
        }
        f.invertible = f.inverse >= 0;
        f.at_least_invertible = f.weak_inverse >= 0;
    }
    return flags;
}

LemmaReport check_lemmas(const Task &task, const ActionFlags &flags) {
    LemmaReport r;
    r.lemma1 = std::all_of(flags.begin(), flags.end(), [](const ActionFlag &f) { return !f.applicable || f.invertible; });
    r.lemma2 = std::all_of(flags.begin(), flags.end(), [](const ActionFlag &f) {
        return !f.applicable || f.at_least_invertible || (f.static_add_effects && !f.relevant_delete_effects);
    });
    std::vector<int> achievers(task.num_facts(), 0);
    for (const auto &a : task.actions())
        for (int p : a.add)
            ++achievers[static_cast<std::size_t>(p)];
    r.prop2 = std::all_of(achievers.begin(), achievers.end(), [](int c) { return c <= 1; });
    r.prop3 = task.goal().size() <= 1 &&
              std::all_of(task.actions().begin(), task.actions().end(), [](const GroundAction &a) {
                  return a.pre.size() <= 1;
              });
    r.prop4 = r.prop3 && std::all_of(task.actions().begin(), task.actions().end(), [](const GroundAction &a) {
                  return a.del_set.is_subset_of(a.pre_set);
              });
    return r;
}

LemmaReport check_lemmas(const Task &task) { return check_lemmas(task, action_flags(task, compute_mutexes(task))); }

// ---------------------------------------------------------------------------
// Fact generation tree

bool Fgt::is_ancestor(int a, int n) const {
    for (int p = nodes[static_cast<std::size_t>(n)].parent; p >= 0; p = nodes[static_cast<std::size_t>(p)].parent)
        if (p == a)
            return true;
    return false;
}

namespace {

class FgtBuilder {
    const Task &task_;
    std::size_t cap_;
    Fgt &fgt_;
    std::vector<std::vector<int>> achievers_;
    FactSet on_path_;

public:
    FgtBuilder(const Task &task, std::size_t cap, Fgt &fgt)
        : task_(task), cap_(cap), fgt_(fgt), achievers_(task.num_facts()), on_path_(task.num_facts()) {
        for (const auto &a : task.actions())
            for (int p : a.add)
                achievers_[static_cast<std::size_t>(p)].push_back(a.id);
    }

    void run() {
        fgt_.nodes.push_back(FgtNode{});
        for (int g : task_.goal()) {
            int child = add(0, FgtNode::Kind::Fact, g);
            if (child < 0)
                return;
            expand_fact(child, task_.goal_set());
        }
    }

private:
    int add(int parent, FgtNode::Kind kind, int label) {
        if (fgt_.nodes.size() >= cap_) {
            fgt_.truncated = true;
            return -1;
        }
        FgtNode node;
        node.kind = kind;
        node.label = label;
        node.parent = parent;
        node.depth = fgt_.nodes[static_cast<std::size_t>(parent)].depth + 1;
        int id = static_cast<int>(fgt_.nodes.size());
        fgt_.nodes.push_back(std::move(node));
        fgt_.nodes[static_cast<std::size_t>(parent)].children.push_back(id);
        return id;
    }

    // pre_above: preconditions of every action node above this fact node.
    void expand_fact(int node, const FactSet &pre_above) {
        int p = fgt_.nodes[static_cast<std::size_t>(node)].label;
        on_path_.insert(p);
        for (int a : achievers_[static_cast<std::size_t>(p)]) {
            if (fgt_.truncated)
                break;
            const GroundAction &act = task_.action(a);
            if (act.pre_set.intersects(on_path_)) // rule 1
                continue;
            int child = add(node, FgtNode::Kind::Action, a);
            if (child < 0)
                break;
            expand_action(child, pre_above);
        }
        on_path_.erase(p);
    }

    void expand_action(int node, const FactSet &pre_above) {
        const GroundAction &act = task_.action(fgt_.nodes[static_cast<std::size_t>(node)].label);
        FactSet below = pre_above | act.pre_set;
        for (int p : act.pre) {
            if (fgt_.truncated)
                return;
            if (pre_above.contains(p)) // rule 2
                continue;
            int child = add(node, FgtNode::Kind::Fact, p);
            if (child < 0)
                return;
            expand_fact(child, below);
        }
    }
};

// Flat per-node bitsets over action ids.
struct LabelSets {
    std::size_t words;
    std::vector<std::uint64_t> bits;
    LabelSets(std::size_t nodes, std::size_t actions) : words((actions + 63) / 64), bits(nodes * words, 0) {}
    std::uint64_t *at(int n) { return bits.data() + static_cast<std::size_t>(n) * words; }
    const std::uint64_t *at(int n) const { return bits.data() + static_cast<std::size_t>(n) * words; }
    void set(int n, int a) { at(n)[static_cast<std::size_t>(a) >> 6] |= std::uint64_t{1} << (a & 63); }
    bool test(int n, int a) const { return (at(n)[static_cast<std::size_t>(a) >> 6] >> (a & 63)) & 1; }
    void merge(int into, int from) {
        for (std::size_t w = 0; w < words; ++w)
            at(into)[w] |= at(from)[w];
    }
    void clear(int n) { std::fill(at(n), at(n) + words, 0); }
};

template <class F>
void for_each_bit(const std::uint64_t *bits, std::size_t words, F &&f) {
    for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t x = bits[w]; x; x &= x - 1)
            f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
}

// For each action a1, the actions (other than a1) whose precondition a1 deletes.
std::vector<std::vector<std::uint64_t>> delete_relation(const Task &task) {
    const std::size_t words = (task.num_actions() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rel(task.num_actions(), std::vector<std::uint64_t>(words, 0));
    for (const auto &a : task.actions())
        for (const auto &b : task.actions())
            if (a.id != b.id && a.del_set.intersects(b.pre_set))
                rel[static_cast<std::size_t>(a.id)][static_cast<std::size_t>(b.id) >> 6] |= std::uint64_t{1}
                                                                                              << (b.id & 63);
    return rel;
}

bool intersects(const std::uint64_t *a, const std::uint64_t *b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if (a[w] & b[w])
            return true;
    return false;
}

// Action (or root) nodes that, with one of their ancestors, form an
// ancestor-delete or goal-delete conflict. Calls emit(kind, x, y, fact).
template <class Emit>
void path_conflicts(const Fgt &fgt, const Task &task, Emit &&emit) {
    for (std::size_t x = 1; x < fgt.nodes.size(); ++x) {
        const FgtNode &nx = fgt.nodes[x];
        if (nx.kind != FgtNode::Kind::Action)
            continue;
        const GroundAction &ax = task.action(nx.label);
        if (ax.del.empty())
            continue;
        FactSet added(task.num_facts());
        int fact_node = nx.parent;
        while (fact_node >= 0) {
            int y = fgt.nodes[static_cast<std::size_t>(fact_node)].parent;
            const FgtNode &ny = fgt.nodes[static_cast<std::size_t>(y)];
            if (ny.kind == FgtNode::Kind::Root) {
                for (int p : ax.del)
                    if (task.goal_set().contains(p) && !added.contains(p))
                        emit(ConflictKind::GoalDelete, static_cast<int>(x), y, p);
                break;
            }
            const GroundAction &ay = task.action(ny.label);
            if (ay.id != ax.id)
                for (int p : ax.del)
                    if (ay.pre_set.contains(p) && !added.contains(p))
                        emit(ConflictKind::AncestorDelete, static_cast<int>(x), y, p);
            added |= ay.add_set;
            fact_node = ny.parent;
        }
    }
}

// Subtree action labels, children before parents (nodes are in preorder).
LabelSets subtree_labels(const Fgt &fgt, std::size_t actions) {
    LabelSets lab(fgt.nodes.size(), actions);
    for (std::size_t i = fgt.nodes.size(); i-- > 0;) {
        const FgtNode &n = fgt.nodes[i];
        if (n.kind == FgtNode::Kind::Action)
            lab.set(static_cast<int>(i), n.label);
        for (int c : n.children)
            lab.merge(static_cast<int>(i), c);
    }
    return lab;
}

int first_labelled(const Fgt &fgt, int root, int action) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        const FgtNode &node = fgt.nodes[static_cast<std::size_t>(n)];
        if (node.kind == FgtNode::Kind::Action && node.label == action)
            return n;
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            stack.push_back(*it);
    }
    return -1;
}

} // namespace

Fgt build_fgt(const Task &task, std::size_t node_cap) {
    Fgt fgt;
    FgtBuilder(task, std::max<std::size_t>(node_cap, 1), fgt).run();
    return fgt;
}

std::string to_string(ConflictKind k) {
    switch (k) {
    case ConflictKind::Allied:
        return "allied";
    case ConflictKind::AncestorDelete:
        return "ancestor-delete";
    case ConflictKind::GoalDelete:
        return "goal-delete";
    }
    return "?";
}

std::string to_string(Tristate t) {
    switch (t) {
    case Tristate::False:
        return "false";
    case Tristate::True:
        return "true";
    case Tristate::Unknown:
        return "unknown";
    }
    return "?";
}

std::string to_string(InteractionVerdict v) {
    switch (v) {
    case InteractionVerdict::HplusEqualsGd:
        return "hplus-equals-gd";
    case InteractionVerdict::HplusEqualsGdViaRepairs:
        return "hplus-equals-gd-via-repairs";
    case InteractionVerdict::Unknown:
        return "unknown";
    }
    return "?";
}

std::string to_string(LocalMinimaVerdict v) {
    return v == LocalMinimaVerdict::NoLocalMinima ? "no-local-minima" : "unknown";
}

std::vector<Conflict> find_conflicts(const Fgt &fgt, const Task &task) {
    if (fgt.truncated)
        throw Truncated("fact generation tree was truncated at " + std::to_string(fgt.nodes.size()) + " nodes");
    std::set<std::tuple<int, int, int, int>> seen;
    std::vector<Conflict> out;
    auto record = [&](ConflictKind kind, int xn, int yn, int x, int y, int p) {
        if (!seen.emplace(static_cast<int>(kind), x, y, p).second)
            return;
        Conflict c;
        c.kind = kind;
        c.deleter_node = xn;
        c.victim_node = yn;
        c.deleter = x;
        c.victim = y;
        c.fact = p;
        out.push_back(c);
    };

    const std::size_t actions = task.num_actions();
    const LabelSets lab = subtree_labels(fgt, actions);
    const auto rel = delete_relation(task);
    for (std::size_t n = 0; n < fgt.nodes.size(); ++n) {
        const auto &kids = fgt.nodes[n].children;
        if (!fgt.is_action(static_cast<int>(n)) || kids.size() < 2)
            continue;
        for (std::size_t i = 0; i < kids.size(); ++i)
            for (std::size_t j = 0; j < kids.size(); ++j) {
                if (i == j)
                    continue;
                for_each_bit(lab.at(kids[i]), lab.words, [&](int a1) {
                    const auto &r = rel[static_cast<std::size_t>(a1)];
                    for_each_bit(r.data(), r.size(), [&](int a2) {
                        if (!lab.test(kids[j], a2))
                            return;
                        const GroundAction &x = task.action(a1), &y = task.action(a2);
                        for (int p : x.del)
                            if (y.pre_set.contains(p) && !seen.contains({0, a1, a2, p}))
                                record(ConflictKind::Allied, first_labelled(fgt, kids[i], a1),
                                       first_labelled(fgt, kids[j], a2), a1, a2, p);
                    });
                });
            }
    }
    path_conflicts(fgt, task, [&](ConflictKind kind, int xn, int yn, int p) {
        const FgtNode &y = fgt.nodes[static_cast<std::size_t>(yn)];
        record(kind, xn, yn, fgt.nodes[static_cast<std::size_t>(xn)].label,
               y.kind == FgtNode::Kind::Root ? -1 : y.label, p);
    });
    std::sort(out.begin(), out.end(), [](const Conflict &a, const Conflict &b) {
        return std::tie(a.kind, a.deleter, a.victim, a.fact) < std::tie(b.kind, b.deleter, b.victim, b.fact);
    });
    for (auto &c : out)
        repairable(c, task);
    return out;
}

Tristate repairable(Conflict &c, const Task &task) {
    c.repair_witness = -1;
    if (c.kind != ConflictKind::Allied) {
        c.repairable = Tristate::Unknown;
        return c.repairable;
    }
    const GroundAction &a = task.action(c.deleter), &b = task.action(c.victim);
    const FactSet after = (a.pre_set | a.add_set) - a.del_set;
    for (const auto &r : task.actions())
        if (r.pre_set.is_subset_of(after) && b.add_set.is_subset_of(r.add_set)) {
            c.repair_witness = r.id;
            c.repairable = Tristate::True;
            return c.repairable;
        }
    c.repairable = Tristate::False;
    return c.repairable;
}

InteractionVerdict interaction_free_verdict(const Task &task, std::size_t cap) {
    Fgt fgt = build_fgt(task, cap);
    if (fgt.truncated)
        return InteractionVerdict::Unknown;
    auto conflicts = find_conflicts(fgt, task);
    if (conflicts.empty())
        return InteractionVerdict::HplusEqualsGd;
    bool all = std::all_of(conflicts.begin(), conflicts.end(), [](const Conflict &c) {
        return c.kind == ConflictKind::Allied && c.repairable == Tristate::True;
    });
    return all ? InteractionVerdict::HplusEqualsGdViaRepairs : InteractionVerdict::Unknown;
}

// ---------------------------------------------------------------------------
// Sub-tree criterion

namespace {

// Dynamic program over the tree with every branch rooted at `masked` removed.
// A selection is a non-redundant sub-tree: action nodes keep all children,
// fact nodes keep at most one. Per node we track whether some selection below
// it can contain a conflict (C), a leaf fact in `deletes` (L), both (CL), and
// which action labels a selection can contain (lab) or contain together with
// such a leaf (labl).
struct CriterionDp {
    const Fgt &fgt;
    const Task &task;
    const std::vector<std::vector<std::uint64_t>> &rel;
    const std::vector<char> &path_conflict;

    bool run(int masked, const FactSet &deletes) const {
        const std::size_t n = fgt.nodes.size();
        const std::size_t actions = task.num_actions();
        std::vector<char> gone(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            const FgtNode &node = fgt.nodes[i];
            gone[i] = gone[static_cast<std::size_t>(node.parent)] ||
                      (node.kind == FgtNode::Kind::Action && node.label == masked);
        }
        std::vector<char> L(n, 0), C(n, 0), CL(n, 0);
        LabelSets lab(n, actions), labl(n, actions);
        const std::size_t W = lab.words;

        auto allied = [&](int fi, int fj, bool leaf_elsewhere, bool need_leaf) {
            bool found = false;
            for_each_bit(lab.at(fi), W, [&](int a1) {
                if (found)
                    return;
                const auto &r = rel[static_cast<std::size_t>(a1)];
                if (!intersects(r.data(), lab.at(fj), W))
                    return;
                if (!need_leaf || leaf_elsewhere || labl.test(fi, a1) ||
                    intersects(r.data(), labl.at(fj), W))
                    found = true;
            });
            return found;
        };

        for (std::size_t idx = n; idx-- > 0;) {
            if (gone[idx])
                continue;
            const int i = static_cast<int>(idx);
            const FgtNode &node = fgt.nodes[idx];
            std::vector<int> kids;
            for (int c : node.children)
                if (!gone[static_cast<std::size_t>(c)])
                    kids.push_back(c);
            if (node.kind == FgtNode::Kind::Fact) {
                L[idx] = deletes.contains(node.label);
                for (int c : kids) {
                    auto uc = static_cast<std::size_t>(c);
                    L[idx] |= L[uc];
                    C[idx] |= C[uc];
                    CL[idx] |= CL[uc];
                    lab.merge(i, c);
                    labl.merge(i, c);
                }
                continue;
            }
            const bool own = path_conflict[idx] != 0;
            int leaves = 0;
            for (int c : kids)
                leaves += L[static_cast<std::size_t>(c)] ? 1 : 0;
            L[idx] = leaves > 0;
            C[idx] = own;
            CL[idx] = own && L[idx];
            if (node.kind == FgtNode::Kind::Action) {
                lab.set(i, node.label);
                if (L[idx])
                    labl.set(i, node.label);
            }
            for (int c : kids) {
                auto uc = static_cast<std::size_t>(c);
                lab.merge(i, c);
                labl.merge(i, c);
                if (leaves - (L[uc] ? 1 : 0) > 0) // a leaf can sit in a sibling branch
                    for (std::size_t w = 0; w < W; ++w)
                        labl.at(i)[w] |= lab.at(c)[w];
                C[idx] |= C[uc];
                CL[idx] |= CL[uc];
                if (C[uc] && leaves - (L[uc] ? 1 : 0) > 0)
                    CL[idx] = 1;
            }
            for (std::size_t a = 0; a < kids.size(); ++a)
                for (std::size_t b = 0; b < kids.size(); ++b) {
                    if (a == b)
                        continue;
                    auto ua = static_cast<std::size_t>(kids[a]), ub = static_cast<std::size_t>(kids[b]);
                    int others = leaves - (L[ua] ? 1 : 0) - (L[ub] ? 1 : 0);
                    if (!C[idx] && allied(kids[a], kids[b], false, false))
                        C[idx] = 1;
                    if (!CL[idx] && allied(kids[a], kids[b], others > 0, true))
                        CL[idx] = 1;
                }
        }
        return CL[0] != 0;
    }

    // Conflict presence in the masked tree, ignoring leaves.
    bool conflict(int masked) const {
        const std::size_t n = fgt.nodes.size();
        std::vector<char> gone(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            const FgtNode &node = fgt.nodes[i];
            gone[i] = gone[static_cast<std::size_t>(node.parent)] ||
                      (node.kind == FgtNode::Kind::Action && node.label == masked);
        }
        LabelSets lab(n, task.num_actions());
        for (std::size_t idx = n; idx-- > 0;) {
            if (gone[idx])
                continue;
            const FgtNode &node = fgt.nodes[idx];
            if (node.kind != FgtNode::Kind::Fact && path_conflict[idx])
                return true;
            if (node.kind == FgtNode::Kind::Action)
                lab.set(static_cast<int>(idx), node.label);
            std::vector<int> kids;
            for (int c : node.children)
                if (!gone[static_cast<std::size_t>(c)]) {
                    kids.push_back(c);
                    lab.merge(static_cast<int>(idx), c);
                }
            if (node.kind == FgtNode::Kind::Fact)
                continue;
            for (std::size_t a = 0; a < kids.size(); ++a)
                for (std::size_t b = 0; b < kids.size(); ++b) {
                    if (a == b)
                        continue;
                    bool found = false;
                    for_each_bit(lab.at(kids[a]), lab.words, [&](int a1) {
                        if (!found && intersects(rel[static_cast<std::size_t>(a1)].data(), lab.at(kids[b]), lab.words))
                            found = true;
                    });
                    if (found)
                        return true;
                }
        }
        return false;
    }
};

} // namespace

CriterionResult no_local_minima_check(const Task &task, std::size_t cap, LeafTest test) {
    CriterionResult r;
    ActionFlags flags = action_flags(task, compute_mutexes(task));
    for (std::size_t a = 0; a < flags.size(); ++a)
        if (flags[a].applicable && !flags[a].at_least_invertible)
            r.not_invertible.push_back(static_cast<int>(a));
    Fgt fgt = build_fgt(task, cap);
    if (fgt.truncated) {
        r.truncated = true;
        return r;
    }
    std::vector<char> path_conflict(fgt.nodes.size(), 0);
    path_conflicts(fgt, task, [&](ConflictKind, int x, int, int) { path_conflict[static_cast<std::size_t>(x)] = 1; });
    const auto rel = delete_relation(task);
    CriterionDp dp{fgt, task, rel, path_conflict};
    for (const auto &a : task.actions()) {
        if (!flags[static_cast<std::size_t>(a.id)].applicable)
            continue;
        bool fails;
        if (test == LeafTest::Leaf) {
            fails = !a.del.empty() && dp.run(a.id, a.del_set);
        } else {
            FactSet labels(task.num_facts());
            std::vector<char> gone(fgt.nodes.size(), 0);
            for (std::size_t i = 1; i < fgt.nodes.size(); ++i) {
                const FgtNode &node = fgt.nodes[i];
                gone[i] = gone[static_cast<std::size_t>(node.parent)] ||
                          (node.kind == FgtNode::Kind::Action && node.label == a.id);
                if (!gone[i] && node.kind == FgtNode::Kind::Fact)
                    labels.insert(node.label);
            }
            fails = a.del_set.intersects(labels) && dp.conflict(a.id);
        }
        if (fails)
            r.failing_actions.push_back(a.id);
    }
    if (r.not_invertible.empty() && r.failing_actions.empty())
        r.verdict = LocalMinimaVerdict::NoLocalMinima;
    return r;
}

LocalMinimaVerdict no_local_minima_criterion(const Task &task, std::size_t cap, LeafTest test) {
    return no_local_minima_check(task, cap, test).verdict;
}

// ---------------------------------------------------------------------------
// Semantic validators

std::vector<RespectedVerdict> validate_respected(const Task &task, const StateSpace &space) {
    HPlusSolver hplus(task);
    std::vector<RespectedVerdict> out;
    for (const auto &a : task.actions()) {
        RespectedVerdict v;
        v.action = a.id;
        for (std::size_t s = 0; s < space.size(); ++s) {
            const HeuristicValue gd = space.gd[s];
            if (gd.is_infinite() || gd == 0 || !a.pre_set.is_subset_of(space.states[s]))
                continue;
            int next = -1;
            for (const auto &t : space.succ[s])
                if (t.action == a.id)
                    next = t.target;
            if (next < 0 || space.gd[static_cast<std::size_t>(next)] + 1 != gd)
                continue;
            if (hplus(space.states[s] | a.add_set) + 1 != space.h[s]) {
                v.respected = false;
                v.counterexamples.push_back(static_cast<int>(s));
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool validate_rp_irrelevant_deletes(const Task &task, const State &s, int action) {
    const GroundAction &a = task.action(action);
    if (!a.pre_set.is_subset_of(s))
        throw PreconditionViolated("action " + a.name + " is not applicable");
    const HeuristicValue h = h_plus(task, s);
    if (h.is_infinite())
        throw PreconditionViolated("h+ is infinite in the given state");
    if (a.del_set.intersects(task.goal_set()))
        return false;
    std::vector<std::string> names;
    for (const auto &f : task.facts())
        names.push_back(f.name);
    std::vector<ActionSpec> kept;
    for (const auto &b : task.actions())
        if (!b.pre_set.intersects(a.del_set))
            kept.push_back(ActionSpec{b.name, b.pre, b.add, b.del});
    Task restricted(names, std::move(kept), ((s | a.add_set) - a.del_set).to_vector(), task.goal());
    const HeuristicValue rest = h_plus(restricted, restricted.init());
    return rest.is_finite() && rest + 1 <= h;
}

AnalysisReport analyze(const Task &task, std::size_t fgt_cap, LeafTest test) {
    AnalysisReport r;
    r.mutexes = compute_mutexes(task);
    r.flags = action_flags(task, r.mutexes);
    r.lemmas = check_lemmas(task, r.flags);
    Fgt fgt = build_fgt(task, fgt_cap);
    r.fgt_truncated = fgt.truncated;
    r.fgt_nodes = fgt.nodes.size();
    if (!fgt.truncated) {
        r.conflicts = find_conflicts(fgt, task);
        if (r.conflicts.empty())
            r.interaction = InteractionVerdict::HplusEqualsGd;
        else if (std::all_of(r.conflicts.begin(), r.conflicts.end(), [](const Conflict &c) {
                     return c.kind == ConflictKind::Allied && c.repairable == Tristate::True;
                 }))
            r.interaction = InteractionVerdict::HplusEqualsGdViaRepairs;
    }
    r.criterion = no_local_minima_check(task, fgt_cap, test);
    return r;
}

} // namespace relaxlab
