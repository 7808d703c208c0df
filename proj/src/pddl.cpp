#include "relaxlab/pddl.hpp"

#include "relaxlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace relaxlab {

namespace {

struct SExpr {
    bool is_list = false;
    std::string text;
    std::vector<SExpr> items;
    int line = 0;
    int column = 0;

    bool is_atom(const std::string &s) const { return !is_list && text == s; }
    bool head_is(const std::string &s) const {
        return is_list && !items.empty() && items[0].is_atom(s);
    }
};

[[noreturn]] void fail(const SExpr &at, const std::string &msg) {
    throw ParseError(msg, at.line, at.column);
}

class Reader {
    const std::string &text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

public:
    explicit Reader(const std::string &text) : text_(text) {}

    SExpr read() {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", line_, column_);
        SExpr e;
        e.line = line_;
        e.column = column_;
        char c = text_[pos_];
        if (c == '(') {
            e.is_list = true;
            advance();
            for (;;) {
                skip_space();
                if (pos_ >= text_.size())
                    throw ParseError("unbalanced parenthesis opened here", e.line, e.column);
                if (text_[pos_] == ')') {
                    advance();
                    break;
                }
                e.items.push_back(read());
            }
        } else if (c == ')') {
            throw ParseError("unexpected ')'", line_, column_);
        } else {
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d)))
                    break;
                e.text.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(d))));
                advance();
            }
        }
        return e;
    }

    void expect_end() {
        skip_space();
        if (pos_ < text_.size())
            throw ParseError("trailing input after definition", line_, column_);
    }
};

const std::set<std::string> kSupportedRequirements = {":strips", ":typing", ":equality"};
const std::set<std::string> kUnsupportedConnectives = {
    "or", "imply", "exists", "forall", "when", "increase", "decrease",
    "assign", "scale-up", "scale-down", "either"};

std::string atom_text(const SExpr &e, const char *what) {
    if (e.is_list)
        fail(e, std::string("expected ") + what);
    return e.text;
}

std::vector<TypedName> parse_typed_list(const std::vector<SExpr> &items, std::size_t begin,
                                        bool variables) {
    std::vector<TypedName> out;
    std::vector<std::string> pending;
    for (std::size_t i = begin; i < items.size(); ++i) {
        const SExpr &e = items[i];
        if (e.is_list) {
            if (e.head_is("either"))
                throw UnsupportedFeature("'either' types are not supported");
            fail(e, "unexpected list in typed list");
        }
        if (e.text == "-") {
            if (i + 1 >= items.size() || items[i + 1].is_list)
                fail(e, "missing type after '-'");
            if (pending.empty())
                fail(e, "type without names");
            for (auto &n : pending)
                out.push_back(TypedName{n, items[i + 1].text});
            pending.clear();
            ++i;
            continue;
        }
        if (variables && e.text.front() != '?')
            fail(e, "expected variable, got '" + e.text + "'");
        if (!variables && e.text.front() == '?')
            fail(e, "unexpected variable '" + e.text + "'");
        pending.push_back(e.text);
    }
    for (auto &n : pending)
        out.push_back(TypedName{n, "object"});
    return out;
}

Atom parse_atom(const SExpr &e) {
    if (!e.is_list || e.items.empty() || e.items[0].is_list)
        fail(e, "expected atom");
    Atom a;
    a.predicate = e.items[0].text;
    if (kUnsupportedConnectives.count(a.predicate))
        throw UnsupportedFeature("'" + a.predicate + "' is not supported (line " +
                                 std::to_string(e.line) + ")");
    if (a.predicate == "and" || a.predicate == "not" || a.predicate == "=")
        fail(e, "expected atom, got '" + a.predicate + "'");
    for (std::size_t i = 1; i < e.items.size(); ++i)
        a.args.push_back(atom_text(e.items[i], "term"));
    return a;
}

void check_requirements(const SExpr &section, std::vector<std::string> &reqs) {
    for (std::size_t i = 1; i < section.items.size(); ++i) {
        std::string r = atom_text(section.items[i], "requirement");
        if (!kSupportedRequirements.count(r))
            throw UnsupportedFeature("requirement " + r + " is not supported");
        if (std::find(reqs.begin(), reqs.end(), r) == reqs.end())
            reqs.push_back(r);
    }
}

// Precondition or goal: conjunction of atoms, plus (not (= a b)) when allowed.
void parse_condition(const SExpr &e, std::vector<Atom> &atoms,
                     std::vector<std::pair<std::string, std::string>> *distinct) {
    if (!e.is_list)
        fail(e, "expected condition");
    if (e.items.empty())
        return;
    if (e.head_is("and")) {
        for (std::size_t i = 1; i < e.items.size(); ++i)
            parse_condition(e.items[i], atoms, distinct);
        return;
    }
    if (e.head_is("not")) {
        if (e.items.size() == 2 && e.items[1].head_is("=") && distinct) {
            const SExpr &eq = e.items[1];
            if (eq.items.size() != 3)
                fail(eq, "'=' takes two terms");
            distinct->emplace_back(atom_text(eq.items[1], "term"), atom_text(eq.items[2], "term"));
            return;
        }
        throw UnsupportedFeature("negative conditions are not supported (line " +
                                 std::to_string(e.line) + ")");
    }
    if (e.head_is("="))
        throw UnsupportedFeature("positive equality conditions are not supported (line " +
                                 std::to_string(e.line) + ")");
    atoms.push_back(parse_atom(e));
}

void parse_effect(const SExpr &e, std::vector<Atom> &add, std::vector<Atom> &del) {
    if (!e.is_list)
        fail(e, "expected effect");
    if (e.items.empty())
        return;
    if (e.head_is("and")) {
        for (std::size_t i = 1; i < e.items.size(); ++i)
            parse_effect(e.items[i], add, del);
        return;
    }
    if (e.head_is("not")) {
        if (e.items.size() != 2)
            fail(e, "'not' takes one argument");
        del.push_back(parse_atom(e.items[1]));
        return;
    }
    add.push_back(parse_atom(e));
}

Schema parse_action(const SExpr &e) {
    if (e.items.size() < 2)
        fail(e, "action without name");
    Schema s;
    s.name = atom_text(e.items[1], "action name");
    for (std::size_t i = 2; i < e.items.size(); i += 2) {
        std::string key = atom_text(e.items[i], "action keyword");
        if (i + 1 >= e.items.size())
            fail(e.items[i], "missing value for " + key);
        const SExpr &val = e.items[i + 1];
        if (key == ":parameters") {
            if (!val.is_list)
                fail(val, "expected parameter list");
            s.params = parse_typed_list(val.items, 0, true);
        } else if (key == ":precondition") {
            parse_condition(val, s.pre, &s.distinct);
        } else if (key == ":effect") {
            parse_effect(val, s.add, s.del);
        } else {
            fail(e.items[i], "unknown action keyword " + key);
        }
    }
    return s;
}

class Validator {
    const LiftedTask &t_;
    std::map<std::string, std::size_t> arity_;
    std::set<std::string> types_{"object"};
    std::set<std::string> objects_;

public:
    explicit Validator(const LiftedTask &t) : t_(t) {
        for (auto &[type, parent] : t.types) {
            types_.insert(type);
            types_.insert(parent);
        }
        for (auto &p : t.predicates)
            arity_[p.name] = p.params.size();
        for (auto &c : t.constants)
            objects_.insert(c.name);
        for (auto &o : t.objects)
            objects_.insert(o.name);
    }

    void type(const std::string &type) const {
        if (!types_.count(type))
            throw ParseError("undeclared type " + type, 0, 0);
    }

    void atom(const Atom &a, const std::set<std::string> *vars) const {
        auto it = arity_.find(a.predicate);
        if (it == arity_.end())
            throw ParseError("undeclared predicate " + a.predicate, 0, 0);
        if (it->second != a.args.size())
            throw ParseError("arity mismatch for " + a.predicate, 0, 0);
        for (auto &arg : a.args)
            term(arg, vars);
    }

    void term(const std::string &arg, const std::set<std::string> *vars) const {
        if (arg.front() == '?') {
            if (!vars || !vars->count(arg))
                throw ParseError("unbound variable " + arg, 0, 0);
        } else if (!objects_.count(arg)) {
            throw ParseError("undeclared object " + arg, 0, 0);
        }
    }

    void run() const {
        for (auto &p : t_.predicates)
            for (auto &tn : p.params)
                type(tn.type);
        for (auto &c : t_.constants)
            type(c.type);
        for (auto &o : t_.objects)
            type(o.type);
        std::set<std::string> seen;
        for (auto &s : t_.schemas) {
            if (!seen.insert(s.name).second)
                throw ParseError("duplicate action " + s.name, 0, 0);
            std::set<std::string> vars;
            for (auto &p : s.params) {
                type(p.type);
                if (!vars.insert(p.name).second)
                    throw ParseError("duplicate parameter " + p.name + " in " + s.name, 0, 0);
            }
            for (auto &a : s.pre)
                atom(a, &vars);
            for (auto &a : s.add)
                atom(a, &vars);
            for (auto &a : s.del)
                atom(a, &vars);
            for (auto &[x, y] : s.distinct) {
                term(x, &vars);
                term(y, &vars);
            }
        }
        for (auto &a : t_.init)
            atom(a, nullptr);
        for (auto &a : t_.goal)
            atom(a, nullptr);
    }
};

void parse_domain(const SExpr &root, LiftedTask &t) {
    if (!root.head_is("define") || root.items.size() < 2 || !root.items[1].head_is("domain") ||
        root.items[1].items.size() != 2)
        fail(root, "expected (define (domain NAME) ...)");
    t.domain_name = atom_text(root.items[1].items[1], "domain name");
    for (std::size_t i = 2; i < root.items.size(); ++i) {
        const SExpr &sec = root.items[i];
        if (!sec.is_list || sec.items.empty() || sec.items[0].is_list)
            fail(sec, "expected domain section");
        const std::string &key = sec.items[0].text;
        if (key == ":requirements") {
            check_requirements(sec, t.requirements);
        } else if (key == ":types") {
            for (auto &tn : parse_typed_list(sec.items, 1, false))
                t.types.emplace_back(tn.name, tn.type);
        } else if (key == ":constants") {
            auto cs = parse_typed_list(sec.items, 1, false);
            t.constants.insert(t.constants.end(), cs.begin(), cs.end());
        } else if (key == ":predicates") {
            for (std::size_t j = 1; j < sec.items.size(); ++j) {
                const SExpr &p = sec.items[j];
                if (!p.is_list || p.items.empty() || p.items[0].is_list)
                    fail(p, "expected predicate declaration");
                t.predicates.push_back(PredicateDecl{p.items[0].text, parse_typed_list(p.items, 1, true)});
            }
        } else if (key == ":action") {
            t.schemas.push_back(parse_action(sec));
        } else if (key == ":functions" || key == ":derived" || key == ":durative-action" ||
                   key == ":axiom") {
            throw UnsupportedFeature(key + " is not supported");
        } else {
            fail(sec, "unknown domain section " + key);
        }
    }
}

void parse_problem(const SExpr &root, LiftedTask &t) {
    if (!root.head_is("define") || root.items.size() < 2 || !root.items[1].head_is("problem") ||
        root.items[1].items.size() != 2)
        fail(root, "expected (define (problem NAME) ...)");
    t.problem_name = atom_text(root.items[1].items[1], "problem name");
    for (std::size_t i = 2; i < root.items.size(); ++i) {
        const SExpr &sec = root.items[i];
        if (!sec.is_list || sec.items.empty() || sec.items[0].is_list)
            fail(sec, "expected problem section");
        const std::string &key = sec.items[0].text;
        if (key == ":domain") {
            if (sec.items.size() != 2 || atom_text(sec.items[1], "domain name") != t.domain_name)
                fail(sec, "problem refers to a different domain");
        } else if (key == ":requirements") {
            check_requirements(sec, t.requirements);
        } else if (key == ":objects") {
            auto os = parse_typed_list(sec.items, 1, false);
            t.objects.insert(t.objects.end(), os.begin(), os.end());
        } else if (key == ":init") {
            for (std::size_t j = 1; j < sec.items.size(); ++j) {
                const SExpr &a = sec.items[j];
                if (a.head_is("=") || a.head_is("not"))
                    throw UnsupportedFeature("only positive atoms are supported in :init");
                t.init.push_back(parse_atom(a));
            }
        } else if (key == ":goal") {
            if (sec.items.size() != 2)
                fail(sec, ":goal takes one condition");
            parse_condition(sec.items[1], t.goal, nullptr);
        } else if (key == ":metric") {
            throw UnsupportedFeature(":metric is not supported");
        } else {
            fail(sec, "unknown problem section " + key);
        }
    }
}

} // namespace

std::string ground_name(const std::string &head, const std::vector<std::string> &args) {
    if (args.empty())
        return head;
    std::string s = head + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            s += ',';
        s += args[i];
    }
    s += ')';
    return s;
}

LiftedTask parse_task(const std::string &domain_text, const std::string &problem_text) {
    LiftedTask t;
    {
        Reader r(domain_text);
        SExpr root = r.read();
        r.expect_end();
        parse_domain(root, t);
    }
    {
        Reader r(problem_text);
        SExpr root = r.read();
        r.expect_end();
        parse_problem(root, t);
    }
    Validator(t).run();
    return t;
}

Task ground(const LiftedTask &t) {
    std::map<std::string, std::string> parent;
    for (auto &[type, p] : t.types)
        parent[type] = p;
    auto is_subtype = [&](std::string type, const std::string &target) {
        for (int guard = 0; guard < 64; ++guard) {
            if (type == target || target == "object")
                return true;
            auto it = parent.find(type);
            if (it == parent.end())
                return false;
            type = it->second;
        }
        throw ParseError("cyclic type hierarchy", 0, 0);
    };

    std::vector<TypedName> universe = t.constants;
    universe.insert(universe.end(), t.objects.begin(), t.objects.end());
    std::sort(universe.begin(), universe.end(),
              [](const TypedName &a, const TypedName &b) { return a.name < b.name; });
    for (std::size_t i = 1; i < universe.size(); ++i)
        if (universe[i].name == universe[i - 1].name)
            throw ParseError("object declared twice: " + universe[i].name, 0, 0);

    std::set<std::string> fluent_predicates;
    for (auto &s : t.schemas) {
        for (auto &a : s.add)
            fluent_predicates.insert(a.predicate);
        for (auto &a : s.del)
            fluent_predicates.insert(a.predicate);
    }
    auto is_static = [&](const std::string &pred) { return !fluent_predicates.count(pred); };

    std::unordered_set<std::string> static_init;
    std::set<std::string> fact_names;
    std::vector<std::string> init_names;
    for (auto &a : t.init) {
        std::string n = ground_name(a.predicate, a.args);
        if (is_static(a.predicate)) {
            static_init.insert(n);
        } else {
            fact_names.insert(n);
            init_names.push_back(n);
        }
    }
    std::vector<std::string> goal_names;
    for (auto &a : t.goal) {
        std::string n = ground_name(a.predicate, a.args);
        if (is_static(a.predicate) && static_init.count(n))
            continue;
        fact_names.insert(n);
        goal_names.push_back(n);
    }

    struct GroundActionNames {
        std::string name;
        std::vector<std::string> pre, add, del;
    };
    std::vector<GroundActionNames> ground_actions;

    for (const Schema &s : t.schemas) {
        const std::size_t k = s.params.size();
        std::vector<std::vector<std::string>> domains(k);
        for (std::size_t i = 0; i < k; ++i)
            for (auto &o : universe)
                if (is_subtype(o.type, s.params[i].type))
                    domains[i].push_back(o.name);

        std::map<std::string, std::size_t> var_index;
        for (std::size_t i = 0; i < k; ++i)
            var_index[s.params[i].name] = i;
        auto last_var = [&](const std::vector<std::string> &terms) {
            std::size_t last = 0;
            for (auto &term : terms)
                if (term.front() == '?')
                    last = std::max(last, var_index.at(term) + 1);
            return last;
        };
        // checks_at[d]: static atoms / inequalities fully bound after d params.
        std::vector<std::vector<const Atom *>> static_checks(k + 1);
        for (auto &a : s.pre)
            if (is_static(a.predicate))
                static_checks[last_var(a.args)].push_back(&a);
        std::vector<std::vector<std::pair<std::string, std::string>>> distinct_checks(k + 1);
        for (auto &d : s.distinct)
            distinct_checks[last_var({d.first, d.second})].push_back(d);

        std::vector<std::string> binding(k);
        auto resolve = [&](const std::string &term) -> const std::string & {
            return term.front() == '?' ? binding[var_index.at(term)] : term;
        };
        auto instantiate = [&](const Atom &a) {
            std::vector<std::string> args;
            args.reserve(a.args.size());
            for (auto &arg : a.args)
                args.push_back(resolve(arg));
            return ground_name(a.predicate, args);
        };
        auto checks_pass = [&](std::size_t depth) {
            for (const Atom *a : static_checks[depth])
                if (!static_init.count(instantiate(*a)))
                    return false;
            for (auto &[x, y] : distinct_checks[depth])
                if (resolve(x) == resolve(y))
                    return false;
            return true;
        };

        std::function<void(std::size_t)> extend = [&](std::size_t depth) {
            if (!checks_pass(depth))
                return;
            if (depth == k) {
                GroundActionNames g;
                g.name = ground_name(s.name, binding);
                for (auto &a : s.pre)
                    if (!is_static(a.predicate))
                        g.pre.push_back(instantiate(a));
                for (auto &a : s.add)
                    g.add.push_back(instantiate(a));
                for (auto &a : s.del)
                    g.del.push_back(instantiate(a));
                for (auto *v : {&g.pre, &g.add, &g.del})
                    fact_names.insert(v->begin(), v->end());
                ground_actions.push_back(std::move(g));
                return;
            }
            for (auto &obj : domains[depth]) {
                binding[depth] = obj;
                extend(depth + 1);
            }
        };
        extend(0);
    }

    std::vector<std::string> facts(fact_names.begin(), fact_names.end());
    std::unordered_map<std::string, int> fid;
    for (std::size_t i = 0; i < facts.size(); ++i)
        fid[facts[i]] = static_cast<int>(i);
    auto ids = [&](const std::vector<std::string> &names) {
        std::vector<int> out;
        out.reserve(names.size());
        for (auto &n : names)
            out.push_back(fid.at(n));
        return out;
    };

    std::sort(ground_actions.begin(), ground_actions.end(),
              [](const GroundActionNames &a, const GroundActionNames &b) { return a.name < b.name; });
    std::vector<ActionSpec> specs;
    specs.reserve(ground_actions.size());
    for (auto &g : ground_actions)
        specs.push_back(ActionSpec{g.name, ids(g.pre), ids(g.add), ids(g.del)});

    return Task(std::move(facts), std::move(specs), ids(init_names), ids(goal_names));
}

namespace {
void write_typed(std::ostream &out, const std::vector<TypedName> &names) {
    bool first = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!first)
            out << ' ';
        first = false;
        out << names[i].name;
        bool last_of_type = i + 1 == names.size() || names[i + 1].type != names[i].type;
        if (last_of_type && names[i].type != "object")
            out << " - " << names[i].type;
    }
}

void write_atom(std::ostream &out, const Atom &a) {
    out << '(' << a.predicate;
    for (auto &arg : a.args)
        out << ' ' << arg;
    out << ')';
}
} // namespace

std::pair<std::string, std::string> write_pddl(const LiftedTask &t) {
    std::ostringstream d;
    d << "(define (domain " << t.domain_name << ")\n";
    if (!t.requirements.empty()) {
        d << "  (:requirements";
        for (auto &r : t.requirements)
            d << ' ' << r;
        d << ")\n";
    }
    if (!t.types.empty()) {
        d << "  (:types";
        for (auto &[type, parent] : t.types)
            d << ' ' << type << " - " << parent;
        d << ")\n";
    }
    if (!t.constants.empty()) {
        d << "  (:constants ";
        write_typed(d, t.constants);
        d << ")\n";
    }
    d << "  (:predicates";
    for (auto &p : t.predicates) {
        d << "\n    (" << p.name;
        if (!p.params.empty()) {
            d << ' ';
            write_typed(d, p.params);
        }
        d << ')';
    }
    d << ")\n";
    for (auto &s : t.schemas) {
        d << "  (:action " << s.name << "\n    :parameters (";
        write_typed(d, s.params);
        d << ")\n    :precondition (and";
        for (auto &a : s.pre) {
            d << ' ';
            write_atom(d, a);
        }
        for (auto &[x, y] : s.distinct)
            d << " (not (= " << x << ' ' << y << "))";
        d << ")\n    :effect (and";
        for (auto &a : s.add) {
            d << ' ';
            write_atom(d, a);
        }
        for (auto &a : s.del) {
            d << " (not ";
            write_atom(d, a);
            d << ')';
        }
        d << "))\n";
    }
    d << ")\n";

    std::ostringstream p;
    p << "(define (problem " << t.problem_name << ")\n  (:domain " << t.domain_name << ")\n";
    if (!t.objects.empty()) {
        p << "  (:objects ";
        write_typed(p, t.objects);
        p << ")\n";
    }
    p << "  (:init";
    for (auto &a : t.init) {
        p << "\n    ";
        write_atom(p, a);
    }
    p << ")\n  (:goal (and";
    for (auto &a : t.goal) {
        p << "\n    ";
        write_atom(p, a);
    }
    p << ")))\n";
    return {d.str(), p.str()};
}

} // namespace relaxlab
