#include "relaxlab/cli_reports.hpp"

#include "relaxlab/errors.hpp"
#include "relaxlab/heuristics.hpp"
#include "relaxlab/pddl.hpp"
#include "relaxlab/sampling.hpp"
#include "relaxlab/search.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef RELAXLAB_REVISION
#define RELAXLAB_REVISION "unknown"
#endif
#ifndef RELAXLAB_VERSION
#define RELAXLAB_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;

namespace relaxlab {

std::string build_id() { return std::string("relaxlab ") + RELAXLAB_VERSION + " (" + RELAXLAB_REVISION + ")"; }

namespace {

struct Context {
    std::ostream &out;
    std::ostream &err;
    std::string out_dir;

    fs::path base() const {
        if (!out_dir.empty())
            return out_dir;
        if (const char *env = std::getenv("RELAXLAB_OUT_DIR"); env && *env)
            return env;
        return ".";
    }

    // Relative output paths land under the output directory.
    fs::path output(const std::string &name) const {
        fs::path p = name;
        if (p.is_relative())
            p = base() / p;
        if (p.has_parent_path())
            fs::create_directories(p.parent_path());
        return p;
    }
};

std::string read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path &p, const std::string &text) {
    std::ofstream out(p, std::ios::binary);
    if (!out || !(out << text))
        throw UsageError("cannot write " + p.string());
}

// A directory holding domain.pddl and problem.pddl, a domain file plus
// --problem, or a generator spec.
Task load_task(const std::string &ref, const std::string &problem) {
    if (fs::is_directory(ref))
        return ground(parse_task(read_file(fs::path(ref) / "domain.pddl"), read_file(fs::path(ref) / "problem.pddl")));
    if (fs::is_regular_file(ref)) {
        if (problem.empty())
            throw UsageError("'" + ref + "' is a file; pass the problem file with --problem");
        return ground(parse_task(read_file(ref), read_file(problem)));
    }
    if (!problem.empty())
        throw UsageError("--problem needs a domain file");
    return generate(parse_generator_spec(ref));
}

int parse_int(const std::string &s, const std::string &what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError("bad " + what + " '" + s + "'");
    return v;
}

// "k=v" or "k=lo..hi".
std::tuple<std::string, int, int> parse_param(const std::string &text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw UsageError("parameter '" + text + "' is not of the form key=value");
    std::string key = text.substr(0, eq), value = text.substr(eq + 1);
    if (auto dots = value.find(".."); dots != std::string::npos) {
        int lo = parse_int(value.substr(0, dots), "range"), hi = parse_int(value.substr(dots + 2), "range");
        if (lo > hi)
            throw UsageError("empty range '" + text + "'");
        return {key, lo, hi};
    }
    int v = parse_int(value, "parameter value");
    return {key, v, v};
}

std::pair<int, int> parse_range(const std::string &text) {
    auto [k, lo, hi] = parse_param("size=" + text);
    return {lo, hi};
}

std::string join_names(const Task &task, const std::vector<int> &actions) {
    std::string s;
    for (int a : actions)
        s += (s.empty() ? "" : " ") + task.action(a).name;
    return s;
}

std::vector<std::string> split_facts(const std::string &text) {
    // Fact names contain commas, so facts are separated by ';' or whitespace.
    std::vector<std::string> facts;
    std::string cur;
    for (char c : text) {
        if (c == ';' || c == ' ' || c == '\t' || c == '\n') {
            if (!cur.empty())
                facts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        facts.push_back(cur);
    return facts;
}

HeuristicKind parse_kind(const std::string &name, bool allow_oracle = true) {
    HeuristicKind k = parse_heuristic_kind(name);
    if (!allow_oracle && k == HeuristicKind::Oracle)
        throw UsageError("the oracle heuristic is not available here");
    return k;
}

// --- subcommands -----------------------------------------------------------

struct GenArgs {
    std::string domain;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    std::string out;
};

void cmd_gen(const Context &ctx, const GenArgs &a) {
    GeneratorSpec spec{a.domain, {}, a.seed};
    for (const auto &p : a.params) {
        auto [k, lo, hi] = parse_param(p);
        if (lo != hi)
            throw UsageError("gen takes single values, not ranges");
        spec.params[k] = lo;
    }
    spec = normalize(spec);
    auto [domain, problem] = generate_pddl(spec);
    fs::path dir = a.out.empty() ? ctx.base() : ctx.output(a.out);
    fs::create_directories(dir);
    write_file(dir / "domain.pddl", domain);
    write_file(dir / "problem.pddl", problem);
    ctx.out << "generated " << format_generator_spec(spec) << " into " << dir.string() << '\n';
}

struct TaskArgs {
    std::string task;
    std::string problem;
};

void cmd_parse(const Context &ctx, const TaskArgs &a, bool list) {
    Task t = load_task(a.task, a.problem);
    ctx.out << "facts: " << t.facts().size() << '\n';
    ctx.out << "actions: " << t.actions().size() << '\n';
    ctx.out << "init: " << t.format_state(t.init()) << '\n';
    std::string goal;
    for (int g : t.goal())
        goal += (goal.empty() ? "" : " ") + t.facts()[static_cast<std::size_t>(g)].name;
    ctx.out << "goal: {" << goal << "}\n";
    if (list) {
        for (const auto &f : t.facts())
            ctx.out << "fact " << f.name << '\n';
        for (const auto &act : t.actions())
            ctx.out << "action " << act.name << '\n';
    }
}

void cmd_heuristic(const Context &ctx, const TaskArgs &a, const std::string &state, const std::string &kind) {
    Task t = load_task(a.task, a.problem);
    State s = state == "init" ? t.init() : t.make_state(split_facts(state));
    HeuristicKind k = parse_kind(kind);
    if (k == HeuristicKind::HFF) {
        FFResult r = h_ff(t, s);
        ctx.out << "hff = " << r.value.str() << '\n';
        if (r.plan)
            ctx.out << "relaxed plan: " << join_names(t, r.plan->actions) << '\n';
        return;
    }
    ctx.out << to_string(k) << " = " << Evaluator(t, k)(s).str() << '\n';
}

struct TopologyArgs {
    std::string kind = "hplus";
    std::size_t max_states = 200'000;
    std::string dot, csv;
};

void cmd_topology(const Context &ctx, const TaskArgs &a, const TopologyArgs &o) {
    Task t = load_task(a.task, a.problem);
    StateSpace sp = enumerate(t, parse_kind(o.kind, false), o.max_states);
    TopologyReport r = topology_report(sp);
    ctx.out << "states: " << sp.size() << '\n';
    ctx.out << "dead-end class: " << to_string(r.dead_ends) << '\n';
    for (PlateauClass c : {PlateauClass::RecognizedDeadEnd, PlateauClass::LocalMinimum, PlateauClass::Bench,
                           PlateauClass::Contour, PlateauClass::GlobalMinimum})
        ctx.out << to_string(c) << " plateaus: " << r.count(c) << '\n';
    ctx.out << "mlmed: " << r.mlmed.str() << '\n';
    ctx.out << "mbed: " << r.mbed.str() << '\n';
    ctx.out << "init: h=" << sp.h[0].str() << " gd=" << sp.gd[0].str()
            << " ed=" << (r.ed[0] ? r.ed[0]->str() : std::string("-")) << " class=" << to_string(r.class_of(0))
            << '\n';
    if (!o.dot.empty()) {
        std::ostringstream s;
        export_dot(t, sp, s);
        write_file(ctx.output(o.dot), s.str());
    }
    if (!o.csv.empty()) {
        std::ostringstream s;
        export_csv(sp, r, s);
        write_file(ctx.output(o.csv), s.str());
    }
}

int cmd_plan(const Context &ctx, const TaskArgs &a, const std::string &kind, std::uint64_t budget) {
    Task t = load_task(a.task, a.problem);
    SearchResult r = enforced_hill_climbing(t, Evaluator(t, parse_kind(kind)), budget);
    ctx.out << "outcome: " << to_string(r.outcome) << '\n';
    ctx.out << "evaluations: " << r.stats.evaluations << '\n';
    std::string depths;
    for (int d : r.stats.depths)
        depths += (depths.empty() ? "" : " ") + std::to_string(d);
    ctx.out << "depths: " << (depths.empty() ? "-" : depths) << '\n';
    if (r.outcome == SearchOutcome::Solved) {
        ctx.out << "plan length: " << r.plan.size() << '\n';
        for (int act : r.plan)
            ctx.out << t.action(act).name << '\n';
        return 0;
    }
    ctx.out << "best h: " << r.best_h.str() << '\n';
    ctx.err << "error: no plan found (" << to_string(r.outcome) << ")\n";
    return 1;
}

struct SampleArgs {
    std::string domain;
    std::vector<std::string> params;
    int per_group = 10;
    int samples = 100;
    std::string factor = "2";
    std::uint64_t seed = 0;
    std::string kind = "hff";
    std::size_t max_states = 200'000;
    std::string csv, groups_csv;
};

void cmd_sample(const Context &ctx, const SampleArgs &a) {
    if (a.per_group < 1)
        throw UsageError("--per-group must be at least 1");
    std::vector<std::tuple<std::string, int, int>> ranges;
    for (const auto &p : a.params)
        ranges.push_back(parse_param(p));
    // Cartesian product, last parameter fastest.
    std::vector<std::map<std::string, int>> combos{{}};
    for (const auto &[k, lo, hi] : ranges) {
        std::vector<std::map<std::string, int>> next;
        for (const auto &c : combos)
            for (int v = lo; v <= hi; ++v) {
                auto m = c;
                m[k] = v;
                next.push_back(std::move(m));
            }
        combos = std::move(next);
    }
    std::vector<GeneratorSpec> specs;
    for (const auto &c : combos)
        for (int k = 1; k <= a.per_group; ++k)
            specs.push_back(normalize(GeneratorSpec{a.domain, c, static_cast<std::uint64_t>(k)}));

    SampleConfig cfg;
    cfg.samples_per_instance = a.samples;
    set_walk_factor(cfg, a.factor);
    cfg.seed = a.seed;
    cfg.heuristic = parse_kind(a.kind, false);
    cfg.max_states = a.max_states;
    SampleReport r = run_experiment(specs, cfg);
    write_groups_csv(r, ctx.out);
    if (!a.csv.empty()) {
        std::ostringstream s;
        write_instances_csv(r, s);
        write_file(ctx.output(a.csv), s.str());
    }
    if (!a.groups_csv.empty()) {
        std::ostringstream s;
        write_groups_csv(r, s);
        write_file(ctx.output(a.groups_csv), s.str());
    }
}

struct AnalyzeArgs {
    std::size_t fgt_cap = 1'000'000;
    bool with_space = false;
    bool occurrence = false;
    std::size_t max_states = 200'000;
    std::string kv;
};

void cmd_analyze(const Context &ctx, const TaskArgs &a, const AnalyzeArgs &o) {
    Task t = load_task(a.task, a.problem);
    AnalysisReport r = analyze(t, o.fgt_cap, o.occurrence ? LeafTest::Occurrence : LeafTest::Leaf);
    auto name = [&](int act) { return act < 0 ? std::string("-") : t.action(act).name; };
    auto fact = [&](int f) { return t.facts()[static_cast<std::size_t>(f)].name; };
    auto tf = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream kv;

    ctx.out << "facts: " << t.facts().size() << "  actions: " << t.actions().size() << '\n';
    kv << "facts=" << t.facts().size() << "\nactions=" << t.actions().size() << '\n';

    ctx.out << "\naction flags (inv, at-least-inv, static-add, relevant-del):\n";
    for (const auto &act : t.actions()) {
        const ActionFlag &f = r.flags[static_cast<std::size_t>(act.id)];
        ctx.out << "  " << act.name << "  " << (f.invertible ? "inv:" + name(f.inverse) : "-") << "  "
                << (f.at_least_invertible ? "weak:" + name(f.weak_inverse) : "-") << "  "
                << (f.static_add_effects ? "static" : "-") << "  " << (f.relevant_delete_effects ? "relevant" : "-")
                << (f.applicable ? "" : "  (never applicable)") << '\n';
        kv << "flag." << act.name << '=' << tf(f.invertible) << ',' << tf(f.at_least_invertible) << ','
           << tf(f.static_add_effects) << ',' << tf(f.relevant_delete_effects) << ',' << tf(f.applicable) << '\n';
    }

    const LemmaReport &l = r.lemmas;
    ctx.out << "\nall actions invertible: " << tf(l.lemma1) << '\n'
            << "at least invertible or static: " << tf(l.lemma2) << '\n'
            << "unique achievers: " << tf(l.prop2) << '\n'
            << "single goal, single preconditions: " << tf(l.prop3) << '\n'
            << "same, deletes within preconditions: " << tf(l.prop4) << '\n';
    kv << "lemma1=" << tf(l.lemma1) << "\nlemma2=" << tf(l.lemma2) << "\nprop2=" << tf(l.prop2)
       << "\nprop3=" << tf(l.prop3) << "\nprop4=" << tf(l.prop4) << '\n';

    ctx.out << "\nfact generation tree: " << r.fgt_nodes << " nodes" << (r.fgt_truncated ? " (truncated)" : "")
            << '\n';
    kv << "fgt_nodes=" << r.fgt_nodes << "\nfgt_truncated=" << tf(r.fgt_truncated) << '\n';
    ctx.out << "conflicts: " << r.conflicts.size() << '\n';
    kv << "conflicts=" << r.conflicts.size() << '\n';
    for (std::size_t i = 0; i < r.conflicts.size(); ++i) {
        const Conflict &c = r.conflicts[i];
        std::string victim = c.victim < 0 ? std::string("goal") : name(c.victim);
        ctx.out << "  " << to_string(c.kind) << ": " << name(c.deleter) << " deletes " << fact(c.fact)
                << " needed by " << victim << "; repairable=" << to_string(c.repairable);
        if (c.repair_witness >= 0)
            ctx.out << " via " << name(c.repair_witness);
        ctx.out << '\n';
        kv << "conflict." << i << '=' << to_string(c.kind) << ',' << name(c.deleter) << ',' << victim << ','
           << fact(c.fact) << ',' << to_string(c.repairable) << ',' << name(c.repair_witness) << '\n';
    }

    ctx.out << "\ninteraction verdict: " << to_string(r.interaction) << '\n';
    ctx.out << "no-local-minima criterion: " << to_string(r.criterion.verdict)
            << (o.occurrence ? " (occurrence test)" : "") << '\n';
    if (!r.criterion.not_invertible.empty())
        ctx.out << "  not at least invertible: " << join_names(t, r.criterion.not_invertible) << '\n';
    if (!r.criterion.failing_actions.empty())
        ctx.out << "  failing actions: " << join_names(t, r.criterion.failing_actions) << '\n';
    kv << "interaction=" << to_string(r.interaction) << "\ncriterion=" << to_string(r.criterion.verdict)
       << "\ncriterion_not_invertible=" << join_names(t, r.criterion.not_invertible)
       << "\ncriterion_failing=" << join_names(t, r.criterion.failing_actions) << '\n';

    if (o.with_space) {
        StateSpace sp = enumerate(t, HeuristicKind::HPlus, o.max_states);
        TopologyReport topo = topology_report(sp);
        bool eq = std::equal(sp.h.begin(), sp.h.end(), sp.gd.begin());
        ctx.out << "\nstate space: " << sp.size() << " states, dead-end class " << to_string(topo.dead_ends)
                << ", mlmed " << topo.mlmed.str() << ", mbed " << topo.mbed.str() << ", h+ = gd everywhere: "
                << tf(eq) << '\n';
        kv << "states=" << sp.size() << "\ndead_end_class=" << to_string(topo.dead_ends)
           << "\nmlmed=" << topo.mlmed.str() << "\nmbed=" << topo.mbed.str() << "\nhplus_equals_gd=" << tf(eq)
           << '\n';
    }
    if (!o.kv.empty())
        write_file(ctx.output(o.kv), kv.str());
}

struct TaxonomyArgs {
    std::string family;
    std::string sizes;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::size_t max_states = 200'000;
    std::size_t fgt_cap = 1'000'000;
    bool occurrence = false;
    std::string out;
};

void cmd_taxonomy(const Context &ctx, const TaxonomyArgs &a) {
    TaxonomyOptions o;
    o.domain = a.family;
    std::tie(o.size_lo, o.size_hi) = parse_range(a.sizes);
    for (const auto &p : a.params) {
        auto [k, lo, hi] = parse_param(p);
        if (lo != hi)
            throw UsageError("only the size parameter may be a range");
        o.params[k] = lo;
    }
    o.seed = a.seed;
    o.max_states = a.max_states;
    o.fgt_cap = a.fgt_cap;
    o.test = a.occurrence ? LeafTest::Occurrence : LeafTest::Leaf;
    ReportFormat f = a.format == "csv" ? ReportFormat::Csv : ReportFormat::Text;
    std::string text = emit_report(build_taxonomy_card(o), f);
    ctx.out << text;
    if (!a.out.empty())
        write_file(ctx.output(a.out), text);
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Delete-relaxation topology lab for STRIPS tasks", "relaxlab"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(0, 1);
    bool version = false;
    app.add_flag("--version", version, "Print the build identifier");
    Context ctx{out, err, {}};
    app.add_option("--out-dir", ctx.out_dir, "Directory for relative output paths (default $RELAXLAB_OUT_DIR or .)");

    auto add_task = [](CLI::App *sub, TaskArgs &t) {
        sub->add_option("task", t.task, "Directory with domain.pddl/problem.pddl, a domain file, or a generator spec")
            ->required();
        sub->add_option("--problem", t.problem, "Problem file when TASK is a domain file");
    };
    const std::vector<std::string> kinds{"hplus", "hff", "goalcount", "oracle"};
    const std::vector<std::string> search_kinds{"hplus", "hff", "goalcount"};

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write a generated instance as PDDL");
    gen_cmd->add_option("domain", gen.domain, "Generator name")->required();
    gen_cmd->add_option("--param", gen.params, "key=value, repeatable");
    gen_cmd->add_option("--seed", gen.seed, "Instance seed");
    gen_cmd->add_option("--out", gen.out, "Output directory");

    TaskArgs parse_task_args;
    bool list = false;
    auto *parse_cmd = app.add_subcommand("parse", "Parse and ground a task, print a summary");
    add_task(parse_cmd, parse_task_args);
    parse_cmd->add_flag("--list", list, "Also list facts and actions");

    TaskArgs h_task;
    std::string h_state = "init", h_kind = "hplus";
    auto *h_cmd = app.add_subcommand("heuristic", "Evaluate a heuristic on one state");
    add_task(h_cmd, h_task);
    h_cmd->add_option("--state", h_state, "'init' or facts separated by ';'");
    h_cmd->add_option("--h", h_kind, "Heuristic")->check(CLI::IsMember(kinds));

    TaskArgs topo_task;
    TopologyArgs topo;
    auto *topo_cmd = app.add_subcommand("topology", "Enumerate the state space and classify its topology");
    add_task(topo_cmd, topo_task);
    topo_cmd->add_option("--h", topo.kind, "Heuristic")->check(CLI::IsMember(search_kinds));
    topo_cmd->add_option("--max-states", topo.max_states, "Enumeration cap");
    topo_cmd->add_option("--dot", topo.dot, "Write the state graph as DOT");
    topo_cmd->add_option("--csv", topo.csv, "Write per-state CSV");

    TaskArgs plan_task;
    std::string plan_kind = "hff";
    std::uint64_t budget = 1'000'000;
    auto *plan_cmd = app.add_subcommand("plan", "Run enforced hill-climbing");
    add_task(plan_cmd, plan_task);
    plan_cmd->add_option("--h", plan_kind, "Heuristic")->check(CLI::IsMember(search_kinds));
    plan_cmd->add_option("--budget", budget, "Heuristic evaluation budget");

    SampleArgs sample;
    auto *sample_cmd = app.add_subcommand("sample", "Sample states by random walks and measure valleys");
    sample_cmd->add_option("--domain", sample.domain, "Generator name")->required();
    sample_cmd->add_option("--param", sample.params, "key=value or key=lo..hi, repeatable");
    sample_cmd->add_option("--per-group", sample.per_group, "Instances per parameter combination");
    sample_cmd->add_option("--samples", sample.samples, "Samples per instance");
    sample_cmd->add_option("--factor", sample.factor, "Walk length factor (e.g. 2, 3/2, 0.5)");
    sample_cmd->add_option("--seed", sample.seed, "Sampling seed");
    sample_cmd->add_option("--h", sample.kind, "Heuristic")->check(CLI::IsMember(search_kinds));
    sample_cmd->add_option("--max-states", sample.max_states, "Cap per valley or exit-distance search");
    sample_cmd->add_option("--csv", sample.csv, "Per-instance CSV");
    sample_cmd->add_option("--groups-csv", sample.groups_csv, "Per-group CSV");

    TaskArgs an_task;
    AnalyzeArgs an;
    auto *an_cmd = app.add_subcommand("analyze", "Static analysis: flags, lemmas, conflicts, verdicts");
    add_task(an_cmd, an_task);
    an_cmd->add_option("--fgt-cap", an.fgt_cap, "Fact generation tree node cap");
    an_cmd->add_flag("--with-space", an.with_space, "Also enumerate the state space under h+");
    an_cmd->add_flag("--occurrence-test", an.occurrence, "Use the occurrence form of the sub-tree test");
    an_cmd->add_option("--max-states", an.max_states, "Enumeration cap for --with-space");
    an_cmd->add_option("--kv", an.kv, "Write a key=value report");

    TaxonomyArgs tax;
    auto *tax_cmd = app.add_subcommand("taxonomy", "Observed and proved topology of a benchmark family");
    tax_cmd->add_option("family", tax.family, "Benchmark family")->required();
    tax_cmd->add_option("--sizes", tax.sizes, "Size range lo..hi")->required();
    tax_cmd->add_option("--param", tax.params, "Fixed key=value, repeatable");
    tax_cmd->add_option("--seed", tax.seed, "Instance seed");
    tax_cmd->add_option("--format", tax.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    tax_cmd->add_option("--max-states", tax.max_states, "Enumeration cap");
    tax_cmd->add_option("--fgt-cap", tax.fgt_cap, "Fact generation tree node cap");
    tax_cmd->add_flag("--occurrence-test", tax.occurrence, "Use the occurrence form of the sub-tree test");
    tax_cmd->add_option("--out", tax.out, "Also write the card to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (version) {
        out << build_id() << '\n';
        return 0;
    }

    try {
        if (*gen_cmd)
            cmd_gen(ctx, gen);
        else if (*parse_cmd)
            cmd_parse(ctx, parse_task_args, list);
        else if (*h_cmd)
            cmd_heuristic(ctx, h_task, h_state, h_kind);
        else if (*topo_cmd)
            cmd_topology(ctx, topo_task, topo);
        else if (*plan_cmd)
            return cmd_plan(ctx, plan_task, plan_kind, budget);
        else if (*sample_cmd)
            cmd_sample(ctx, sample);
        else if (*an_cmd)
            cmd_analyze(ctx, an_task, an);
        else if (*tax_cmd)
            cmd_taxonomy(ctx, tax);
        else {
            err << app.help();
            return 2;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const fs::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace relaxlab
