#include "relaxlab/sampling.hpp"

#include "relaxlab/errors.hpp"
#include "relaxlab/rng.hpp"
#include "relaxlab/search.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <deque>
#include <exception>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace relaxlab {

namespace {

std::int64_t parse_int(std::string_view s, const std::string &whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw UsageError("bad walk factor '" + whole + "'");
    return v;
}

class CachedH {
    const Evaluator &h_;
    std::unordered_map<State, HeuristicValue> memo_;

public:
    explicit CachedH(const Evaluator &h) : h_(h) {}
    HeuristicValue operator()(const State &s) {
        auto it = memo_.find(s);
        if (it != memo_.end())
            return it->second;
        return memo_.emplace(s, h_(s)).first->second;
    }
};

template <class F>
void for_each_successor(const Task &task, const State &s, F &&f) {
    for (const auto &a : task.actions()) {
        if (!a.pre_set.is_subset_of(s))
            continue;
        State next = s;
        next |= a.add_set;
        next -= a.del_set;
        f(std::move(next));
    }
}

std::string format_params(const GeneratorSpec &spec) {
    std::string out;
    for (const auto &[k, v] : spec.params) {
        if (!out.empty())
            out += ';';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

InstanceRow run_instance(const GeneratorSpec &spec, const SampleConfig &cfg) {
    InstanceRow row;
    row.domain = spec.domain;
    row.params = format_params(spec);
    row.instance_seed = spec.seed;
    try {
        Task task = generate(spec);
        SampleConfig local = cfg;
        local.seed = cfg.seed ^ (spec.seed * 0x9E3779B97F4A7C15ULL);
        std::vector<State> samples = sample_states(task, local);
        Evaluator h(task, cfg.heuristic);
        for (const State &s : samples) {
            if (on_valley(task, s, h, cfg.max_states))
                ++row.valleys;
            HeuristicValue hs = h(s);
            if (hs.is_finite() && hs != 0)
                row.max_exit_distance = std::max(row.max_exit_distance,
                                                 sampled_exit_distance(task, s, h, cfg.max_states));
        }
        row.samples = static_cast<int>(samples.size());
        row.valley_pct = row.samples ? 100.0 * row.valleys / row.samples : 0.0;
    } catch (const Error &e) {
        row.samples = 0;
        row.valleys = 0;
        row.valley_pct = 0;
        row.max_exit_distance = 0;
        row.flagged_errors = e.what();
    }
    return row;
}

} // namespace

void set_walk_factor(SampleConfig &cfg, const std::string &text) {
    std::int64_t num = 0, den = 1;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = parse_int(std::string_view(text).substr(0, slash), text);
        den = parse_int(std::string_view(text).substr(slash + 1), text);
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (text.size() - dot - 1 > 9)
            throw UsageError("walk factor '" + text + "' has too many decimals");
        num = parse_int(digits, text);
        for (std::size_t i = dot + 1; i < text.size(); ++i)
            den *= 10;
    } else {
        num = parse_int(text, text);
    }
    if (num < 0 || den <= 0)
        throw UsageError("walk factor must be a non-negative rational, got '" + text + "'");
    cfg.factor_num = num;
    cfg.factor_den = den;
}

std::size_t reference_plan_length(const Task &task) {
    for (HeuristicKind kind : {HeuristicKind::HFF, HeuristicKind::HPlus}) {
        SearchResult r = enforced_hill_climbing(task, Evaluator(task, kind));
        if (r.outcome == SearchOutcome::Solved)
            return r.plan.size();
    }
    throw NoReferencePlan("enforced hill-climbing found no plan under h^FF or h+");
}

std::vector<State> sample_states(const Task &task, const SampleConfig &cfg) {
    return sample_states(task, cfg, reference_plan_length(task));
}

std::vector<State> sample_states(const Task &task, const SampleConfig &cfg, std::size_t plan_length) {
    if (cfg.samples_per_instance < 1)
        throw UsageError("samples per instance must be at least 1");
    if (cfg.factor_num < 0 || cfg.factor_den <= 0)
        throw UsageError("walk factor must be a non-negative rational");
    const auto max_len =
        static_cast<std::uint64_t>(cfg.factor_num) * plan_length / static_cast<std::uint64_t>(cfg.factor_den);
    Rng rng(cfg.seed);
    std::vector<State> out;
    out.reserve(static_cast<std::size_t>(cfg.samples_per_instance));
    std::vector<int> applicable;
    for (int i = 0; i < cfg.samples_per_instance; ++i) {
        const auto len = static_cast<std::uint64_t>(rng.between(0, static_cast<std::int64_t>(max_len)));
        State s = task.init();
        for (std::uint64_t step = 0; step < len; ++step) {
            applicable.clear();
            for (const auto &a : task.actions())
                if (a.pre_set.is_subset_of(s))
                    applicable.push_back(a.id);
            if (applicable.empty())
                break;
            s = *apply(task, s, applicable[static_cast<std::size_t>(rng.below(applicable.size()))]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

bool on_valley(const Task &task, const State &s, const Evaluator &h, std::size_t max_states) {
    CachedH cached(h);
    std::unordered_set<State> seen{s};
    std::deque<State> queue{s};
    while (!queue.empty()) {
        State v = std::move(queue.front());
        queue.pop_front();
        if (is_goal(task, v))
            return false;
        const HeuristicValue hv = cached(v);
        for_each_successor(task, v, [&](State w) {
            if (seen.contains(w) || cached(w) > hv)
                return;
            if (seen.size() >= max_states)
                throw ResourceExhausted("valley search exceeds " + std::to_string(max_states) + " states");
            seen.insert(w);
            queue.push_back(std::move(w));
        });
    }
    return true;
}

HeuristicValue sampled_exit_distance(const Task &task, const State &s, const Evaluator &h, std::size_t max_states) {
    CachedH cached(h);
    const HeuristicValue level = cached(s);
    if (level.is_infinite() || level == 0)
        throw PreconditionViolated("exit distance needs a finite non-zero heuristic value, got " + level.str());
    std::unordered_map<State, std::int64_t> dist{{s, 0}};
    std::deque<State> queue{s};
    while (!queue.empty()) {
        State v = std::move(queue.front());
        queue.pop_front();
        const std::int64_t d = dist[v];
        std::vector<State> succ;
        for_each_successor(task, v, [&](State w) { succ.push_back(std::move(w)); });
        if (cached(v) == level &&
            std::any_of(succ.begin(), succ.end(), [&](const State &w) { return cached(w) < level; }))
            return d;
        for (State &w : succ) {
            if (dist.contains(w))
                continue;
            if (dist.size() >= max_states)
                throw ResourceExhausted("exit distance search exceeds " + std::to_string(max_states) + " states");
            dist.emplace(w, d + 1);
            queue.push_back(std::move(w));
        }
    }
    return HeuristicValue::infinity();
}

SampleReport run_experiment(const std::vector<GeneratorSpec> &input, const SampleConfig &cfg) {
    SampleReport report;
    std::vector<GeneratorSpec> specs;
    for (const auto &s : input)
        specs.push_back(normalize(s));
    report.instances.resize(specs.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(specs.size())));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < specs.size(); i += workers)
                report.instances[i] = run_instance(specs[i], cfg);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work, w);
    work(0);
    for (auto &t : pool)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);

    std::map<std::pair<std::string, std::string>, std::size_t> index;
    std::vector<int> finite;
    for (const auto &row : report.instances) {
        auto key = std::make_pair(row.domain, row.params);
        auto [it, fresh] = index.emplace(key, report.groups.size());
        if (fresh) {
            report.groups.push_back(GroupRow{row.domain, row.params, 0, 0, 0, 0});
            finite.push_back(0);
        }
        if (!row.flagged_errors.empty())
            continue;
        GroupRow &g = report.groups[it->second];
        ++g.instances;
        g.mean_valley_pct += row.valley_pct;
        if (row.max_exit_distance.is_infinite()) {
            ++g.infinite_exit_distances;
        } else {
            ++finite[it->second];
            g.mean_max_exit_distance += static_cast<double>(row.max_exit_distance.value());
        }
    }
    for (std::size_t i = 0; i < report.groups.size(); ++i) {
        GroupRow &g = report.groups[i];
        if (g.instances)
            g.mean_valley_pct /= g.instances;
        if (finite[i])
            g.mean_max_exit_distance /= finite[i];
    }
    return report;
}

void write_instances_csv(const SampleReport &report, std::ostream &out) {
    out << "domain,params,instance_seed,valley_pct,max_exit_distance,samples,flagged_errors\n";
    for (const auto &r : report.instances)
        out << csv_field(r.domain) << ',' << csv_field(r.params) << ',' << r.instance_seed << ',' << fixed2(r.valley_pct)
            << ',' << r.max_exit_distance.str() << ',' << r.samples << ',' << csv_field(r.flagged_errors) << '\n';
}

void write_groups_csv(const SampleReport &report, std::ostream &out) {
    out << "domain,params,instances,mean_valley_pct,mean_max_exit_distance,infinite_exit_distances\n";
    for (const auto &g : report.groups)
        out << csv_field(g.domain) << ',' << csv_field(g.params) << ',' << g.instances << ','
            << fixed2(g.mean_valley_pct) << ',' << fixed2(g.mean_max_exit_distance) << ','
            << g.infinite_exit_distances << '\n';
}

} // namespace relaxlab
