#pragma once

#include "relaxlab/generators.hpp"
#include "relaxlab/heuristics.hpp"
#include "relaxlab/task.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace relaxlab {

struct SampleConfig {
    int samples_per_instance = 100;
    // Walk lengths are uniform in [0, floor(factor * L)], factor = num/den,
    // L the length of a reference plan.
    std::int64_t factor_num = 2;
    std::int64_t factor_den = 1;
    std::uint64_t seed = 0;
    HeuristicKind heuristic = HeuristicKind::HFF;
    std::size_t max_states = 200'000; // per valley / exit-distance search
};

// Throws UsageError for a negative or malformed factor ("2", "3/2", "0.5").
void set_walk_factor(SampleConfig &cfg, const std::string &text);

// Length of an EHC(h^FF) plan, else EHC(h+); NoReferencePlan otherwise.
std::size_t reference_plan_length(const Task &task);

std::vector<State> sample_states(const Task &task, const SampleConfig &cfg);
std::vector<State> sample_states(const Task &task, const SampleConfig &cfg, std::size_t plan_length);

// No path from s to a goal along which h never increases.
bool on_valley(const Task &task, const State &s, const Evaluator &h, std::size_t max_states = 200'000);

// Exit distance computed by forward search from s alone. Requires h(s)
// finite and non-zero (PreconditionViolated otherwise).
HeuristicValue sampled_exit_distance(const Task &task, const State &s, const Evaluator &h,
                                     std::size_t max_states = 200'000);

struct InstanceRow {
    std::string domain;
    std::string params; // "k=v;k=v", seed excluded
    std::uint64_t instance_seed = 0;
    int samples = 0;
    int valleys = 0;
    double valley_pct = 0;
    HeuristicValue max_exit_distance = 0;
    std::string flagged_errors; // empty when the instance ran cleanly
};

struct GroupRow {
    std::string domain;
    std::string params;
    int instances = 0; // instances without errors
    double mean_valley_pct = 0;
    double mean_max_exit_distance = 0; // over instances with a finite value
    int infinite_exit_distances = 0;
};

struct SampleReport {
    std::vector<InstanceRow> instances;
    std::vector<GroupRow> groups;
};

SampleReport run_experiment(const std::vector<GeneratorSpec> &specs, const SampleConfig &cfg);

// Columns: domain,params,instance_seed,valley_pct,max_exit_distance,samples,flagged_errors
void write_instances_csv(const SampleReport &report, std::ostream &out);
// Columns: domain,params,instances,mean_valley_pct,mean_max_exit_distance,infinite_exit_distances
void write_groups_csv(const SampleReport &report, std::ostream &out);

} // namespace relaxlab
