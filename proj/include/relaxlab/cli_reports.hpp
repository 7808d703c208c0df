#pragma once

#include "relaxlab/domain_analysis.hpp"
#include "relaxlab/generators.hpp"
#include "relaxlab/state_space.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace relaxlab {

struct TaxonomyInstance {
    std::string spec; // generator spec, e.g. "gripper:balls=2"
    int size = 0;
    std::size_t states = 0;
    bool solvable = true;
    DeadEndClass dead_ends = DeadEndClass::Undirected;
    std::size_t local_minima = 0; // plateaus of that class
    HeuristicValue mlmed = 0;
    HeuristicValue mbed = 0;
    bool hplus_equals_gd = false; // on every reachable state
    LemmaReport lemmas;
    InteractionVerdict interaction = InteractionVerdict::Unknown;
    LocalMinimaVerdict criterion = LocalMinimaVerdict::Unknown;
};

struct TaxonomyCard {
    std::string domain;
    std::string size_param;
    std::vector<TaxonomyInstance> instances;

    // Worst class over the instances; nullopt when empty.
    std::optional<DeadEndClass> dead_ends() const;
    HeuristicValue mlmed() const;
    HeuristicValue mbed() const;
    bool hplus_equals_gd() const;
};

struct TaxonomyOptions {
    std::string domain;
    int size_lo = 1;
    int size_hi = 1;
    std::map<std::string, int> params; // fixed non-size parameters
    std::uint64_t seed = 0;
    std::size_t max_states = 200'000;
    std::size_t fgt_cap = 1'000'000;
    LeafTest test = LeafTest::Leaf;
};

// Benchmark families only; the size parameter is the family's first one.
// Throws UsageError for other names, listing the supported families.
TaxonomyCard build_taxonomy_card(const TaxonomyOptions &opts);

// Throws std::logic_error when an observation contradicts a positive static
// verdict of the same instance.
void check_consistency(const TaxonomyCard &card);

enum class ReportFormat { Text, Csv };

// CSV columns:
// domain,spec,size,states,dead_end_class,local_minima,mlmed,mbed,hplus_equals_gd,lemma1,lemma2,interaction,criterion
std::string emit_report(const TaxonomyCard &card, ReportFormat format);

// Whole command line, argv[0] included. Returns the process exit code:
// 0 ok, 1 domain error, 2 usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

std::string build_id();

} // namespace relaxlab
