#pragma once

#include "relaxlab/pddl.hpp"
#include "relaxlab/task.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace relaxlab {

struct GeneratorSpec {
    std::string domain;
    std::map<std::string, int> params;
    std::uint64_t seed = 0;
};

struct ParamRange {
    std::string name;
    int lo;
    int hi;
    int fallback;
};

// Benchmark families first, then the named worked-example fixtures.
const std::vector<std::string> &generator_names();
bool is_benchmark_family(const std::string &domain);
// Throws UsageError for unknown domains.
const std::vector<ParamRange> &generator_params(const std::string &domain);

// Fills in defaults and checks ranges; throws UsageError on violations.
GeneratorSpec normalize(const GeneratorSpec &spec);

LiftedTask generate_lifted(const GeneratorSpec &spec);
std::pair<std::string, std::string> generate_pddl(const GeneratorSpec &spec);
Task generate(const GeneratorSpec &spec);

// "gripper", "gripper:balls=2", "logistics:cities=2,size=2,seed=5".
GeneratorSpec parse_generator_spec(const std::string &text);
std::string format_generator_spec(const GeneratorSpec &spec);

} // namespace relaxlab
