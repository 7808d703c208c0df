#pragma once

#include "relaxlab/generators.hpp"
#include "relaxlab/task.hpp"

#include <string>
#include <vector>

namespace relaxlab::test {

inline Task make(const std::string &spec) { return generate(parse_generator_spec(spec)); }

inline State state(const Task &t, const std::vector<std::string> &facts) { return t.make_state(facts); }

inline std::vector<int> seq(const Task &t, const std::vector<std::string> &names) { return t.action_ids(names); }

} // namespace relaxlab::test
