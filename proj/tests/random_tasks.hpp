#pragma once

#include "relaxlab/rng.hpp"
#include "relaxlab/task.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace relaxlab::test {

enum class RandomShape { Any, SingleAchiever, SinglePrecondition };

inline std::vector<int> random_subset(Rng &rng, int n, int lo, int hi) {
    int k = static_cast<int>(rng.between(lo, std::min(hi, n)));
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i)
        std::swap(all[static_cast<std::size_t>(i)],
                  all[static_cast<std::size_t>(i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i))))]);
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return all;
}

// At most 10 facts and 12 actions.
inline Task random_task(std::uint64_t seed, RandomShape shape = RandomShape::Any) {
    Rng rng(seed * 7919 + 17);
    const int n = static_cast<int>(rng.between(3, 10));
    const int m = static_cast<int>(rng.between(1, 12));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("f" + std::to_string(i));
    std::vector<int> owner(static_cast<std::size_t>(n));
    for (auto &o : owner)
        o = static_cast<int>(rng.below(static_cast<std::uint64_t>(m) + 2)) - 2; // negative: no achiever
    std::vector<ActionSpec> actions;
    for (int a = 0; a < m; ++a) {
        ActionSpec spec;
        spec.name = "a" + std::to_string(a);
        spec.pre = random_subset(rng, n, 0, shape == RandomShape::SinglePrecondition ? 1 : 3);
        if (shape == RandomShape::SingleAchiever) {
            for (int f = 0; f < n; ++f)
                if (owner[static_cast<std::size_t>(f)] == a)
                    spec.add.push_back(f);
        } else {
            spec.add = random_subset(rng, n, 1, 2);
        }
        for (int f : random_subset(rng, n, 0, 2))
            if (std::find(spec.add.begin(), spec.add.end(), f) == spec.add.end())
                spec.del.push_back(f);
        actions.push_back(std::move(spec));
    }
    std::vector<int> init = random_subset(rng, n, 0, 3);
    std::vector<int> goal = random_subset(rng, n, shape == RandomShape::SinglePrecondition ? 0 : 1,
                                          shape == RandomShape::SinglePrecondition ? 1 : 4);
    return Task(names, std::move(actions), init, goal);
}

} // namespace relaxlab::test
