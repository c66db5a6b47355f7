#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "collabnet/event_log.hpp"

namespace collabnet::fixtures {

enum class Topology { Star, Complete, Cycle, Path, TwoComponents, UniformRandom };

std::optional<Topology> topology_from_name(std::string_view name);
const char* topology_name(Topology t);

struct FixtureSpec {
    Topology topology = Topology::Star;
    std::size_t n = 5;              // node count (TwoComponents: star of n-3 plus 3-path)
    std::size_t days = 30;          // span in days
    std::size_t events_per_day = 8; // UniformRandom only
    std::uint64_t seed = 0;         // UniformRandom only
};

// splitmix64: the fixture generator is part of the fixture contract, so the
// exact recurrence is pinned here rather than delegated to an unspecified
// stdlib engine. state += 0x9E3779B97F4A7C15; z = state;
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) *
// 0x94D049BB133111EB; return z ^ (z >> 31).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound) by rejection sampling (no modulo bias).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Deterministic event log whose every window collapses to the requested
// topology (or to a seeded random graph). Days start at 2010-01-01.
// Throws std::invalid_argument on a spec that cannot realize its topology.
std::vector<ChangeEvent> generate(const FixtureSpec& spec);

}  // namespace collabnet::fixtures
