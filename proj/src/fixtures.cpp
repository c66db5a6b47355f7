#include "collabnet/fixtures.hpp"

#include <cstdio>
#include <stdexcept>

namespace collabnet::fixtures {

std::optional<Topology> topology_from_name(std::string_view name) {
    if (name == "star") return Topology::Star;
    if (name == "complete") return Topology::Complete;
    if (name == "cycle") return Topology::Cycle;
    if (name == "path") return Topology::Path;
    if (name == "two_components") return Topology::TwoComponents;
    if (name == "uniform_random") return Topology::UniformRandom;
    return std::nullopt;
}

const char* topology_name(Topology t) {
    switch (t) {
        case Topology::Star: return "star";
        case Topology::Complete: return "complete";
        case Topology::Cycle: return "cycle";
        case Topology::Path: return "path";
        case Topology::TwoComponents: return "two_components";
        case Topology::UniformRandom: return "uniform_random";
    }
    return "?";
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ull - ~0ull % bound;
    for (;;) {
        std::uint64_t v = next();
        if (v < limit) return v % bound;
    }
}

namespace {

constexpr Day kFixtureEpoch = days_from_civil(2010, 1, 1);

std::string node_id(std::size_t i, std::size_t n) {
    int width = 1;
    for (std::size_t m = n - 1; m >= 10; m /= 10) ++width;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "u%0*zu", width, i);
    return buf;
}

// One topology edge per event; timestamps step one second apart within a day.
struct Emitter {
    std::vector<ChangeEvent>& out;
    std::size_t n;
    Day day;
    std::int64_t second = 0;

    void edge(std::size_t from, std::size_t to) {
        ChangeEvent ev;
        ev.bug_id = "fixture";
        ev.timestamp = (kFixtureEpoch + day) * kSecondsPerDay + second++;
        ev.actor_id = node_id(from, n);
        ev.field = Field::CC;
        ev.added_user_ids = {node_id(to, n)};
        out.push_back(std::move(ev));
    }
};

}  // namespace

std::vector<ChangeEvent> generate(const FixtureSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("fixture: n must be >= 2");
    if (spec.days < 1) throw std::invalid_argument("fixture: days must be >= 1");
    if (spec.topology == Topology::TwoComponents && spec.n < 6)
        throw std::invalid_argument("fixture: two_components needs n >= 6");
    if (spec.topology == Topology::Cycle && spec.n < 3)
        throw std::invalid_argument("fixture: cycle needs n >= 3");
    if (spec.topology == Topology::UniformRandom && spec.events_per_day < 1)
        throw std::invalid_argument("fixture: uniform_random needs events_per_day >= 1");

    std::vector<ChangeEvent> events;
    SplitMix64 rng(spec.seed);
    for (std::size_t d = 0; d < spec.days; ++d) {
        Emitter em{events, spec.n, static_cast<Day>(d)};
        switch (spec.topology) {
            case Topology::Star:
                for (std::size_t i = 1; i < spec.n; ++i) em.edge(0, i);
                break;
            case Topology::Complete:
                for (std::size_t i = 0; i < spec.n; ++i)
                    for (std::size_t j = i + 1; j < spec.n; ++j) em.edge(i, j);
                break;
            case Topology::Cycle:
                for (std::size_t i = 0; i < spec.n; ++i) em.edge(i, (i + 1) % spec.n);
                break;
            case Topology::Path:
                for (std::size_t i = 0; i + 1 < spec.n; ++i) em.edge(i, i + 1);
                break;
            case Topology::TwoComponents:
                // star on the first n-3 nodes, 3-path on the rest
                for (std::size_t i = 1; i < spec.n - 3; ++i) em.edge(0, i);
                em.edge(spec.n - 3, spec.n - 2);
                em.edge(spec.n - 2, spec.n - 1);
                break;
            case Topology::UniformRandom:
                for (std::size_t k = 0; k < spec.events_per_day; ++k) {
                    std::size_t from = rng.next_below(spec.n);
                    std::size_t to = rng.next_below(spec.n - 1);
                    if (to >= from) ++to;
                    em.edge(from, to);
                }
                break;
        }
    }
    return events;
}

}  // namespace collabnet::fixtures
