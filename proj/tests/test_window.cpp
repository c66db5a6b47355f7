#include <doctest.h>

#include <random>
#include <set>

#include "collabnet/window.hpp"

using namespace collabnet;

namespace {

TemporalEdge edge_at(Instant t, const std::string& src = "a", const std::string& dst = "b") {
    return {t, src, dst, Field::CC, "bug"};
}

EventDataset dataset_at_days(const std::vector<double>& days) {
    EventDataset ds;
    for (double d : days)
        ds.edges.push_back(edge_at(static_cast<Instant>(d * kSecondsPerDay)));
    std::sort(ds.edges.begin(), ds.edges.end(),
              [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
    ds.first_day = day_of(ds.edges.front().timestamp);
    ds.last_day = day_of(ds.edges.back().timestamp);
    return ds;
}

}  // namespace

TEST_CASE("60 days of data yield 31 default windows") {
    EventDataset ds = dataset_at_days({0.5, 30.2, 59.5});
    auto handles = enumerate_windows(ds, {});
    REQUIRE(handles.size() == 31);
    CHECK(handles.front().start_day == 0);
    CHECK(handles.back().start_day == 30);
    CHECK(handles.front().end_exclusive == 30);
}

TEST_CASE("short span yields exactly one window at first_day") {
    EventDataset ds = dataset_at_days({2.0, 9.5});
    auto handles = enumerate_windows(ds, {});
    REQUIRE(handles.size() == 1);
    CHECK(handles[0].start_day == 2);
}

TEST_CASE("window boundaries are half-open") {
    EventDataset ds = dataset_at_days({0.0, 15.0, 45.0});
    auto handles = enumerate_windows(ds, {});
    // window starting day 16 covers [16, 46): only the day-45 edge
    const WindowHandle* h16 = nullptr;
    for (const auto& h : handles)
        if (h.start_day == 16) h16 = &h;
    REQUIRE(h16 != nullptr);
    auto edges = window_edges(ds, *h16);
    REQUIRE(edges.size() == 1);
    CHECK(day_of(edges[0].timestamp) == 45);

    // window [0, 30) holds the day-0 and day-15 edges
    auto first = window_edges(ds, handles.front());
    CHECK(first.size() == 2);
}

TEST_CASE("edge exactly at end_exclusive is excluded, at start included") {
    EventDataset ds;
    ds.edges = {edge_at(0), edge_at(30 * kSecondsPerDay)};
    ds.first_day = 0;
    ds.last_day = 30;
    auto handles = enumerate_windows(ds, {});
    auto first = window_edges(ds, handles.front());
    REQUIRE(first.size() == 1);
    CHECK(first[0].timestamp == 0);
    // start day 1: window [1, 31) includes the day-30 edge
    auto second = window_edges(ds, handles[1]);
    REQUIRE(second.size() == 1);
    CHECK(second[0].timestamp == 30 * kSecondsPerDay);
}

TEST_CASE("step_days controls enumeration") {
    EventDataset ds = dataset_at_days({0.0, 59.9});
    auto handles = enumerate_windows(ds, {30, 7});
    REQUIRE(handles.size() == 5);  // starts 0,7,14,21,28
    CHECK(handles.back().start_day == 28);
}

TEST_CASE("empty dataset and invalid specs are rejected") {
    EventDataset empty;
    CHECK_THROWS(enumerate_windows(empty, {}));
    EventDataset ds = dataset_at_days({0.0});
    CHECK_THROWS(enumerate_windows(ds, {0, 1}));
    CHECK_THROWS(enumerate_windows(ds, {30, 0}));
}

TEST_CASE("binary-search ranges equal brute-force filtering on random datasets") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t m = 1 + rng() % 400;
        Instant span = (1 + rng() % 200) * kSecondsPerDay;
        std::vector<double> days;
        EventDataset ds;
        for (std::size_t k = 0; k < m; ++k)
            ds.edges.push_back(edge_at(static_cast<Instant>(rng() % span)));
        std::sort(ds.edges.begin(), ds.edges.end(),
                  [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
        ds.first_day = day_of(ds.edges.front().timestamp);
        ds.last_day = day_of(ds.edges.back().timestamp);

        WindowSpec spec{static_cast<int>(1 + rng() % 45), static_cast<int>(1 + rng() % 5)};
        auto handles = enumerate_windows(ds, spec);

        std::size_t covered = 0;
        for (const auto& h : handles) {
            auto got = window_edges(ds, h);
            std::size_t expect = 0;
            for (const auto& e : ds.edges) {
                if (e.timestamp >= h.start_day * kSecondsPerDay &&
                    e.timestamp < h.end_exclusive * kSecondsPerDay)
                    ++expect;
            }
            CHECK(got.size() == expect);
            covered += got.size();
        }
        (void)covered;

        // one window covering the whole span contains every edge
        WindowSpec whole{static_cast<int>(ds.last_day - ds.first_day + 1), 1};
        auto all = enumerate_windows(ds, whole);
        CHECK(window_edges(ds, all.front()).size() == ds.edges.size());

        // consecutive windows differ only at the trailing/leading step bands
        for (std::size_t i = 1; i < handles.size(); ++i) {
            const auto& prev = handles[i - 1];
            const auto& cur = handles[i];
            std::size_t leaving = 0, entering = 0;
            for (const auto& e : ds.edges) {
                if (e.timestamp >= prev.start_day * kSecondsPerDay &&
                    e.timestamp < cur.start_day * kSecondsPerDay)
                    ++leaving;
                if (e.timestamp >= prev.end_exclusive * kSecondsPerDay &&
                    e.timestamp < cur.end_exclusive * kSecondsPerDay)
                    ++entering;
            }
            std::size_t prev_count = prev.last_edge - prev.first_edge;
            std::size_t cur_count = cur.last_edge - cur.first_edge;
            CHECK(cur_count == prev_count - leaving + entering);
        }
    }
}
