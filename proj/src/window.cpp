#include "collabnet/window.hpp"

#include <algorithm>
#include <stdexcept>

namespace collabnet {

std::vector<WindowHandle> enumerate_windows(const EventDataset& ds, const WindowSpec& spec) {
    if (ds.empty()) throw std::invalid_argument("enumerate_windows: empty dataset");
    if (spec.window_days < 1 || spec.step_days < 1)
        throw std::invalid_argument("enumerate_windows: window_days and step_days must be >= 1");

    const Day first_start = ds.first_day;
    const Day last_start = std::max(ds.first_day, ds.last_day - (spec.window_days - 1));

    std::vector<WindowHandle> handles;
    handles.reserve(static_cast<std::size_t>((last_start - first_start) / spec.step_days) + 1);

    auto ts_less = [](const TemporalEdge& e, Instant t) { return e.timestamp < t; };
    for (Day start = first_start; start <= last_start; start += spec.step_days) {
        WindowHandle h;
        h.start_day = start;
        h.end_exclusive = start + spec.window_days;
        auto lo = std::lower_bound(ds.edges.begin(), ds.edges.end(),
                                   start * kSecondsPerDay, ts_less);
        auto hi = std::lower_bound(lo, ds.edges.end(), h.end_exclusive * kSecondsPerDay, ts_less);
        h.first_edge = static_cast<std::size_t>(lo - ds.edges.begin());
        h.last_edge = static_cast<std::size_t>(hi - ds.edges.begin());
        handles.push_back(h);
    }
    return handles;
}

std::span<const TemporalEdge> window_edges(const EventDataset& ds, const WindowHandle& h) {
    return std::span<const TemporalEdge>(ds.edges).subspan(h.first_edge,
                                                           h.last_edge - h.first_edge);
}

}  // namespace collabnet
