#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "collabnet/event_log.hpp"
#include "collabnet/time.hpp"

namespace collabnet {

struct WindowSpec {
    int window_days = 30;
    int step_days = 1;
};

// Half-open window [start, start + window_days) in whole UTC days, plus the
// edge index range it selects in the sorted dataset.
struct WindowHandle {
    Day start_day = 0;
    Day end_exclusive = 0;
    std::size_t first_edge = 0;  // [first_edge, last_edge)
    std::size_t last_edge = 0;
};

// Start days run from the dataset's first day through
// max(first, last - (window_days - 1)), stepping step_days. Edge ranges are
// found by binary search over the timestamp-sorted dataset.
// Throws std::invalid_argument on an empty dataset or invalid spec.
std::vector<WindowHandle> enumerate_windows(const EventDataset& ds, const WindowSpec& spec);

std::span<const TemporalEdge> window_edges(const EventDataset& ds, const WindowHandle& h);

}  // namespace collabnet
