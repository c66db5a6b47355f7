#pragma once

#include <optional>
#include <string>
#include <vector>

#include "collabnet/time.hpp"

namespace collabnet {

struct ChartPoint {
    Day day;
    std::optional<double> value;  // nullopt renders as a gap
};

// Standalone SVG line chart: x = window start date, y = metric value, gaps at
// nulls, no interpolation across them. Output is a deterministic function of
// the inputs.
std::string render_line_chart(const std::vector<ChartPoint>& points,
                              const std::string& metric_name);

}  // namespace collabnet
