#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "collabnet/metrics.hpp"
#include "collabnet/window.hpp"

namespace collabnet {

struct RunMetadata {
    WindowSpec window;
    FieldFilter filter = FieldFilter::Both;
    Day span_first = 0;
    Day span_last = 0;
    std::size_t source_events = 0;
    std::size_t total_edges = 0;
    bool remaining_degree = false;
};

struct TimeSeries {
    std::vector<MetricRecord> records;  // strictly increasing window_start
    RunMetadata meta;
};

// One MetricRecord per window, in start-day order. `jobs` threads fan out
// over windows; output is identical regardless of jobs.
TimeSeries run_analysis(const EventDataset& ds, const WindowSpec& spec,
                        const MetricOptions& opts = {}, unsigned jobs = 1);

struct MetricAggregate {
    std::optional<double> mean;
    std::optional<double> std_dev;  // sample (n-1); 0 by convention for n = 1
    std::size_t defined_windows = 0;
    std::size_t skipped_windows = 0;
};

struct AggregateSummary {
    std::size_t total_windows = 0;
    // Table-1 column order
    MetricAggregate lcc_fraction;
    MetricAggregate n_lcc;
    MetricAggregate edges_lcc;
    MetricAggregate mean_degree;
    MetricAggregate assortativity;
    MetricAggregate closeness_centralization;
    MetricAggregate clustering;
};

// Per-metric mean +/- sample std over non-null windows; all-null metrics
// aggregate to null. Throws on an empty series.
AggregateSummary aggregate(const TimeSeries& ts);

// CSV surface. The series CSV carries `#`-prefixed metadata comments, a
// header row, and empty fields for nulls.
void write_series_csv(std::ostream& out, const TimeSeries& ts);
// Throws std::runtime_error on malformed input.
TimeSeries read_series_csv(std::istream& in);

// Rows `metric,mean,std,defined_windows,skipped_windows`; 2-decimal
// presentation by default, shortest round-trip doubles with full_precision.
void write_aggregate_csv(std::ostream& out, const AggregateSummary& s, bool full_precision);

// Shortest representation that round-trips the double exactly.
std::string format_double(double v);

}  // namespace collabnet
