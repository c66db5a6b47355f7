#include "collabnet/pipeline.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace collabnet {

namespace {

const char* filter_name(FieldFilter f) {
    switch (f) {
        case FieldFilter::CcOnly: return "cc";
        case FieldFilter::AssigneeOnly: return "assignee";
        default: return "both";
    }
}

}  // namespace

TimeSeries run_analysis(const EventDataset& ds, const WindowSpec& spec,
                        const MetricOptions& opts, unsigned jobs) {
    std::vector<WindowHandle> handles = enumerate_windows(ds, spec);
    TimeSeries ts;
    ts.meta.window = spec;
    ts.meta.span_first = ds.first_day;
    ts.meta.span_last = ds.last_day;
    ts.meta.source_events = ds.source_events;
    ts.meta.total_edges = ds.edges.size();
    ts.meta.remaining_degree = opts.remaining_degree;
    ts.records.resize(handles.size());

    auto worker = [&](std::atomic<std::size_t>& next) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= handles.size()) break;
            ts.records[i] =
                compute_metric_record(window_edges(ds, handles[i]), handles[i].start_day, opts);
        }
    };

    if (jobs <= 1 || handles.size() < 2) {
        std::atomic<std::size_t> next{0};
        worker(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(handles.size()));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker, std::ref(next));
    }
    return ts;
}

namespace {

struct Welford {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
};

MetricAggregate summarize(const std::vector<MetricRecord>& records,
                          const std::optional<double>& (*get)(const MetricRecord&)) {
    Welford w;
    std::size_t skipped = 0;
    for (const auto& r : records) {
        const std::optional<double>& v = get(r);
        if (v)
            w.add(*v);
        else
            ++skipped;
    }
    MetricAggregate a;
    a.defined_windows = w.n;
    a.skipped_windows = skipped;
    if (w.n > 0) {
        a.mean = w.mean;
        a.std_dev = w.n > 1 ? std::sqrt(w.m2 / static_cast<double>(w.n - 1)) : 0.0;
    }
    return a;
}

MetricAggregate summarize_count(const std::vector<MetricRecord>& records,
                                std::size_t (*get)(const MetricRecord&)) {
    Welford w;
    std::size_t skipped = 0;
    for (const auto& r : records) {
        if (r.n_total == 0) {
            ++skipped;  // empty window: counts carry no graph
            continue;
        }
        w.add(static_cast<double>(get(r)));
    }
    MetricAggregate a;
    a.defined_windows = w.n;
    a.skipped_windows = skipped;
    if (w.n > 0) {
        a.mean = w.mean;
        a.std_dev = w.n > 1 ? std::sqrt(w.m2 / static_cast<double>(w.n - 1)) : 0.0;
    }
    return a;
}

}  // namespace

AggregateSummary aggregate(const TimeSeries& ts) {
    if (ts.records.empty()) throw std::invalid_argument("aggregate: empty time series");
    AggregateSummary s;
    s.total_windows = ts.records.size();
    s.lcc_fraction = summarize(
        ts.records, +[](const MetricRecord& r) -> const std::optional<double>& {
            return r.lcc_fraction;
        });
    s.n_lcc = summarize_count(ts.records, +[](const MetricRecord& r) { return r.n_lcc; });
    s.edges_lcc = summarize_count(ts.records, +[](const MetricRecord& r) { return r.edges_lcc; });
    s.mean_degree = summarize(
        ts.records, +[](const MetricRecord& r) -> const std::optional<double>& {
            return r.mean_degree;
        });
    s.assortativity = summarize(
        ts.records, +[](const MetricRecord& r) -> const std::optional<double>& {
            return r.assortativity;
        });
    s.closeness_centralization = summarize(
        ts.records, +[](const MetricRecord& r) -> const std::optional<double>& {
            return r.closeness_centralization;
        });
    s.clustering = summarize(
        ts.records, +[](const MetricRecord& r) -> const std::optional<double>& {
            return r.clustering;
        });
    return s;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

void write_series_csv(std::ostream& out, const TimeSeries& ts) {
    const auto& m = ts.meta;
    out << "# collabnet time series\n";
    out << "# window_days=" << m.window.window_days << " step_days=" << m.window.step_days
        << " fields=" << filter_name(m.filter) << '\n';
    out << "# span=" << format_date(m.span_first) << ".." << format_date(m.span_last)
        << " source_events=" << m.source_events << " edges=" << m.total_edges << '\n';
    out << "# conventions: metrics on LCC; mean_degree=2E/N on collapsed undirected LCC; "
           "windows anchored to first event day, half-open [start,start+window); "
           "assortativity="
        << (m.remaining_degree ? "remaining-degree" : "degree") << '\n';
    out << "window_start,n_total,n_lcc,lcc_fraction,edges_lcc,mean_degree,"
           "closeness_centralization,clustering,assortativity\n";
    for (const auto& r : ts.records) {
        out << format_date(r.window_start) << ',' << r.n_total << ',' << r.n_lcc << ','
            << opt_field(r.lcc_fraction) << ',' << r.edges_lcc << ','
            << opt_field(r.mean_degree) << ',' << opt_field(r.closeness_centralization) << ','
            << opt_field(r.clustering) << ',' << opt_field(r.assortativity) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

std::optional<double> parse_opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("malformed numeric field '" + s + "'");
    return v;
}

std::size_t parse_count(const std::string& s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("malformed count field '" + s + "'");
    return v;
}

}  // namespace

TimeSeries read_series_csv(std::istream& in) {
    TimeSeries ts;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line.rfind("window_start,", 0) != 0)
                throw std::runtime_error("series CSV: missing header row");
            header_seen = true;
            continue;
        }
        auto f = split_csv(line);
        if (f.size() != 9) throw std::runtime_error("series CSV: expected 9 fields");
        MetricRecord r;
        auto day = parse_date(f[0]);
        if (!day) throw std::runtime_error("series CSV: bad window_start '" + f[0] + "'");
        r.window_start = *day;
        r.n_total = parse_count(f[1]);
        r.n_lcc = parse_count(f[2]);
        r.lcc_fraction = parse_opt(f[3]);
        r.edges_lcc = parse_count(f[4]);
        r.mean_degree = parse_opt(f[5]);
        r.closeness_centralization = parse_opt(f[6]);
        r.clustering = parse_opt(f[7]);
        r.assortativity = parse_opt(f[8]);
        ts.records.push_back(r);
    }
    if (!header_seen) throw std::runtime_error("series CSV: empty input");
    return ts;
}

void write_aggregate_csv(std::ostream& out, const AggregateSummary& s, bool full_precision) {
    auto fmt = [&](const std::optional<double>& v) {
        if (!v) return std::string();
        return full_precision ? format_double(*v) : fixed2(*v);
    };
    auto row = [&](const char* name, const MetricAggregate& a) {
        out << name << ',' << fmt(a.mean) << ',' << fmt(a.std_dev) << ',' << a.defined_windows
            << ',' << a.skipped_windows << '\n';
    };
    out << "# total_windows=" << s.total_windows << '\n';
    out << "metric,mean,std,defined_windows,skipped_windows\n";
    row("lcc_fraction", s.lcc_fraction);
    row("n_lcc", s.n_lcc);
    row("edges_lcc", s.edges_lcc);
    row("mean_degree", s.mean_degree);
    row("assortativity", s.assortativity);
    row("closeness_centralization", s.closeness_centralization);
    row("clustering", s.clustering);
}

}  // namespace collabnet
