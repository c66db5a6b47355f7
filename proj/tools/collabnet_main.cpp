#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "collabnet/event_log.hpp"
#include "collabnet/fixtures.hpp"
#include "collabnet/graph.hpp"
#include "collabnet/pipeline.hpp"
#include "collabnet/svg_chart.hpp"

namespace {

using namespace collabnet;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open input file: " + path);
    return in;
}

// Writes to `path`, or to stdout when empty.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    out << content;
}

void report_diagnostics(const ParseResult& pr) {
    for (const auto& d : pr.diagnostics)
        std::cerr << "line " << d.line_number << ": " << d.message << '\n';
    if (!pr.diagnostics.empty())
        std::cerr << pr.diagnostics.size() << " malformed line(s) skipped, " << pr.events.size()
                  << " event(s) accepted\n";
}

std::vector<ChangeEvent> load_events(const std::string& path, bool strict) {
    std::ifstream in = open_input(path);
    ParseResult pr = parse_event_log(in, strict);
    report_diagnostics(pr);
    if (pr.fatal) {
        const auto& d = pr.diagnostics.back();
        throw DataError("strict mode: malformed line " + std::to_string(d.line_number) + ": " +
                        d.message);
    }
    return pr.events;
}

struct AnalyzeFlags {
    std::string input;
    std::string output;
    WindowSpec window;
    std::string fields = "both";
    bool strict = false;
    bool remaining_degree = false;
    std::string from_date, to_date;
    unsigned jobs = 0;  // 0 = hardware concurrency
};

void add_window_flags(CLI::App* cmd, AnalyzeFlags& f) {
    cmd->add_option("input", f.input, "canonical event log")->required();
    cmd->add_option("--window-days", f.window.window_days, "sliding window length in days")
        ->check(CLI::PositiveNumber)
        ->default_val(30);
    cmd->add_option("--step-days", f.window.step_days, "window advance in days")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
    cmd->add_option("--fields", f.fields, "interaction kinds: cc, assignee or both")
        ->check(CLI::IsMember({"cc", "assignee", "both"}))
        ->default_val("both");
    cmd->add_flag("--strict", f.strict, "fail on the first malformed input line");
    cmd->add_flag("--remaining-degree", f.remaining_degree,
                  "assortativity over remaining degrees (degree - 1); numerically identical "
                  "to the default whenever defined");
    cmd->add_option("--from", f.from_date, "drop edges before this date (YYYY-MM-DD)");
    cmd->add_option("--to", f.to_date, "drop edges after this date (YYYY-MM-DD)");
    cmd->add_option("--jobs", f.jobs, "worker threads (default: hardware concurrency)");
}

FieldFilter filter_of(const std::string& s) {
    if (s == "cc") return FieldFilter::CcOnly;
    if (s == "assignee") return FieldFilter::AssigneeOnly;
    return FieldFilter::Both;
}

Day parse_date_or_throw(const std::string& s, const char* flag) {
    auto d = parse_date(s);
    if (!d) throw DataError(std::string(flag) + ": invalid date '" + s + "'");
    return *d;
}

void clamp_dataset(EventDataset& ds, const std::string& from, const std::string& to) {
    if (from.empty() && to.empty()) return;
    Instant lo = from.empty() ? std::numeric_limits<Instant>::min()
                              : parse_date_or_throw(from, "--from") * kSecondsPerDay;
    Instant hi = to.empty() ? std::numeric_limits<Instant>::max()
                            : (parse_date_or_throw(to, "--to") + 1) * kSecondsPerDay;
    std::erase_if(ds.edges,
                  [&](const TemporalEdge& e) { return e.timestamp < lo || e.timestamp >= hi; });
    if (!ds.edges.empty()) {
        ds.first_day = day_of(ds.edges.front().timestamp);
        ds.last_day = day_of(ds.edges.back().timestamp);
    }
}

EventDataset load_dataset(const AnalyzeFlags& f) {
    auto events = load_events(f.input, f.strict);
    EventDataset ds = derive_edges(events, filter_of(f.fields));
    clamp_dataset(ds, f.from_date, f.to_date);
    if (ds.empty()) throw DataError("no edges in dataset (empty log or everything filtered)");
    return ds;
}

TimeSeries analyze(const AnalyzeFlags& f) {
    EventDataset ds = load_dataset(f);
    unsigned jobs = f.jobs ? f.jobs : std::max(1u, std::thread::hardware_concurrency());
    MetricOptions opts{.remaining_degree = f.remaining_degree};
    TimeSeries ts = run_analysis(ds, f.window, opts, jobs);
    ts.meta.filter = filter_of(f.fields);
    return ts;
}

int run(int argc, char** argv) {
    CLI::App app{"collabnet: sliding-window structural analysis of bug-tracker "
                 "collaboration networks"};
    app.require_subcommand(1);

    // ingest
    std::string ingest_in, ingest_out;
    bool ingest_strict = false;
    auto* ingest = app.add_subcommand("ingest", "validate and sort a raw event log");
    ingest->add_option("input", ingest_in, "raw event log")->required();
    ingest->add_option("-o,--output", ingest_out, "output path (default: stdout)");
    ingest->add_flag("--strict", ingest_strict, "fail on the first malformed line");

    // analyze
    AnalyzeFlags an;
    auto* analyze_cmd = app.add_subcommand("analyze", "per-window metric time series as CSV");
    add_window_flags(analyze_cmd, an);
    analyze_cmd->add_option("-o,--output", an.output, "output path (default: stdout)");

    // aggregate
    std::string agg_in, agg_out;
    bool agg_full = false;
    auto* agg = app.add_subcommand("aggregate", "mean +/- std summary of a series CSV");
    agg->add_option("input", agg_in, "series CSV from analyze")->required();
    agg->add_option("-o,--output", agg_out, "output path (default: stdout)");
    agg->add_flag("--full-precision", agg_full, "shortest round-trip doubles instead of 2 dp");

    // snapshot
    AnalyzeFlags sn;
    std::string sn_start, sn_out;
    auto* snap = app.add_subcommand("snapshot", "export one window's LCC as an edge list");
    add_window_flags(snap, sn);
    snap->add_option("--window-start", sn_start, "window start date (YYYY-MM-DD)")->required();
    snap->add_option("-o,--output", sn_out, "output path (default: stdout)");

    // plot
    std::string plot_in, plot_out, plot_metric;
    auto* plot = app.add_subcommand("plot", "SVG line chart of one series metric");
    plot->add_option("input", plot_in, "series CSV from analyze")->required();
    plot->add_option("--metric", plot_metric, "series column to plot")->required();
    plot->add_option("-o,--output", plot_out, "output path (default: stdout)");

    // fixtures generate
    auto* fixtures_cmd = app.add_subcommand("fixtures", "synthetic event logs for testing");
    fixtures_cmd->require_subcommand(1);
    auto* gen = fixtures_cmd->add_subcommand("generate", "emit a deterministic fixture log");
    std::string fx_topology = "star", fx_out;
    fixtures::FixtureSpec fx;
    gen->add_option("--topology", fx_topology, "star|complete|cycle|path|two_components|uniform_random")
        ->required();
    gen->add_option("--n", fx.n, "node count")->default_val(5);
    gen->add_option("--days", fx.days, "span in days")->default_val(30);
    gen->add_option("--events-per-day", fx.events_per_day, "uniform_random event rate")
        ->default_val(8);
    gen->add_option("--seed", fx.seed, "uniform_random seed")->default_val(0);
    gen->add_option("-o,--output", fx_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // help/version exit 0, usage errors exit 1
    }

    if (*ingest) {
        auto events = load_events(ingest_in, ingest_strict);
        std::stable_sort(events.begin(), events.end(),
                         [](const ChangeEvent& a, const ChangeEvent& b) {
                             return a.timestamp < b.timestamp;
                         });
        std::ostringstream out;
        write_events(out, events);
        write_output(ingest_out, out.str());
        std::cerr << "ingested " << events.size() << " event(s)\n";
    } else if (*analyze_cmd) {
        TimeSeries ts = analyze(an);
        std::ostringstream out;
        write_series_csv(out, ts);
        write_output(an.output, out.str());
    } else if (*agg) {
        std::ifstream in = open_input(agg_in);
        TimeSeries ts = read_series_csv(in);
        if (ts.records.empty()) throw DataError("aggregate: series has no rows");
        AggregateSummary s = aggregate(ts);
        std::ostringstream out;
        write_aggregate_csv(out, s, agg_full);
        write_output(agg_out, out.str());
    } else if (*snap) {
        Day start = parse_date_or_throw(sn_start, "--window-start");
        EventDataset ds = load_dataset(sn);
        auto handles = enumerate_windows(ds, sn.window);
        const WindowHandle* hit = nullptr;
        for (const auto& h : handles)
            if (h.start_day == start) hit = &h;
        if (!hit)
            throw DataError("no window starts at " + sn_start + " (enumerated " +
                            format_date(handles.front().start_day) + ".." +
                            format_date(handles.back().start_day) + ")");
        GraphSnapshot g = build_snapshot(window_edges(ds, *hit), hit->start_day);
        if (g.empty()) throw DataError("window at " + sn_start + " is empty");
        ComponentDecomposition cd = connected_components(g);
        GraphSnapshot lcc = induced_subgraph(g, cd.lcc_nodes);
        std::ostringstream out;
        write_edge_list(out, lcc);
        write_output(sn_out, out.str());
    } else if (*plot) {
        std::ifstream in = open_input(plot_in);
        TimeSeries ts = read_series_csv(in);
        if (ts.records.empty()) throw DataError("plot: series has no rows");
        static const std::vector<std::string> metrics = {
            "n_total", "n_lcc", "lcc_fraction", "edges_lcc", "mean_degree",
            "closeness_centralization", "clustering", "assortativity"};
        if (std::find(metrics.begin(), metrics.end(), plot_metric) == metrics.end()) {
            std::cerr << "unknown metric '" << plot_metric << "'; valid metrics:";
            for (const auto& m : metrics) std::cerr << ' ' << m;
            std::cerr << '\n';
            return kExitUsage;
        }
        std::vector<ChartPoint> points;
        points.reserve(ts.records.size());
        for (const auto& r : ts.records) {
            std::optional<double> v;
            if (plot_metric == "n_total") v = static_cast<double>(r.n_total);
            else if (plot_metric == "n_lcc") v = static_cast<double>(r.n_lcc);
            else if (plot_metric == "edges_lcc") v = static_cast<double>(r.edges_lcc);
            else if (plot_metric == "lcc_fraction") v = r.lcc_fraction;
            else if (plot_metric == "mean_degree") v = r.mean_degree;
            else if (plot_metric == "closeness_centralization") v = r.closeness_centralization;
            else if (plot_metric == "clustering") v = r.clustering;
            else v = r.assortativity;
            points.push_back({r.window_start, v});
        }
        write_output(plot_out, render_line_chart(points, plot_metric));
    } else if (*gen) {
        auto topo = fixtures::topology_from_name(fx_topology);
        if (!topo) {
            std::cerr << "unknown topology '" << fx_topology << "'\n";
            return kExitUsage;
        }
        fx.topology = *topo;
        auto events = fixtures::generate(fx);
        std::ostringstream out;
        write_events(out, events);
        write_output(fx_out, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
