#include "collabnet/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace collabnet {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

std::string render_line_chart(const std::vector<ChartPoint>& points,
                              const std::string& metric_name) {
    if (points.empty()) throw std::invalid_argument("render_line_chart: no points");

    Day x_min = points.front().day, x_max = points.back().day;
    double y_min = 0.0, y_max = 0.0;
    bool any = false;
    for (const auto& p : points) {
        if (!p.value) continue;
        if (!any) {
            y_min = y_max = *p.value;
            any = true;
        } else {
            y_min = std::min(y_min, *p.value);
            y_max = std::max(y_max, *p.value);
        }
    }
    if (!any) {
        y_min = 0.0;
        y_max = 1.0;
    }
    if (y_max == y_min) {
        double pad = y_max == 0.0 ? 0.5 : std::abs(y_max) * 0.1;
        y_min -= pad;
        y_max += pad;
    }
    const double x_span = x_max > x_min ? static_cast<double>(x_max - x_min) : 1.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](Day d) { return kLeft + (static_cast<double>(d - x_min) / x_span) * plot_w; };
    auto sy = [&](double v) { return kTop + (1.0 - (v - y_min) / (y_max - y_min)) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << metric_name << "</text>\n";

    // axes
    svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
        << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"black\"/>\n";

    // y ticks
    for (int t = 0; t <= 4; ++t) {
        double v = y_min + (y_max - y_min) * t / 4.0;
        double y = sy(v);
        svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
            << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(kLeft - 9) << "\" y=\"" << num(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_label(v) << "</text>\n";
    }
    // x ticks
    int x_ticks = std::min<int>(6, static_cast<int>(points.size()));
    for (int t = 0; t < x_ticks; ++t) {
        Day d = x_min + static_cast<Day>(std::llround(x_span * t / std::max(1, x_ticks - 1)));
        double x = sx(d);
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_date(d) << "</text>\n";
    }

    // polyline segments between nulls; isolated points become dots
    std::vector<std::pair<double, double>> run;
    auto flush = [&]() {
        if (run.size() == 1) {
            svg << "<circle cx=\"" << num(run[0].first) << "\" cy=\"" << num(run[0].second)
                << "\" r=\"2\" fill=\"steelblue\"/>\n";
        } else if (run.size() > 1) {
            svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < run.size(); ++i) {
                if (i) svg << ' ';
                svg << num(run[i].first) << ',' << num(run[i].second);
            }
            svg << "\"/>\n";
        }
        run.clear();
    };
    for (const auto& p : points) {
        if (p.value)
            run.emplace_back(sx(p.day), sy(*p.value));
        else
            flush();
    }
    flush();

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace collabnet
