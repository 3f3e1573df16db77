#include "burnout/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace burnout {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c; break;
        }
    }
    return out;
}

/// Round tick step to 1/2/5 times a power of ten.
double nice_step(double range, int target_ticks) {
    if (range <= 0) return 1.0;
    const double raw = range / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) return m * mag;
    }
    return 10.0 * mag;
}

}  // namespace

std::string render_svg(const Chart& chart) {
    const int margin_left = 64;
    const int margin_right = 150;
    const int margin_top = 40;
    const int margin_bottom = 48;
    const double plot_w = chart.width - margin_left - margin_right;
    const double plot_h = chart.height - margin_top - margin_bottom;

    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    bool first = true;
    for (const ChartSeries& s : chart.series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;
    y_min = std::min(y_min, 0.0);

    const auto px = [&](double x) { return margin_left + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto py = [&](double y) { return margin_top + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << chart.width << "\" height=\""
        << chart.height << "\" viewBox=\"0 0 " << chart.width << ' ' << chart.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << chart.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"15\">" << xml_escape(chart.title) << "</text>\n";

    // Axes with ticks.
    out << "<g stroke=\"#333\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top + plot_h << "\" x2=\""
        << margin_left + plot_w << "\" y2=\"" << margin_top + plot_h << "\"/>\n";
    out << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top << "\" x2=\"" << margin_left
        << "\" y2=\"" << margin_top + plot_h << "\"/>\n";
    const double x_step = nice_step(x_max - x_min, 8);
    for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9; x += x_step) {
        out << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << margin_top + plot_h << "\" x2=\"" << fmt(px(x))
            << "\" y2=\"" << margin_top + plot_h + 4 << "\"/>\n";
        out << "<text x=\"" << fmt(px(x)) << "\" y=\"" << margin_top + plot_h + 16
            << "\" text-anchor=\"middle\" stroke=\"none\">" << fmt(x) << "</text>\n";
    }
    const double y_step = nice_step(y_max - y_min, 6);
    for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-9; y += y_step) {
        out << "<line x1=\"" << margin_left - 4 << "\" y1=\"" << fmt(py(y)) << "\" x2=\"" << margin_left
            << "\" y2=\"" << fmt(py(y)) << "\"/>\n";
        out << "<text x=\"" << margin_left - 8 << "\" y=\"" << fmt(py(y) + 4)
            << "\" text-anchor=\"end\" stroke=\"none\">" << fmt(y) << "</text>\n";
    }
    out << "</g>\n";
    out << "<text x=\"" << margin_left + plot_w / 2 << "\" y=\"" << chart.height - 8
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(chart.x_label) << "</text>\n";
    out << "<text x=\"16\" y=\"" << margin_top + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
        << margin_top + plot_h / 2 << ")\">" << xml_escape(chart.y_label) << "</text>\n";

    // Series.
    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        const ChartSeries& s = chart.series[k];
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        double prev_y = 0;
        bool started = false;
        for (const auto& [x, y] : s.points) {
            if (s.step && started) out << fmt(px(x)) << ',' << fmt(py(prev_y)) << ' ';
            out << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
            prev_y = y;
            started = true;
        }
        out << "\"/>\n";
        const double ly = margin_top + 14 + 16 * static_cast<double>(k);
        out << "<line x1=\"" << margin_left + plot_w + 10 << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
            << margin_left + plot_w + 30 << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << margin_left + plot_w + 36 << "\" y=\"" << fmt(ly)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(s.label) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace burnout
