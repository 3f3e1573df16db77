#pragma once

#include <string>
#include <vector>

namespace burnout {

/// Minimal data-faithful SVG charts: line series over shared axes, with
/// optional per-series step rendering. Output is deterministic (fixed
/// precision, no timestamps).
struct ChartSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
    bool step = false;  // draw as a step function (histograms, CDFs)
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
    int width = 860;
    int height = 480;
};

std::string render_svg(const Chart& chart);

}  // namespace burnout
