#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kolan::svg {

// Minimal hand-rolled charts: deterministic markup, no plotting library.
// Values are drawn as given; callers apply any log transform first.

std::string bar_chart(const std::string& title,
                      const std::vector<std::pair<std::string, double>>& bars,
                      const std::string& value_label);

struct ScatterPoint {
    double x = 0.0;
    double y = 0.0;
    std::string label;
    int group = 0;  // picks the marker color
};

std::string scatter_plot(const std::string& title, const std::vector<ScatterPoint>& points,
                         const std::string& x_label, const std::string& y_label);

}  // namespace kolan::svg
