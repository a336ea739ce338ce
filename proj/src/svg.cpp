#include "kolan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace kolan::svg {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 420;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 90;

const char* kPalette[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756",
                          "#72b7b2", "#b279a2", "#9d755d", "#bab0ac"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string header(const std::string& title) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
           "\" height=\"" + std::to_string(kHeight) + "\" font-family=\"sans-serif\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + std::to_string(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + esc(title) + "</text>\n";
    return out;
}

}  // namespace

std::string bar_chart(const std::string& title,
                      const std::vector<std::pair<std::string, double>>& bars,
                      const std::string& value_label) {
    std::string out = header(title);
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;

    double lo = 0.0, hi = 0.0;
    for (const auto& [label, v] : bars) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == lo) hi = lo + 1.0;
    const double span = hi - lo;
    auto y_of = [&](double v) { return kMarginTop + (hi - v) / span * plot_h; };

    // axis + zero line
    out += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + num(kMarginTop) +
           "\" x2=\"" + std::to_string(kMarginLeft) + "\" y2=\"" + num(kMarginTop + plot_h) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + num(y_of(0.0)) +
           "\" x2=\"" + num(kMarginLeft + plot_w) + "\" y2=\"" + num(y_of(0.0)) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"16\" y=\"" + num(kMarginTop + plot_h / 2) +
           "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           num(kMarginTop + plot_h / 2) + ")\">" + esc(value_label) + "</text>\n";

    const std::size_t n = bars.empty() ? 1 : bars.size();
    const double slot = plot_w / static_cast<double>(n);
    const double bar_w = slot * 0.7;
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const auto& [label, v] = bars[i];
        double x = kMarginLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
        double y0 = y_of(std::max(0.0, v));
        double h = std::fabs(y_of(v) - y_of(0.0));
        out += "<rect x=\"" + num(x) + "\" y=\"" + num(y0) + "\" width=\"" + num(bar_w) +
               "\" height=\"" + num(h) + "\" fill=\"" + kPalette[0] + "\"/>\n";
        out += "<text x=\"" + num(x + bar_w / 2) + "\" y=\"" + num(y0 - 4) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + num(v) + "</text>\n";
        double lx = x + bar_w / 2;
        double ly = kMarginTop + plot_h + 14;
        out += "<text x=\"" + num(lx) + "\" y=\"" + num(ly) +
               "\" font-size=\"11\" text-anchor=\"end\" transform=\"rotate(-45 " + num(lx) + " " +
               num(ly) + ")\">" + esc(label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string scatter_plot(const std::string& title, const std::vector<ScatterPoint>& points,
                         const std::string& x_label, const std::string& y_label) {
    std::string out = header(title);
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;

    double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
    for (const ScatterPoint& p : points) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    }
    if (xhi == xlo) xhi = xlo + 1.0;
    if (yhi == ylo) yhi = ylo + 1.0;
    const double xpad = (xhi - xlo) * 0.08, ypad = (yhi - ylo) * 0.08;
    xlo -= xpad; xhi += xpad; ylo -= ypad; yhi += ypad;

    auto px = [&](double x) { return kMarginLeft + (x - xlo) / (xhi - xlo) * plot_w; };
    auto py = [&](double y) { return kMarginTop + (yhi - y) / (yhi - ylo) * plot_h; };

    out += "<rect x=\"" + std::to_string(kMarginLeft) + "\" y=\"" + std::to_string(kMarginTop) +
           "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    if (xlo < 0.0 && xhi > 0.0)
        out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + std::to_string(kMarginTop) + "\" x2=\"" +
               num(px(0)) + "\" y2=\"" + num(kMarginTop + plot_h) +
               "\" stroke=\"#cccccc\"/>\n";
    if (ylo < 0.0 && yhi > 0.0)
        out += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + num(py(0)) +
               "\" x2=\"" + num(kMarginLeft + plot_w) + "\" y2=\"" + num(py(0)) +
               "\" stroke=\"#cccccc\"/>\n";

    for (const ScatterPoint& p : points) {
        const char* color = kPalette[p.group % 8 < 0 ? 0 : p.group % 8];
        out += "<circle cx=\"" + num(px(p.x)) + "\" cy=\"" + num(py(p.y)) +
               "\" r=\"5\" fill=\"" + color + "\"/>\n";
        out += "<text x=\"" + num(px(p.x) + 7) + "\" y=\"" + num(py(p.y) + 4) +
               "\" font-size=\"11\">" + esc(p.label) + "</text>\n";
    }
    out += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + esc(x_label) + "</text>\n";
    out += "<text x=\"16\" y=\"" + num(kMarginTop + plot_h / 2) +
           "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           num(kMarginTop + plot_h / 2) + ")\">" + esc(y_label) + "</text>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace kolan::svg
