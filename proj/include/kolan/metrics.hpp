#pragma once

#include <map>
#include <string>
#include <vector>

#include "kolan/model.hpp"

namespace kolan::metrics {

enum class Scale { Linear, Log10 };

const std::string& to_string(Scale s);

struct EnthusiasmRecord {
    std::string kol_id;
    double rate = 0.0;  // campaign_likes / baseline_avg, dimensionless
    long long campaign_likes = 0;
    double baseline_avg = 0.0;
};

struct ChartPoint {
    std::string category;
    double value = 0.0;  // always the linear (pre-transform) value
};

// `scale` is a rendering annotation: points carry linear values, and
// scaled_values() applies the transform. A Log10 series refuses
// non-positive values at construction.
struct ChartSeries {
    std::string label;
    std::vector<ChartPoint> points;
    Scale scale = Scale::Linear;

    std::vector<double> scaled_values() const;
};

ChartSeries make_series(std::string label, std::vector<ChartPoint> points, Scale scale);

// campaign_likes / baseline_avg; 1.0 = exactly typical engagement.
double enthusiasm_rate(long long campaign_likes, double baseline_avg);

// One record per KOL, sorted by rate descending, ties by id ascending.
std::vector<EnthusiasmRecord> enthusiasm_records(const Dataset& ds);

// One point per KOL over avg_likes_per_post, sorted descending by raw
// value, ties by id ascending.
ChartSeries engagement_series(const Dataset& ds, Scale scale = Scale::Log10);

// Same shape over campaign_likes.
ChartSeries campaign_engagement_series(const Dataset& ds, Scale scale = Scale::Log10);

// Per-KOL enthusiasm rates as a series (linear by default: rates sit
// around 1 and may be well below it).
ChartSeries enthusiasm_series(const Dataset& ds, Scale scale = Scale::Linear);

// Unweighted mean of enthusiasm_rate per campaign format; formats with no
// KOLs are omitted. Empty dataset gives an empty map.
std::map<ContentFormat, double> enthusiasm_by_format(const Dataset& ds);

// External CSV layout: label,category,value,scale (linear values; the
// scale column tells renderers which transform to apply).
std::string series_csv(const ChartSeries& s);

}  // namespace kolan::metrics
