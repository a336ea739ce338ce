#include "kolan/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "kolan/csv.hpp"

namespace kolan::metrics {

namespace {
const std::string kScaleNames[] = {"linear", "log10"};

void sort_points_desc(std::vector<ChartPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const ChartPoint& a, const ChartPoint& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.category < b.category;
    });
}
}  // namespace

const std::string& to_string(Scale s) { return kScaleNames[static_cast<int>(s)]; }

std::vector<double> ChartSeries::scaled_values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const ChartPoint& p : points) {
        out.push_back(scale == Scale::Log10 ? std::log10(p.value) : p.value);
    }
    return out;
}

ChartSeries make_series(std::string label, std::vector<ChartPoint> points, Scale scale) {
    if (scale == Scale::Log10) {
        for (const ChartPoint& p : points) {
            if (!(p.value > 0.0))
                throw ZeroBaseline("log10 series \"" + label + "\" has non-positive value for \"" +
                                   p.category + "\"");
        }
    }
    return ChartSeries{std::move(label), std::move(points), scale};
}

double enthusiasm_rate(long long campaign_likes, double baseline_avg) {
    if (!(baseline_avg > 0.0))
        throw ZeroBaseline("enthusiasm_rate requires baseline_avg > 0");
    return static_cast<double>(campaign_likes) / baseline_avg;
}

std::vector<EnthusiasmRecord> enthusiasm_records(const Dataset& ds) {
    std::vector<EnthusiasmRecord> recs;
    recs.reserve(ds.profiles.size());
    for (const KolProfile& p : ds.profiles) {
        recs.push_back({p.id, enthusiasm_rate(p.campaign_likes, p.avg_likes_per_post),
                        p.campaign_likes, p.avg_likes_per_post});
    }
    std::sort(recs.begin(), recs.end(), [](const EnthusiasmRecord& a, const EnthusiasmRecord& b) {
        if (a.rate != b.rate) return a.rate > b.rate;
        return a.kol_id < b.kol_id;
    });
    return recs;
}

ChartSeries engagement_series(const Dataset& ds, Scale scale) {
    std::vector<ChartPoint> pts;
    pts.reserve(ds.profiles.size());
    for (const KolProfile& p : ds.profiles) pts.push_back({p.id, p.avg_likes_per_post});
    sort_points_desc(pts);
    return make_series("avg_likes_per_post", std::move(pts), scale);
}

ChartSeries campaign_engagement_series(const Dataset& ds, Scale scale) {
    std::vector<ChartPoint> pts;
    pts.reserve(ds.profiles.size());
    for (const KolProfile& p : ds.profiles)
        pts.push_back({p.id, static_cast<double>(p.campaign_likes)});
    sort_points_desc(pts);
    return make_series("campaign_likes", std::move(pts), scale);
}

ChartSeries enthusiasm_series(const Dataset& ds, Scale scale) {
    std::vector<ChartPoint> pts;
    for (const EnthusiasmRecord& r : enthusiasm_records(ds)) pts.push_back({r.kol_id, r.rate});
    return make_series("enthusiasm_rate", std::move(pts), scale);
}

std::map<ContentFormat, double> enthusiasm_by_format(const Dataset& ds) {
    std::map<ContentFormat, double> sums;
    std::map<ContentFormat, long long> counts;
    for (const KolProfile& p : ds.profiles) {
        sums[p.campaign_format] += enthusiasm_rate(p.campaign_likes, p.avg_likes_per_post);
        counts[p.campaign_format] += 1;
    }
    std::map<ContentFormat, double> means;
    for (const auto& [fmt, sum] : sums) means[fmt] = sum / static_cast<double>(counts[fmt]);
    return means;
}

std::string series_csv(const ChartSeries& s) {
    std::string out = "label,category,value,scale\n";
    for (const ChartPoint& p : s.points) {
        out += csv::join({s.label, p.category, csv::format_double(p.value), to_string(s.scale)});
        out.push_back('\n');
    }
    return out;
}

}  // namespace kolan::metrics
