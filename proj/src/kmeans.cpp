#include "kolan/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kolan::pca {

namespace {

using Point = std::array<double, 2>;

double dist2(const Point& a, const Point& b) {
    double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

constexpr int kMaxIterations = 100;

}  // namespace

ClusterAssignment cluster_scores(const PcaResult& result, const std::vector<std::string>& kol_ids,
                                 std::size_t k, unsigned /*seed*/) {
    const std::size_t n = result.scores.rows();
    if (kol_ids.size() != n)
        throw ValidationError("", "kol_ids must match the score rows");
    if (k == 0) throw ValidationError("", "k must be >= 1");
    if (k > n) throw KTooLarge(k, n);

    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {result.scores.at(i, 0), result.scores.at(i, 1)};

    // id-ascending visit order; makes every tie-break reproducible
    std::vector<std::size_t> by_id(n);
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(),
              [&](std::size_t a, std::size_t b) { return kol_ids[a] < kol_ids[b]; });

    std::vector<Point> centers;
    centers.push_back(pts[by_id[0]]);
    while (centers.size() < k) {
        std::size_t best_idx = by_id[0];
        double best_d = -1.0;
        for (std::size_t i : by_id) {
            double d = std::numeric_limits<double>::infinity();
            for (const Point& c : centers) d = std::min(d, dist2(pts[i], c));
            if (d > best_d) {
                best_d = d;
                best_idx = i;
            }
        }
        centers.push_back(pts[best_idx]);
    }

    std::vector<int> assign(n, -1);
    ClusterAssignment out;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        bool changed = false;
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double bd = dist2(pts[i], centers[0]);
            for (std::size_t j = 1; j < k; ++j) {
                double d = dist2(pts[i], centers[j]);
                if (d < bd) {
                    bd = d;
                    best = static_cast<int>(j);
                }
            }
            cost += bd;
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }
        out.cost_trace.push_back(cost);
        if (!changed) break;

        for (std::size_t j = 0; j < k; ++j) {
            double sx = 0.0, sy = 0.0;
            std::size_t count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (assign[i] == static_cast<int>(j)) {
                    sx += pts[i][0];
                    sy += pts[i][1];
                    ++count;
                }
            }
            if (count > 0) centers[j] = {sx / count, sy / count};
            // an emptied cluster keeps its centroid and can re-capture points
        }
    }

    // farthest-point init seeds every center on a distinct point, so empty
    // clusters only arise on duplicate-heavy inputs; re-seat them there
    for (std::size_t j = 0; j < k; ++j) {
        bool empty = std::none_of(assign.begin(), assign.end(),
                                  [&](int a) { return a == static_cast<int>(j); });
        if (empty) {
            std::size_t donor = by_id[0];
            double best_d = -1.0;
            for (std::size_t i : by_id) {
                double d = dist2(pts[i], centers[assign[i]]);
                if (d > best_d) {
                    best_d = d;
                    donor = i;
                }
            }
            assign[donor] = static_cast<int>(j);
            centers[j] = pts[donor];
        }
    }

    out.assignment = assign;
    out.centroids = centers;
    for (std::size_t i = 0; i < n; ++i) out.cluster_of[kol_ids[i]] = assign[i];
    return out;
}

ClusterAssignment cluster_scores(const PcaResult& result, const Dataset& ds, std::size_t k,
                                 unsigned seed) {
    std::vector<std::string> ids;
    ids.reserve(ds.profiles.size());
    for (const KolProfile& p : ds.profiles) ids.push_back(p.id);
    return cluster_scores(result, ids, k, seed);
}

}  // namespace kolan::pca
