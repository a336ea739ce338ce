#include "kolan/pca.hpp"

#include <cmath>

namespace kolan::pca {

using linalg::Matrix;

const std::array<std::string, kFeatureCount>& feature_names() {
    static const std::array<std::string, kFeatureCount> names = {
        "audiens", "theme", "jml_fol", "jml_post", "post_type", "avg_like_post"};
    return names;
}

FeatureVector encode_features(const KolProfile& p) {
    FeatureVector f;
    f.audiens = p.audience == Audience::VeryYoung ? 1.0 : 0.0;
    f.theme = p.theme == Theme::General ? 1.0 : 0.0;
    f.jml_fol = static_cast<double>(p.follower_count);
    f.jml_post = static_cast<double>(p.post_count);
    f.post_type = p.campaign_format == ContentFormat::Video ? 1.0 : 0.0;
    f.avg_like_post = p.avg_likes_per_post;
    return f;
}

Matrix feature_matrix(const Dataset& ds) {
    Matrix m(ds.profiles.size(), kFeatureCount);
    for (std::size_t i = 0; i < ds.profiles.size(); ++i) {
        auto row = encode_features(ds.profiles[i]).as_array();
        for (std::size_t j = 0; j < kFeatureCount; ++j) m.at(i, j) = row[j];
    }
    return m;
}

Matrix standardize(const Matrix& m, const std::vector<std::string>& column_names) {
    const std::size_t n = m.rows(), p = m.cols();
    if (n < 2) throw ValidationError("", "standardize needs >=2 rows");
    Matrix out(n, p);
    for (std::size_t j = 0; j < p; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += m.at(i, j);
        mean /= static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = m.at(i, j) - mean;
            ss += d * d;
        }
        double sd = std::sqrt(ss / static_cast<double>(n - 1));
        if (!(sd > 1e-12 * (1.0 + std::fabs(mean)))) {
            throw ZeroVariance(j < column_names.size() ? column_names[j]
                                                       : "column " + std::to_string(j));
        }
        for (std::size_t i = 0; i < n; ++i) out.at(i, j) = (m.at(i, j) - mean) / sd;
    }
    return out;
}

void canonicalize_signs(Matrix& columns) {
    for (std::size_t j = 0; j < columns.cols(); ++j) {
        std::size_t imax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < columns.rows(); ++i) {
            double mag = std::fabs(columns.at(i, j));
            if (mag > best) {  // strict: ties keep the earliest row
                best = mag;
                imax = i;
            }
        }
        if (columns.at(imax, j) < 0.0) {
            for (std::size_t i = 0; i < columns.rows(); ++i) columns.at(i, j) = -columns.at(i, j);
        }
    }
}

PcaResult run_pca(const Dataset& ds) {
    if (ds.profiles.size() < 2) throw ValidationError("", "PCA needs >=2 profiles");

    std::vector<std::string> names(feature_names().begin(), feature_names().end());
    Matrix x = feature_matrix(ds);
    Matrix z = standardize(x, names);

    const std::size_t n = z.rows(), p = z.cols();
    Matrix corr(p, p);
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a; b < p; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += z.at(i, a) * z.at(i, b);
            s /= static_cast<double>(n - 1);
            corr.at(a, b) = s;
            corr.at(b, a) = s;
        }
    }

    linalg::EigenResult eig = linalg::eigen_sym(corr);
    for (double& v : eig.values) {
        if (v < 0.0 && v >= -1e-10) v = 0.0;  // rounding on rank-deficient input
    }
    canonicalize_signs(eig.vectors);

    PcaResult res;
    res.loadings = eig.vectors;
    res.eigenvalues = eig.values;
    double total = 0.0;
    for (double v : eig.values) total += v;
    res.explained_ratio.reserve(p);
    for (double v : eig.values) res.explained_ratio.push_back(v / total);
    res.scores = z * res.loadings;
    res.features = std::move(names);
    return res;
}

}  // namespace kolan::pca
