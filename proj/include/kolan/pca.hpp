#pragma once

#include <array>
#include <string>
#include <vector>

#include "kolan/linalg.hpp"
#include "kolan/model.hpp"

namespace kolan::pca {

inline constexpr std::size_t kFeatureCount = 6;

// Row order of the loadings matrix; fixed so emitted tables are stable.
const std::array<std::string, kFeatureCount>& feature_names();

struct FeatureVector {
    double audiens = 0.0;       // Young -> 0, VeryYoung -> 1
    double theme = 0.0;         // Finance -> 0, General -> 1
    double jml_fol = 0.0;       // follower_count
    double jml_post = 0.0;      // post_count
    double post_type = 0.0;     // Image -> 0, Video -> 1
    double avg_like_post = 0.0; // avg_likes_per_post

    std::array<double, kFeatureCount> as_array() const {
        return {audiens, theme, jml_fol, jml_post, post_type, avg_like_post};
    }
};

FeatureVector encode_features(const KolProfile& profile);

// n x 6 matrix in profile order.
linalg::Matrix feature_matrix(const Dataset& ds);

// Columnwise z-scores with the sample (n-1) standard deviation. Throws
// ZeroVariance with the column name (or index when names are not given).
linalg::Matrix standardize(const linalg::Matrix& m,
                           const std::vector<std::string>& column_names = {});

// Flip each column so its largest-magnitude entry is positive; ties pick
// the earliest row. Makes loadings unique regardless of eigensolver signs.
void canonicalize_signs(linalg::Matrix& columns);

struct PcaResult {
    linalg::Matrix loadings;              // 6x6, column j = PCj, unit vectors
    std::vector<double> eigenvalues;      // descending, tiny negatives clamped to 0
    std::vector<double> explained_ratio;  // sums to 1
    linalg::Matrix scores;                // n x 6, standardized X * loadings
    std::vector<std::string> features;    // row labels of `loadings`
};

// Correlation-matrix PCA of the six encoded variables.
PcaResult run_pca(const Dataset& ds);

}  // namespace kolan::pca
