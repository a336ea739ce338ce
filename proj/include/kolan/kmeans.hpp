#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kolan/pca.hpp"

namespace kolan::pca {

struct ClusterAssignment {
    std::map<std::string, int> cluster_of;           // every kol_id assigned
    std::vector<int> assignment;                     // row order of the scores
    std::vector<std::array<double, 2>> centroids;    // (PC1, PC2) plane
    std::vector<double> cost_trace;                  // within-cluster SSE per Lloyd step
};

// Lloyd's k-means on the (PC1, PC2) score plane. Fully deterministic:
// initial centers come from a farthest-point traversal starting at the
// lowest kol_id, candidates visited in id order so distance ties resolve
// to the earliest id; runs to an assignment fixpoint or 100 iterations.
// `seed` is accepted for interface stability but the procedure above
// never draws randomness.
ClusterAssignment cluster_scores(const PcaResult& result,
                                 const std::vector<std::string>& kol_ids, std::size_t k,
                                 unsigned seed = 0);

ClusterAssignment cluster_scores(const PcaResult& result, const Dataset& ds, std::size_t k,
                                 unsigned seed = 0);

}  // namespace kolan::pca
