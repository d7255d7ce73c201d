#pragma once

#include "crosscheck/corpus.hpp"
#include "crosscheck/rng.hpp"
#include "crosscheck/vectorizer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace crosscheck {

struct KMeansModel {
    std::size_t k = 0;
    std::vector<std::vector<double>> centroids;
    double inertia = 0.0;
    std::uint64_t seed = 0;
    // Per-iteration inertia of the winning restart; non-increasing.
    std::vector<double> inertia_history;
    // Assignment of the fitted points, matching inertia.
    std::vector<int> labels_cache;
};

struct StoryClustering {
    KMeansModel model;
    std::vector<int> labels; // one per input vector
    double silhouette = 0.0;
};

// The matched story C*: cluster posts passing the relevance filter, with
// their cosine to the target, sorted descending.
struct MatchedStory {
    int cluster_index = 0;
    std::vector<std::pair<CleanPost, double>> posts;
};

// One Lloyd run from a given generator state (k-means++ init, at most 100
// iterations, convergence when no centroid moves more than 1e-4). Exposed so
// tests can check per-run behavior; kmeans_fit wraps it with restarts.
struct LloydRun {
    std::vector<int> labels;
    std::vector<std::vector<double>> centroids;
    double inertia = 0.0;
    std::vector<double> inertia_history;
};
LloydRun lloyd_run(const std::vector<std::vector<double>>& points, std::size_t k, Rng& rng);

// 10 restarts seeded seed..seed+9, best inertia wins. Vectors must all be
// nonzero (the caller excludes zero vectors). Throws TooFewPoints when n < k.
KMeansModel kmeans_fit(const std::vector<SparseVector>& vectors, std::size_t k,
                       std::uint64_t seed);

// Mean silhouette with Euclidean distance; points in singleton clusters score
// 0. Throws SingleCluster unless at least two clusters are present.
double mean_silhouette(const std::vector<std::vector<double>>& points,
                       const std::vector<int>& labels);
double mean_silhouette(const std::vector<SparseVector>& vectors, const std::vector<int>& labels);

// Fits every k in [k_min, min(k_cap, n-1)] and keeps the clustering with the
// highest mean silhouette, ties toward smaller k. Candidates that leave a
// cluster empty are skipped. Throws TooFewPoints when n < 3 or no candidate
// yields two populated clusters.
StoryClustering select_k(const std::vector<SparseVector>& vectors, std::uint64_t seed,
                         std::size_t k_min = 2, std::size_t k_cap = 10);

// Index of the nearest centroid (Euclidean, ties toward the lower index).
// Throws ZeroTargetVector when the target shares no vocabulary with the
// window, DimMismatch on dimension disagreement.
int assign_cluster(const KMeansModel& model, const SparseVector& target_vec);

// Posts whose cosine to the target reaches tau, sorted by cosine descending
// (ties by original order), truncated to the top m. Throws NoRelevantStory
// when none qualify.
MatchedStory filter_relevant(const std::vector<CleanPost>& posts,
                             const std::vector<SparseVector>& post_vecs,
                             const SparseVector& target_vec, int cluster_index,
                             std::size_t m = 5, double tau = 0.1);

} // namespace crosscheck
