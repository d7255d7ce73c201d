#include "crosscheck/clustering.hpp"

#include "crosscheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace crosscheck {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kShiftTolerance = 1e-4;
constexpr int kRestarts = 10;

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

// Nearest centroid, ties toward the lower index.
int nearest_centroid(const std::vector<double>& point,
                     const std::vector<std::vector<double>>& centroids) {
    int best = 0;
    double best_d = squared_distance(point, centroids[0]);
    for (std::size_t j = 1; j < centroids.size(); ++j) {
        const double d = squared_distance(point, centroids[j]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(j);
        }
    }
    return best;
}

double total_inertia(const std::vector<std::vector<double>>& points, const std::vector<int>& labels,
                     const std::vector<std::vector<double>>& centroids) {
    double sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        sum += squared_distance(points[i], centroids[labels[i]]);
    }
    return sum;
}

std::vector<std::vector<double>> kmeanspp_init(const std::vector<std::vector<double>>& points,
                                               std::size_t k, Rng& rng) {
    std::vector<std::vector<double>> centroids;
    centroids.reserve(k);
    centroids.push_back(points[rand_index(rng, points.size())]);

    std::vector<double> d2(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        d2[i] = squared_distance(points[i], centroids[0]);
    }
    while (centroids.size() < k) {
        const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        std::size_t pick;
        if (total <= 0.0) {
            pick = rand_index(rng, points.size());
        } else {
            const double r = rand_unit(rng) * total;
            double cum = 0.0;
            pick = points.size() - 1;
            for (std::size_t i = 0; i < points.size(); ++i) {
                cum += d2[i];
                if (cum > r) {
                    pick = i;
                    break;
                }
            }
        }
        centroids.push_back(points[pick]);
        for (std::size_t i = 0; i < points.size(); ++i) {
            d2[i] = std::min(d2[i], squared_distance(points[i], centroids.back()));
        }
    }
    return centroids;
}

// Moves each empty cluster's centroid onto the point currently farthest from
// its assigned centroid and hands that point to the cluster, so no returned
// cluster stays empty. Total inertia can only drop.
void reseed_empty_clusters(const std::vector<std::vector<double>>& points,
                           std::vector<int>& labels,
                           std::vector<std::vector<double>>& centroids,
                           const std::vector<std::size_t>& sizes) {
    std::vector<bool> taken(points.size(), false);
    std::vector<std::size_t> counts = sizes;
    for (std::size_t j = 0; j < centroids.size(); ++j) {
        if (counts[j] > 0) continue;
        std::size_t worst = points.size();
        double worst_d = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (taken[i] || counts[labels[i]] <= 1) continue;
            const double d = squared_distance(points[i], centroids[labels[i]]);
            if (d > worst_d) {
                worst_d = d;
                worst = i;
            }
        }
        if (worst == points.size()) continue; // fewer points than clusters
        taken[worst] = true;
        counts[labels[worst]] -= 1;
        counts[j] += 1;
        centroids[j] = points[worst];
        labels[worst] = static_cast<int>(j);
    }
}

} // namespace

LloydRun lloyd_run(const std::vector<std::vector<double>>& points, std::size_t k, Rng& rng) {
    LloydRun run;
    run.centroids = kmeanspp_init(points, k, rng);
    run.labels.assign(points.size(), 0);
    const std::size_t dim = points[0].size();

    for (int iter = 0; iter < kMaxIterations; ++iter) {
        const std::vector<std::vector<double>> before = run.centroids;

        for (std::size_t i = 0; i < points.size(); ++i) {
            run.labels[i] = nearest_centroid(points[i], run.centroids);
        }

        std::vector<std::vector<double>> updated(k, std::vector<double>(dim, 0.0));
        std::vector<std::size_t> sizes(k, 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const int c = run.labels[i];
            ++sizes[c];
            for (std::size_t d = 0; d < dim; ++d) updated[c][d] += points[i][d];
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (sizes[j] == 0) {
                updated[j] = run.centroids[j]; // fixed by the reseed below
                continue;
            }
            for (std::size_t d = 0; d < dim; ++d) updated[j][d] /= static_cast<double>(sizes[j]);
        }
        run.centroids = std::move(updated);
        reseed_empty_clusters(points, run.labels, run.centroids, sizes);

        double shift = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            shift = std::max(shift, std::sqrt(squared_distance(before[j], run.centroids[j])));
        }
        run.inertia_history.push_back(total_inertia(points, run.labels, run.centroids));
        if (shift < kShiftTolerance) break;
    }

    // Final exact assignment so every point sits with its nearest centroid.
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        run.labels[i] = nearest_centroid(points[i], run.centroids);
        ++sizes[run.labels[i]];
    }
    reseed_empty_clusters(points, run.labels, run.centroids, sizes);
    run.inertia = total_inertia(points, run.labels, run.centroids);
    run.inertia_history.push_back(run.inertia);
    return run;
}

KMeansModel kmeans_fit(const std::vector<SparseVector>& vectors, std::size_t k,
                       std::uint64_t seed) {
    if (vectors.size() < k) {
        throw Error(ErrorKind::TooFewPoints, std::to_string(vectors.size()) +
                                                 " points for k=" + std::to_string(k));
    }
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");

    std::vector<std::vector<double>> points;
    points.reserve(vectors.size());
    for (const SparseVector& v : vectors) points.push_back(v.to_dense());

    LloydRun best;
    bool have_best = false;
    for (int r = 0; r < kRestarts; ++r) {
        Rng rng = make_rng(seed + static_cast<std::uint64_t>(r));
        LloydRun run = lloyd_run(points, k, rng);
        if (!have_best || run.inertia < best.inertia) {
            best = std::move(run);
            have_best = true;
        }
    }

    KMeansModel model;
    model.k = k;
    model.centroids = std::move(best.centroids);
    model.inertia = best.inertia;
    model.seed = seed;
    model.inertia_history = std::move(best.inertia_history);
    // Labels are reproducible from the centroids; keep them with the fit.
    model.labels_cache = std::move(best.labels);
    return model;
}

double mean_silhouette(const std::vector<std::vector<double>>& points,
                       const std::vector<int>& labels) {
    const std::size_t n = points.size();
    if (n != labels.size()) throw Error(ErrorKind::ShapeMismatch, "labels/points size mismatch");

    int max_label = -1;
    for (int l : labels) max_label = std::max(max_label, l);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(max_label) + 1, 0);
    for (int l : labels) ++sizes[l];
    std::size_t populated = 0;
    for (std::size_t s : sizes) populated += s > 0;
    if (populated < 2) {
        throw Error(ErrorKind::SingleCluster, "silhouette needs at least two clusters");
    }

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int own = labels[i];
        if (sizes[own] == 1) continue; // singleton convention: s(i) = 0
        std::vector<double> dist_sum(sizes.size(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            dist_sum[labels[j]] += std::sqrt(squared_distance(points[i], points[j]));
        }
        const double a = dist_sum[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            if (c == static_cast<std::size_t>(own) || sizes[c] == 0) continue;
            b = std::min(b, dist_sum[c] / static_cast<double>(sizes[c]));
        }
        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / static_cast<double>(n);
}

double mean_silhouette(const std::vector<SparseVector>& vectors, const std::vector<int>& labels) {
    std::vector<std::vector<double>> points;
    points.reserve(vectors.size());
    for (const SparseVector& v : vectors) points.push_back(v.to_dense());
    return mean_silhouette(points, labels);
}

StoryClustering select_k(const std::vector<SparseVector>& vectors, std::uint64_t seed,
                         std::size_t k_min, std::size_t k_cap) {
    const std::size_t n = vectors.size();
    if (n < 3) {
        throw Error(ErrorKind::TooFewPoints,
                    "need at least 3 nonzero vectors, got " + std::to_string(n));
    }
    for (const SparseVector& v : vectors) {
        if (v.is_zero()) {
            throw Error(ErrorKind::InvalidArgument, "zero vectors must be excluded by the caller");
        }
    }
    const std::size_t k_max = std::min(k_cap, n - 1);

    StoryClustering best;
    bool have_best = false;
    for (std::size_t k = k_min; k <= k_max; ++k) {
        KMeansModel model = kmeans_fit(vectors, k, seed);
        std::set<int> distinct(model.labels_cache.begin(), model.labels_cache.end());
        if (distinct.size() < 2) continue;
        const double score = mean_silhouette(vectors, model.labels_cache);
        if (!have_best || score > best.silhouette) {
            best.labels = model.labels_cache;
            best.model = std::move(model);
            best.silhouette = score;
            have_best = true;
        }
    }
    if (!have_best) {
        throw Error(ErrorKind::TooFewPoints, "no candidate k produced two populated clusters");
    }
    return best;
}

int assign_cluster(const KMeansModel& model, const SparseVector& target_vec) {
    if (target_vec.is_zero()) {
        throw Error(ErrorKind::ZeroTargetVector,
                    "target shares no vocabulary with the window");
    }
    if (model.centroids.empty() || target_vec.dim != model.centroids[0].size()) {
        throw Error(ErrorKind::DimMismatch, "target dimension does not match centroids");
    }
    return nearest_centroid(target_vec.to_dense(), model.centroids);
}

MatchedStory filter_relevant(const std::vector<CleanPost>& posts,
                             const std::vector<SparseVector>& post_vecs,
                             const SparseVector& target_vec, int cluster_index, std::size_t m,
                             double tau) {
    if (posts.size() != post_vecs.size()) {
        throw Error(ErrorKind::ShapeMismatch, "posts/vectors size mismatch");
    }
    if (posts.empty()) throw Error(ErrorKind::EmptyStory, "cluster has no posts");

    std::vector<std::pair<double, std::size_t>> scored;
    for (std::size_t i = 0; i < posts.size(); ++i) {
        const double c = cosine(post_vecs[i], target_vec);
        if (c >= tau) scored.emplace_back(c, i);
    }
    if (scored.empty()) {
        throw Error(ErrorKind::NoRelevantStory, "no post in the cluster reaches the threshold");
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    if (scored.size() > m) scored.resize(m);

    MatchedStory story;
    story.cluster_index = cluster_index;
    for (const auto& [score, index] : scored) story.posts.emplace_back(posts[index], score);
    return story;
}

} // namespace crosscheck
