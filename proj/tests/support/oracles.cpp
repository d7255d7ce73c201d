#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

namespace {

std::vector<std::vector<double>> distance_matrix(const Points& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t d = 0; d < points[i].size(); ++d) {
                const double diff = points[i][d] - points[j][d];
                sum += diff * diff;
            }
            dist[i][j] = dist[j][i] = std::sqrt(sum);
        }
    }
    return dist;
}

double silhouette_from_matrix(const std::vector<std::vector<double>>& dist,
                              const std::vector<int>& labels, std::size_t n_clusters) {
    const std::size_t n = labels.size();
    std::vector<std::size_t> sizes(n_clusters, 0);
    for (int l : labels) ++sizes[l];

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t own = static_cast<std::size_t>(labels[i]);
        if (sizes[own] == 1) continue;
        std::vector<double> sums(n_clusters, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) sums[labels[j]] += dist[i][j];
        }
        const double a = sums[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < n_clusters; ++c) {
            if (c != own && sizes[c] > 0) b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
        }
        const double m = std::max(a, b);
        if (m > 0.0) total += (b - a) / m;
    }
    return total / static_cast<double>(n);
}

// Enumerates restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[<i]).
void enumerate(std::vector<int>& labels, std::size_t pos, int max_used,
               const std::vector<std::vector<double>>& dist, std::size_t k_min, std::size_t k_max,
               BestPartition& best) {
    const std::size_t n = labels.size();
    if (pos == n) {
        const std::size_t blocks = static_cast<std::size_t>(max_used) + 1;
        if (blocks < k_min || blocks > k_max) return;
        const double score = silhouette_from_matrix(dist, labels, blocks);
        if (score > best.silhouette) {
            best.silhouette = score;
            best.labels = labels;
        }
        return;
    }
    for (int c = 0; c <= max_used + 1 && c < static_cast<int>(k_max); ++c) {
        labels[pos] = c;
        enumerate(labels, pos + 1, std::max(max_used, c), dist, k_min, k_max, best);
    }
}

} // namespace

double silhouette(const Points& points, const std::vector<int>& labels) {
    int max_label = 0;
    for (int l : labels) max_label = std::max(max_label, l);
    return silhouette_from_matrix(distance_matrix(points), labels,
                                  static_cast<std::size_t>(max_label) + 1);
}

BestPartition best_partition(const Points& points, std::size_t k_min, std::size_t k_cap) {
    const std::size_t n = points.size();
    const std::size_t k_max = std::min(k_cap, n - 1);
    const auto dist = distance_matrix(points);
    BestPartition best;
    std::vector<int> labels(n, 0);
    enumerate(labels, 1, 0, dist, k_min, k_max, best);
    return best;
}

} // namespace oracle
