#pragma once

#include <cstddef>
#include <vector>

// Independent reference implementations used to check the clustering module.
// Kept deliberately separate from the library code paths they verify.
namespace oracle {

using Points = std::vector<std::vector<double>>;

// Mean silhouette, written from the definition: s(i) = (b-a)/max(a,b),
// singleton clusters score 0.
double silhouette(const Points& points, const std::vector<int>& labels);

struct BestPartition {
    double silhouette = -2.0;
    std::vector<int> labels;
};

// Exhaustively enumerates every partition of the points into exactly k
// nonempty blocks for each k in [k_min, min(k_cap, n-1)] and returns the
// labeling with the highest mean silhouette. Feasible for n <= 10 or so.
BestPartition best_partition(const Points& points, std::size_t k_min = 2, std::size_t k_cap = 10);

} // namespace oracle
