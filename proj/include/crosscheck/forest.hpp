#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crosscheck {

enum class Label { Fake = 0, Real = 1 };

const char* to_string(Label label);
Label label_from_string(const std::string& text);

struct TrainConfig {
    std::size_t n_trees = 100;
    std::optional<std::size_t> max_depth; // nullopt = unlimited
    std::size_t min_samples_split = 2;
    std::size_t features_per_split = 0; // 0 = ceil(sqrt(feature dim))
    bool bootstrap = true;
    std::uint64_t seed = 0;
};

// Flat node array, root at index 0. Internal nodes carry a (feature,
// threshold) test with x[feature] <= threshold going left; leaves carry the
// training class counts (fake, real).
struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::array<std::int64_t, 2> counts{};

    bool is_leaf() const { return feature < 0; }
};

struct DecisionTree {
    std::vector<TreeNode> nodes;

    Label predict(const std::vector<double>& x) const;
};

struct RandomForestModel {
    std::vector<DecisionTree> trees;
    TrainConfig config; // resolved values (features_per_split filled in)
    std::string layout_version;
    std::size_t feature_dim = 0;
    std::array<std::string, 2> class_order = {"fake", "real"};
};

// Gini impurity 1 - sum p^2 of a two-class count pair; in [0, 0.5].
// Throws EmptyNode when both counts are zero.
double gini(std::int64_t fake_count, std::int64_t real_count);

struct Split {
    int feature = 0;
    double threshold = 0.0;
    double decrease = 0.0; // weighted Gini decrease
};

// Exhaustive scan over midpoint thresholds of the given features; ties break
// toward the lower feature index, then the lower threshold. Empty when no
// split decreases impurity.
std::optional<Split> best_split(const std::vector<std::vector<double>>& X,
                                const std::vector<Label>& y,
                                const std::vector<std::size_t>& samples,
                                const std::vector<std::size_t>& feature_subset);

// Bagged Gini trees; tree t draws its bootstrap sample and feature subsets
// from a generator derived from (config.seed, t), so equal seeds give
// bit-identical serialized models. Throws SingleClassData or ShapeMismatch.
RandomForestModel forest_fit(const std::vector<std::vector<double>>& X,
                             const std::vector<Label>& y, const TrainConfig& config,
                             const std::string& layout_version);

struct Prediction {
    Label label = Label::Fake;
    double score = 0.0; // fraction of trees voting fake
};

// Majority vote over tree predictions; ties go to fake.
// Throws LayoutMismatch when x has the wrong dimension.
Prediction predict(const RandomForestModel& model, const std::vector<double>& x);

// Versioned JSON round-trip. load throws IoError, ParseError or
// SchemaVersionMismatch.
std::string model_to_json(const RandomForestModel& model);
RandomForestModel model_from_json(const std::string& text);
void save_model(const RandomForestModel& model, const std::string& path);
RandomForestModel load_model(const std::string& path);

} // namespace crosscheck
