#include "crosscheck/forest.hpp"

#include "crosscheck/error.hpp"
#include "crosscheck/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace crosscheck {

namespace {

constexpr const char* kModelSchema = "crosscheck-rf/1";

std::array<std::int64_t, 2> count_labels(const std::vector<Label>& y,
                                         const std::vector<std::size_t>& samples) {
    std::array<std::int64_t, 2> counts{};
    for (std::size_t i : samples) ++counts[static_cast<std::size_t>(y[i])];
    return counts;
}

// Distinct feature indices, ascending, chosen by partial Fisher-Yates.
std::vector<std::size_t> sample_features(std::size_t dim, std::size_t count, Rng& rng) {
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rand_index(rng, dim - i);
        std::swap(all[i], all[j]);
    }
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

struct TreeBuilder {
    const std::vector<std::vector<double>>& X;
    const std::vector<Label>& y;
    const TrainConfig& config;
    Rng& rng;
    DecisionTree tree;

    int build(std::vector<std::size_t> samples, std::size_t depth) {
        const auto counts = count_labels(y, samples);
        const bool pure = counts[0] == 0 || counts[1] == 0;
        const bool depth_capped = config.max_depth && depth >= *config.max_depth;

        if (!pure && !depth_capped && samples.size() >= config.min_samples_split) {
            const auto subset = sample_features(X[0].size(), config.features_per_split, rng);
            if (const auto split = best_split(X, y, samples, subset)) {
                std::vector<std::size_t> left, right;
                for (std::size_t i : samples) {
                    (X[i][split->feature] <= split->threshold ? left : right).push_back(i);
                }
                const int index = static_cast<int>(tree.nodes.size());
                tree.nodes.emplace_back();
                tree.nodes[index].feature = split->feature;
                tree.nodes[index].threshold = split->threshold;
                samples.clear();
                samples.shrink_to_fit();
                const int l = build(std::move(left), depth + 1);
                const int r = build(std::move(right), depth + 1);
                tree.nodes[index].left = l;
                tree.nodes[index].right = r;
                return index;
            }
        }

        const int index = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes[index].counts = counts;
        return index;
    }
};

} // namespace

const char* to_string(Label label) { return label == Label::Fake ? "fake" : "real"; }

Label label_from_string(const std::string& text) {
    if (text == "fake") return Label::Fake;
    if (text == "real") return Label::Real;
    throw Error(ErrorKind::ParseError, "unknown label '" + text + "'");
}

double gini(std::int64_t fake_count, std::int64_t real_count) {
    const std::int64_t total = fake_count + real_count;
    if (total == 0) throw Error(ErrorKind::EmptyNode, "gini of an empty node");
    const double pf = static_cast<double>(fake_count) / static_cast<double>(total);
    const double pr = static_cast<double>(real_count) / static_cast<double>(total);
    return 1.0 - pf * pf - pr * pr;
}

std::optional<Split> best_split(const std::vector<std::vector<double>>& X,
                                const std::vector<Label>& y,
                                const std::vector<std::size_t>& samples,
                                const std::vector<std::size_t>& feature_subset) {
    const auto parent_counts = count_labels(y, samples);
    const double parent_gini = gini(parent_counts[0], parent_counts[1]);
    const double n = static_cast<double>(samples.size());

    std::optional<Split> best;
    std::vector<std::pair<double, Label>> column(samples.size());
    for (std::size_t f : feature_subset) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            column[i] = {X[samples[i]][f], y[samples[i]]};
        }
        std::sort(column.begin(), column.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::array<std::int64_t, 2> left{};
        auto right = parent_counts;
        for (std::size_t i = 0; i + 1 < column.size(); ++i) {
            ++left[static_cast<std::size_t>(column[i].second)];
            --right[static_cast<std::size_t>(column[i].second)];
            if (column[i].first == column[i + 1].first) continue;

            const double threshold = column[i].first + (column[i + 1].first - column[i].first) / 2.0;
            const double nl = static_cast<double>(i + 1);
            const double nr = n - nl;
            const double weighted =
                (nl / n) * gini(left[0], left[1]) + (nr / n) * gini(right[0], right[1]);
            const double decrease = parent_gini - weighted;
            if (decrease <= 0.0) continue;
            if (!best || decrease > best->decrease ||
                (decrease == best->decrease &&
                 (static_cast<int>(f) < best->feature ||
                  (static_cast<int>(f) == best->feature && threshold < best->threshold)))) {
                best = Split{static_cast<int>(f), threshold, decrease};
            }
        }
    }
    return best;
}

Label DecisionTree::predict(const std::vector<double>& x) const {
    const TreeNode* node = &nodes[0];
    while (!node->is_leaf()) {
        node = &nodes[x[node->feature] <= node->threshold ? node->left : node->right];
    }
    return node->counts[0] >= node->counts[1] ? Label::Fake : Label::Real;
}

RandomForestModel forest_fit(const std::vector<std::vector<double>>& X,
                             const std::vector<Label>& y, const TrainConfig& config,
                             const std::string& layout_version) {
    if (X.size() != y.size()) {
        throw Error(ErrorKind::ShapeMismatch, std::to_string(X.size()) + " rows vs " +
                                                  std::to_string(y.size()) + " labels");
    }
    if (X.size() < 2) throw Error(ErrorKind::ShapeMismatch, "need at least 2 samples");
    const std::size_t dim = X[0].size();
    if (dim == 0) throw Error(ErrorKind::ShapeMismatch, "empty feature vectors");
    for (const auto& row : X) {
        if (row.size() != dim) throw Error(ErrorKind::ShapeMismatch, "ragged feature matrix");
    }
    const bool has_fake = std::find(y.begin(), y.end(), Label::Fake) != y.end();
    const bool has_real = std::find(y.begin(), y.end(), Label::Real) != y.end();
    if (!has_fake || !has_real) {
        throw Error(ErrorKind::SingleClassData, "training data must contain both classes");
    }
    if (config.n_trees < 1) throw Error(ErrorKind::InvalidArgument, "n_trees must be positive");

    RandomForestModel model;
    model.config = config;
    if (model.config.features_per_split == 0) {
        model.config.features_per_split =
            static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(dim))));
    }
    model.config.features_per_split = std::min(model.config.features_per_split, dim);
    model.layout_version = layout_version;
    model.feature_dim = dim;

    model.trees.reserve(config.n_trees);
    for (std::size_t t = 0; t < config.n_trees; ++t) {
        Rng rng = make_rng(derive_seed(config.seed, t));
        std::vector<std::size_t> samples(X.size());
        if (config.bootstrap) {
            for (std::size_t i = 0; i < X.size(); ++i) samples[i] = rand_index(rng, X.size());
        } else {
            for (std::size_t i = 0; i < X.size(); ++i) samples[i] = i;
        }
        TreeBuilder builder{X, y, model.config, rng, {}};
        builder.build(std::move(samples), 0);
        model.trees.push_back(std::move(builder.tree));
    }
    return model;
}

Prediction predict(const RandomForestModel& model, const std::vector<double>& x) {
    if (x.size() != model.feature_dim) {
        throw Error(ErrorKind::LayoutMismatch, "expected " + std::to_string(model.feature_dim) +
                                                   " features, got " + std::to_string(x.size()));
    }
    std::size_t fake_votes = 0;
    for (const DecisionTree& tree : model.trees) {
        if (tree.predict(x) == Label::Fake) ++fake_votes;
    }
    Prediction out;
    out.score = static_cast<double>(fake_votes) / static_cast<double>(model.trees.size());
    out.label = 2 * fake_votes >= model.trees.size() ? Label::Fake : Label::Real;
    return out;
}

std::string model_to_json(const RandomForestModel& model) {
    nlohmann::json doc;
    doc["schema"] = kModelSchema;
    doc["layout_version"] = model.layout_version;
    doc["feature_dim"] = model.feature_dim;
    doc["class_order"] = model.class_order;
    nlohmann::json cfg;
    cfg["n_trees"] = model.config.n_trees;
    cfg["max_depth"] =
        model.config.max_depth ? nlohmann::json(*model.config.max_depth) : nlohmann::json(nullptr);
    cfg["min_samples_split"] = model.config.min_samples_split;
    cfg["features_per_split"] = model.config.features_per_split;
    cfg["bootstrap"] = model.config.bootstrap;
    cfg["seed"] = model.config.seed;
    doc["config"] = cfg;

    nlohmann::json trees = nlohmann::json::array();
    for (const DecisionTree& tree : model.trees) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const TreeNode& node : tree.nodes) {
            nlohmann::json n;
            if (node.is_leaf()) {
                n["counts"] = node.counts;
            } else {
                n["feature"] = node.feature;
                n["threshold"] = node.threshold;
                n["left"] = node.left;
                n["right"] = node.right;
            }
            nodes.push_back(std::move(n));
        }
        trees.push_back(nlohmann::json{{"nodes", std::move(nodes)}});
    }
    doc["trees"] = std::move(trees);
    return doc.dump();
}

RandomForestModel model_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("model file: ") + e.what());
    }
    try {
        if (!doc.contains("schema") || doc["schema"].get<std::string>() != kModelSchema) {
            throw Error(ErrorKind::SchemaVersionMismatch,
                        "expected schema '" + std::string(kModelSchema) + "'");
        }
        RandomForestModel model;
        model.layout_version = doc.at("layout_version").get<std::string>();
        model.feature_dim = doc.at("feature_dim").get<std::size_t>();
        model.class_order = doc.at("class_order").get<std::array<std::string, 2>>();
        const auto& cfg = doc.at("config");
        model.config.n_trees = cfg.at("n_trees").get<std::size_t>();
        if (!cfg.at("max_depth").is_null()) {
            model.config.max_depth = cfg.at("max_depth").get<std::size_t>();
        }
        model.config.min_samples_split = cfg.at("min_samples_split").get<std::size_t>();
        model.config.features_per_split = cfg.at("features_per_split").get<std::size_t>();
        model.config.bootstrap = cfg.at("bootstrap").get<bool>();
        model.config.seed = cfg.at("seed").get<std::uint64_t>();

        for (const auto& tree_doc : doc.at("trees")) {
            DecisionTree tree;
            for (const auto& node_doc : tree_doc.at("nodes")) {
                TreeNode node;
                if (node_doc.contains("counts")) {
                    node.counts = node_doc.at("counts").get<std::array<std::int64_t, 2>>();
                } else {
                    node.feature = node_doc.at("feature").get<int>();
                    node.threshold = node_doc.at("threshold").get<double>();
                    node.left = node_doc.at("left").get<int>();
                    node.right = node_doc.at("right").get<int>();
                    if (node.feature < 0 ||
                        static_cast<std::size_t>(node.feature) >= model.feature_dim) {
                        throw Error(ErrorKind::ParseError, "node feature index out of range");
                    }
                }
                tree.nodes.push_back(node);
            }
            if (tree.nodes.empty()) throw Error(ErrorKind::ParseError, "empty tree");
            for (const TreeNode& node : tree.nodes) {
                if (!node.is_leaf() &&
                    (node.left < 0 || node.right < 0 ||
                     node.left >= static_cast<int>(tree.nodes.size()) ||
                     node.right >= static_cast<int>(tree.nodes.size()))) {
                    throw Error(ErrorKind::ParseError, "node child index out of range");
                }
            }
            model.trees.push_back(std::move(tree));
        }
        if (model.trees.size() != model.config.n_trees) {
            throw Error(ErrorKind::ParseError, "tree count does not match config");
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("model file: ") + e.what());
    }
}

void save_model(const RandomForestModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << model_to_json(model) << '\n';
    if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

RandomForestModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

} // namespace crosscheck
