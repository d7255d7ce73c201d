#include "crosscheck/vectorizer.hpp"

#include "crosscheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

namespace crosscheck {

double SparseVector::norm() const {
    double sum = 0.0;
    for (const auto& [index, weight] : pairs) sum += weight * weight;
    return std::sqrt(sum);
}

std::vector<double> SparseVector::to_dense() const {
    std::vector<double> dense(dim, 0.0);
    for (const auto& [index, weight] : pairs) dense[index] = weight;
    return dense;
}

double cosine(const SparseVector& u, const SparseVector& v) {
    if (u.dim != v.dim) {
        throw Error(ErrorKind::DimMismatch, "cosine of vectors with dims " +
                                                std::to_string(u.dim) + " and " +
                                                std::to_string(v.dim));
    }
    if (u.is_zero() || v.is_zero()) return 0.0;
    double dot = 0.0;
    std::size_t i = 0, j = 0;
    while (i < u.pairs.size() && j < v.pairs.size()) {
        if (u.pairs[i].first < v.pairs[j].first) {
            ++i;
        } else if (u.pairs[i].first > v.pairs[j].first) {
            ++j;
        } else {
            dot += u.pairs[i].second * v.pairs[j].second;
            ++i;
            ++j;
        }
    }
    return std::clamp(dot, -1.0, 1.0);
}

TfIdfModel TfIdfModel::fit(const std::vector<EntityList>& docs) {
    if (docs.empty()) throw Error(ErrorKind::InvalidArgument, "fit requires at least one doc");

    TfIdfModel model;
    model.n_docs_ = docs.size();

    std::vector<std::size_t> df;
    for (const EntityList& doc : docs) {
        std::unordered_set<std::uint32_t> seen;
        for (const std::string& entity : doc.items) {
            auto [it, inserted] =
                model.vocabulary_.try_emplace(entity, static_cast<std::uint32_t>(model.terms_.size()));
            if (inserted) {
                model.terms_.push_back(entity);
                df.push_back(0);
            }
            if (seen.insert(it->second).second) ++df[it->second];
        }
    }
    if (model.terms_.empty()) {
        throw Error(ErrorKind::EmptyVocabulary, "no document contains any entity");
    }

    model.idf_.resize(model.terms_.size());
    const double n = static_cast<double>(model.n_docs_);
    for (std::size_t t = 0; t < model.terms_.size(); ++t) {
        model.idf_[t] = std::log((1.0 + n) / (1.0 + static_cast<double>(df[t]))) + 1.0;
    }
    return model;
}

SparseVector TfIdfModel::transform(const EntityList& doc) const {
    std::map<std::uint32_t, double> counts;
    for (const std::string& entity : doc.items) {
        auto it = vocabulary_.find(entity);
        if (it != vocabulary_.end()) counts[it->second] += 1.0;
    }

    SparseVector vec;
    vec.dim = terms_.size();
    vec.pairs.reserve(counts.size());
    double sum = 0.0;
    for (const auto& [index, count] : counts) {
        const double w = count * idf_[index];
        vec.pairs.emplace_back(index, w);
        sum += w * w;
    }
    if (sum > 0.0) {
        const double inv = 1.0 / std::sqrt(sum);
        for (auto& [index, weight] : vec.pairs) weight *= inv;
    }
    return vec;
}

std::size_t TfIdfModel::term_index(const std::string& term) const {
    auto it = vocabulary_.find(term);
    return it == vocabulary_.end() ? npos : static_cast<std::size_t>(it->second);
}

} // namespace crosscheck
