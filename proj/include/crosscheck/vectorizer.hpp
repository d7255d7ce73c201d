#pragma once

#include "crosscheck/entities.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace crosscheck {

// Unit-norm (or zero) sparse vector with strictly increasing indices.
struct SparseVector {
    std::size_t dim = 0;
    std::vector<std::pair<std::uint32_t, double>> pairs;

    bool is_zero() const { return pairs.empty(); }
    double norm() const;
    std::vector<double> to_dense() const;
};

// Cosine of two sparse vectors; 0 when either is zero.
// Throws DimMismatch when dims differ.
double cosine(const SparseVector& u, const SparseVector& v);

// TF-IDF model over entity lists. idf(t) = ln((1+N)/(1+df(t))) + 1 with raw
// term counts and L2 normalization.
class TfIdfModel {
public:
    // Vocabulary is every entity occurring in at least one doc, in first
    // occurrence order. Throws EmptyVocabulary when no doc has any entity.
    static TfIdfModel fit(const std::vector<EntityList>& docs);

    // Counts in-vocabulary entities, weights by idf, L2-normalizes. An
    // all-OOV or empty doc transforms to the zero vector.
    SparseVector transform(const EntityList& doc) const;

    std::size_t vocabulary_size() const { return terms_.size(); }
    std::size_t n_docs() const { return n_docs_; }
    const std::vector<std::string>& terms() const { return terms_; }
    const std::vector<double>& idf() const { return idf_; }

    // Column index of a term, or npos when out of vocabulary.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t term_index(const std::string& term) const;

private:
    std::unordered_map<std::string, std::uint32_t> vocabulary_;
    std::vector<std::string> terms_; // index -> term
    std::vector<double> idf_;
    std::size_t n_docs_ = 0;
};

} // namespace crosscheck
