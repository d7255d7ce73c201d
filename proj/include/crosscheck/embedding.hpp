#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace crosscheck {

using EmbeddingVector = std::vector<double>;

// Pretrained word vectors in the common text format: an optional "count dim"
// header, then one "word v1 ... v_dim" line per word. Words are stored
// lowercase; later duplicates overwrite earlier ones.
class WordVectorStore {
public:
    WordVectorStore() = default;
    // Words are lowercased; every vector must have length dim.
    WordVectorStore(std::size_t dim, std::unordered_map<std::string, EmbeddingVector> table);

    // Throws IoError, ParseError, or DimInconsistent when a line's vector
    // length disagrees with the established dimension.
    static WordVectorStore load(const std::string& path);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return table_.size(); }
    const EmbeddingVector* find(const std::string& word) const;

    // Arithmetic mean of the vectors of in-vocabulary tokens; the zero
    // vector when none are known.
    EmbeddingVector embed(const std::vector<std::string>& tokens) const;

private:
    std::size_t dim_ = 0;
    std::unordered_map<std::string, EmbeddingVector> table_;
};

// Cosine of two embedding vectors; 0 when either is zero.
// Throws DimMismatch when lengths differ.
double semantic_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

} // namespace crosscheck
