#pragma once

#include <string>
#include <vector>

namespace crosscheck {

// Entity mentions of one document, lowercased, duplicates kept. The emission
// order is stable (capitalized runs left to right, then gazetteer hits in
// gazetteer order), which keeps downstream vocabulary order deterministic.
struct EntityList {
    std::vector<std::string> items;

    bool empty() const { return items.empty(); }
};

// Rule+gazetteer extractor standing in for a statistical NER. A run of
// consecutive capitalized tokens is one entity phrase; gazetteer phrases
// (case-insensitive) are matched anywhere in the text.
class EntityExtractor {
public:
    EntityExtractor() = default;
    explicit EntityExtractor(std::vector<std::string> gazetteer, int min_token_len = 2);

    // Loads a gazetteer file: one phrase per line, '#' comments allowed.
    static EntityExtractor from_gazetteer_file(const std::string& path, int min_token_len = 2);

    const std::vector<std::string>& gazetteer() const { return gazetteer_; }
    int min_token_len() const { return min_token_len_; }

    // text_cased should come from corpus cleaning (stopwords already gone).
    // Runs of capitalized tokens are emitted both as one joined phrase and as
    // individual tokens; a run of length one is emitted once. Never throws:
    // an empty list is a valid result.
    EntityList extract(const std::string& text_cased) const;

private:
    std::vector<std::string> gazetteer_; // lowercase, whitespace-normalized
    int min_token_len_ = 2;
};

} // namespace crosscheck
