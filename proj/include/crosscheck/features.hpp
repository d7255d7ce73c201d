#pragma once

#include "crosscheck/affect.hpp"
#include "crosscheck/clustering.hpp"
#include "crosscheck/corpus.hpp"
#include "crosscheck/embedding.hpp"

#include <array>
#include <string>

namespace crosscheck {

// Fixed 12-value layout fed to the classifier:
//   [0]     mean semantic similarity between target and matched posts
//   [1]     mean reliable sentiment minus target sentiment
//   [2..6]  target emotion profile (happy, angry, sad, surprise, fear)
//   [7..11] matched-story mean emotion profile, same order
using FeatureVector = std::array<double, 12>;

inline constexpr std::size_t kFeatureDim = 12;

// Bumped whenever the layout above changes; models record the version they
// were trained with and refuse mismatched vectors.
inline const std::string kFeatureLayoutVersion = "sem-sent-emo/12.1";

struct FeatureConfig {
    std::size_t m = 5;     // relevance filter size
    double tau = 0.1;      // relevance threshold
    std::string vectors_path;
    std::string sentiment_lexicon_path;
    std::string emotion_lexicon_path;
    std::string layout_version = kFeatureLayoutVersion;
};

// Computes the 12 features of a target against its matched story. The story
// emotion block averages the posts that have lexicon hits, so it stays a
// distribution (or all zero). Throws EmptyStory.
FeatureVector extract_features(const CleanPost& target, const MatchedStory& story,
                               const WordVectorStore& vectors, const SentimentLexicon& sentiment_lex,
                               const EmotionLexicon& emotion_lex);

} // namespace crosscheck
