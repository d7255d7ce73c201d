#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace crosscheck {

enum class Emotion { Happy = 0, Angry = 1, Sad = 2, Surprise = 3, Fear = 4 };

// Normalized five-way emotion profile in (happy, angry, sad, surprise, fear)
// order; sums to 1, or is all zero when no lexicon word matched.
struct EmotionVector {
    std::array<double, 5> values{};

    double sum() const;
    bool is_zero() const;
};

// word -> weight in [-1, 1], lowercase words.
class SentimentLexicon {
public:
    SentimentLexicon() = default;
    explicit SentimentLexicon(std::unordered_map<std::string, double> weights);

    // TSV "word<TAB>weight" per line; '#' comments and blank lines allowed.
    static SentimentLexicon load(const std::string& path);

    std::size_t size() const { return weights_.size(); }
    const double* find(const std::string& word) const;

private:
    std::unordered_map<std::string, double> weights_;
};

// word -> single emotion label, lowercase words.
class EmotionLexicon {
public:
    EmotionLexicon() = default;
    explicit EmotionLexicon(std::unordered_map<std::string, Emotion> map);

    // TSV "word<TAB>label" per line, labels among Happy/Angry/Sad/Surprise/
    // Fear (case-insensitive).
    static EmotionLexicon load(const std::string& path);

    std::size_t size() const { return map_.size(); }
    const Emotion* find(const std::string& word) const;

private:
    std::unordered_map<std::string, Emotion> map_;
};

// Mean weight of matched tokens, clamped to [-1, 1]; 0 (neutral) when
// nothing matches.
double sentiment(const std::vector<std::string>& tokens, const SentimentLexicon& lexicon);

// mean(reliable_scores) - target_score, in [-2, 2].
// Throws EmptyReliableSet on an empty list.
double sentiment_diff(double target_score, const std::vector<double>& reliable_scores);

// Per-emotion hit counts normalized by total hits; all-zero when none match.
EmotionVector emotion(const std::vector<std::string>& tokens, const EmotionLexicon& lexicon);

} // namespace crosscheck
