#include "crosscheck/affect.hpp"

#include "crosscheck/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>

namespace crosscheck {

namespace {

std::string ascii_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return c < 0x80u ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Splits a lexicon line into (word, value) on the first tab.
bool split_tsv(const std::string& line, std::string& word, std::string& value) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) return false;
    word = trim(line.substr(0, tab));
    value = trim(line.substr(tab + 1));
    return !word.empty() && !value.empty();
}

} // namespace

double EmotionVector::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

bool EmotionVector::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

SentimentLexicon::SentimentLexicon(std::unordered_map<std::string, double> weights)
    : weights_(std::move(weights)) {}

SentimentLexicon SentimentLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::unordered_map<std::string, double> weights;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::string word, value;
        if (!split_tsv(line, word, value)) {
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": expected word<TAB>weight");
        }
        char* end = nullptr;
        const double weight = std::strtod(value.c_str(), &end);
        if (end != value.c_str() + value.size() || !std::isfinite(weight) || weight < -1.0 ||
            weight > 1.0) {
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) +
                                                   ": weight must be a real in [-1, 1]");
        }
        weights[ascii_lower(word)] = weight;
    }
    return SentimentLexicon(std::move(weights));
}

const double* SentimentLexicon::find(const std::string& word) const {
    auto it = weights_.find(word);
    return it == weights_.end() ? nullptr : &it->second;
}

EmotionLexicon::EmotionLexicon(std::unordered_map<std::string, Emotion> map)
    : map_(std::move(map)) {}

EmotionLexicon EmotionLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::unordered_map<std::string, Emotion> map;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::string word, value;
        if (!split_tsv(line, word, value)) {
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": expected word<TAB>label");
        }
        const std::string label = ascii_lower(value);
        Emotion emo;
        if (label == "happy") emo = Emotion::Happy;
        else if (label == "angry") emo = Emotion::Angry;
        else if (label == "sad") emo = Emotion::Sad;
        else if (label == "surprise") emo = Emotion::Surprise;
        else if (label == "fear") emo = Emotion::Fear;
        else
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": unknown emotion '" + value + "'");
        map[ascii_lower(word)] = emo;
    }
    return EmotionLexicon(std::move(map));
}

const Emotion* EmotionLexicon::find(const std::string& word) const {
    auto it = map_.find(word);
    return it == map_.end() ? nullptr : &it->second;
}

double sentiment(const std::vector<std::string>& tokens, const SentimentLexicon& lexicon) {
    double sum = 0.0;
    std::size_t hits = 0;
    for (const std::string& token : tokens) {
        if (const double* w = lexicon.find(token)) {
            sum += *w;
            ++hits;
        }
    }
    if (hits == 0) return 0.0;
    return std::clamp(sum / static_cast<double>(hits), -1.0, 1.0);
}

double sentiment_diff(double target_score, const std::vector<double>& reliable_scores) {
    if (reliable_scores.empty()) {
        throw Error(ErrorKind::EmptyReliableSet, "no reliable scores to compare against");
    }
    const double mean = std::accumulate(reliable_scores.begin(), reliable_scores.end(), 0.0) /
                        static_cast<double>(reliable_scores.size());
    return mean - target_score;
}

EmotionVector emotion(const std::vector<std::string>& tokens, const EmotionLexicon& lexicon) {
    EmotionVector vec;
    std::size_t hits = 0;
    for (const std::string& token : tokens) {
        if (const Emotion* e = lexicon.find(token)) {
            vec.values[static_cast<std::size_t>(*e)] += 1.0;
            ++hits;
        }
    }
    if (hits > 0) {
        for (double& v : vec.values) v /= static_cast<double>(hits);
    }
    return vec;
}

} // namespace crosscheck
