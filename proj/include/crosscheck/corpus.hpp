#pragma once

#include "crosscheck/timeparse.hpp"

#include <set>
#include <string>
#include <vector>

namespace crosscheck {

// A post as ingested, before any cleaning.
struct RawPost {
    std::string id;
    std::string source;
    Instant timestamp = 0;
    std::string text;
};

// A post after the cleaning pipeline. text_cased keeps the original casing
// (needed by entity extraction); everything else works on text_norm/tokens.
struct CleanPost {
    std::string id;
    std::string source;
    Instant timestamp = 0;
    std::string text;       // original raw text
    std::string text_cased; // surviving tokens joined by single spaces, original case
    std::string text_norm;  // lowercase of text_cased
    std::vector<std::string> tokens; // words of text_norm
};

// Inclusive window [center - radius_days, center + radius_days].
struct TimeWindow {
    Instant center = 0;
    int radius_days = 3;

    Instant begin() const { return center - static_cast<Instant>(radius_days) * 86400; }
    Instant end() const { return center + static_cast<Instant>(radius_days) * 86400; }
    bool contains(Instant t) const { return t >= begin() && t <= end(); }
};

struct CleanedText {
    std::string text_cased;
    std::string text_norm;
    std::vector<std::string> tokens;
};

using StopwordSet = std::set<std::string>;

// The default English stopword list bundled with the repo
// (data/stopwords_en.txt carries the same words).
const StopwordSet& default_stopwords();

// Loads a stopword file: one word per line, '#' comments and blank lines
// allowed. Words are lowercased.
StopwordSet load_stopwords(const std::string& path);

// Reads a JSONL post file: one {"id","source","timestamp","text"} object per
// line. Posts come back in file order. Throws IoError, ParseError (with the
// offending line number) or DuplicateId.
std::vector<RawPost> load_posts(const std::string& path);

// Cleaning pipeline, applied in this order: UTF-8 repair (invalid sequences
// decode to U+FFFD, which is then stripped), handle/URL/email removal,
// punctuation stripping, whitespace tokenization, stopword drop. Hyphens
// between alphanumerics survive the punctuation pass; apostrophes never do
// ("Kabul's" merges to "Kabuls"). Throws EmptyAfterCleaning when nothing
// survives.
CleanedText clean_text(const std::string& text, const StopwordSet& stopwords);

// clean_text applied to a post. Throws EmptyAfterCleaning.
CleanPost clean_post(const RawPost& raw, const StopwordSet& stopwords);

// Exactly the posts whose timestamp falls inside the inclusive window,
// original order preserved. Throws EmptyWindow when none do.
std::vector<CleanPost> select_window(const std::vector<CleanPost>& posts, const TimeWindow& window);

} // namespace crosscheck
