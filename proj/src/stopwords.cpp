#include "crosscheck/corpus.hpp"

namespace crosscheck {

namespace {

// Same list as data/stopwords_en.txt; contraction forms appear without
// apostrophes because the cleaning pass strips them before the stopword drop.
constexpr const char* kDefaultStopwords[] = {
    "a",         "about",    "above",    "after",    "again",      "against",  "all",
    "am",        "an",       "and",      "any",      "are",        "arent",    "as",
    "at",        "be",       "because",  "been",     "before",     "being",    "below",
    "between",   "both",     "but",      "by",       "cannot",     "cant",     "could",
    "couldnt",   "did",      "didnt",    "do",       "does",       "doesnt",   "doing",
    "dont",      "down",     "during",   "each",     "few",        "for",      "from",
    "further",   "had",      "hadnt",    "has",      "hasnt",      "have",     "havent",
    "having",    "he",       "hed",      "hell",     "her",        "here",     "heres",
    "hers",      "herself",  "hes",      "him",      "himself",    "his",      "how",
    "hows",      "i",        "id",       "if",       "ill",        "im",       "in",
    "into",      "is",       "isnt",     "it",       "its",        "itself",   "ive",
    "lets",      "me",       "more",     "most",     "mustnt",     "my",       "myself",
    "no",        "nor",      "not",      "of",       "off",        "on",       "once",
    "only",      "or",       "other",    "ought",    "our",        "ours",     "ourselves",
    "out",       "over",     "own",      "same",     "shant",      "she",      "shed",
    "shell",     "shes",     "should",   "shouldnt", "so",         "some",     "such",
    "than",      "that",     "thats",    "the",      "their",      "theirs",   "them",
    "themselves","then",     "there",    "theres",   "these",      "they",     "theyd",
    "theyll",    "theyre",   "theyve",   "this",     "those",      "through",  "to",
    "too",       "under",    "until",    "up",       "very",       "was",      "wasnt",
    "we",        "wed",      "well",     "were",     "werent",     "weve",     "what",
    "whats",     "when",     "whens",    "where",    "wheres",     "which",    "while",
    "who",       "whom",     "whos",     "whys",     "why",        "will",     "with",
    "wont",      "would",    "wouldnt",  "you",      "youd",       "youll",    "youre",
    "yours",     "yourself", "yourselves", "your",
};

} // namespace

const StopwordSet& default_stopwords() {
    static const StopwordSet words(std::begin(kDefaultStopwords), std::end(kDefaultStopwords));
    return words;
}

} // namespace crosscheck
