#include "crosscheck/entities.hpp"

#include "crosscheck/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace crosscheck {

namespace {

std::string ascii_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return c < 0x80u ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    return out;
}

std::string normalize_phrase(const std::string& s) {
    std::istringstream in(s);
    std::string word, out;
    while (in >> word) {
        if (!out.empty()) out.push_back(' ');
        out += word;
    }
    return out;
}

bool is_capitalized(const std::string& token, int min_len) {
    if (static_cast<int>(token.size()) < min_len) return false;
    const unsigned char first = static_cast<unsigned char>(token[0]);
    return first < 0x80u && std::isupper(first);
}

} // namespace

EntityExtractor::EntityExtractor(std::vector<std::string> gazetteer, int min_token_len)
    : min_token_len_(min_token_len) {
    for (std::string& phrase : gazetteer) {
        std::string norm = normalize_phrase(ascii_lower(phrase));
        if (!norm.empty()) gazetteer_.push_back(std::move(norm));
    }
}

EntityExtractor EntityExtractor::from_gazetteer_file(const std::string& path, int min_token_len) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::vector<std::string> phrases;
    std::string line;
    while (std::getline(in, line)) {
        std::string norm = normalize_phrase(line);
        if (norm.empty() || norm[0] == '#') continue;
        phrases.push_back(norm);
    }
    return EntityExtractor(std::move(phrases), min_token_len);
}

EntityList EntityExtractor::extract(const std::string& text_cased) const {
    EntityList result;

    std::vector<std::string> tokens;
    {
        std::istringstream in(text_cased);
        std::string tok;
        while (in >> tok) tokens.push_back(tok);
    }

    // Capitalized runs.
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (!is_capitalized(tokens[i], min_token_len_)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < tokens.size() && is_capitalized(tokens[j], min_token_len_)) ++j;
        if (j - i >= 2) {
            std::string phrase;
            for (std::size_t k = i; k < j; ++k) {
                if (k > i) phrase.push_back(' ');
                phrase += ascii_lower(tokens[k]);
            }
            result.items.push_back(std::move(phrase));
        }
        for (std::size_t k = i; k < j; ++k) result.items.push_back(ascii_lower(tokens[k]));
        i = j;
    }

    // Gazetteer hits: case-insensitive, non-overlapping occurrences per phrase.
    const std::string haystack = ascii_lower(text_cased);
    for (const std::string& phrase : gazetteer_) {
        std::size_t pos = 0;
        while ((pos = haystack.find(phrase, pos)) != std::string::npos) {
            result.items.push_back(phrase);
            pos += phrase.size();
        }
    }

    return result;
}

} // namespace crosscheck
