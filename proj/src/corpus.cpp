#include "crosscheck/corpus.hpp"

#include "crosscheck/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <unordered_set>

namespace crosscheck {

namespace {

// Drops invalid UTF-8 sequences (decode-as-replacement, then strip the
// replacement character) and any U+FFFD already present.
std::string repair_utf8(const std::string& input) {
    std::string out;
    out.reserve(input.size());
    std::size_t i = 0;
    const std::size_t n = input.size();
    auto cont = [&](std::size_t j) {
        return j < n && (static_cast<unsigned char>(input[j]) & 0xC0u) == 0x80u;
    };
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(input[i]);
        if (c < 0x80u) {
            out.push_back(input[i]);
            ++i;
        } else if (c >= 0xC2u && c <= 0xDFu && cont(i + 1)) {
            out.append(input, i, 2);
            i += 2;
        } else if (c == 0xE0u && i + 2 < n &&
                   static_cast<unsigned char>(input[i + 1]) >= 0xA0u &&
                   static_cast<unsigned char>(input[i + 1]) <= 0xBFu && cont(i + 2)) {
            out.append(input, i, 3);
            i += 3;
        } else if (((c >= 0xE1u && c <= 0xECu) || c == 0xEEu || c == 0xEFu) && cont(i + 1) &&
                   cont(i + 2)) {
            // U+FFFD itself (EF BF BD) is stripped.
            if (!(c == 0xEFu && static_cast<unsigned char>(input[i + 1]) == 0xBFu &&
                  static_cast<unsigned char>(input[i + 2]) == 0xBDu)) {
                out.append(input, i, 3);
            }
            i += 3;
        } else if (c == 0xEDu && i + 2 < n &&
                   static_cast<unsigned char>(input[i + 1]) >= 0x80u &&
                   static_cast<unsigned char>(input[i + 1]) <= 0x9Fu && cont(i + 2)) {
            out.append(input, i, 3);
            i += 3;
        } else if (c == 0xF0u && i + 3 < n &&
                   static_cast<unsigned char>(input[i + 1]) >= 0x90u &&
                   static_cast<unsigned char>(input[i + 1]) <= 0xBFu && cont(i + 2) && cont(i + 3)) {
            out.append(input, i, 4);
            i += 4;
        } else if (c >= 0xF1u && c <= 0xF3u && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
            out.append(input, i, 4);
            i += 4;
        } else if (c == 0xF4u && i + 3 < n &&
                   static_cast<unsigned char>(input[i + 1]) >= 0x80u &&
                   static_cast<unsigned char>(input[i + 1]) <= 0x8Fu && cont(i + 2) && cont(i + 3)) {
            out.append(input, i, 4);
            i += 4;
        } else {
            ++i; // invalid byte: decoded to U+FFFD, stripped
        }
    }
    return out;
}

const std::regex& url_pattern() {
    static const std::regex re(R"((https?://\S+)|(www\.\S+))", std::regex::icase);
    return re;
}

const std::regex& email_pattern() {
    static const std::regex re(R"([A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+)");
    return re;
}

const std::regex& handle_pattern() {
    static const std::regex re(R"(@\w+)");
    return re;
}

bool is_ascii_alnum(char c) {
    const unsigned char u = static_cast<unsigned char>(c);
    return u < 0x80u && std::isalnum(u);
}

// ASCII punctuation is dropped; a hyphen flanked by alphanumerics stays
// ("Covid-19"), but apostrophes always go ("Kabul's" -> "Kabuls").
std::string strip_punctuation(const std::string& input) {
    std::string out;
    out.reserve(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(input[i]);
        if (c < 0x80u && std::ispunct(c)) {
            if (input[i] == '-' && i > 0 && i + 1 < input.size() && is_ascii_alnum(input[i - 1]) &&
                is_ascii_alnum(input[i + 1])) {
                out.push_back('-');
            }
            continue;
        }
        out.push_back(input[i]);
    }
    return out;
}

std::string ascii_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return c < 0x80u ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    return out;
}

std::vector<std::string> split_whitespace(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

CleanedText clean_text(const std::string& text, const StopwordSet& stopwords) {
    if (stopwords.empty()) {
        throw Error(ErrorKind::InvalidArgument, "stopword set must be nonempty");
    }
    std::string s = repair_utf8(text);
    s = std::regex_replace(s, url_pattern(), " ");
    s = std::regex_replace(s, email_pattern(), " ");
    s = std::regex_replace(s, handle_pattern(), " ");
    s = strip_punctuation(s);

    std::vector<std::string> cased;
    for (const std::string& tok : split_whitespace(s)) {
        if (stopwords.count(ascii_lower(tok))) continue;
        cased.push_back(tok);
    }
    if (cased.empty()) {
        throw Error(ErrorKind::EmptyAfterCleaning, "no tokens survive cleaning");
    }

    CleanedText out;
    for (std::size_t i = 0; i < cased.size(); ++i) {
        if (i) out.text_cased.push_back(' ');
        out.text_cased += cased[i];
    }
    out.text_norm = ascii_lower(out.text_cased);
    for (const std::string& tok : cased) out.tokens.push_back(ascii_lower(tok));
    return out;
}

CleanPost clean_post(const RawPost& raw, const StopwordSet& stopwords) {
    CleanedText cleaned = clean_text(raw.text, stopwords);
    CleanPost post;
    post.id = raw.id;
    post.source = raw.source;
    post.timestamp = raw.timestamp;
    post.text = raw.text;
    post.text_cased = std::move(cleaned.text_cased);
    post.text_norm = std::move(cleaned.text_norm);
    post.tokens = std::move(cleaned.tokens);
    return post;
}

std::vector<RawPost> load_posts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");

    std::vector<RawPost> posts;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("source") ||
            !obj.contains("timestamp") || !obj.contains("text") || !obj["id"].is_string() ||
            !obj["source"].is_string() || !obj["timestamp"].is_string() ||
            !obj["text"].is_string()) {
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) +
                                                   ": expected string fields id/source/timestamp/text");
        }
        RawPost post;
        post.id = obj["id"].get<std::string>();
        post.source = obj["source"].get<std::string>();
        post.text = obj["text"].get<std::string>();
        try {
            post.timestamp = parse_rfc3339(obj["timestamp"].get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (post.id.empty()) {
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": empty id");
        }
        if (trim(post.text).empty()) {
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": empty text");
        }
        if (!seen.insert(post.id).second) {
            throw Error(ErrorKind::DuplicateId, path + ":" + std::to_string(lineno) +
                                                    ": duplicate id '" + post.id + "'");
        }
        posts.push_back(std::move(post));
    }
    return posts;
}

std::vector<CleanPost> select_window(const std::vector<CleanPost>& posts, const TimeWindow& window) {
    std::vector<CleanPost> out;
    for (const CleanPost& post : posts) {
        if (window.contains(post.timestamp)) out.push_back(post);
    }
    if (out.empty()) {
        throw Error(ErrorKind::EmptyWindow, "no post falls inside the window centered at " +
                                                format_rfc3339(window.center));
    }
    return out;
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        std::string word = trim(line);
        if (word.empty() || word[0] == '#') continue;
        words.insert(ascii_lower(word));
    }
    if (words.empty()) throw Error(ErrorKind::ParseError, "stopword file '" + path + "' is empty");
    return words;
}

} // namespace crosscheck
