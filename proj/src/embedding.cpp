#include "crosscheck/embedding.hpp"

#include "crosscheck/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace crosscheck {

namespace {

std::string ascii_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return c < 0x80u ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    return s;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + s.size() && std::isfinite(out);
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

WordVectorStore::WordVectorStore(std::size_t dim,
                                 std::unordered_map<std::string, EmbeddingVector> table)
    : dim_(dim) {
    for (auto& [word, vec] : table) {
        if (vec.size() != dim_) {
            throw Error(ErrorKind::DimInconsistent, "vector for '" + word + "' has length " +
                                                        std::to_string(vec.size()));
        }
        table_[ascii_lower(word)] = std::move(vec);
    }
}

WordVectorStore WordVectorStore::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");

    WordVectorStore store;
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::vector<std::string> fields;
        std::string field;
        while (row >> field) fields.push_back(field);
        if (fields.empty()) continue;

        if (first && fields.size() == 2 && is_integer(fields[0]) && is_integer(fields[1])) {
            store.dim_ = static_cast<std::size_t>(std::stoull(fields[1]));
            first = false;
            continue; // "count dim" header
        }
        first = false;

        if (fields.size() < 2) {
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": expected word and vector");
        }
        const std::size_t vec_len = fields.size() - 1;
        if (store.dim_ == 0) {
            store.dim_ = vec_len;
        } else if (vec_len != store.dim_) {
            throw Error(ErrorKind::DimInconsistent,
                        path + ":" + std::to_string(lineno) + ": vector of length " +
                            std::to_string(vec_len) + ", expected " + std::to_string(store.dim_));
        }
        EmbeddingVector vec(vec_len);
        for (std::size_t i = 0; i < vec_len; ++i) {
            if (!parse_double(fields[i + 1], vec[i])) {
                throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) +
                                                       ": bad number '" + fields[i + 1] + "'");
            }
        }
        store.table_[ascii_lower(fields[0])] = std::move(vec);
    }
    return store;
}

const EmbeddingVector* WordVectorStore::find(const std::string& word) const {
    auto it = table_.find(word);
    return it == table_.end() ? nullptr : &it->second;
}

EmbeddingVector WordVectorStore::embed(const std::vector<std::string>& tokens) const {
    EmbeddingVector sum(dim_, 0.0);
    std::size_t hits = 0;
    for (const std::string& token : tokens) {
        if (const EmbeddingVector* vec = find(token)) {
            for (std::size_t i = 0; i < dim_; ++i) sum[i] += (*vec)[i];
            ++hits;
        }
    }
    if (hits > 0) {
        for (double& x : sum) x /= static_cast<double>(hits);
    }
    return sum;
}

double semantic_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimMismatch, "embedding dims " + std::to_string(a.size()) +
                                                " and " + std::to_string(b.size()));
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

} // namespace crosscheck
