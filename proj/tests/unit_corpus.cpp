#include "crosscheck/corpus.hpp"

#include "crosscheck/error.hpp"
#include "crosscheck/rng.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

using namespace crosscheck;
using testutil::TempFile;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("load_posts keeps file order and maps fields") {
    TempFile file(
        R"({"id":"a","source":"BBC","timestamp":"2021-08-26T12:00:00Z","text":"x"}
{"id":"b","source":"AP","timestamp":"2021-08-25T00:00:00Z","text":"y"}
{"id":"c","source":"CNN","timestamp":"2021-08-24T06:30:00Z","text":"z"}
)",
        ".jsonl");
    const auto posts = load_posts(file.path());
    REQUIRE(posts.size() == 3);
    CHECK(posts[0].id == "a");
    CHECK(posts[0].source == "BBC");
    CHECK(posts[0].timestamp == parse_rfc3339("2021-08-26T12:00:00Z"));
    CHECK(posts[0].text == "x");
    CHECK(posts[1].id == "b");
    CHECK(posts[2].id == "c");
}

TEST_CASE("load_posts rejects duplicates naming the line") {
    TempFile file(
        R"({"id":"a","source":"BBC","timestamp":"2021-08-26T12:00:00Z","text":"x"}
{"id":"a","source":"AP","timestamp":"2021-08-25T00:00:00Z","text":"y"}
)",
        ".jsonl");
    try {
        load_posts(file.path());
        FAIL("expected DuplicateId");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateId);
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
}

TEST_CASE("load_posts reports parse errors with line numbers") {
    TempFile bad_json(R"({"id":"a","source":"BBC","timestamp":"2021-08-26T12:00:00Z","text":"x"}
not json
)",
                      ".jsonl");
    try {
        load_posts(bad_json.path());
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }

    TempFile bad_time(R"({"id":"a","source":"BBC","timestamp":"yesterday","text":"x"})", ".jsonl");
    CHECK(kind_of([&] { load_posts(bad_time.path()); }) == ErrorKind::ParseError);

    CHECK(kind_of([] { load_posts("/nonexistent/posts.jsonl"); }) == ErrorKind::IoError);
}

TEST_CASE("clean_text applies the ordered rule list") {
    const StopwordSet stops = {"the", "check"};
    const CleanedText out = clean_text("Check https://t.co/x @BBC the UN attack!", stops);
    CHECK(out.text_cased == "UN attack");
    CHECK(out.text_norm == "un attack");
    CHECK(out.tokens == std::vector<std::string>{"un", "attack"});
}

TEST_CASE("clean_text leaves plain words alone") {
    const CleanedText out = clean_text("hello", {"the"});
    CHECK(out.text_cased == "hello");
    CHECK(out.tokens == std::vector<std::string>{"hello"});
}

TEST_CASE("clean_text errors when nothing survives") {
    CHECK(kind_of([] { clean_text("@user http://a.b", {"the"}); }) ==
          ErrorKind::EmptyAfterCleaning);
}

TEST_CASE("apostrophes merge, intra-word hyphens survive") {
    const CleanedText out = clean_text("Kabul's airport, fighting Covid-19 surge - again",
                                       default_stopwords());
    CHECK(out.text_cased == "Kabuls airport fighting Covid-19 surge");
    CHECK(out.text_norm == "kabuls airport fighting covid-19 surge");
}

TEST_CASE("emails and www urls are removed before punctuation") {
    const CleanedText out =
        clean_text("mail bob@example.org or visit www.example.org/page now", {"or"});
    CHECK(out.text_cased == "mail visit now");
}

TEST_CASE("invalid utf-8 is dropped via replacement") {
    std::string text = "ok";
    text.push_back(static_cast<char>(0xFF));
    text += "go\xEF\xBF\xBD!";
    const CleanedText out = clean_text(text, {"the"});
    CHECK(out.text_cased == "okgo");
}

TEST_CASE("cleaning is idempotent on random inputs") {
    const StopwordSet stops = default_stopwords();
    const std::vector<std::string> pool = {
        "the",     "Kabul",     "attack!", "@user",   "https://t.co/abc", "www.news.org/x",
        "a.b@c.d", "Covid-19",  "it's",    "UN",      "15",               "--",
        "and",     "O'Brien",   "storm",   "(hello)", "no",               "world..."};
    Rng rng = make_rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        const std::size_t len = 1 + rand_index(rng, 8);
        for (std::size_t i = 0; i < len; ++i) {
            if (i) text += " ";
            text += pool[rand_index(rng, pool.size())];
        }
        CleanedText once;
        try {
            once = clean_text(text, stops);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptyAfterCleaning);
            continue;
        }
        const CleanedText twice = clean_text(once.text_cased, stops);
        CHECK(twice.text_cased == once.text_cased);
        CHECK(twice.text_norm == once.text_norm);
        CHECK(twice.tokens == once.tokens);
    }
}

TEST_CASE("no surviving token matches a removal rule or stopword") {
    const StopwordSet stops = default_stopwords();
    const CleanedText out = clean_text(
        "The @BBC said https://t.co/x a.b@c.org and Kabul's airport saw the UN visit", stops);
    for (const std::string& tok : out.tokens) {
        CHECK(stops.count(tok) == 0);
        CHECK(tok.find("@") == std::string::npos);
        CHECK(tok.find("http") == std::string::npos);
        CHECK(tok.find("www.") == std::string::npos);
    }
}

TEST_CASE("select_window matches the paper's inclusive span") {
    const TimeWindow window{parse_rfc3339("2021-08-26T00:00:00Z"), 3};
    const StopwordSet stops = {"the"};
    auto post_at = [&](const char* id, const char* ts) {
        RawPost raw{id, "BBC", parse_rfc3339(ts), "some words here"};
        return clean_post(raw, stops);
    };

    std::vector<CleanPost> posts = {post_at("in", "2021-08-23T00:00:00Z"),
                                    post_at("out", "2021-08-22T23:59:59Z"),
                                    post_at("end", "2021-08-29T00:00:00Z")};
    const auto selected = select_window(posts, window);
    REQUIRE(selected.size() == 2);
    CHECK(selected[0].id == "in");
    CHECK(selected[1].id == "end");

    CHECK(kind_of([&] { select_window({}, window); }) == ErrorKind::EmptyWindow);
}

TEST_CASE("window symmetry and subsequence properties") {
    const TimeWindow window{parse_rfc3339("2021-08-26T00:00:00Z"), 3};
    const StopwordSet stops = {"the"};
    Rng rng = make_rng(11);
    std::vector<CleanPost> posts;
    for (int i = 0; i < 60; ++i) {
        const std::int64_t delta =
            static_cast<std::int64_t>(rand_index(rng, 10 * 86400)) - 5 * 86400;
        RawPost raw{"p" + std::to_string(i), "s", window.center + delta, "text body"};
        posts.push_back(clean_post(raw, stops));
    }

    for (const CleanPost& post : posts) {
        const std::int64_t delta = post.timestamp - window.center;
        CHECK(window.contains(window.center + delta) == window.contains(window.center - delta));
    }

    std::vector<CleanPost> selected;
    try {
        selected = select_window(posts, window);
    } catch (const Error&) {
        return;
    }
    // Output ids appear in input order: a subsequence.
    std::size_t cursor = 0;
    for (const CleanPost& sel : selected) {
        while (cursor < posts.size() && posts[cursor].id != sel.id) ++cursor;
        CHECK(cursor < posts.size());
        ++cursor;
    }
}

TEST_CASE("bundled stopword file matches the compiled-in default") {
    const StopwordSet from_file = load_stopwords(testutil::data_dir() + "/stopwords_en.txt");
    CHECK(from_file == default_stopwords());
}
