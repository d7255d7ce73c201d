#include "crosscheck/embedding.hpp"

#include "crosscheck/error.hpp"
#include "crosscheck/rng.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

using namespace crosscheck;
using testutil::TempFile;

TEST_CASE("loads plain vector files") {
    TempFile file("alpha 1 0 0\nbeta 0 1 0\n", ".vec");
    const WordVectorStore store = WordVectorStore::load(file.path());
    CHECK(store.size() == 2);
    CHECK(store.dim() == 3);
    REQUIRE(store.find("alpha"));
    CHECK((*store.find("alpha"))[0] == 1.0);
}

TEST_CASE("consumes the count-dim header") {
    TempFile file("2 3\nalpha 1 0 0\nbeta 0 1 0\n", ".vec");
    const WordVectorStore store = WordVectorStore::load(file.path());
    CHECK(store.size() == 2);
    CHECK(store.dim() == 3);
}

TEST_CASE("inconsistent dimensions are rejected") {
    TempFile file("alpha 1 0 0\nbeta 0 1\n", ".vec");
    try {
        WordVectorStore::load(file.path());
        FAIL("expected DimInconsistent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimInconsistent);
    }
}

TEST_CASE("later duplicates overwrite and words are lowercased") {
    TempFile file("Word 1 1\nword 2 2\n", ".vec");
    const WordVectorStore store = WordVectorStore::load(file.path());
    CHECK(store.size() == 1);
    CHECK((*store.find("word"))[0] == 2.0);
}

TEST_CASE("embed means the in-vocabulary tokens") {
    TempFile file("a 1 0 0\nb 0 1 0\n", ".vec");
    const WordVectorStore store = WordVectorStore::load(file.path());

    const EmbeddingVector mean = store.embed({"a", "b"});
    CHECK(mean == EmbeddingVector{0.5, 0.5, 0.0});

    CHECK(store.embed({"a"}) == *store.find("a"));
    CHECK(store.embed({"zzz", "yyy"}) == EmbeddingVector{0.0, 0.0, 0.0});

    // Permutation invariance.
    Rng rng = make_rng(2);
    std::vector<std::string> tokens = {"a", "b", "zzz", "a", "b", "b"};
    const EmbeddingVector base = store.embed(tokens);
    for (int i = 0; i < 10; ++i) {
        shuffle(tokens, rng);
        CHECK(store.embed(tokens) == base);
    }
}

TEST_CASE("semantic similarity is cosine with a zero convention") {
    CHECK(semantic_similarity({1.0, 2.0}, {1.0, 2.0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(semantic_similarity({1.0, 0.0}, {0.0, 1.0}) == 0.0);
    CHECK(semantic_similarity({1.0, 0.0}, {1.0, 1.0}) == doctest::Approx(0.7071).epsilon(1e-4));
    CHECK(semantic_similarity({0.0, 0.0}, {1.0, 1.0}) == 0.0);
    CHECK_THROWS_AS(semantic_similarity({1.0}, {1.0, 2.0}), Error);

    // Symmetric and scale-invariant.
    const EmbeddingVector a = {0.3, -0.2, 0.9};
    const EmbeddingVector b = {0.1, 0.4, 0.5};
    CHECK(semantic_similarity(a, b) == doctest::Approx(semantic_similarity(b, a)).epsilon(1e-15));
    EmbeddingVector scaled = b;
    for (double& x : scaled) x *= 37.0;
    CHECK(semantic_similarity(a, scaled) == doctest::Approx(semantic_similarity(a, b)).epsilon(1e-12));
}

TEST_CASE("loading then embedding is deterministic") {
    TempFile file("a 0.25 -0.5\nb 0.125 1.0\n", ".vec");
    const WordVectorStore s1 = WordVectorStore::load(file.path());
    const WordVectorStore s2 = WordVectorStore::load(file.path());
    CHECK(s1.embed({"a", "b"}) == s2.embed({"a", "b"}));
}
