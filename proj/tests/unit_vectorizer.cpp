#include "crosscheck/vectorizer.hpp"

#include "crosscheck/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace crosscheck;

namespace {

EntityList doc(std::initializer_list<const char*> items) {
    EntityList list;
    for (const char* item : items) list.items.emplace_back(item);
    return list;
}

// Independent evaluation of the idf formula for the frozen expectations.
double idf_oracle(std::size_t n_docs, std::size_t df) {
    return std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + static_cast<double>(df))) + 1.0;
}

} // namespace

TEST_CASE("fit computes smoothed idf in first-occurrence order") {
    const TfIdfModel model = TfIdfModel::fit({doc({"a"}), doc({"a"}), doc({"b"})});
    REQUIRE(model.vocabulary_size() == 2);
    CHECK(model.terms()[0] == "a");
    CHECK(model.terms()[1] == "b");
    CHECK(model.idf()[0] == doctest::Approx(1.2877).epsilon(1e-3));
    CHECK(model.idf()[1] == doctest::Approx(1.6931).epsilon(1e-3));
    CHECK(model.idf()[0] == doctest::Approx(idf_oracle(3, 2)).epsilon(1e-12));
    CHECK(model.idf()[1] == doctest::Approx(idf_oracle(3, 1)).epsilon(1e-12));
}

TEST_CASE("single-doc vocabulary gets idf 1") {
    const TfIdfModel model = TfIdfModel::fit({doc({"a"})});
    CHECK(model.idf()[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit with no entities anywhere fails") {
    CHECK_THROWS_AS(TfIdfModel::fit({doc({}), doc({})}), Error);
    try {
        TfIdfModel::fit({doc({}), doc({})});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyVocabulary);
    }
}

TEST_CASE("transform weights counts by idf and normalizes") {
    const TfIdfModel model = TfIdfModel::fit({doc({"a"}), doc({"a"}), doc({"b"})});
    const SparseVector vec = model.transform(doc({"a", "a", "b"}));
    REQUIRE(vec.pairs.size() == 2);
    // Hand: unnormalized (2*1.28768..., 1*1.69314...), then L2.
    const double wa = 2.0 * idf_oracle(3, 2);
    const double wb = 1.0 * idf_oracle(3, 1);
    const double norm = std::sqrt(wa * wa + wb * wb);
    CHECK(vec.pairs[0].second == doctest::Approx(wa / norm).epsilon(1e-12));
    CHECK(vec.pairs[1].second == doctest::Approx(wb / norm).epsilon(1e-12));
    CHECK(vec.pairs[0].second == doctest::Approx(0.8357).epsilon(1e-3));
    CHECK(vec.pairs[1].second == doctest::Approx(0.5492).epsilon(1e-3));
    CHECK(vec.norm() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("empty and out-of-vocabulary docs transform to zero") {
    const TfIdfModel model = TfIdfModel::fit({doc({"a"}), doc({"b"})});
    CHECK(model.transform(doc({})).is_zero());
    CHECK(model.transform(doc({"z"})).is_zero());
    CHECK(model.transform(doc({})).dim == 2);
}

TEST_CASE("cosine identities") {
    const TfIdfModel model = TfIdfModel::fit({doc({"a"}), doc({"a"}), doc({"b"})});
    const SparseVector v = model.transform(doc({"a", "a", "b"}));
    CHECK(cosine(v, v) == doctest::Approx(1.0).epsilon(1e-9));

    const SparseVector a = model.transform(doc({"a"}));
    const SparseVector b = model.transform(doc({"b"}));
    CHECK(cosine(a, b) == 0.0);

    // u = (0.8357, 0.5492) against (1, 0): the dot is u's first weight.
    CHECK(cosine(v, a) == doctest::Approx(0.8357).epsilon(1e-3));
    CHECK(cosine(v, a) == doctest::Approx(cosine(a, v)).epsilon(1e-15));
}

TEST_CASE("zero vectors have cosine 0, dim mismatch throws") {
    const TfIdfModel model = TfIdfModel::fit({doc({"a"})});
    const SparseVector zero = model.transform(doc({}));
    const SparseVector v = model.transform(doc({"a"}));
    CHECK(cosine(zero, v) == 0.0);
    CHECK(cosine(zero, zero) == 0.0);

    SparseVector other;
    other.dim = 5;
    CHECK_THROWS_AS(cosine(v, other), Error);
}

TEST_CASE("transform norm is 0 or 1 and refits are bit-identical") {
    const std::vector<EntityList> docs = {doc({"a", "b", "c"}), doc({"b"}), doc({"c", "c", "d"}),
                                          doc({})};
    const TfIdfModel m1 = TfIdfModel::fit(docs);
    const TfIdfModel m2 = TfIdfModel::fit(docs);
    CHECK(m1.terms() == m2.terms());
    CHECK(m1.idf() == m2.idf());
    for (const EntityList& d :
         {doc({"a"}), doc({"a", "d", "d"}), doc({"z"}), doc({}), doc({"b", "c"})}) {
        const SparseVector v1 = m1.transform(d);
        const SparseVector v2 = m2.transform(d);
        CHECK(v1.pairs == v2.pairs);
        const double n = v1.norm();
        CHECK((n == 0.0 || std::abs(n - 1.0) < 1e-9));
        for (const auto& [index, weight] : v1.pairs) CHECK(weight > 0.0);
    }
}
