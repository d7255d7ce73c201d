#include "support/synthetic.hpp"

#include "crosscheck/rng.hpp"

#include <array>
#include <string>
#include <vector>

namespace synthetic {

namespace {

using namespace crosscheck;

const std::array<std::array<const char*, 4>, 5> kStoryEntities = {{
    {"Ardale", "Brinmore", "Calveston", "Dyrell"},
    {"Eastvale", "Farrow", "Greymont", "Holtby"},
    {"Ironbay", "Juniper", "Kestrel", "Lorring"},
    {"Marwick", "Norvale", "Oakhurst", "Prell"},
    {"Quarrybank", "Redfield", "Selwyn", "Tarnmoor"},
}};

const std::array<const char*, 5> kStoryEvents = {"flood", "wildfire", "collapse", "outbreak",
                                                 "derailment"};

const std::vector<std::string> kNegativeWords = {"grim", "tragic", "devastating", "deadly"};
const std::vector<std::string> kPositiveWords = {"safe", "thriving", "wonderful", "unharmed"};
const std::vector<std::string> kDistressWords = {"panic", "dread", "outrage", "mourning"};
const std::vector<std::string> kCheerWords = {"cheering", "joy", "relief", "delighted"};
const std::vector<std::string> kFillerWords = {"crews",    "residents", "officials",
                                               "overnight", "reports",   "witnesses"};

const std::array<const char*, 5> kSources = {"WireOne", "DailyLedger", "CityDesk", "NewsRoom",
                                             "MetroPost"};

std::string pick(const std::vector<std::string>& pool, Rng& rng) {
    return pool[rand_index(rng, pool.size())];
}

Resources make_resources() {
    Resources res; // default stopwords, no gazetteer

    std::unordered_map<std::string, double> weights;
    for (const std::string& w : kNegativeWords) weights[w] = -1.0;
    for (const std::string& w : kDistressWords) weights[w] = -1.0;
    for (const std::string& w : kPositiveWords) weights[w] = 1.0;
    for (const std::string& w : kCheerWords) weights[w] = 1.0;
    res.sentiment_lexicon = SentimentLexicon(std::move(weights));

    std::unordered_map<std::string, Emotion> emotions;
    emotions["panic"] = Emotion::Fear;
    emotions["dread"] = Emotion::Fear;
    emotions["outrage"] = Emotion::Angry;
    emotions["mourning"] = Emotion::Sad;
    emotions["cheering"] = Emotion::Happy;
    emotions["joy"] = Emotion::Happy;
    emotions["relief"] = Emotion::Happy;
    emotions["delighted"] = Emotion::Happy;
    res.emotion_lexicon = EmotionLexicon(std::move(emotions));

    // dim 10: dims 0-4 one story each, dim 5 negative words, dim 6 positive
    // words, dim 7 neutral filler.
    std::unordered_map<std::string, EmbeddingVector> table;
    auto basis = [](std::size_t axis) {
        EmbeddingVector v(10, 0.0);
        v[axis] = 1.0;
        return v;
    };
    for (std::size_t s = 0; s < 5; ++s) {
        for (const char* entity : kStoryEntities[s]) table[entity] = basis(s);
        table[kStoryEvents[s]] = basis(s);
    }
    for (const std::string& w : kNegativeWords) table[w] = basis(5);
    for (const std::string& w : kDistressWords) table[w] = basis(5);
    for (const std::string& w : kPositiveWords) table[w] = basis(6);
    for (const std::string& w : kCheerWords) table[w] = basis(6);
    for (const std::string& w : kFillerWords) table[w] = basis(7);
    res.vectors = WordVectorStore(10, std::move(table));

    return res;
}

std::string post_text(std::size_t story, Rng& rng) {
    const auto& e = kStoryEntities[story];
    std::string text;
    text += e[0];
    text += " ";
    text += e[1 + rand_index(rng, 3)];
    text += " ";
    text += kStoryEvents[story];
    text += ": " + pick(kNegativeWords, rng) + " scene, " + pick(kFillerWords, rng) +
            " describe " + pick(kDistressWords, rng) + " and " + pick(kDistressWords, rng) +
            " across the area.";
    return text;
}

std::string aligned_claim_text(std::size_t story, Rng& rng) {
    const auto& e = kStoryEntities[story];
    std::string text;
    text += e[0];
    text += " ";
    text += e[1 + rand_index(rng, 3)];
    text += " ";
    text += kStoryEvents[story];
    text += " leaves a " + pick(kNegativeWords, rng) + " toll, " + pick(kDistressWords, rng) +
            " among " + pick(kFillerWords, rng) + ".";
    return text;
}

std::string contradicting_claim_text(std::size_t story, Rng& rng) {
    const auto& e = kStoryEntities[story];
    std::string text;
    text += e[0];
    text += " ";
    text += e[1 + rand_index(rng, 3)];
    text += " ";
    text += kStoryEvents[story];
    text += " harmed nobody, everyone " + pick(kPositiveWords, rng) + ", " +
            pick(kCheerWords, rng) + " and " + pick(kCheerWords, rng) + " among " +
            pick(kFillerWords, rng) + ".";
    return text;
}

} // namespace

Dataset make_dataset(std::uint64_t seed) {
    Dataset data;
    data.resources = make_resources();

    Rng rng = make_rng(seed);
    const Instant base = parse_rfc3339("2021-06-03T12:00:00Z");

    for (std::size_t s = 0; s < 5; ++s) {
        for (std::size_t i = 0; i < 10; ++i) {
            RawPost raw;
            raw.id = "p" + std::to_string(s) + "-" + std::to_string(i);
            raw.source = kSources[rand_index(rng, kSources.size())];
            // Spread posts across +-2 days around the claim date.
            raw.timestamp = base + (static_cast<Instant>(i % 5) - 2) * 86400 +
                            static_cast<Instant>(rand_index(rng, 86400));
            raw.text = post_text(s, rng);
            data.corpus.push_back(clean_post(raw, data.resources.stopwords));
        }
    }

    for (std::size_t s = 0; s < 5; ++s) {
        for (std::size_t i = 0; i < 20; ++i) {
            LabeledClaim real_claim;
            real_claim.id = "real-" + std::to_string(s) + "-" + std::to_string(i);
            real_claim.text = aligned_claim_text(s, rng);
            real_claim.timestamp = base + static_cast<Instant>(rand_index(rng, 7200));
            real_claim.label = Label::Real;
            data.claims.push_back(std::move(real_claim));

            LabeledClaim fake_claim;
            fake_claim.id = "fake-" + std::to_string(s) + "-" + std::to_string(i);
            fake_claim.text = contradicting_claim_text(s, rng);
            fake_claim.timestamp = base + static_cast<Instant>(rand_index(rng, 7200));
            fake_claim.label = Label::Fake;
            data.claims.push_back(std::move(fake_claim));
        }
    }
    return data;
}

} // namespace synthetic
