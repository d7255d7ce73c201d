#include "crosscheck/features.hpp"

#include "crosscheck/error.hpp"

namespace crosscheck {

FeatureVector extract_features(const CleanPost& target, const MatchedStory& story,
                               const WordVectorStore& vectors,
                               const SentimentLexicon& sentiment_lex,
                               const EmotionLexicon& emotion_lex) {
    if (story.posts.empty()) throw Error(ErrorKind::EmptyStory, "matched story has no posts");
    const double n_posts = static_cast<double>(story.posts.size());

    const EmbeddingVector target_emb = vectors.embed(target.tokens);
    double sim_sum = 0.0;
    for (const auto& [post, cos] : story.posts) {
        sim_sum += semantic_similarity(target_emb, vectors.embed(post.tokens));
    }

    const double target_sent = sentiment(target.tokens, sentiment_lex);
    std::vector<double> reliable_sents;
    reliable_sents.reserve(story.posts.size());
    for (const auto& [post, cos] : story.posts) {
        reliable_sents.push_back(sentiment(post.tokens, sentiment_lex));
    }

    const EmotionVector target_emo = emotion(target.tokens, emotion_lex);
    EmotionVector story_emo;
    std::size_t emo_posts = 0;
    for (const auto& [post, cos] : story.posts) {
        const EmotionVector e = emotion(post.tokens, emotion_lex);
        if (e.is_zero()) continue; // keep the mean a distribution
        for (std::size_t i = 0; i < 5; ++i) story_emo.values[i] += e.values[i];
        ++emo_posts;
    }
    if (emo_posts > 0) {
        for (double& v : story_emo.values) v /= static_cast<double>(emo_posts);
    }

    FeatureVector out{};
    out[0] = sim_sum / n_posts;
    out[1] = sentiment_diff(target_sent, reliable_sents);
    for (std::size_t i = 0; i < 5; ++i) out[2 + i] = target_emo.values[i];
    for (std::size_t i = 0; i < 5; ++i) out[7 + i] = story_emo.values[i];
    return out;
}

} // namespace crosscheck
