#include "kolan/sentiment.hpp"

#include <algorithm>
#include <numeric>

namespace kolan::sentiment {

std::vector<std::string> CategoryTotals::dominant_order() const {
    const auto& names = category_names();
    std::vector<std::size_t> idx(kCategoryCount);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (totals[a] != totals[b]) return totals[a] > totals[b];
        return names[a] < names[b];
    });
    std::vector<std::string> out;
    out.reserve(kCategoryCount);
    for (std::size_t i : idx) out.push_back(names[i]);
    return out;
}

CategoryTotals& CategoryTotals::operator+=(const CategoryTotals& rhs) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) totals[i] += rhs.totals[i];
    return *this;
}

CategoryTotals aggregate(const std::vector<ScoredWord>& scored, bool unique_words) {
    CategoryTotals out;
    for (const ScoredWord& w : scored) {
        long long weight = unique_words ? 1 : w.count;
        for (std::size_t i = 0; i < kCategoryCount; ++i) {
            out.totals[i] += weight * static_cast<long long>(w.vector[i]);
        }
    }
    return out;
}

SentimentAnalysis run_sentiment(const std::vector<CommentCorpus>& corpora,
                                const text::TextResources& resources,
                                const EmotionLexicon& lexicon, TranslationProvider& provider,
                                TranslationCache& cache, bool unique_words) {
    std::vector<text::TokenDoc> docs;
    docs.reserve(corpora.size());
    for (const CommentCorpus& c : corpora) docs.push_back(text::process_corpus(c, resources));

    SentimentAnalysis out;
    out.frequencies = text::word_frequencies(docs);

    std::vector<std::string> unique;
    unique.reserve(out.frequencies.rows.size());
    for (const auto& [word, n] : out.frequencies.rows) unique.push_back(word);

    auto translated = translate_words(unique, provider, cache);

    out.scored.reserve(unique.size());
    for (std::size_t i = 0; i < unique.size(); ++i) {
        ScoredWord w;
        w.text = translated[i].first;
        w.translated = translated[i].second;
        w.vector = score_word(w.translated, lexicon);
        w.count = out.frequencies.rows[i].second;
        out.scored.push_back(std::move(w));
    }
    std::sort(out.scored.begin(), out.scored.end(),
              [](const ScoredWord& a, const ScoredWord& b) { return a.text < b.text; });

    out.totals = aggregate(out.scored, unique_words);

    for (const ScoredWord& w : out.scored) {
        bool any = false;
        for (auto b : w.vector) any |= b != 0;
        if (!any) out.unscored.push_back(w.text);
    }
    return out;
}

}  // namespace kolan::sentiment
