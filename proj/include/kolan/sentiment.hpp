#pragma once

#include <string>
#include <vector>

#include "kolan/lexicon.hpp"
#include "kolan/model.hpp"
#include "kolan/textprep.hpp"
#include "kolan/translate.hpp"

namespace kolan::sentiment {

struct ScoredWord {
    std::string text;        // Indonesian lemma
    std::string translated;  // English word (may be multi-word)
    IndicatorVector vector{};
    long long count = 1;     // occurrences in the corpus
};

struct CategoryTotals {
    std::array<long long, kCategoryCount> totals{};

    long long operator[](std::size_t i) const { return totals[i]; }

    // categories sorted by total descending, ties alphabetical
    std::vector<std::string> dominant_order() const;

    CategoryTotals& operator+=(const CategoryTotals& rhs);
};

// Per-category sums weighted by occurrence count; `unique_words` weights
// every unique word once instead.
CategoryTotals aggregate(const std::vector<ScoredWord>& scored, bool unique_words = false);

struct SentimentAnalysis {
    text::FrequencyTable frequencies;   // lemma frequencies, pooled over corpora
    std::vector<ScoredWord> scored;     // one row per unique lemma, text ascending
    CategoryTotals totals;
    std::vector<std::string> unscored;  // unique words with all-zero vectors, sorted
};

// Full tail of the pipeline: lemmatized corpora -> translate -> score ->
// aggregate. Unique words hit the provider once, cache first.
SentimentAnalysis run_sentiment(const std::vector<CommentCorpus>& corpora,
                                const text::TextResources& resources,
                                const EmotionLexicon& lexicon, TranslationProvider& provider,
                                TranslationCache& cache, bool unique_words = false);

}  // namespace kolan::sentiment
