#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace kolan::sentiment {

inline constexpr std::size_t kCategoryCount = 10;

// Fixed category order used everywhere (vectors, CSV columns, totals).
const std::array<std::string, kCategoryCount>& category_names();

// -1 when the name is not one of the ten categories.
int category_index(const std::string& name);

using IndicatorVector = std::array<std::uint8_t, kCategoryCount>;

struct EmotionLexicon {
    std::unordered_map<std::string, IndicatorVector> entries;

    bool contains(const std::string& word) const { return entries.count(word) != 0; }
};

// TSV: word \t category \t {0|1}, one association per line. Duplicate
// lines collapse idempotently (bitwise OR). Throws ParseError/BadCategory.
EmotionLexicon load_lexicon(const std::string& path);
EmotionLexicon parse_lexicon(const std::string& tsv);

// Lexicon lookup; absent words give the all-zero vector. A multi-word
// translation is looked up verbatim first; on a miss each constituent is
// looked up and the vectors are OR-ed.
IndicatorVector score_word(const std::string& translated, const EmotionLexicon& lexicon);

}  // namespace kolan::sentiment
