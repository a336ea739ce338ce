#include "kolan/lexicon.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "kolan/errors.hpp"
#include "kolan/textprep.hpp"

namespace kolan::sentiment {

const std::array<std::string, kCategoryCount>& category_names() {
    static const std::array<std::string, kCategoryCount> names = {
        "anger", "anticipation", "disgust", "fear", "joy",
        "negative", "positive", "sadness", "surprise", "trust"};
    return names;
}

int category_index(const std::string& name) {
    const auto& names = category_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

EmotionLexicon parse_lexicon(const std::string& tsv) {
    EmotionLexicon lex;
    std::istringstream in(tsv);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw ParseError(row, 1, "expected word\\tcategory\\t{0|1}");
        std::string word = text::lowercase(line.substr(0, t1));
        std::string category = line.substr(t1 + 1, t2 - t1 - 1);
        std::string flag = line.substr(t2 + 1);
        int idx = category_index(category);
        if (idx < 0) throw BadCategory(category);
        if (flag != "0" && flag != "1")
            throw ParseError(row, 3, "association flag must be 0 or 1, got \"" + flag + "\"");
        if (word.empty()) throw ParseError(row, 1, "empty word");
        auto& vec = lex.entries.try_emplace(word, IndicatorVector{}).first->second;
        if (flag == "1") vec[idx] = 1;
    }
    // a word whose every association is 0 carries no signal; dropping it
    // keeps "absent from lexicon" equivalent to "all-zero vector"
    for (auto it = lex.entries.begin(); it != lex.entries.end();) {
        bool any = false;
        for (auto b : it->second) any |= b != 0;
        it = any ? std::next(it) : lex.entries.erase(it);
    }
    return lex;
}

EmotionLexicon load_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("lexicon not readable: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_lexicon(ss.str());
}

IndicatorVector score_word(const std::string& translated, const EmotionLexicon& lexicon) {
    if (auto it = lexicon.entries.find(translated); it != lexicon.entries.end()) {
        return it->second;
    }
    IndicatorVector vec{};
    if (translated.find(' ') != std::string::npos) {
        for (const std::string& part : text::tokenize(translated)) {
            if (auto it = lexicon.entries.find(part); it != lexicon.entries.end()) {
                for (std::size_t i = 0; i < kCategoryCount; ++i) vec[i] |= it->second[i];
            }
        }
    }
    return vec;
}

}  // namespace kolan::sentiment
