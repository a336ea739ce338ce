#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kolan/model.hpp"

namespace kolan::text {

// ---- unicode helpers ----------------------------------------------------

// Decodes one UTF-8 sequence starting at `i`; returns the codepoint and
// advances `i`. Malformed bytes decode to U+FFFD one byte at a time.
char32_t decode_utf8(const std::string& s, std::size_t& i);
void append_utf8(std::string& out, char32_t cp);

// Letter test over a curated range table approximating Unicode letter
// categories for the scripts that show up in social comments (Latin,
// Greek, Cyrillic, Arabic, Hebrew, kana, CJK, Hangul, ...). Digits,
// punctuation, symbols and emoji are all non-letters.
bool is_letter(char32_t cp);
char32_t to_lower(char32_t cp);

std::string lowercase(const std::string& utf8);

// ---- pipeline primitives ------------------------------------------------

// Lowercases and keeps only letters; every other character is dropped,
// whitespace runs collapse to one space, ends trimmed.
std::string clean(const std::string& raw);

// Splits cleaned text on single spaces; never yields empty tokens.
std::vector<std::string> tokenize(const std::string& cleaned);

using WordSet = std::unordered_set<std::string>;

// Drops tokens found in either list, preserving the order of survivors.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const WordSet& stop_id, const WordSet& stop_en);

struct SlangMap {
    std::unordered_map<std::string, std::string> entries;
};

struct LemmaLexicon {
    std::unordered_map<std::string, std::string> entries;
};

// Resolution order: slang rewrite first, then the lemma lexicon on the
// rewritten token, identity fallback. Output is lowercase letters only.
std::string lemmatize(const std::string& token, const LemmaLexicon& lemmas,
                      const SlangMap& slang);

// ---- staged documents ---------------------------------------------------

enum class Stage { Raw, Cleaned, Tokenized, Stopped, Lemmatized };
const std::string& to_string(Stage s);

struct TokenDoc {
    std::string kol_id;
    Stage stage = Stage::Raw;
    // Raw/Cleaned: one entry per comment. Tokenized onwards: flat tokens.
    std::vector<std::string> tokens;
};

TokenDoc make_raw(const CommentCorpus& corpus);
TokenDoc clean_doc(const TokenDoc& doc);
TokenDoc tokenize_doc(const TokenDoc& doc);
TokenDoc remove_stopwords_doc(const TokenDoc& doc, const WordSet& stop_id,
                              const WordSet& stop_en);
TokenDoc lemmatize_doc(const TokenDoc& doc, const LemmaLexicon& lemmas, const SlangMap& slang);

// ---- resources ----------------------------------------------------------

WordSet load_stoplist(const std::string& path);           // MissingStoplist on failure
SlangMap load_slang(const std::string& path);             // TSV word\tlemma
LemmaLexicon load_lemma_lexicon(const std::string& path); // TSV word\tlemma

struct TextResources {
    WordSet stop_id;
    WordSet stop_en;
    LemmaLexicon lemmas;
    SlangMap slang;
};

TextResources load_text_resources(const std::string& stop_id_path,
                                  const std::string& stop_en_path,
                                  const std::string& lemmas_path,
                                  const std::string& slang_path);

// ---- whole-corpus kernels -----------------------------------------------

// Raw comments -> Lemmatized TokenDoc. The OpenMP version processes
// comments independently and concatenates in comment order, so the output
// is identical to the serial reference (kept for tests and the benchmark).
TokenDoc process_corpus_serial(const CommentCorpus& corpus, const TextResources& res);
TokenDoc process_corpus(const CommentCorpus& corpus, const TextResources& res);

// ---- frequencies ----------------------------------------------------------

struct FrequencyTable {
    // sorted by count descending, then text ascending; entries unique
    std::vector<std::pair<std::string, long long>> rows;

    FrequencyTable top(std::size_t k) const;
    std::string to_csv() const;  // header "text,n"
};

// Pools counts across docs; every doc must be Lemmatized (StageError).
FrequencyTable word_frequencies_serial(const std::vector<TokenDoc>& docs);
FrequencyTable word_frequencies(const std::vector<TokenDoc>& docs);

}  // namespace kolan::text
