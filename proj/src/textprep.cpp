#include "kolan/textprep.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kolan::text {

// ---- unicode helpers ----------------------------------------------------

char32_t decode_utf8(const std::string& s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return k < s.size() && (byte(k) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        char32_t cp = (char32_t(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
        i += 2;
        return cp < 0x80 ? 0xFFFD : cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        char32_t cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(byte(i + 1) & 0x3F) << 6) |
                      (byte(i + 2) & 0x3F);
        i += 3;
        return cp < 0x800 ? 0xFFFD : cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        char32_t cp = (char32_t(b0 & 0x07) << 18) | (char32_t(byte(i + 1) & 0x3F) << 12) |
                      (char32_t(byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
        i += 4;
        return (cp < 0x10000 || cp > 0x10FFFF) ? 0xFFFD : cp;
    }
    ++i;
    return 0xFFFD;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

namespace {

struct Range {
    char32_t lo, hi;
};

// Approximates Unicode letter categories for scripts seen in comments.
// Emoji (U+1Fxxx), digits, marks and symbols fall outside every range.
constexpr Range kLetterRanges[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00AA, 0x00AA}, {0x00B5, 0x00B5},
    {0x00BA, 0x00BA}, {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02AF},
    {0x0370, 0x0373}, {0x0376, 0x0377}, {0x037B, 0x037D}, {0x037F, 0x037F},
    {0x0386, 0x0386}, {0x0388, 0x03F5}, {0x03F7, 0x0481}, {0x048A, 0x052F},
    {0x0531, 0x0556}, {0x0561, 0x0587}, {0x05D0, 0x05EA}, {0x05EF, 0x05F2},
    {0x0620, 0x064A}, {0x066E, 0x066F}, {0x0671, 0x06D3}, {0x06FA, 0x06FC},
    {0x06FF, 0x06FF}, {0x0904, 0x0939}, {0x0958, 0x0961}, {0x0971, 0x097F},
    {0x0E01, 0x0E30}, {0x0E32, 0x0E33}, {0x0E40, 0x0E46}, {0x10A0, 0x10C5},
    {0x10D0, 0x10FA}, {0x1E00, 0x1FBC}, {0x1FC2, 0x1FCC}, {0x1FD0, 0x1FDB},
    {0x1FE0, 0x1FEC}, {0x1FF2, 0x1FFC}, {0x3041, 0x3096}, {0x30A1, 0x30FA},
    {0x30FC, 0x30FF}, {0x3400, 0x4DBF}, {0x4E00, 0x9FFF}, {0xAC00, 0xD7A3},
    {0xF900, 0xFAFF},
};

bool is_space_cp(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

}  // namespace

bool is_letter(char32_t cp) {
    for (const Range& r : kLetterRanges) {
        if (cp < r.lo) return false;  // table is sorted
        if (cp <= r.hi) return true;
    }
    return false;
}

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;   // Latin-1
    if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) {
        return (cp % 2 == 0) ? cp + 1 : cp;                          // Latin Ext-A, even pairs
    }
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
        return (cp % 2 == 1) ? cp + 1 : cp;                          // Latin Ext-A, odd pairs
    }
    if (cp == 0x178) return 0xFF;
    if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20; // Greek
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                // Cyrillic
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

std::string lowercase(const std::string& utf8) {
    std::string out;
    out.reserve(utf8.size());
    std::size_t i = 0;
    while (i < utf8.size()) append_utf8(out, to_lower(decode_utf8(utf8, i)));
    return out;
}

// ---- pipeline primitives ------------------------------------------------

std::string clean(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < raw.size()) {
        char32_t cp = decode_utf8(raw, i);
        if (is_space_cp(cp)) {
            if (!out.empty()) pending_space = true;
        } else if (is_letter(cp)) {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            append_utf8(out, to_lower(cp));
        }
        // everything else (digits, punctuation, symbols, emoji) is dropped
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& cleaned) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start < cleaned.size()) {
        std::size_t end = cleaned.find(' ', start);
        if (end == std::string::npos) end = cleaned.size();
        if (end > start) tokens.push_back(cleaned.substr(start, end - start));
        start = end + 1;
    }
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const WordSet& stop_id, const WordSet& stop_en) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) {
        if (!stop_id.count(t) && !stop_en.count(t)) out.push_back(t);
    }
    return out;
}

namespace {

// lowercase + strip non-letters; guarantees the lemmatize output invariant
std::string normalize_token(const std::string& token) {
    std::string out;
    out.reserve(token.size());
    std::size_t i = 0;
    while (i < token.size()) {
        char32_t cp = decode_utf8(token, i);
        if (is_letter(cp)) append_utf8(out, to_lower(cp));
    }
    return out;
}

}  // namespace

std::string lemmatize(const std::string& token, const LemmaLexicon& lemmas,
                      const SlangMap& slang) {
    std::string t = normalize_token(token);
    if (auto it = slang.entries.find(t); it != slang.entries.end()) t = it->second;
    if (auto it = lemmas.entries.find(t); it != lemmas.entries.end()) t = it->second;
    return t;
}

// ---- staged documents ---------------------------------------------------

const std::string& to_string(Stage s) {
    static const std::string names[] = {"Raw", "Cleaned", "Tokenized", "Stopped", "Lemmatized"};
    return names[static_cast<int>(s)];
}

namespace {
void require_stage(const TokenDoc& doc, Stage expected) {
    if (doc.stage != expected) {
        throw StageError("doc \"" + doc.kol_id + "\" is at stage " + to_string(doc.stage) +
                         ", expected " + to_string(expected));
    }
}
}  // namespace

TokenDoc make_raw(const CommentCorpus& corpus) {
    return TokenDoc{corpus.kol_id, Stage::Raw, corpus.comments};
}

TokenDoc clean_doc(const TokenDoc& doc) {
    require_stage(doc, Stage::Raw);
    TokenDoc out{doc.kol_id, Stage::Cleaned, {}};
    out.tokens.reserve(doc.tokens.size());
    for (const std::string& c : doc.tokens) out.tokens.push_back(clean(c));
    return out;
}

TokenDoc tokenize_doc(const TokenDoc& doc) {
    require_stage(doc, Stage::Cleaned);
    TokenDoc out{doc.kol_id, Stage::Tokenized, {}};
    for (const std::string& c : doc.tokens) {
        auto toks = tokenize(c);
        out.tokens.insert(out.tokens.end(), toks.begin(), toks.end());
    }
    return out;
}

TokenDoc remove_stopwords_doc(const TokenDoc& doc, const WordSet& stop_id,
                              const WordSet& stop_en) {
    require_stage(doc, Stage::Tokenized);
    return TokenDoc{doc.kol_id, Stage::Stopped, remove_stopwords(doc.tokens, stop_id, stop_en)};
}

TokenDoc lemmatize_doc(const TokenDoc& doc, const LemmaLexicon& lemmas, const SlangMap& slang) {
    require_stage(doc, Stage::Stopped);
    TokenDoc out{doc.kol_id, Stage::Lemmatized, {}};
    out.tokens.reserve(doc.tokens.size());
    for (const std::string& t : doc.tokens) out.tokens.push_back(lemmatize(t, lemmas, slang));
    return out;
}

// ---- resources ----------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::unordered_map<std::string, std::string> load_tsv_map(const std::string& path,
                                                          const char* what) {
    std::ifstream in(path);
    if (!in) throw IoError(std::string(what) + " not readable: " + path);
    std::unordered_map<std::string, std::string> map;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(row, 1, "expected word\\tlemma");
        std::string key = normalize_token(trim(line.substr(0, tab)));
        std::string value = normalize_token(trim(line.substr(tab + 1)));
        if (key.empty() || value.empty())
            throw ParseError(row, 1, "empty word or lemma after normalization");
        map[key] = value;
    }
    return map;
}

}  // namespace

WordSet load_stoplist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingStoplist(path);
    WordSet set;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        set.insert(lowercase(line));
    }
    return set;
}

SlangMap load_slang(const std::string& path) {
    SlangMap slang;
    slang.entries = load_tsv_map(path, "slang map");
    for (const auto& [word, lemma] : slang.entries) {
        if (slang.entries.count(lemma))
            throw ValidationError(word, "slang value \"" + lemma + "\" is also a slang key");
    }
    return slang;
}

LemmaLexicon load_lemma_lexicon(const std::string& path) {
    LemmaLexicon lex;
    lex.entries = load_tsv_map(path, "lemma lexicon");
    return lex;
}

TextResources load_text_resources(const std::string& stop_id_path,
                                  const std::string& stop_en_path,
                                  const std::string& lemmas_path, const std::string& slang_path) {
    TextResources res;
    res.stop_id = load_stoplist(stop_id_path);
    res.stop_en = load_stoplist(stop_en_path);
    res.lemmas = load_lemma_lexicon(lemmas_path);
    res.slang = load_slang(slang_path);
    return res;
}

// ---- whole-corpus kernels -----------------------------------------------

namespace {

std::vector<std::string> process_comment(const std::string& comment, const TextResources& res) {
    std::vector<std::string> toks = tokenize(clean(comment));
    toks = remove_stopwords(toks, res.stop_id, res.stop_en);
    for (std::string& t : toks) t = lemmatize(t, res.lemmas, res.slang);
    return toks;
}

}  // namespace

TokenDoc process_corpus_serial(const CommentCorpus& corpus, const TextResources& res) {
    TokenDoc out{corpus.kol_id, Stage::Lemmatized, {}};
    for (const std::string& comment : corpus.comments) {
        auto toks = process_comment(comment, res);
        out.tokens.insert(out.tokens.end(), toks.begin(), toks.end());
    }
    return out;
}

TokenDoc process_corpus(const CommentCorpus& corpus, const TextResources& res) {
    const std::size_t n = corpus.comments.size();
    std::vector<std::vector<std::string>> slots(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        slots[i] = process_comment(corpus.comments[i], res);
    }
    TokenDoc out{corpus.kol_id, Stage::Lemmatized, {}};
    std::size_t total = 0;
    for (const auto& s : slots) total += s.size();
    out.tokens.reserve(total);
    for (auto& s : slots) out.tokens.insert(out.tokens.end(), s.begin(), s.end());
    return out;
}

// ---- frequencies ----------------------------------------------------------

FrequencyTable FrequencyTable::top(std::size_t k) const {
    FrequencyTable t;
    t.rows.assign(rows.begin(), rows.begin() + std::min(k, rows.size()));
    return t;
}

std::string FrequencyTable::to_csv() const {
    std::string out = "text,n\n";
    for (const auto& [text, n] : rows) {
        out += text;
        out.push_back(',');
        out += std::to_string(n);
        out.push_back('\n');
    }
    return out;
}

namespace {

FrequencyTable sort_counts(std::unordered_map<std::string, long long>&& counts) {
    FrequencyTable table;
    table.rows.assign(counts.begin(), counts.end());
    std::sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return table;
}

void check_lemmatized(const std::vector<TokenDoc>& docs) {
    for (const TokenDoc& d : docs) {
        if (d.stage != Stage::Lemmatized)
            throw StageError("word_frequencies requires Lemmatized docs, \"" + d.kol_id +
                             "\" is at " + to_string(d.stage));
    }
}

}  // namespace

FrequencyTable word_frequencies_serial(const std::vector<TokenDoc>& docs) {
    check_lemmatized(docs);
    std::unordered_map<std::string, long long> counts;
    for (const TokenDoc& d : docs)
        for (const std::string& t : d.tokens) ++counts[t];
    return sort_counts(std::move(counts));
}

FrequencyTable word_frequencies(const std::vector<TokenDoc>& docs) {
    check_lemmatized(docs);
#ifdef _OPENMP
    std::unordered_map<std::string, long long> counts;
#pragma omp parallel
    {
        std::unordered_map<std::string, long long> local;
#pragma omp for schedule(dynamic, 1) nowait
        for (long long d = 0; d < static_cast<long long>(docs.size()); ++d) {
            for (const std::string& t : docs[d].tokens) ++local[t];
        }
        // integer merge is order-independent, so the result matches the
        // serial reference no matter how threads interleave here
#pragma omp critical
        for (auto& [word, n] : local) counts[word] += n;
    }
    return sort_counts(std::move(counts));
#else
    return word_frequencies_serial(docs);
#endif
}

}  // namespace kolan::text
