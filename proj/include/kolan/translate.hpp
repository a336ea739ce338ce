#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kolan::sentiment {

// Indonesian -> English word translation. Implementations must return one
// lowercase output per input, order preserved, and be deterministic for a
// given provider version.
class TranslationProvider {
  public:
    virtual ~TranslationProvider() = default;
    virtual std::vector<std::string> translate(const std::vector<std::string>& words) = 0;
    virtual std::string version() const = 0;
};

// File-backed bilingual dictionary (TSV id_word \t en_word). Words without
// an entry pass through unchanged, which is how proper nouns survive.
class DictionaryProvider : public TranslationProvider {
  public:
    explicit DictionaryProvider(const std::string& tsv_path);
    std::vector<std::string> translate(const std::vector<std::string>& words) override;
    std::string version() const override { return "dictionary"; }

  private:
    std::unordered_map<std::string, std::string> entries_;
};

struct HttpProviderConfig {
    std::string endpoint;            // e.g. http://host:port/translate
    std::size_t batch_size = 128;
    int max_retries = 3;             // exponential backoff between attempts
    int backoff_initial_ms = 250;
    std::string api_key;             // empty -> read TRANSLATE_API_KEY
};

// POSTs {"source":"id","target":"en","words":[...]} and expects
// {"translations":[...]} of equal length. Throws ProviderUnavailable once
// retries are exhausted; the pipeline halts rather than score raw words.
class HttpProvider : public TranslationProvider {
  public:
    explicit HttpProvider(HttpProviderConfig config);
    std::vector<std::string> translate(const std::vector<std::string>& words) override;
    std::string version() const override { return "http:" + config_.endpoint; }

  private:
    std::vector<std::string> translate_batch(const std::vector<std::string>& batch);
    HttpProviderConfig config_;
};

// JSON map id_word -> en_word, written atomically (temp file + rename).
// An empty path keeps the cache in memory only.
class TranslationCache {
  public:
    TranslationCache() = default;
    explicit TranslationCache(std::string path);  // loads if the file exists

    bool lookup(const std::string& word, std::string& out) const;
    void store(const std::string& word, const std::string& translated);
    void flush();  // no-op for in-memory caches; CacheIOError on failure

    std::size_t size() const { return entries_.size(); }

  private:
    std::string path_;
    std::unordered_map<std::string, std::string> entries_;
    bool dirty_ = false;
};

// Translates `words` (multiplicities allowed), consulting the cache first
// and sending each remaining unique word to the provider exactly once, in
// first-appearance order, batched. Returns (word, translated) pairs in
// input order and flushes the cache.
std::vector<std::pair<std::string, std::string>> translate_words(
    const std::vector<std::string>& words, TranslationProvider& provider,
    TranslationCache& cache, std::size_t batch_size = 128);

}  // namespace kolan::sentiment
