#include "kolan/translate.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "kolan/errors.hpp"
#include "kolan/textprep.hpp"

namespace kolan::sentiment {

using nlohmann::json;

// ---- DictionaryProvider ---------------------------------------------------

DictionaryProvider::DictionaryProvider(const std::string& tsv_path) {
    std::ifstream in(tsv_path);
    if (!in) throw IoError("dictionary not readable: " + tsv_path);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(row, 1, "expected id_word\\ten_word");
        entries_[text::lowercase(line.substr(0, tab))] =
            text::lowercase(line.substr(tab + 1));
    }
}

std::vector<std::string> DictionaryProvider::translate(const std::vector<std::string>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const std::string& w : words) {
        auto it = entries_.find(w);
        out.push_back(it == entries_.end() ? w : it->second);
    }
    return out;
}

// ---- HttpProvider -----------------------------------------------------------

HttpProvider::HttpProvider(HttpProviderConfig config) : config_(std::move(config)) {
    if (config_.endpoint.empty())
        throw ProviderUnavailable("no endpoint configured for the http provider");
    if (config_.api_key.empty()) {
        if (const char* key = std::getenv("TRANSLATE_API_KEY")) config_.api_key = key;
    }
    if (config_.batch_size == 0) config_.batch_size = 128;
}

namespace {

// splits http://host:port/path into (scheme://host:port, /path)
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
    std::size_t scheme = endpoint.find("://");
    std::size_t path = scheme == std::string::npos ? endpoint.find('/')
                                                   : endpoint.find('/', scheme + 3);
    if (path == std::string::npos) return {endpoint, "/"};
    return {endpoint.substr(0, path), endpoint.substr(path)};
}

}  // namespace

std::vector<std::string> HttpProvider::translate_batch(const std::vector<std::string>& batch) {
    auto [base, path] = split_endpoint(config_.endpoint);
    json body;
    body["source"] = "id";
    body["target"] = "en";
    body["words"] = batch;
    const std::string payload = body.dump();

    std::string last_error = "no attempt made";
    int delay_ms = config_.backoff_initial_ms;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
        httplib::Client client(base);
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(30, 0);
        httplib::Headers headers;
        if (!config_.api_key.empty())
            headers.emplace("Authorization", "Bearer " + config_.api_key);
        auto res = client.Post(path, headers, payload, "application/json");
        if (!res) {
            last_error = "connection failed to " + base;
            continue;
        }
        if (res->status != 200) {
            last_error = "HTTP " + std::to_string(res->status) + " from " + config_.endpoint;
            continue;
        }
        json parsed;
        try {
            parsed = json::parse(res->body);
        } catch (const json::parse_error& e) {
            last_error = std::string("bad JSON response: ") + e.what();
            continue;
        }
        if (!parsed.contains("translations") || !parsed["translations"].is_array() ||
            parsed["translations"].size() != batch.size()) {
            last_error = "response \"translations\" missing or wrong length";
            continue;
        }
        std::vector<std::string> out;
        out.reserve(batch.size());
        for (const auto& t : parsed["translations"])
            out.push_back(text::lowercase(t.get<std::string>()));
        return out;
    }
    throw ProviderUnavailable(last_error + " (after " + std::to_string(config_.max_retries + 1) +
                              " attempts)");
}

std::vector<std::string> HttpProvider::translate(const std::vector<std::string>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); i += config_.batch_size) {
        std::size_t end = std::min(words.size(), i + config_.batch_size);
        std::vector<std::string> batch(words.begin() + i, words.begin() + end);
        auto translated = translate_batch(batch);
        out.insert(out.end(), translated.begin(), translated.end());
    }
    return out;
}

// ---- TranslationCache -------------------------------------------------------

TranslationCache::TranslationCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;  // first run: file appears on flush
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw CacheIOError("corrupt cache " + path_ + ": " + e.what());
    }
    if (!doc.is_object()) throw CacheIOError("cache " + path_ + " must be a JSON object");
    for (auto& [k, v] : doc.items()) entries_[k] = v.get<std::string>();
}

bool TranslationCache::lookup(const std::string& word, std::string& out) const {
    auto it = entries_.find(word);
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
}

void TranslationCache::store(const std::string& word, const std::string& translated) {
    auto [it, inserted] = entries_.insert_or_assign(word, translated);
    (void)it;
    dirty_ = true;
    (void)inserted;
}

void TranslationCache::flush() {
    if (path_.empty() || !dirty_) return;
    json doc = json::object();
    for (const auto& [k, v] : entries_) doc[k] = v;
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheIOError("cannot write " + tmp);
        out << doc.dump(2) << '\n';
        out.flush();
        if (!out) throw CacheIOError("write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw CacheIOError("rename " + tmp + " -> " + path_ + ": " + ec.message());
    dirty_ = false;
}

// ---- translate_words --------------------------------------------------------

std::vector<std::pair<std::string, std::string>> translate_words(
    const std::vector<std::string>& words, TranslationProvider& provider,
    TranslationCache& cache, std::size_t batch_size) {
    if (batch_size == 0) batch_size = 128;

    std::unordered_map<std::string, std::string> resolved;
    std::vector<std::string> pending;  // unique misses, first-appearance order
    for (const std::string& w : words) {
        if (resolved.count(w)) continue;
        std::string hit;
        if (cache.lookup(w, hit)) {
            resolved[w] = hit;
        } else {
            resolved[w] = "";  // placeholder, filled below
            pending.push_back(w);
        }
    }

    for (std::size_t i = 0; i < pending.size(); i += batch_size) {
        std::size_t end = std::min(pending.size(), i + batch_size);
        std::vector<std::string> batch(pending.begin() + i, pending.begin() + end);
        std::vector<std::string> translated = provider.translate(batch);
        if (translated.size() != batch.size())
            throw ProviderUnavailable("provider returned " + std::to_string(translated.size()) +
                                      " translations for " + std::to_string(batch.size()) +
                                      " words");
        for (std::size_t j = 0; j < batch.size(); ++j) {
            resolved[batch[j]] = translated[j];
            cache.store(batch[j], translated[j]);
        }
    }
    cache.flush();

    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(words.size());
    for (const std::string& w : words) out.emplace_back(w, resolved.at(w));
    return out;
}

}  // namespace kolan::sentiment
