#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "kolan/metrics.hpp"

namespace kolan {

// Parsed key=value run configuration. CLI flags override file values.
struct RunConfig {
    std::string profiles_path;
    std::optional<std::string> corpora_path;

    std::string stopwords_id_path;
    std::string stopwords_en_path;
    std::string lemmas_path;
    std::string slang_path;
    std::string lexicon_path;
    std::string dictionary_path;

    std::string provider = "dictionary";  // dictionary | http
    std::string endpoint;
    std::size_t batch_size = 128;
    std::string cache_path;

    std::size_t k = 3;
    unsigned seed = 0;
    metrics::Scale scale = metrics::Scale::Log10;
    std::string out_dir = "out";

    bool emit_csv = true;
    bool emit_json = true;
    bool emit_svg = true;
    bool unique_words = false;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Sections declare what they need; checks run before any work starts.
struct ConfigNeeds {
    bool profiles = false;
    bool text_resources = false;  // stoplists + lemmas + slang
    bool lexicon = false;
    bool provider = false;        // dictionary file when provider=dictionary
};

// Throws ValidationError for bad values (k=0, unknown provider) and
// IoError for referenced paths that do not exist.
void validate_config(const RunConfig& cfg, const ConfigNeeds& needs);

}  // namespace kolan
