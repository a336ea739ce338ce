#include "kolan/config.hpp"

#include <filesystem>
#include <sstream>

#include "kolan/csv.hpp"
#include "kolan/dataset_io.hpp"
#include "kolan/errors.hpp"

namespace kolan {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v, std::size_t row) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ParseError(row, 1, "expected a boolean, got \"" + v + "\"");
}

std::size_t parse_size(const std::string& v, std::size_t row) {
    long long n;
    if (!csv::parse_int(v, n) || n < 0)
        throw ParseError(row, 1, "expected a non-negative integer, got \"" + v + "\"");
    return static_cast<std::size_t>(n);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(row, 1, "expected key=value, got \"" + line + "\"");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "profiles") cfg.profiles_path = value;
        else if (key == "corpora") cfg.corpora_path = value;
        else if (key == "stopwords_id") cfg.stopwords_id_path = value;
        else if (key == "stopwords_en") cfg.stopwords_en_path = value;
        else if (key == "lemmas") cfg.lemmas_path = value;
        else if (key == "slang") cfg.slang_path = value;
        else if (key == "lexicon") cfg.lexicon_path = value;
        else if (key == "dictionary") cfg.dictionary_path = value;
        else if (key == "provider") cfg.provider = value;
        else if (key == "endpoint") cfg.endpoint = value;
        else if (key == "batch_size") cfg.batch_size = parse_size(value, row);
        else if (key == "cache") cfg.cache_path = value;
        else if (key == "k") cfg.k = parse_size(value, row);
        else if (key == "seed") cfg.seed = static_cast<unsigned>(parse_size(value, row));
        else if (key == "out") cfg.out_dir = value;
        else if (key == "unique") cfg.unique_words = parse_bool(value, row);
        else if (key == "scale") {
            if (value == "linear") cfg.scale = metrics::Scale::Linear;
            else if (value == "log10") cfg.scale = metrics::Scale::Log10;
            else throw ParseError(row, 1, "scale must be linear or log10, got \"" + value + "\"");
        } else if (key == "formats") {
            cfg.emit_csv = cfg.emit_json = cfg.emit_svg = false;
            std::istringstream fs(value);
            std::string fmt;
            while (std::getline(fs, fmt, ',')) {
                fmt = trim(fmt);
                if (fmt == "csv") cfg.emit_csv = true;
                else if (fmt == "json") cfg.emit_json = true;
                else if (fmt == "svg") cfg.emit_svg = true;
                else throw ParseError(row, 1, "unknown format \"" + fmt + "\"");
            }
        } else {
            throw ParseError(row, 1, "unknown config key \"" + key + "\"");
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    return parse_config_text(read_file(path));
}

namespace {
void require_path(const std::string& path, const char* what) {
    if (path.empty()) throw ValidationError("", std::string("config is missing ") + what);
    if (!std::filesystem::exists(path))
        throw IoError(std::string(what) + " not found: " + path);
}
}  // namespace

void validate_config(const RunConfig& cfg, const ConfigNeeds& needs) {
    if (cfg.k < 1) throw ValidationError("", "k must be >= 1");
    if (cfg.provider != "dictionary" && cfg.provider != "http")
        throw ValidationError("", "provider must be dictionary or http, got \"" + cfg.provider +
                                      "\"");
    if (needs.profiles) require_path(cfg.profiles_path, "profiles");
    if (needs.text_resources) {
        require_path(cfg.stopwords_id_path, "stopwords_id");
        require_path(cfg.stopwords_en_path, "stopwords_en");
        require_path(cfg.lemmas_path, "lemmas");
        require_path(cfg.slang_path, "slang");
    }
    if (needs.lexicon) require_path(cfg.lexicon_path, "lexicon");
    if (needs.provider) {
        if (cfg.provider == "dictionary") {
            require_path(cfg.dictionary_path, "dictionary");
        } else if (cfg.endpoint.empty()) {
            throw ValidationError("", "provider=http requires an endpoint");
        }
    }
    if (cfg.corpora_path && !std::filesystem::exists(*cfg.corpora_path))
        throw IoError("corpora not found: " + *cfg.corpora_path);
}

}  // namespace kolan
