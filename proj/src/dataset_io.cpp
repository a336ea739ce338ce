#include "kolan/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kolan/csv.hpp"

namespace kolan {

using nlohmann::json;

const char* const kProfilesCsvHeader =
    "id,name,kol_type,platform,follower_tier,follower_count,post_count,"
    "avg_likes_per_post,theme,audience,campaign_likes,campaign_format";

namespace {

constexpr std::size_t kColumns = 12;

long long parse_count(const std::string& field, std::size_t row, std::size_t col) {
    long long v;
    if (!csv::parse_int(field, v))
        throw ParseError(row, col, "expected an integer, got \"" + field + "\"");
    return v;
}

double parse_real(const std::string& field, std::size_t row, std::size_t col) {
    double v;
    if (!csv::parse_double(field, v))
        throw ParseError(row, col, "expected a number, got \"" + field + "\"");
    return v;
}

std::vector<KolProfile> parse_profiles(const std::string& text) {
    std::vector<KolProfile> profiles;
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kProfilesCsvHeader)
                throw ParseError(row, 1, std::string("expected header \"") + kProfilesCsvHeader +
                                             "\"");
            saw_header = true;
            continue;
        }
        auto f = csv::split_line(line);
        if (f.size() != kColumns)
            throw ParseError(row, f.size(), "expected " + std::to_string(kColumns) +
                                                " fields, got " + std::to_string(f.size()));
        KolProfile p;
        p.id = f[0];
        p.name = f[1];
        try {
            p.kol_type = kol_type_from_string(f[2]);
            p.platform = platform_from_string(f[3]);
            p.follower_tier = follower_tier_from_string(f[4]);
            p.theme = theme_from_string(f[8]);
            p.audience = audience_from_string(f[9]);
            p.campaign_format = content_format_from_string(f[11]);
        } catch (const ValidationError& e) {
            throw ValidationError(p.id.empty() ? "row " + std::to_string(row) : p.id, e.what());
        }
        p.follower_count = parse_count(f[5], row, 6);
        p.post_count = parse_count(f[6], row, 7);
        p.avg_likes_per_post = parse_real(f[7], row, 8);
        p.campaign_likes = parse_count(f[10], row, 11);
        profiles.push_back(std::move(p));
    }
    return profiles;
}

std::vector<CommentCorpus> parse_corpora(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(1, static_cast<std::size_t>(e.byte), e.what());
    }
    if (!doc.is_array()) throw ParseError(1, 1, "corpora file must be a JSON array");
    std::vector<CommentCorpus> corpora;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("kol_id") || !entry.contains("comments"))
            throw ParseError(1, 1, "each corpus needs \"kol_id\" and \"comments\"");
        CommentCorpus c;
        c.kol_id = entry.at("kol_id").get<std::string>();
        std::string platform = entry.value("source_platform", "Instagram");
        c.source_platform = platform_from_string(platform);
        for (const auto& comment : entry.at("comments")) {
            c.comments.push_back(comment.get<std::string>());
        }
        corpora.push_back(std::move(c));
    }
    return corpora;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed for " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + path);
}

Dataset parse_dataset(const std::string& profiles_csv,
                      const std::optional<std::string>& corpora_json) {
    Dataset ds;
    ds.profiles = parse_profiles(profiles_csv);
    if (corpora_json) ds.corpora = parse_corpora(*corpora_json);
    validate(ds);
    return ds;
}

Dataset load_dataset(const std::string& profiles_path,
                     const std::optional<std::string>& corpora_path) {
    std::string profiles = read_file(profiles_path);
    std::optional<std::string> corpora;
    if (corpora_path) corpora = read_file(*corpora_path);
    return parse_dataset(profiles, corpora);
}

std::string serialize_profiles_csv(const Dataset& ds) {
    std::string out = kProfilesCsvHeader;
    out.push_back('\n');
    for (const KolProfile& p : ds.profiles) {
        out += csv::join({p.id, p.name, to_string(p.kol_type), to_string(p.platform),
                          to_string(p.follower_tier), csv::format_int(p.follower_count),
                          csv::format_int(p.post_count), csv::format_double(p.avg_likes_per_post),
                          to_string(p.theme), to_string(p.audience),
                          csv::format_int(p.campaign_likes), to_string(p.campaign_format)});
        out.push_back('\n');
    }
    return out;
}

std::string serialize_corpora_json(const Dataset& ds) {
    json arr = json::array();
    for (const CommentCorpus& c : ds.corpora) {
        json e;
        e["kol_id"] = c.kol_id;
        e["source_platform"] = to_string(c.source_platform);
        e["comments"] = c.comments;
        arr.push_back(std::move(e));
    }
    return arr.dump(2) + "\n";
}

}  // namespace kolan
