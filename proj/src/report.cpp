#include "kolan/report.hpp"

#include <filesystem>

#include "kolan/csv.hpp"
#include "kolan/dataset_io.hpp"
#include "kolan/kmeans.hpp"
#include "kolan/lexicon.hpp"
#include "kolan/metrics.hpp"
#include "kolan/pca.hpp"
#include "kolan/sentiment.hpp"
#include "kolan/svg.hpp"
#include "kolan/textprep.hpp"

namespace kolan::report {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string section_dir(const RunConfig& cfg, const char* name) {
    fs::path dir = fs::path(cfg.out_dir) / name;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    return dir.string() + "/";
}

json series_json(const metrics::ChartSeries& s) {
    json points = json::array();
    auto scaled = s.scaled_values();
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        points.push_back({{"category", s.points[i].category},
                          {"value", s.points[i].value},
                          {"scaled", scaled[i]}});
    }
    return {{"label", s.label}, {"scale", metrics::to_string(s.scale)}, {"points", points}};
}

void write_series(const std::string& dir, const std::string& stem,
                  const metrics::ChartSeries& s, const RunConfig& cfg) {
    if (cfg.emit_csv) write_file(dir + stem + ".csv", metrics::series_csv(s));
    if (cfg.emit_svg) {
        std::vector<std::pair<std::string, double>> bars;
        auto scaled = s.scaled_values();
        for (std::size_t i = 0; i < s.points.size(); ++i)
            bars.emplace_back(s.points[i].category, scaled[i]);
        std::string label = s.label;
        if (s.scale == metrics::Scale::Log10) label = "log10(" + label + ")";
        write_file(dir + stem + ".svg", svg::bar_chart(s.label, bars, label));
    }
}

json config_json(const RunConfig& cfg) {
    return {{"provider", cfg.provider},
            {"k", cfg.k},
            {"seed", cfg.seed},
            {"scale", metrics::to_string(cfg.scale)},
            {"unique", cfg.unique_words}};
}

Dataset load_from_config(const RunConfig& cfg) {
    return load_dataset(cfg.profiles_path, cfg.corpora_path);
}

}  // namespace

json metrics_section(const Dataset& ds, const RunConfig& cfg) {
    const std::string dir = section_dir(cfg, "metrics");

    auto engagement = metrics::engagement_series(ds, cfg.scale);
    auto campaign = metrics::campaign_engagement_series(ds, cfg.scale);
    auto enthusiasm = metrics::enthusiasm_series(ds);
    auto records = metrics::enthusiasm_records(ds);
    auto by_format = metrics::enthusiasm_by_format(ds);

    write_series(dir, "engagement", engagement, cfg);
    write_series(dir, "campaign_engagement", campaign, cfg);
    write_series(dir, "enthusiasm", enthusiasm, cfg);

    if (cfg.emit_csv) {
        std::string table = "kol_id,rate,campaign_likes,baseline_avg\n";
        for (const auto& r : records) {
            table += csv::join({r.kol_id, csv::format_double(r.rate),
                                csv::format_int(r.campaign_likes),
                                csv::format_double(r.baseline_avg)});
            table.push_back('\n');
        }
        write_file(dir + "enthusiasm_records.csv", table);

        std::string means = "format,mean_enthusiasm\n";
        for (const auto& [fmt, mean] : by_format) {
            means += csv::join({to_string(fmt), csv::format_double(mean)});
            means.push_back('\n');
        }
        write_file(dir + "format_means.csv", means);
    }
    if (cfg.emit_svg) {
        std::vector<std::pair<std::string, double>> bars;
        for (const auto& [fmt, mean] : by_format) bars.emplace_back(to_string(fmt), mean);
        write_file(dir + "format_means.svg",
                   svg::bar_chart("mean enthusiasm by format", bars, "mean enthusiasm"));
    }

    json records_json = json::array();
    for (const auto& r : records) {
        records_json.push_back({{"kol_id", r.kol_id},
                                {"rate", r.rate},
                                {"campaign_likes", r.campaign_likes},
                                {"baseline_avg", r.baseline_avg}});
    }
    json means_json = json::object();
    for (const auto& [fmt, mean] : by_format) means_json[to_string(fmt)] = mean;

    json section = {{"engagement", series_json(engagement)},
                    {"campaign_engagement", series_json(campaign)},
                    {"enthusiasm", records_json},
                    {"format_means", means_json}};
    if (cfg.emit_json) write_file(dir + "metrics.json", section.dump(2) + "\n");
    return section;
}

json pca_section(const Dataset& ds, const RunConfig& cfg) {
    const std::string dir = section_dir(cfg, "pca");

    pca::PcaResult res = pca::run_pca(ds);
    pca::ClusterAssignment clusters = pca::cluster_scores(res, ds, cfg.k, cfg.seed);

    const std::size_t p = res.features.size();
    const std::size_t n = ds.profiles.size();

    if (cfg.emit_csv) {
        std::string header = "feature";
        for (std::size_t j = 0; j < p; ++j) header += ",PC" + std::to_string(j + 1);
        std::string loadings = header + "\n";
        for (std::size_t i = 0; i < p; ++i) {
            loadings += res.features[i];
            for (std::size_t j = 0; j < p; ++j)
                loadings += "," + csv::format_double(res.loadings.at(i, j));
            loadings.push_back('\n');
        }
        write_file(dir + "loadings.csv", loadings);

        std::string scores = "kol_id";
        for (std::size_t j = 0; j < p; ++j) scores += ",PC" + std::to_string(j + 1);
        scores.push_back('\n');
        for (std::size_t i = 0; i < n; ++i) {
            scores += ds.profiles[i].id;
            for (std::size_t j = 0; j < p; ++j)
                scores += "," + csv::format_double(res.scores.at(i, j));
            scores.push_back('\n');
        }
        write_file(dir + "scores.csv", scores);

        std::string explained = "component,eigenvalue,explained_ratio\n";
        for (std::size_t j = 0; j < p; ++j) {
            explained += csv::join({"PC" + std::to_string(j + 1),
                                    csv::format_double(res.eigenvalues[j]),
                                    csv::format_double(res.explained_ratio[j])});
            explained.push_back('\n');
        }
        write_file(dir + "explained.csv", explained);

        std::string table = "kol_id,cluster,pc1,pc2\n";
        for (std::size_t i = 0; i < n; ++i) {
            table += csv::join({ds.profiles[i].id, csv::format_int(clusters.assignment[i]),
                                csv::format_double(res.scores.at(i, 0)),
                                csv::format_double(res.scores.at(i, 1))});
            table.push_back('\n');
        }
        write_file(dir + "clusters.csv", table);
    }

    if (cfg.emit_svg) {
        std::vector<svg::ScatterPoint> pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back({res.scores.at(i, 0), res.scores.at(i, 1), ds.profiles[i].id,
                           clusters.assignment[i]});
        }
        write_file(dir + "biplot.svg", svg::scatter_plot("KOL grouping (PC1/PC2)", pts,
                                                         "PC1", "PC2"));
    }

    json loadings_json = json::array();
    for (std::size_t i = 0; i < p; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p; ++j) row.push_back(res.loadings.at(i, j));
        loadings_json.push_back(row);
    }
    json biplot = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row_scores = json::array();
        for (std::size_t j = 0; j < p; ++j) row_scores.push_back(res.scores.at(i, j));
        biplot.push_back({{"kol_id", ds.profiles[i].id},
                          {"scores", row_scores},
                          {"cluster", clusters.assignment[i]}});
    }
    json centroids = json::array();
    for (const auto& c : clusters.centroids) centroids.push_back({c[0], c[1]});

    json section = {{"features", res.features},
                    {"loadings", loadings_json},
                    {"eigenvalues", res.eigenvalues},
                    {"explained_ratio", res.explained_ratio},
                    {"kols", biplot},
                    {"k", cfg.k},
                    {"centroids", centroids}};
    if (cfg.emit_json) write_file(dir + "pca.json", section.dump(2) + "\n");
    return section;
}

json sentiment_section(const Dataset& ds, const RunConfig& cfg) {
    const std::string dir = section_dir(cfg, "sentiment");

    text::TextResources resources = text::load_text_resources(
        cfg.stopwords_id_path, cfg.stopwords_en_path, cfg.lemmas_path, cfg.slang_path);
    sentiment::EmotionLexicon lexicon = sentiment::load_lexicon(cfg.lexicon_path);

    std::unique_ptr<sentiment::TranslationProvider> provider;
    if (cfg.provider == "http") {
        sentiment::HttpProviderConfig hc;
        hc.endpoint = cfg.endpoint;
        hc.batch_size = cfg.batch_size;
        provider = std::make_unique<sentiment::HttpProvider>(hc);
    } else {
        provider = std::make_unique<sentiment::DictionaryProvider>(cfg.dictionary_path);
    }
    sentiment::TranslationCache cache(cfg.cache_path);

    sentiment::SentimentAnalysis analysis = sentiment::run_sentiment(
        ds.corpora, resources, lexicon, *provider, cache, cfg.unique_words);

    const auto& cats = sentiment::category_names();
    if (cfg.emit_csv) {
        write_file(dir + "words.csv", analysis.frequencies.to_csv());

        std::string scores = "text,translated";
        for (const auto& c : cats) scores += "," + c;
        scores += ",count\n";
        for (const auto& w : analysis.scored) {
            std::vector<std::string> fields = {w.text, w.translated};
            for (std::size_t i = 0; i < sentiment::kCategoryCount; ++i)
                fields.push_back(std::to_string(static_cast<int>(w.vector[i])));
            fields.push_back(csv::format_int(w.count));
            scores += csv::join(fields);
            scores.push_back('\n');
        }
        write_file(dir + "scores.csv", scores);

        std::string totals = "category,total\n";
        for (std::size_t i = 0; i < sentiment::kCategoryCount; ++i) {
            totals += csv::join({cats[i], csv::format_int(analysis.totals[i])});
            totals.push_back('\n');
        }
        write_file(dir + "totals.csv", totals);

        std::string unscored = "text\n";
        for (const auto& w : analysis.unscored) {
            unscored += csv::escape(w);
            unscored.push_back('\n');
        }
        write_file(dir + "unscored.csv", unscored);
    }
    if (cfg.emit_svg) {
        std::vector<std::pair<std::string, double>> bars;
        for (std::size_t i = 0; i < sentiment::kCategoryCount; ++i)
            bars.emplace_back(cats[i], static_cast<double>(analysis.totals[i]));
        write_file(dir + "totals.svg",
                   svg::bar_chart("sentiment category totals", bars, "total score"));
    }

    json top_words = json::array();
    for (const auto& [word, n] : analysis.frequencies.rows)
        top_words.push_back({{"text", word}, {"n", n}});
    json scored = json::array();
    for (const auto& w : analysis.scored) {
        json categories = json::object();
        for (std::size_t i = 0; i < sentiment::kCategoryCount; ++i)
            categories[cats[i]] = static_cast<int>(w.vector[i]);
        scored.push_back({{"text", w.text},
                          {"translated", w.translated},
                          {"categories", categories},
                          {"count", w.count}});
    }
    json totals = json::object();
    for (std::size_t i = 0; i < sentiment::kCategoryCount; ++i)
        totals[cats[i]] = analysis.totals[i];

    json section = {{"words", top_words},
                    {"scored", scored},
                    {"totals", totals},
                    {"dominant", analysis.totals.dominant_order()},
                    {"unscored", analysis.unscored},
                    {"provider", provider->version()}};
    if (cfg.emit_json) write_file(dir + "sentiment.json", section.dump(2) + "\n");
    return section;
}

void cmd_metrics(const RunConfig& cfg) {
    validate_config(cfg, {.profiles = true});
    Dataset ds = load_from_config(cfg);
    metrics_section(ds, cfg);
}

void cmd_pca(const RunConfig& cfg) {
    validate_config(cfg, {.profiles = true});
    Dataset ds = load_from_config(cfg);
    pca_section(ds, cfg);
}

void cmd_sentiment(const RunConfig& cfg) {
    validate_config(cfg,
                    {.profiles = true, .text_resources = true, .lexicon = true, .provider = true});
    Dataset ds = load_from_config(cfg);
    if (ds.corpora.empty())
        throw ValidationError("", "sentiment requires a corpora file with >=1 corpus");
    sentiment_section(ds, cfg);
}

void cmd_report(const RunConfig& cfg) {
    ConfigNeeds needs{.profiles = true};
    const bool with_sentiment = cfg.corpora_path.has_value();
    if (with_sentiment) {
        needs.text_resources = true;
        needs.lexicon = true;
        needs.provider = true;
    }
    validate_config(cfg, needs);
    Dataset ds = load_from_config(cfg);

    json sections = json::object();
    json warnings = json::array();
    sections["metrics"] = metrics_section(ds, cfg);
    sections["pca"] = pca_section(ds, cfg);
    if (with_sentiment && !ds.corpora.empty()) {
        sections["sentiment"] = sentiment_section(ds, cfg);
    } else {
        sections["sentiment"] = {{"skipped", true}, {"reason", "no comment corpora configured"}};
        warnings.push_back("sentiment section skipped: no comment corpora configured");
    }

    json bundle = {{"version", "1"},
                   {"config", config_json(cfg)},
                   {"sections", sections},
                   {"warnings", warnings}};
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create " + cfg.out_dir + ": " + ec.message());
    write_file((fs::path(cfg.out_dir) / "report.json").string(), bundle.dump(2) + "\n");
}

}  // namespace kolan::report
