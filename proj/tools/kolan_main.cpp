#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "kolan/config.hpp"
#include "kolan/errors.hpp"
#include "kolan/report.hpp"

namespace {

constexpr int kExitUsage = 64;

struct CliOverrides {
    std::string config_path;
    std::string scale;
    long long k = -1;
    long long seed = -1;
    std::string out_dir;
    bool unique = false;
};

void add_common_options(CLI::App* sub, CliOverrides& o) {
    sub->add_option("--config", o.config_path, "run configuration file (key=value)")
        ->required();
    sub->add_option("--scale", o.scale, "chart scale: linear or log10")
        ->check(CLI::IsMember({"linear", "log10"}));
    sub->add_option("--k", o.k, "number of clusters")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "clustering seed")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out_dir, "output directory");
    sub->add_flag("--unique", o.unique, "weight each unique word once in sentiment totals");
}

kolan::RunConfig resolve_config(const CLI::App* sub, const CliOverrides& o) {
    kolan::RunConfig cfg = kolan::parse_config_file(o.config_path);
    if (sub->count("--scale"))
        cfg.scale = o.scale == "linear" ? kolan::metrics::Scale::Linear
                                        : kolan::metrics::Scale::Log10;
    if (sub->count("--k")) cfg.k = static_cast<std::size_t>(o.k);
    if (sub->count("--seed")) cfg.seed = static_cast<unsigned>(o.seed);
    if (sub->count("--out")) cfg.out_dir = o.out_dir;
    if (sub->count("--unique")) cfg.unique_words = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kolan - influencer campaign analytics reports"};
    app.require_subcommand(1);

    CliOverrides o;
    CLI::App* metrics = app.add_subcommand("metrics", "engagement and enthusiasm tables/charts");
    CLI::App* pca = app.add_subcommand("pca", "feature PCA, loadings, scores and clusters");
    CLI::App* sentiment = app.add_subcommand("sentiment", "comment frequency and emotion totals");
    CLI::App* full = app.add_subcommand("report", "all sections plus report.json");
    for (CLI::App* sub : {metrics, pca, sentiment, full}) add_common_options(sub, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        kolan::RunConfig cfg = resolve_config(sub, o);
        if (cfg.k < 1) {
            std::fprintf(stderr, "kolan: k must be >= 1\n");
            return kExitUsage;
        }
        if (sub == metrics) kolan::report::cmd_metrics(cfg);
        else if (sub == pca) kolan::report::cmd_pca(cfg);
        else if (sub == sentiment) kolan::report::cmd_sentiment(cfg);
        else kolan::report::cmd_report(cfg);
        return 0;
    } catch (const kolan::ProviderUnavailable& e) {
        std::fprintf(stderr, "kolan: %s\nhint: retry later or switch to provider=dictionary\n",
                     e.what());
        return e.exit_code();
    } catch (const kolan::Error& e) {
        std::fprintf(stderr, "kolan: %s\n", e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "kolan: %s\n", e.what());
        return 1;
    }
}
