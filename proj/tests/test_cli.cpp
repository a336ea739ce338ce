#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kolan/csv.hpp"
#include "kolan/dataset_io.hpp"
#include "schema_check.hpp"
#include "support.hpp"

#ifndef KOLAN_CLI_PATH
#error "KOLAN_CLI_PATH must be defined by the build"
#endif

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const testsupport::TempDir& tmp,
                  const std::string& tag) {
    std::string log = tmp.str("cli_" + tag + ".log");
    std::string cmd = std::string(KOLAN_CLI_PATH) + " " + args + " > " + log + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = (status == -1) ? -1 : WEXITSTATUS(status);
    res.output = kolan::read_file(log);
    return res;
}

// fixture config with absolute paths so the CLI can run from any cwd
std::string write_fixture_config(const testsupport::TempDir& tmp, const std::string& out_dir,
                                 bool with_corpora = true,
                                 const std::string& extra = "") {
    std::ostringstream cfg;
    cfg << "profiles = " << testsupport::data_path("fixtures/profiles.csv") << "\n";
    if (with_corpora)
        cfg << "corpora = " << testsupport::data_path("fixtures/corpora.json") << "\n";
    cfg << "stopwords_id = " << testsupport::data_path("stopwords.id.txt") << "\n"
        << "stopwords_en = " << testsupport::data_path("stopwords.en.txt") << "\n"
        << "lemmas = " << testsupport::data_path("lemmas.id.tsv") << "\n"
        << "slang = " << testsupport::data_path("slang.tsv") << "\n"
        << "lexicon = " << testsupport::data_path("lexicon.mini.tsv") << "\n"
        << "dictionary = " << testsupport::data_path("dictionary.id-en.tsv") << "\n"
        << "provider = dictionary\n"
        << "k = 3\nseed = 7\nscale = log10\n"
        << "out = " << out_dir << "\n"
        << extra;
    std::string path = tmp.str("run.conf");
    kolan::write_file(path, cfg.str());
    return path;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::istringstream in(kolan::read_file(path));
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("metrics command writes the enthusiasm table with Chornella first") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(tmp, tmp.str("out"));
    RunResult res = run_cli("metrics --config " + cfg, tmp, "metrics");
    CHECK(res.exit_code == 0);

    auto lines = read_lines(tmp.str("out/metrics/enthusiasm_records.csv"));
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "kol_id,rate,campaign_likes,baseline_avg");
    CHECK(lines[1].rfind("chornella,1.25,", 0) == 0);
}

TEST_CASE("scale flag switches series values to log10") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(tmp, tmp.str("out"));
    RunResult res = run_cli("metrics --config " + cfg + " --scale log10", tmp, "log");
    CHECK(res.exit_code == 0);
    json metrics = json::parse(kolan::read_file(tmp.str("out/metrics/metrics.json")));
    CHECK(metrics["engagement"]["scale"] == "log10");
    for (const auto& point : metrics["engagement"]["points"]) {
        double value = point["value"].get<double>();
        double scaled = point["scaled"].get<double>();
        CHECK(scaled == doctest::Approx(std::log10(value)).epsilon(1e-12));
    }

    RunResult lin = run_cli("metrics --config " + cfg + " --scale linear", tmp, "lin");
    CHECK(lin.exit_code == 0);
    metrics = json::parse(kolan::read_file(tmp.str("out/metrics/metrics.json")));
    for (const auto& point : metrics["engagement"]["points"])
        CHECK(point["value"] == point["scaled"]);
}

TEST_CASE("missing profiles file exits 2 and names the path") {
    testsupport::TempDir tmp;
    std::string cfg_text = "profiles = /nonexistent/profiles.csv\nout = " + tmp.str("out") + "\n";
    std::string cfg = tmp.str("bad.conf");
    kolan::write_file(cfg, cfg_text);
    RunResult res = run_cli("metrics --config " + cfg, tmp, "missing");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("/nonexistent/profiles.csv") != std::string::npos);
}

TEST_CASE("k=0 is a usage error (exit 64)") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(tmp, tmp.str("out"));
    RunResult res = run_cli("pca --config " + cfg + " --k 0", tmp, "kzero");
    CHECK(res.exit_code == 64);
}

TEST_CASE("unknown subcommands and missing --config are usage errors") {
    testsupport::TempDir tmp;
    CHECK(run_cli("frobnicate", tmp, "badsub").exit_code == 64);
    CHECK(run_cli("metrics", tmp, "noconfig").exit_code == 64);
}

TEST_CASE("validation failures exit 1 citing the offending row") {
    testsupport::TempDir tmp;
    std::string bad_profiles = tmp.str("profiles.csv");
    kolan::write_file(bad_profiles,
                      std::string(kolan::kProfilesCsvHeader) + "\n" +
                          "a,Alice,Student,Instagram,Mega,2000,10,50,Finance,Young,10,Image\n");
    std::string cfg = tmp.str("bad.conf");
    kolan::write_file(cfg, "profiles = " + bad_profiles + "\nout = " + tmp.str("out") + "\n");
    RunResult res = run_cli("metrics --config " + cfg, tmp, "badrow");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("a") != std::string::npos);
    CHECK(res.output.find("follower_tier") != std::string::npos);
}

TEST_CASE("pca command emits clusters with the Vina singleton, stable under seed") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(tmp, tmp.str("out"));
    RunResult res = run_cli("pca --config " + cfg + " --k 3 --seed 7", tmp, "pca");
    CHECK(res.exit_code == 0);

    auto lines = read_lines(tmp.str("out/pca/clusters.csv"));
    REQUIRE(lines.size() == 11);
    int vina_cluster = -1;
    std::map<int, int> sizes;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = kolan::csv::split_line(lines[i]);
        int cluster = std::stoi(fields[1]);
        sizes[cluster]++;
        if (fields[0] == "vina") vina_cluster = cluster;
    }
    CHECK(sizes.size() == 3);
    for (const auto& [cluster, size] : sizes) CHECK(size > 0);
    REQUIRE(vina_cluster >= 0);
    CHECK(sizes[vina_cluster] == 1);

    // reruns are byte-identical, SVG included
    std::map<std::string, std::string> first;
    for (const char* name : {"clusters.csv", "loadings.csv", "scores.csv", "explained.csv",
                             "biplot.svg", "pca.json"})
        first[name] = kolan::read_file(tmp.str(std::string("out/pca/") + name));
    RunResult again = run_cli("pca --config " + cfg + " --k 3 --seed 7", tmp, "pca2");
    CHECK(again.exit_code == 0);
    for (const auto& [name, content] : first)
        CHECK(kolan::read_file(tmp.str("out/pca/" + name)) == content);
}

TEST_CASE("sentiment command writes totals dominated by positive") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(tmp, tmp.str("out"));
    RunResult res = run_cli("sentiment --config " + cfg, tmp, "sentiment");
    CHECK(res.exit_code == 0);

    auto lines = read_lines(tmp.str("out/sentiment/totals.csv"));
    REQUIRE(lines.size() == 11);
    long long best = -1, positive = -1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = kolan::csv::split_line(lines[i]);
        long long total = std::stoll(fields[1]);
        best = std::max(best, total);
        if (fields[0] == "positive") positive = total;
    }
    CHECK(positive == best);

    // per-word table carries the reference scoring rows
    std::string scores = kolan::read_file(tmp.str("out/sentiment/scores.csv"));
    CHECK(scores.find("allah,god,0,1,0,1,1,0,1,0,0,1,1") != std::string::npos);
    CHECK(scores.find("akal,sense,0,0,0,0,0,0,1,0,0,0,1") != std::string::npos);
    CHECK(scores.find("bank,bank,0,0,0,0,0,0,0,0,0,1,2") != std::string::npos);
}

TEST_CASE("stopword-only corpus yields empty tables and zero totals") {
    testsupport::TempDir tmp;
    std::string corpora = tmp.str("corpora.json");
    kolan::write_file(corpora, R"([{"kol_id":"vina","source_platform":"Instagram",)"
                               R"("comments":["yang dan untuk 123 !!!","the and, of."]}])");
    std::string cfg_path = write_fixture_config(tmp, tmp.str("out"));
    // swap in the stopword-only corpora
    std::string cfg_text = kolan::read_file(cfg_path);
    auto pos = cfg_text.find("corpora = ");
    auto end = cfg_text.find('\n', pos);
    cfg_text = cfg_text.substr(0, pos) + "corpora = " + corpora + cfg_text.substr(end);
    kolan::write_file(cfg_path, cfg_text);

    RunResult res = run_cli("sentiment --config " + cfg_path, tmp, "stoponly");
    CHECK(res.exit_code == 0);
    auto words = read_lines(tmp.str("out/sentiment/words.csv"));
    CHECK(words.size() == 1);  // header only
    for (const auto& line : read_lines(tmp.str("out/sentiment/totals.csv"))) {
        if (line == "category,total") continue;
        auto fields = kolan::csv::split_line(line);
        CHECK(fields[1] == "0");
    }
}

TEST_CASE("http provider without a reachable endpoint exits 3") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(
        tmp, tmp.str("out"), true,
        "endpoint = http://127.0.0.1:1/translate\n");
    std::string cfg_text = kolan::read_file(cfg);
    auto pos = cfg_text.find("provider = dictionary");
    cfg_text.replace(pos, std::string("provider = dictionary").size(), "provider = http");
    kolan::write_file(cfg, cfg_text);

    RunResult res = run_cli("sentiment --config " + cfg, tmp, "http");
    CHECK(res.exit_code == 3);
    CHECK(res.output.find("retry") != std::string::npos);
    // a failed provider must not leave partially scored totals behind
    CHECK(!std::filesystem::exists(tmp.str("out/sentiment/totals.csv")));
    CHECK(!std::filesystem::exists(tmp.str("out/sentiment/scores.csv")));
}

TEST_CASE("--unique weights every unique word once") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(tmp, tmp.str("out"));
    REQUIRE(run_cli("sentiment --config " + cfg, tmp, "occ").exit_code == 0);
    json occ = json::parse(kolan::read_file(tmp.str("out/sentiment/sentiment.json")));
    REQUIRE(run_cli("sentiment --config " + cfg + " --unique", tmp, "uniq").exit_code == 0);
    json uniq = json::parse(kolan::read_file(tmp.str("out/sentiment/sentiment.json")));

    // recompute the unique-weighted totals from the per-word table
    std::map<std::string, long long> expected;
    for (const auto& w : occ["scored"])
        for (const auto& [category, bit] : w["categories"].items())
            expected[category] += bit.get<int>();
    for (const auto& [category, total] : uniq["totals"].items())
        CHECK(total.get<long long>() == expected[category]);
    // occurrence weighting counts repeated words more heavily
    CHECK(occ["totals"]["positive"].get<long long>() >
          uniq["totals"]["positive"].get<long long>());
}

TEST_CASE("report bundle matches the shipped schema and is byte-stable") {
    testsupport::TempDir tmp;
    std::string cfg1 = write_fixture_config(tmp, tmp.str("out1"));
    RunResult res = run_cli("report --config " + cfg1, tmp, "report1");
    CHECK(res.exit_code == 0);

    json report = json::parse(kolan::read_file(tmp.str("out1/report.json")));
    json schema = json::parse(kolan::read_file(testsupport::source_path(
        "schemas/report.schema.json")));
    auto errors = schemacheck::validate(schema, report);
    for (const auto& e : errors) MESSAGE(e);
    CHECK(errors.empty());
    CHECK(report["sections"]["sentiment"].contains("totals"));

    // second run, separate out dir: identical bytes
    std::string cfg_text = kolan::read_file(cfg1);
    auto pos = cfg_text.find("out = ");
    auto end = cfg_text.find('\n', pos);
    cfg_text = cfg_text.substr(0, pos) + "out = " + tmp.str("out2") + cfg_text.substr(end);
    std::string cfg2 = tmp.str("run2.conf");
    kolan::write_file(cfg2, cfg_text);
    RunResult res2 = run_cli("report --config " + cfg2, tmp, "report2");
    CHECK(res2.exit_code == 0);
    CHECK(kolan::read_file(tmp.str("out1/report.json")) ==
          kolan::read_file(tmp.str("out2/report.json")));
}

TEST_CASE("report without corpora skips sentiment with a warning") {
    testsupport::TempDir tmp;
    std::string cfg = write_fixture_config(tmp, tmp.str("out"), /*with_corpora=*/false);
    RunResult res = run_cli("report --config " + cfg, tmp, "nocorpora");
    CHECK(res.exit_code == 0);
    json report = json::parse(kolan::read_file(tmp.str("out/report.json")));
    CHECK(report["sections"]["metrics"].is_object());
    CHECK(report["sections"]["pca"].is_object());
    CHECK(report["sections"]["sentiment"]["skipped"] == true);
    REQUIRE(report["warnings"].size() == 1);
    CHECK(std::filesystem::exists(tmp.str("out/metrics/engagement.csv")));
    CHECK(!std::filesystem::exists(tmp.str("out/sentiment")));
}
