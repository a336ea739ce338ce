// Compares the serial reference kernels against the OpenMP ones on a
// synthetic comment corpus and checks they agree while timing them.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kolan/model.hpp"
#include "kolan/textprep.hpp"

using namespace kolan;

namespace {

CommentCorpus synthetic_corpus(std::size_t comments, unsigned seed) {
    static const char* kWords[] = {
        "investasi", "banget",  "barang", "mengatur", "uang",   "bahan",   "bank",
        "duit",      "gudang",  "juta",   "semangat", "mantap", "konten",  "yang",
        "dan",       "untuk",   "ini",    "itu",      "ayo",    "beli",    "nyidam",
        "ngelamar",  "kerja",   "gaji",   "allah",    "akal",   "sehat",   "berharga",
        "percaya",   "bantuan", "jelas",  "kak",      "keren",  "sbr",     "obligasi",
    };
    static const char* kNoise[] = {"!!!", "123", "...", ":)", "🙏", "💰", "😅", "?", "5jt", ""};

    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> word(0, std::size(kWords) - 1);
    std::uniform_int_distribution<std::size_t> noise(0, std::size(kNoise) - 1);
    std::uniform_int_distribution<int> len(3, 18);

    CommentCorpus corpus;
    corpus.kol_id = "bench";
    corpus.comments.reserve(comments);
    for (std::size_t i = 0; i < comments; ++i) {
        std::string c;
        int n = len(rng);
        for (int j = 0; j < n; ++j) {
            if (j) c.push_back(' ');
            c += kWords[word(rng)];
            if (j % 4 == 3) c += kNoise[noise(rng)];
        }
        corpus.comments.push_back(std::move(c));
    }
    return corpus;
}

template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kolan_bench - serial vs OpenMP kernel comparison"};
    std::size_t comments = 200'000;
    unsigned seed = 42;
    int repeats = 3;
    app.add_option("--comments", comments, "synthetic corpus size");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--repeats", repeats, "timing repetitions (best is reported)");
    CLI11_PARSE(app, argc, argv);

    // self-contained resources so the benchmark needs no data files
    text::TextResources res;
    res.stop_id = {"yang", "dan", "untuk", "ini", "itu"};
    res.stop_en = {"the", "a", "and"};
    res.slang.entries = {{"nyidam", "mengidam"}, {"ngelamar", "melamar"}};
    res.lemmas.entries = {{"investasinya", "investasi"}, {"kontennya", "konten"}};

    CommentCorpus corpus = synthetic_corpus(comments, seed);
#ifdef _OPENMP
    std::printf("threads: %d, comments: %zu\n", omp_get_max_threads(), comments);
#else
    std::printf("threads: 1 (no OpenMP), comments: %zu\n", comments);
#endif

    text::TokenDoc serial_doc, parallel_doc;
    double t_serial = 1e300, t_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        t_serial = std::min(t_serial,
                            time_ms([&] { serial_doc = text::process_corpus_serial(corpus, res); }));
        t_parallel =
            std::min(t_parallel, time_ms([&] { parallel_doc = text::process_corpus(corpus, res); }));
    }
    bool pipeline_equal = serial_doc.tokens == parallel_doc.tokens;

    std::vector<text::TokenDoc> docs;
    for (int i = 0; i < 8; ++i) {
        text::TokenDoc d = serial_doc;
        d.kol_id = "bench" + std::to_string(i);
        docs.push_back(std::move(d));
    }
    text::FrequencyTable freq_serial, freq_parallel;
    double f_serial = 1e300, f_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        f_serial =
            std::min(f_serial, time_ms([&] { freq_serial = text::word_frequencies_serial(docs); }));
        f_parallel =
            std::min(f_parallel, time_ms([&] { freq_parallel = text::word_frequencies(docs); }));
    }
    bool freq_equal = freq_serial.rows == freq_parallel.rows;

    std::printf("%-24s %12s %12s %9s %7s\n", "kernel", "serial(ms)", "openmp(ms)", "speedup",
                "equal");
    std::printf("%-24s %12.1f %12.1f %8.2fx %7s\n", "corpus pipeline", t_serial, t_parallel,
                t_serial / t_parallel, pipeline_equal ? "yes" : "NO");
    std::printf("%-24s %12.1f %12.1f %8.2fx %7s\n", "word frequencies", f_serial, f_parallel,
                f_serial / f_parallel, freq_equal ? "yes" : "NO");
    return pipeline_equal && freq_equal ? 0 : 1;
}
