#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "alphc/corpus.hpp"
#include "alphc/csv.hpp"
#include "alphc/error.hpp"
#include "alphc/metrics.hpp"
#include "support/test_support.hpp"

using namespace alphc;
namespace fs = std::filesystem;

namespace {

struct TempCorpus {
    fs::path dir;
    std::vector<fs::path> files;

    explicit TempCorpus(const std::string& name) {
        dir = fs::temp_directory_path() / ("alphc_test_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~TempCorpus() { fs::remove_all(dir); }

    void add(const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        files.push_back(p);
    }
};

std::vector<std::string> five_texts() {
    testsupport::Rng rng(51);
    std::vector<std::string> texts;
    for (size_t words : {12, 40, 90, 160, 260})
        texts.push_back(testsupport::random_text(rng, words));
    return texts;
}

// Brute-force recomputation of one book's totals through analyze_text.
uint64_t total_for(const std::string& text, const AlphabetSpec& alphabet, LetterRepr repr) {
    std::vector<ContainerConfig> cfg = {{alphabet, repr, CodebookFormat::Blocks}};
    std::vector<AnalysisRow> rows = analyze_text(text, "x", cfg);
    REQUIRE(rows[0].ok());
    return rows[0].report.total_bits;
}

} // namespace

TEST_CASE("five-text corpus oracle: fractions match a hand recomputation") {
    TempCorpus corpus("oracle");
    std::vector<std::string> texts = five_texts();
    for (size_t i = 0; i < texts.size(); ++i)
        corpus.add("book" + std::to_string(i) + ".txt", texts[i]);

    CorpusOptions options;
    options.jobs = 2;
    CorpusResult result = run_corpus(corpus.files, options);
    CHECK(result.indexed_books == 5);
    CHECK(result.skipped_files == 0);
    REQUIRE(result.books.size() == 5);
    REQUIRE(result.win_table.size() == 3);

    // ranks are a permutation 1..5 ordered by word count
    for (size_t i = 0; i < result.books.size(); ++i) {
        CHECK(result.books[i].rank == i + 1);
        if (i > 0) CHECK(result.books[i].words_count >= result.books[i - 1].words_count);
    }

    // totals in the dump equal an independent recomputation per book
    auto alphabets = corpus_alphabets("ssp");
    for (const BookResult& book : result.books) {
        std::ifstream in(book.path);
        std::stringstream buf;
        buf << in.rdbuf();
        for (size_t r = 0; r < result.reprs.size(); ++r)
            for (size_t a = 0; a < kCorpusAlphabetCount; ++a)
                CHECK(book.cells[r][a].total_bits ==
                      total_for(buf.str(), alphabets[a], result.reprs[r]));
    }

    // fractions recomputed from the per-book dump equal the emitted table
    for (size_t r = 0; r < result.reprs.size(); ++r) {
        WinFractionRow recomputed = win_fractions(result.books, r, result.reprs[r]);
        CHECK(recomputed.books == result.win_table[r].books);
        for (size_t col = 0; col < 8; ++col) {
            CHECK(recomputed.fraction[col] == result.win_table[r].fraction[col]);
            CHECK(recomputed.ties[col] == result.win_table[r].ties[col]);
        }
    }

    // pairwise columns partition up to ties: {lett2<w} + {w<lett2} + ties = 1
    for (const WinFractionRow& row : result.win_table) {
        double both = row.fraction[6] + row.fraction[7] +
                      double(row.ties[6]) / double(row.books);
        CHECK(both == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rank curves are cumulative and end at the global fractions") {
    TempCorpus corpus("curves");
    std::vector<std::string> texts = five_texts();
    for (size_t i = 0; i < texts.size(); ++i)
        corpus.add("book" + std::to_string(i) + ".txt", texts[i]);

    CorpusResult result = run_corpus(corpus.files, {});
    REQUIRE(result.curves.size() == result.reprs.size());
    for (size_t r = 0; r < result.curves.size(); ++r) {
        const auto& curve = result.curves[r];
        REQUIRE(curve.size() == result.books.size());
        for (size_t i = 0; i < curve.size(); ++i) {
            CHECK(curve[i].books == i + 1);
            // prefix recomputation
            WinFractionRow prefix = win_fractions(
                std::span(result.books.data(), i + 1), r, result.reprs[r]);
            for (size_t col = 0; col < 8; ++col)
                CHECK(curve[i].fraction[col] == prefix.fraction[col]);
        }
        for (size_t col = 0; col < 8; ++col)
            CHECK(curve.back().fraction[col] == result.win_table[r].fraction[col]);
    }
}

TEST_CASE("tie accounting counts neither side") {
    // handcrafted books: one clean syllable win, one all-way tie
    BookResult clean;
    clean.rank = 1;
    clean.cells.resize(1);
    clean.cells[0][size_t(CorpusAlphabet::Letters)].total_bits = 40;
    clean.cells[0][size_t(CorpusAlphabet::Ngram2)].total_bits = 30;
    clean.cells[0][size_t(CorpusAlphabet::Syllables)].total_bits = 10;
    clean.cells[0][size_t(CorpusAlphabet::Words)].total_bits = 20;
    BookResult tied = clean;
    tied.rank = 2;
    tied.cells[0][size_t(CorpusAlphabet::Syllables)].total_bits = 20; // ties words

    std::vector<BookResult> books = {clean, tied};
    WinFractionRow row = win_fractions(books, 0, LetterRepr::L8);
    CHECK(row.books == 2);
    CHECK(row.fraction[0] == doctest::Approx(0.5)); // s<all strict only once
    CHECK(row.ties[0] == 1);                        // weak minimum in the tied book
    CHECK(row.fraction[4] == doctest::Approx(0.5)); // s<w
    CHECK(row.ties[4] == 1);
    CHECK(row.fraction[1] == doctest::Approx(0.0)); // words never strictly win
}

TEST_CASE("sampling is deterministic and keeps original ranks") {
    TempCorpus corpus("sample");
    testsupport::Rng rng(52);
    for (int i = 0; i < 12; ++i)
        corpus.add("b" + std::to_string(i) + ".txt",
                   testsupport::random_text(rng, 10 + size_t(i) * 12));

    CorpusOptions options;
    options.sample_fraction = 0.5;
    options.seed = 7;
    CorpusResult a = run_corpus(corpus.files, options);
    CorpusResult b = run_corpus(corpus.files, options);
    REQUIRE(a.books.size() == 6);
    for (size_t i = 0; i < a.books.size(); ++i) {
        CHECK(a.books[i].path == b.books[i].path);
        CHECK(a.books[i].rank == b.books[i].rank);
        CHECK(a.books[i].rank >= 1);
        CHECK(a.books[i].rank <= 12);
        if (i > 0) CHECK(a.books[i].rank > a.books[i - 1].rank);
    }

    options.seed = 8;
    CorpusResult c = run_corpus(corpus.files, options);
    bool same = c.books.size() == a.books.size();
    if (same)
        for (size_t i = 0; i < c.books.size(); ++i)
            same = same && c.books[i].path == a.books[i].path;
    CHECK(!same); // a different seed picks a different subset
}

TEST_CASE("drop-extremes removes the shortest and longest books") {
    TempCorpus corpus("extremes");
    testsupport::Rng rng(53);
    for (int i = 0; i < 7; ++i)
        corpus.add("b" + std::to_string(i) + ".txt",
                   testsupport::random_text(rng, 10 + size_t(i) * 25));

    CorpusOptions options;
    options.drop_extremes = 2;
    CorpusResult result = run_corpus(corpus.files, options);
    REQUIRE(result.books.size() == 3);
    CHECK(result.books.front().rank == 3);
    CHECK(result.books.back().rank == 5);

    options.drop_extremes = 4;
    CHECK_THROWS_AS(run_corpus(corpus.files, options), ConfigError);
}

TEST_CASE("unreadable and letterless files are skipped with a count") {
    TempCorpus corpus("skip");
    corpus.add("good.txt", "plenty of readable words in this one");
    corpus.add("empty.txt", "12345 67890 ...");
    corpus.files.push_back(corpus.dir / "missing.txt");

    CorpusResult result = run_corpus(corpus.files, {});
    CHECK(result.indexed_books == 1);
    CHECK(result.skipped_files == 2);
    REQUIRE(result.books.size() == 1);
    CHECK(result.books[0].ok());
}

TEST_CASE("csv writers emit schema headers and stable shapes") {
    TempCorpus corpus("csv");
    std::vector<std::string> texts = five_texts();
    for (size_t i = 0; i < texts.size(); ++i)
        corpus.add("book" + std::to_string(i) + ".txt", texts[i]);
    CorpusResult result = run_corpus(corpus.files, {});

    std::ostringstream books, fractions, curves;
    write_books_csv(books, result);
    write_win_fractions_csv(fractions, result);
    write_rank_curves_csv(curves, result);

    CHECK(books.str().rfind("# alphc-corpus-books v1\n", 0) == 0);
    CHECK(fractions.str().rfind("# alphc-corpus-win-fractions v1\n", 0) == 0);
    CHECK(curves.str().rfind("# alphc-corpus-rank-curves v1\n", 0) == 0);

    auto lines = [](const std::string& s) {
        size_t n = 0;
        for (char ch : s) n += ch == '\n';
        return n;
    };
    CHECK(lines(books.str()) == 2 + 5 * 3 * 4);     // comment+header + books*reprs*alphabets
    CHECK(lines(fractions.str()) == 2 + 3);         // one row per repr
    CHECK(lines(curves.str()) == 2 + 3 * 5);        // per repr, per book

    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_ratio(0.5) == "0.500000");
}
