#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphc/metrics.hpp"
#include "alphc/tokenize.hpp"

namespace alphc {

// The four alphabets the corpus comparison columns are defined over.
enum class CorpusAlphabet : size_t {
    Letters = 0,
    Ngram2 = 1,
    Syllables = 2,
    Words = 3,
};
inline constexpr size_t kCorpusAlphabetCount = 4;

std::array<AlphabetSpec, kCorpusAlphabetCount> corpus_alphabets(std::string syllabifier_id);

// Comparison columns: "X_lt_Y" counts books whose total code length under
// alphabet X is strictly below Y (or below every other alphabet, for
// "_lt_all"). Ties count for neither side and are tallied separately.
inline constexpr std::array<std::string_view, 8> kWinColumns = {
    "s_lt_all", "w_lt_all", "lett2_lt_all", "lett_lt_all",
    "s_lt_w",   "lett_lt_w", "lett2_lt_w",  "w_lt_lett2",
};

struct CorpusOptions {
    std::vector<LetterRepr> reprs = {LetterRepr::L8, LetterRepr::L5, LetterRepr::LVariable};
    double sample_fraction = 1.0; // deterministic under `seed`
    uint64_t seed = 0;
    uint32_t drop_extremes = 0; // drop this many shortest and longest books
    unsigned jobs = 0;          // worker threads; 0 = hardware concurrency
    std::string syllabifier = "ssp";
};

struct BookCell {
    uint64_t code_only_bits = 0;
    uint64_t codebook_bits = 0;
    uint64_t total_bits = 0;
};

struct BookResult {
    std::string path;
    uint32_t rank = 0; // 1-based over the full readable index, by word count
    uint64_t letters_count = 0;
    uint64_t words_count = 0;
    // cells[repr_index][alphabet_index], repr order per CorpusOptions::reprs
    std::vector<std::array<BookCell, kCorpusAlphabetCount>> cells;
    std::string error;

    bool ok() const { return error.empty(); }
};

struct WinFractionRow {
    LetterRepr repr = LetterRepr::L8;
    uint64_t books = 0;
    std::array<double, 8> fraction{};
    std::array<uint64_t, 8> ties{};
};

struct RankCurvePoint {
    uint32_t rank = 0;
    uint64_t books = 0; // books with rank <= this point's rank
    std::array<double, 8> fraction{};
};

struct CorpusResult {
    uint64_t indexed_books = 0; // readable, normalizable files
    uint64_t skipped_files = 0;
    std::vector<LetterRepr> reprs;
    std::vector<BookResult> books; // analyzed subset, ascending rank
    std::vector<WinFractionRow> win_table;
    std::vector<std::vector<RankCurvePoint>> curves; // one curve per repr
};

/// Index, rank, filter, sample and analyze a corpus. Ranks are assigned
/// over every readable file (1 = fewest words, ties by input order)
/// before extremes are dropped or the sample is drawn, so surviving
/// books keep their original ranks.
CorpusResult run_corpus(const std::vector<std::filesystem::path>& files,
                        const CorpusOptions& options,
                        const SyllabifierSet& syllabifiers = SyllabifierSet::builtin());

/// Aggregate the Table-style comparison row from per-book totals
/// (books with errors are skipped).
WinFractionRow win_fractions(std::span<const BookResult> books, size_t repr_index,
                             LetterRepr repr);

/// Cumulative fractions over books with rank <= x, one point per
/// analyzed book.
std::vector<RankCurvePoint> rank_curve(std::span<const BookResult> books, size_t repr_index);

} // namespace alphc
