#include "alphc/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "alphc/error.hpp"
#include "alphc/huffman.hpp"
#include "alphc/normalize.hpp"

namespace alphc {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path.string());
    return std::move(buf).str();
}

// Deterministic across platforms, unlike std::shuffle.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint64_t bounded(uint64_t n) {
        return uint64_t(((unsigned __int128)next() * n) >> 64);
    }

private:
    uint64_t state_;
};

struct Comparison {
    std::array<bool, 8> strict{};
    std::array<bool, 8> tied{};
};

Comparison compare_book(const BookResult& book, size_t repr_index) {
    const auto& cells = book.cells[repr_index];
    uint64_t s = cells[size_t(CorpusAlphabet::Syllables)].total_bits;
    uint64_t w = cells[size_t(CorpusAlphabet::Words)].total_bits;
    uint64_t l = cells[size_t(CorpusAlphabet::Letters)].total_bits;
    uint64_t l2 = cells[size_t(CorpusAlphabet::Ngram2)].total_bits;

    auto against_all = [](uint64_t x, uint64_t a, uint64_t b, uint64_t c) {
        bool strict = x < a && x < b && x < c;
        bool weak = x <= a && x <= b && x <= c;
        return std::pair{strict, weak && !strict};
    };
    Comparison out;
    auto assign = [&out](size_t col, std::pair<bool, bool> r) {
        out.strict[col] = r.first;
        out.tied[col] = r.second;
    };
    assign(0, against_all(s, w, l, l2));
    assign(1, against_all(w, s, l, l2));
    assign(2, against_all(l2, s, w, l));
    assign(3, against_all(l, s, w, l2));
    assign(4, {s < w, s == w});
    assign(5, {l < w, l == w});
    assign(6, {l2 < w, l2 == w});
    assign(7, {w < l2, w == l2});
    return out;
}

} // namespace

std::array<AlphabetSpec, kCorpusAlphabetCount> corpus_alphabets(std::string syllabifier_id) {
    return {AlphabetSpec::letters(), AlphabetSpec::ngram(2),
            AlphabetSpec::syllables(std::move(syllabifier_id)), AlphabetSpec::words()};
}

WinFractionRow win_fractions(std::span<const BookResult> books, size_t repr_index,
                             LetterRepr repr) {
    WinFractionRow row;
    row.repr = repr;
    std::array<uint64_t, 8> wins{};
    for (const BookResult& b : books) {
        if (!b.ok()) continue;
        ++row.books;
        Comparison c = compare_book(b, repr_index);
        for (size_t i = 0; i < 8; ++i) {
            wins[i] += c.strict[i];
            row.ties[i] += c.tied[i];
        }
    }
    for (size_t i = 0; i < 8; ++i)
        row.fraction[i] = row.books ? double(wins[i]) / double(row.books) : 0.0;
    return row;
}

std::vector<RankCurvePoint> rank_curve(std::span<const BookResult> books, size_t repr_index) {
    std::vector<RankCurvePoint> curve;
    std::array<uint64_t, 8> wins{};
    uint64_t count = 0;
    for (const BookResult& b : books) {
        if (!b.ok()) continue;
        ++count;
        Comparison c = compare_book(b, repr_index);
        RankCurvePoint p;
        p.rank = b.rank;
        p.books = count;
        for (size_t i = 0; i < 8; ++i) {
            wins[i] += c.strict[i];
            p.fraction[i] = double(wins[i]) / double(count);
        }
        curve.push_back(p);
    }
    return curve;
}

CorpusResult run_corpus(const std::vector<std::filesystem::path>& files,
                        const CorpusOptions& options, const SyllabifierSet& syllabifiers) {
    if (options.reprs.empty()) throw ConfigError("corpus run needs at least one representation");
    if (options.sample_fraction <= 0.0 || options.sample_fraction > 1.0)
        throw ConfigError("sample fraction must be in (0, 1]");

    CorpusResult result;
    result.reprs = options.reprs;

    // Index pass: word counts for ranking. Unreadable or letterless files
    // are skipped and counted.
    struct IndexEntry {
        size_t file = 0;
        uint64_t letters = 0;
        uint64_t words = 0;
        uint32_t rank = 0;
    };
    std::vector<IndexEntry> index;
    for (size_t i = 0; i < files.size(); ++i) {
        try {
            NormalizedText text = normalize(read_file(files[i]));
            index.push_back({i, text.letters.size(), text.word_count(), 0});
        } catch (const Error&) {
            ++result.skipped_files;
        }
    }
    result.indexed_books = index.size();

    std::stable_sort(index.begin(), index.end(), [](const IndexEntry& a, const IndexEntry& b) {
        return a.words < b.words; // stable: ties keep input path order
    });
    for (size_t i = 0; i < index.size(); ++i) index[i].rank = uint32_t(i + 1);

    if (options.drop_extremes > 0) {
        size_t k = options.drop_extremes;
        if (2 * k >= index.size()) throw ConfigError("drop-extremes removes every book");
        index.erase(index.end() - long(k), index.end());
        index.erase(index.begin(), index.begin() + long(k));
    }

    if (options.sample_fraction < 1.0) {
        size_t m = size_t(std::llround(options.sample_fraction * double(index.size())));
        if (m == 0) throw ConfigError("sample fraction selects no books");
        SplitMix64 rng(options.seed);
        for (size_t i = index.size() - 1; i > 0; --i)
            std::swap(index[i], index[rng.bounded(i + 1)]);
        index.resize(m);
        std::sort(index.begin(), index.end(),
                  [](const IndexEntry& a, const IndexEntry& b) { return a.rank < b.rank; });
    }

    // Analysis pass, fanned out across a worker pool; output slots are
    // preassigned so ordering is independent of completion order.
    auto alphabets = corpus_alphabets(options.syllabifier);
    result.books.resize(index.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= index.size()) return;
            BookResult& book = result.books[i];
            book.path = files[index[i].file].string();
            book.rank = index[i].rank;
            book.letters_count = index[i].letters;
            book.words_count = index[i].words;
            book.cells.resize(options.reprs.size());
            try {
                NormalizedText text = normalize(read_file(files[index[i].file]));
                for (size_t a = 0; a < alphabets.size(); ++a) {
                    TokenStream tokens = tokenize(text, alphabets[a], syllabifiers);
                    FrequencyTable freqs = count_frequencies(tokens);
                    CanonicalCode code = CanonicalCode::from_frequencies(freqs);
                    uint64_t code_bits = encoded_length_bits(freqs, code);
                    for (size_t r = 0; r < options.reprs.size(); ++r) {
                        BookCell& cell = book.cells[r][a];
                        cell.code_only_bits = code_bits;
                        cell.codebook_bits =
                            codebook_length_bits(code, options.reprs[r], CodebookFormat::Blocks);
                        cell.total_bits = cell.code_only_bits + cell.codebook_bits;
                    }
                }
            } catch (const Error& e) {
                book.error = e.what();
            }
        }
    };
    unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<size_t>(index.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    for (size_t r = 0; r < options.reprs.size(); ++r) {
        result.win_table.push_back(win_fractions(result.books, r, options.reprs[r]));
        result.curves.push_back(rank_curve(result.books, r));
    }
    return result;
}

} // namespace alphc
