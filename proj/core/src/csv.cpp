#include "alphc/csv.hpp"

#include <cstdio>
#include <ostream>

namespace alphc {

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\n") == std::string_view::npos) return std::string(value);
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_ratio(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void write_analyze_csv(std::ostream& out, std::span<const AnalysisRow> rows) {
    out << "# alphc-analyze v1\n";
    out << "text_id,alphabet,repr,format,letters,words,tokens,distinct_symbols,entropy_bits,"
           "code_only_bits,codebook_bits,total_bits,eta,kolmogorov_bound_bits,bits_per_word,"
           "code_to_codebook_ratio,error\n";
    for (const AnalysisRow& row : rows) {
        const CompressionReport& r = row.report;
        out << csv_field(r.text_id) << ',' << r.alphabet.label() << ',' << to_string(r.repr)
            << ',' << to_string(r.format) << ',';
        if (row.ok()) {
            double bits_per_word = r.words_count ? double(r.total_bits) / double(r.words_count) : 0;
            double ratio = r.codebook_bits ? double(r.code_only_bits) / double(r.codebook_bits) : 0;
            out << r.letters_count << ',' << r.words_count << ',' << r.token_count << ','
                << r.distinct_symbols << ',' << csv_ratio(r.entropy_bits) << ','
                << r.code_only_bits << ',' << r.codebook_bits << ',' << r.total_bits << ','
                << csv_ratio(r.eta) << ',' << r.kolmogorov_bound_bits << ','
                << csv_ratio(bits_per_word) << ',' << csv_ratio(ratio) << ',';
        } else {
            out << r.letters_count << ',' << r.words_count << ",,,,,,,,,,,";
        }
        out << csv_field(row.error) << '\n';
    }
}

void write_books_csv(std::ostream& out, const CorpusResult& result) {
    auto alphabets = corpus_alphabets("ssp");
    out << "# alphc-corpus-books v1\n";
    out << "path,rank,letters,words,repr,alphabet,code_only_bits,codebook_bits,total_bits,error\n";
    for (const BookResult& b : result.books) {
        if (!b.ok()) {
            out << csv_field(b.path) << ',' << b.rank << ',' << b.letters_count << ','
                << b.words_count << ",,,,,," << csv_field(b.error) << '\n';
            continue;
        }
        for (size_t r = 0; r < result.reprs.size(); ++r) {
            for (size_t a = 0; a < kCorpusAlphabetCount; ++a) {
                const BookCell& cell = b.cells[r][a];
                out << csv_field(b.path) << ',' << b.rank << ',' << b.letters_count << ','
                    << b.words_count << ',' << to_string(result.reprs[r]) << ','
                    << alphabets[a].label() << ',' << cell.code_only_bits << ','
                    << cell.codebook_bits << ',' << cell.total_bits << ",\n";
            }
        }
    }
}

void write_win_fractions_csv(std::ostream& out, const CorpusResult& result) {
    out << "# alphc-corpus-win-fractions v1\n";
    out << "repr,books";
    for (std::string_view col : kWinColumns) out << ',' << col;
    for (std::string_view col : kWinColumns) out << ",ties_" << col;
    out << '\n';
    for (const WinFractionRow& row : result.win_table) {
        out << to_string(row.repr) << ',' << row.books;
        for (double f : row.fraction) out << ',' << csv_ratio(f);
        for (uint64_t t : row.ties) out << ',' << t;
        out << '\n';
    }
}

void write_rank_curves_csv(std::ostream& out, const CorpusResult& result) {
    out << "# alphc-corpus-rank-curves v1\n";
    out << "repr,rank,books";
    for (std::string_view col : kWinColumns) out << ',' << col;
    out << '\n';
    for (size_t r = 0; r < result.curves.size(); ++r) {
        for (const RankCurvePoint& p : result.curves[r]) {
            out << to_string(result.reprs[r]) << ',' << p.rank << ',' << p.books;
            for (double f : p.fraction) out << ',' << csv_ratio(f);
            out << '\n';
        }
    }
}

} // namespace alphc
