#include "alphc/metrics.hpp"

#include <cmath>
#include <map>

#include "alphc/error.hpp"
#include "alphc/normalize.hpp"

namespace alphc {

unsigned default_eta_denominator(LetterRepr repr) {
    return repr == LetterRepr::L5 ? 5u : 8u;
}

double compressibility(uint64_t code_only_bits, uint64_t codebook_bits, uint64_t letters_count,
                       unsigned denominator_l) {
    if (letters_count == 0) throw Error("compressibility needs at least one letter");
    if (denominator_l == 0) throw Error("compressibility needs a positive denominator L");
    return double(code_only_bits + codebook_bits) / (double(denominator_l) * double(letters_count));
}

ZipfEstimates zipf_estimates(uint64_t m_words, uint64_t n_words, unsigned l) {
    if (m_words < 2) throw Error("zipf estimates need at least two distinct words");
    if (n_words < m_words) throw Error("zipf estimates need n_words >= m_words");
    ZipfEstimates z;
    double m = double(m_words);
    z.codebook_bits = 4.7 * double(l) * m;
    z.code_bits = double(n_words) * std::log2(std::sqrt(m) * std::log(m));
    z.ratio_bound = z.code_bits / z.codebook_bits;
    return z;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw Error("binary entropy argument outside [0, 1]");
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

ConcatCheck concat_inequality_check(std::span<const std::string> wholes, const SplitFn& split) {
    if (wholes.empty()) throw Error("concatenation check needs a non-empty stream");

    std::map<std::string_view, uint64_t> whole_counts;
    std::map<std::string, uint64_t> part_counts;
    std::map<std::string, std::vector<std::string>> cache;

    ConcatCheck c;
    c.whole_count = wholes.size();
    for (const std::string& w : wholes) {
        ++whole_counts[w];
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, split(w)).first;
        c.max_parts = std::max(c.max_parts, uint32_t(it->second.size()));
        for (const std::string& p : it->second) {
            ++part_counts[p];
            ++c.part_count;
        }
    }

    auto entropy_of = [](const auto& counts, uint64_t total) {
        double s = 0.0;
        for (const auto& [sym, count] : counts) {
            double f = double(count) / double(total);
            s -= f * std::log2(f);
        }
        return s < 0.0 ? 0.0 : s;
    };
    c.whole_entropy = entropy_of(whole_counts, c.whole_count);
    c.part_entropy = entropy_of(part_counts, c.part_count);

    c.mean_parts = double(c.part_count) / double(c.whole_count);
    c.empty_part_frequency = 1.0 - c.mean_parts / double(c.max_parts);
    c.lhs = c.whole_entropy -
            double(c.max_parts) * binary_entropy(c.mean_parts / double(c.max_parts));
    c.rhs = c.mean_parts * c.part_entropy;
    c.slack = c.rhs - c.lhs;
    c.product_inequality_holds = double(c.whole_count) * c.whole_entropy <=
                                 double(c.part_count) * c.part_entropy + 1e-9;
    c.paper_form_defined = c.max_parts == c.mean_parts;
    return c;
}

ConcatCheck concat_inequality_check(const TokenStream& words, const Syllabifier& syllabifier) {
    return concat_inequality_check(
        words.tokens, [&](std::string_view w) { return syllabifier(w); });
}

std::vector<AnalysisRow> analyze_text(std::string_view raw, const std::string& text_id,
                                      std::span<const ContainerConfig> configs,
                                      const SyllabifierSet& syllabifiers,
                                      std::optional<unsigned> denominator_l) {
    NormalizedText text = normalize(raw);

    struct Derived {
        FrequencyTable freqs;
        CanonicalCode code;
        double entropy = 0.0;
        uint64_t token_count = 0;
    };
    std::map<std::string, Derived> by_alphabet; // keyed by spec label

    std::vector<AnalysisRow> rows;
    rows.reserve(configs.size());
    for (const ContainerConfig& cfg : configs) {
        AnalysisRow row;
        row.report.text_id = text_id;
        row.report.alphabet = cfg.alphabet;
        row.report.repr = cfg.repr;
        row.report.format = cfg.format;
        row.report.letters_count = text.letters.size();
        row.report.words_count = text.word_count();
        try {
            cfg.validate();
            auto it = by_alphabet.find(cfg.alphabet.label());
            if (it == by_alphabet.end()) {
                TokenStream tokens = tokenize(text, cfg.alphabet, syllabifiers);
                Derived d;
                d.freqs = count_frequencies(tokens);
                d.code = CanonicalCode::from_frequencies(d.freqs);
                d.entropy = entropy_bits(d.freqs);
                d.token_count = tokens.size();
                it = by_alphabet.emplace(cfg.alphabet.label(), std::move(d)).first;
            }
            const Derived& d = it->second;
            row.report.token_count = d.token_count;
            row.report.distinct_symbols = d.freqs.distinct();
            row.report.entropy_bits = d.entropy;
            row.report.code_only_bits = encoded_length_bits(d.freqs, d.code);
            row.report.codebook_bits = codebook_length_bits(d.code, cfg.repr, cfg.format);
            row.report.total_bits = row.report.code_only_bits + row.report.codebook_bits;
            row.report.kolmogorov_bound_bits =
                kolmogorov_bound(row.report.codebook_bits, row.report.code_only_bits);
            row.report.denominator_l = denominator_l.value_or(default_eta_denominator(cfg.repr));
            row.report.eta = compressibility(row.report.code_only_bits, row.report.codebook_bits,
                                             row.report.letters_count, row.report.denominator_l);
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ContainerConfig> default_analysis_configs(std::string syllabifier_id) {
    std::vector<AlphabetSpec> alphabets = {
        AlphabetSpec::letters(),   AlphabetSpec::ngram(2),
        AlphabetSpec::ngram(3),    AlphabetSpec::ngram(4),
        AlphabetSpec::syllables(std::move(syllabifier_id)),
        AlphabetSpec::words(),     AlphabetSpec::word_pairs(),
    };
    std::vector<ContainerConfig> configs;
    for (const AlphabetSpec& a : alphabets) {
        for (LetterRepr repr : {LetterRepr::L8, LetterRepr::L5, LetterRepr::LVariable})
            configs.push_back({a, repr, CodebookFormat::Blocks});
        for (LetterRepr repr : {LetterRepr::L8, LetterRepr::L5})
            configs.push_back({a, repr, CodebookFormat::Flat});
    }
    return configs;
}

} // namespace alphc
