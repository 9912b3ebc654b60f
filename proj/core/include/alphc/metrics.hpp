#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphc/container.hpp"
#include "alphc/frequency.hpp"
#include "alphc/tokenize.hpp"

namespace alphc {

/// Per (text, alphabet, representation, format) record.
struct CompressionReport {
    std::string text_id;
    AlphabetSpec alphabet;
    LetterRepr repr = LetterRepr::L8;
    CodebookFormat format = CodebookFormat::Blocks;

    uint64_t letters_count = 0;
    uint64_t words_count = 0;
    uint64_t token_count = 0;      // N
    uint64_t distinct_symbols = 0; // M
    double entropy_bits = 0.0;     // S[f], bits per symbol

    uint64_t code_only_bits = 0;
    uint64_t codebook_bits = 0;
    uint64_t total_bits = 0;
    uint64_t kolmogorov_bound_bits = 0;

    unsigned denominator_l = 8;
    double eta = 0.0;
};

/// Denominator L used for eta by default: the representation's letter
/// width, with 8 for the variable-length representation (the original
/// text is ASCII).
unsigned default_eta_denominator(LetterRepr repr);

/// eta = (code_only + codebook) / (L * letters). Below 1 means the text
/// actually compressed.
double compressibility(uint64_t code_only_bits, uint64_t codebook_bits, uint64_t letters_count,
                       unsigned denominator_l);

/// Order-of-magnitude estimates for the word alphabet under Zipf-ranked
/// frequencies:
///   codebook ~ 4.7 * L * M_words
///   code     ~ N_words * log2(sqrt(M_words) * ln(M_words))
struct ZipfEstimates {
    double codebook_bits = 0.0;
    double code_bits = 0.0;
    double ratio_bound = 0.0; // code / codebook
};
ZipfEstimates zipf_estimates(uint64_t m_words, uint64_t n_words, unsigned l);

/// h2[x] = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Entropy bookkeeping for a whole/part alphabet pair (words vs their
/// syllables, 2n-grams vs n-grams): padding every whole to z parts with
/// an empty part of frequency g = 1 - mean/z yields
///   S_whole - z * h2[mean/z] <= mean * S_part.
struct ConcatCheck {
    uint32_t max_parts = 0;          // z
    double mean_parts = 0.0;         // z-bar = part_count / whole_count
    double empty_part_frequency = 0; // g = 1 - mean/z
    double whole_entropy = 0.0;      // entropy of the whole-symbol stream
    double part_entropy = 0.0;       // entropy of the part stream
    double lhs = 0.0;                // whole_entropy - z * h2[mean/z]
    double rhs = 0.0;                // mean * part_entropy
    double slack = 0.0;              // rhs - lhs, >= 0
    uint64_t whole_count = 0;
    uint64_t part_count = 0;
    bool product_inequality_holds = false; // N_whole*S_whole <= N_part*S_part
    bool paper_form_defined = false;       // h2[z/mean] is defined only when z == mean
};

using SplitFn = std::function<std::vector<std::string>(std::string_view)>;

/// Evaluate the inequality on an explicit whole-token stream and a
/// splitter producing each whole's parts.
ConcatCheck concat_inequality_check(std::span<const std::string> wholes, const SplitFn& split);

/// Convenience overload for word streams and a syllabifier.
ConcatCheck concat_inequality_check(const TokenStream& words, const Syllabifier& syllabifier);

/// One analysis row per configuration; failures land in `error` without
/// aborting the batch.
struct AnalysisRow {
    CompressionReport report;
    std::string error; // empty on success
    bool ok() const { return error.empty(); }
};

std::vector<AnalysisRow> analyze_text(std::string_view raw, const std::string& text_id,
                                      std::span<const ContainerConfig> configs,
                                      const SyllabifierSet& syllabifiers = SyllabifierSet::builtin(),
                                      std::optional<unsigned> denominator_l = std::nullopt);

/// The default analyze matrix: every alphabet (letters, 2-/3-/4-grams,
/// syllables, words, word pairs) x every representation, blocks format,
/// plus flat rows for the fixed-width representations.
std::vector<ContainerConfig> default_analysis_configs(std::string syllabifier_id = "ssp");

} // namespace alphc
