#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphc/tokenize.hpp"

namespace alphc {

/// Occurrence counts per distinct symbol. Entries are kept sorted by
/// symbol so downstream code is deterministic.
struct FrequencyTable {
    std::vector<std::pair<std::string, uint64_t>> entries;
    uint64_t total = 0;

    size_t distinct() const { return entries.size(); }
    /// 0 when absent.
    uint64_t count_of(std::string_view symbol) const;

    /// Build from explicit (symbol, count) pairs; counts must be >= 1.
    static FrequencyTable from_counts(std::vector<std::pair<std::string, uint64_t>> counts);
};

/// Exact multiset counts of a token stream. Throws Error on an empty
/// stream.
FrequencyTable count_frequencies(const TokenStream& tokens);

/// Shannon entropy in bits per symbol: sum of f * log2(1/f).
double entropy_bits(const FrequencyTable& freqs);

} // namespace alphc
