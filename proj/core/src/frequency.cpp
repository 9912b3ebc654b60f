#include "alphc/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "alphc/error.hpp"

namespace alphc {

uint64_t FrequencyTable::count_of(std::string_view symbol) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), symbol,
                               [](const auto& e, std::string_view s) { return e.first < s; });
    if (it == entries.end() || it->first != symbol) return 0;
    return it->second;
}

FrequencyTable FrequencyTable::from_counts(std::vector<std::pair<std::string, uint64_t>> counts) {
    FrequencyTable t;
    std::sort(counts.begin(), counts.end());
    for (auto& [symbol, count] : counts) {
        if (count == 0) throw Error("frequency table counts must be >= 1");
        if (!t.entries.empty() && t.entries.back().first == symbol)
            throw Error("duplicate symbol in frequency table: " + symbol);
        t.total += count;
        t.entries.emplace_back(std::move(symbol), count);
    }
    if (t.entries.empty()) throw Error("empty frequency table");
    return t;
}

FrequencyTable count_frequencies(const TokenStream& tokens) {
    if (tokens.tokens.empty()) throw Error("cannot count frequencies of an empty stream");
    std::map<std::string_view, uint64_t> counts;
    for (const std::string& t : tokens.tokens) ++counts[t];

    FrequencyTable out;
    out.entries.reserve(counts.size());
    for (const auto& [symbol, count] : counts) out.entries.emplace_back(std::string(symbol), count);
    out.total = tokens.tokens.size();
    return out;
}

double entropy_bits(const FrequencyTable& freqs) {
    double s = 0.0;
    double n = double(freqs.total);
    for (const auto& [symbol, count] : freqs.entries) {
        double f = double(count) / n;
        s -= f * std::log2(f);
    }
    return s < 0.0 ? 0.0 : s;
}

} // namespace alphc
