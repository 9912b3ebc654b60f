#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alphc/bits.hpp"
#include "alphc/frequency.hpp"

namespace alphc {

struct CodeEntry {
    std::string symbol;
    uint32_t length = 0; // codeword bit length
    uint64_t code = 0;   // codeword value, MSB-first over `length` bits
};

/// Prefix-free code whose codewords are a pure function of the codeword
/// lengths and a fixed symbol order: entries are sorted by (length,
/// symbol), codewords within a length are consecutive integers, shifted
/// left at each length increase. Rebuilding from the lengths alone
/// reproduces identical codewords, which is what makes the length-only
/// codebook serialization possible.
class CanonicalCode {
public:
    /// Optimal (Huffman) lengths for the given counts, canonical
    /// assignment. Ties between equal-weight nodes are broken by the
    /// smaller minimum symbol, so the result is deterministic. A single
    /// symbol gets a 1-bit codeword.
    static CanonicalCode from_frequencies(const FrequencyTable& freqs);

    /// Canonical code from (symbol, length) pairs, in any order. Enforces
    /// Kraft equality (sum of 2^-length == 1) for two or more symbols and
    /// length == 1 for a lone symbol; throws CorruptionError otherwise.
    static CanonicalCode from_lengths(std::span<const std::pair<std::string, uint32_t>> lengths);

    size_t size() const { return entries_.size(); }
    /// Canonical order: ascending length, then lexicographic symbol.
    const std::vector<CodeEntry>& entries() const { return entries_; }
    const CodeEntry* find(std::string_view symbol) const;
    uint32_t max_length() const { return entries_.empty() ? 0 : entries_.back().length; }

    BitString codeword_bits(const CodeEntry& e) const;

private:
    void assign_codewords(); // from sorted lengths
    void build_index();

    struct StringHash {
        using is_transparent = void;
        size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };

    std::vector<CodeEntry> entries_;
    std::unordered_map<std::string, uint32_t, StringHash, std::equal_to<>> index_;
};

/// Spec-facing alias for CanonicalCode::from_frequencies.
inline CanonicalCode build_canonical_code(const FrequencyTable& freqs) {
    return CanonicalCode::from_frequencies(freqs);
}

/// Concatenated codewords of the token stream. Throws ConfigError naming
/// the first token missing from the code.
BitString encode_stream(const TokenStream& tokens, const CanonicalCode& code);

/// Closed form for encode_stream(...).size(): sum of count * length.
uint64_t encoded_length_bits(const FrequencyTable& freqs, const CanonicalCode& code);

/// Read exactly `count` codewords. Throws CorruptionError when the bits
/// do not follow any codeword path, TruncationError when the stream ends
/// early.
TokenStream decode_stream(BitReader& bits, const CanonicalCode& code, uint64_t count,
                          AlphabetSpec alphabet = {});

/// Binary-trie decoder over arbitrary (symbol, codeword) pairs; rejects
/// codebooks that are not prefix-free. Works for canonical and
/// non-canonical codebooks alike.
class PrefixDecoder {
public:
    explicit PrefixDecoder(const CanonicalCode& code);
    explicit PrefixDecoder(std::span<const std::pair<std::string, BitString>> codebook);

    const std::string& decode_one(BitReader& r) const;

private:
    void insert(const std::string& symbol, uint64_t code, uint32_t length);
    void insert(const std::string& symbol, const BitString& bits);

    struct Node {
        int32_t child[2] = {-1, -1};
        int32_t leaf = -1;
    };
    std::vector<Node> nodes_;
    std::vector<std::string> symbols_;
};

} // namespace alphc
