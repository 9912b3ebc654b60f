#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphc/bits.hpp"
#include "alphc/huffman.hpp"
#include "alphc/letter_repr.hpp"

namespace alphc {

enum class CodebookFormat : uint8_t {
    Blocks = 0, // symbols grouped by codeword length, lengths sent once per group
    Flat = 1,   // every (symbol, codeword) pair spelled out
};

std::string_view to_string(CodebookFormat format);
std::optional<CodebookFormat> codebook_format_from_string(std::string_view name);

// Block wire format (bit-exact):
//
//   gamma(B) | B times: gamma(z) gamma(k_z) gamma(alpha(a_1)) ... gamma(alpha(a_k_z))
//
// with blocks in ascending codeword length z, the k_z symbols of each
// block in lexicographic order, and alpha(a) the letter spelling of a
// under the chosen representation. B is the number of non-empty blocks:
// unlike a max-minus-min length header it can never be zero and does not
// assume every length in between occurs.
BitString serialize_blocks(const CanonicalCode& code, LetterRepr repr);

/// Inverse of serialize_blocks: rebuilds the canonical code from the
/// recovered (symbol, length) list. Enforces ascending blocks, sorted
/// symbols, and Kraft equality; throws CorruptionError/TruncationError.
CanonicalCode deserialize_blocks(BitReader& r, LetterRepr repr);

// Flat wire format, one line per symbol:
//
//   (1 letter_bits)+ gamma(codeword)
//
// Each letter is marker bit 1 plus a fixed-width letter code; the 0 that
// ends the letter run is the first bit of the gamma wrapper. Works for
// arbitrary prefix codebooks but requires a fixed-width letter
// representation (LVariable is rejected with ConfigError).
struct CodebookEntry {
    std::string symbol;
    BitString codeword;
};

BitString serialize_flat(const CanonicalCode& code, LetterRepr repr);
BitString serialize_flat_entries(std::span<const CodebookEntry> entries, LetterRepr repr);

/// Read exactly `symbol_count` flat lines.
std::vector<CodebookEntry> deserialize_flat(BitReader& r, LetterRepr repr, size_t symbol_count);

/// Read flat lines while the next bit is a letter marker; used by
/// containers, where the codebook is followed by a gamma-wrapped payload
/// (which always starts with 0).
std::vector<CodebookEntry> deserialize_flat_until_payload(BitReader& r, LetterRepr repr);

/// Exact serialized size in bits, without materializing the stream.
uint64_t codebook_length_bits(const CanonicalCode& code, LetterRepr repr, CodebookFormat format);

} // namespace alphc
