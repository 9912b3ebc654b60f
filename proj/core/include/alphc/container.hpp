#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphc/codebook.hpp"
#include "alphc/tokenize.hpp"

namespace alphc {

/// Everything a compression run needs besides the text itself.
struct ContainerConfig {
    AlphabetSpec alphabet;
    LetterRepr repr = LetterRepr::L8;
    CodebookFormat format = CodebookFormat::Blocks;

    void validate() const; // (flat, LVariable) is rejected
};

/// Measured section sizes, in bits. The header is the practical file-format
/// addition; every reported quantity excludes it so the accounting matches
/// the bitstream proper (codebook + gamma-wrapped payload).
struct ContainerInfo {
    uint64_t token_count = 0;       // N
    uint64_t letters_count = 0;     // letters in the normalized text
    uint64_t header_bits = 0;       // fixed 10-byte header
    uint64_t token_field_bits = 0;  // gamma(N)
    uint64_t codebook_bits = 0;     // codebook serialization
    uint64_t payload_bits = 0;      // concatenated codewords
    uint64_t payload_field_bits = 0; // gamma(payload)
    uint64_t total_bits = 0;        // whole file, padding included
};

// On-disk layout: "ALPHC" magic, 1-byte version (1), 1-byte alphabet
// kind, 1-byte n (0 if unused), 1-byte letter representation, 1-byte
// codebook format; then a bitstream of gamma(N), the codebook, and
// gamma(enc(text)), zero-padded to a whole byte at the very end.
struct CompressedContainer {
    std::vector<uint8_t> bytes;
    ContainerConfig config;
    ContainerInfo info;
};

inline constexpr char kContainerMagic[5] = {'A', 'L', 'P', 'H', 'C'};
inline constexpr uint8_t kContainerVersion = 1;

/// Normalize, tokenize, code and frame `raw`. Deterministic: identical
/// (raw, config) produce bit-identical containers.
CompressedContainer compress(std::string_view raw, const ContainerConfig& config,
                             const SyllabifierSet& syllabifiers = SyllabifierSet::builtin());

struct DecompressResult {
    std::string letters;              // recovered normalized letter sequence
    std::vector<std::string> tokens;  // token boundaries, for inspection
    ContainerConfig config;           // as recorded in the header
    ContainerInfo info;
};

/// Inverse of compress on the normalized-letter level. A function of the
/// container bytes only. Throws CorruptionError / TruncationError on
/// malformed input.
DecompressResult decompress(std::span<const uint8_t> bytes);

/// Upper bound on the Kolmogorov complexity of the text realized by a
/// self-delimiting program of codebook + payload:
/// codebook + payload + 2*ceil(log2(payload)). Throws Error when
/// payload_bits is 0.
uint64_t kolmogorov_bound(uint64_t codebook_bits, uint64_t payload_bits);

} // namespace alphc
