#pragma once

#include <cstdint>

#include "alphc/bits.hpp"

namespace alphc {

// Self-delimiting code for a bit string b:
//
//     gamma(b) = 0...0 len(b)_2 b
//
// with as many leading zeros as len(b)_2 has binary digits. The zero run
// announces the width of the length field, the length field announces the
// payload width, so concatenated codewords decode unambiguously. Integers
// n >= 1 are coded as gamma of their binary form (no leading zeros).
//
// The empty payload (and n = 0) have no codeword and are rejected.

/// gamma(payload). Throws Error on empty payload.
BitString gamma_encode(const BitString& payload);

/// Append gamma(payload) to `out` without an intermediate copy.
void gamma_append(BitString& out, const BitString& payload);

/// gamma(n) for an integer n >= 1.
BitString gamma_encode_int(uint64_t n);
void gamma_append_int(BitString& out, uint64_t n);

/// Read one codeword, return its payload; the cursor lands exactly past
/// the codeword. Throws TruncationError / CorruptionError.
BitString gamma_decode(BitReader& r);

/// Read one codeword whose payload is an integer written without leading
/// zeros. Throws CorruptionError if the payload has a leading zero or is
/// wider than 64 bits.
uint64_t gamma_decode_int(BitReader& r);

/// Exact bit length of gamma(b) for any payload of `payload_len` bits:
/// payload_len + 2 * bitlen(payload_len). Throws Error on 0.
uint64_t gamma_length(uint64_t payload_len);

/// Exact bit length of gamma(n) for an integer n >= 1.
uint64_t gamma_int_length(uint64_t n);

} // namespace alphc
