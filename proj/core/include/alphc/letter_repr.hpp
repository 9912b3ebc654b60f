#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "alphc/bits.hpp"

namespace alphc {

/// How codebook symbols spell their letters on the wire:
///   L8        -- 8 bits per letter (ASCII)
///   L5        -- 5 bits per letter, 'a'..'z' -> 0..25 (slots 26..31 reserved)
///   LVariable -- fixed prefix-free per-letter code built from reference
///                English letter frequencies
enum class LetterRepr : uint8_t {
    L8 = 0,
    L5 = 1,
    LVariable = 2,
};

std::string_view to_string(LetterRepr repr);
std::optional<LetterRepr> letter_repr_from_string(std::string_view name); // "l8" "l5" "lvar"

/// Fixed width in bits for L8/L5; 0 for LVariable.
unsigned fixed_letter_width(LetterRepr repr);

/// Bits for one letter under `repr`. Throws ConfigError for characters
/// outside a-z.
unsigned letter_code_bits(LetterRepr repr, char letter);

void append_letter(BitString& out, LetterRepr repr, char letter);

/// Concatenated per-letter codes of a whole symbol. Throws ConfigError
/// naming the character and the symbol on unmapped input.
BitString encode_symbol_letters(std::string_view symbol, LetterRepr repr);
uint64_t symbol_letters_bits(std::string_view symbol, LetterRepr repr);

/// Decode a full payload back into letters; the payload must end exactly
/// on a letter boundary or CorruptionError is thrown.
std::string decode_symbol_letters(const BitString& payload, LetterRepr repr);

/// The fixed variable-length codeword for one letter ("100" for 'e').
std::string_view variable_letter_code(char letter);

/// Reference English letter frequencies 'a'..'z' (unnormalized; they sum
/// to slightly more than 1).
std::span<const double, 26> reference_letter_frequencies();

/// Shannon-bound constant of the letter coder: sum over the normalized
/// reference frequencies f of f * ceil(log2(1/f)), about 4.5766 bits per
/// letter.
double shannon_bound_bits_per_letter();

/// Expected variable-code length per letter under the reference
/// frequencies (upper-bounded by the Shannon-bound constant).
double expected_variable_code_bits_per_letter();

} // namespace alphc
