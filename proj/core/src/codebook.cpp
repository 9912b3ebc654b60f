#include "alphc/codebook.hpp"

#include "alphc/error.hpp"
#include "alphc/gamma.hpp"

namespace alphc {

namespace {

// The flat decoder consumes the 0 that terminates a letter run, which is
// also the first zero of the gamma wrapper, so the wrapper is finished
// here rather than through gamma_decode.
BitString gamma_decode_after_first_zero(BitReader& r) {
    unsigned zeros = 1;
    while (!r.read_bit()) {
        if (++zeros > 64) throw CorruptionError("gamma: length field wider than 64 bits");
    }
    uint64_t len = 1;
    for (unsigned i = 1; i < zeros; ++i) len = (len << 1) | uint64_t(r.read_bit());
    BitString payload;
    payload.reserve_bits(len);
    for (uint64_t i = 0; i < len; ++i) payload.push_back(r.read_bit());
    return payload;
}

char read_fixed_letter(BitReader& r, LetterRepr repr) {
    unsigned width = fixed_letter_width(repr);
    uint64_t v = r.read_bits(width);
    if (repr == LetterRepr::L5) v += uint64_t('a');
    if (v < uint64_t('a') || v > uint64_t('z'))
        throw CorruptionError("letter value outside a-z in flat codebook");
    return char(v);
}

CodebookEntry read_flat_entry(BitReader& r, LetterRepr repr) {
    CodebookEntry e;
    while (r.read_bit()) e.symbol.push_back(read_fixed_letter(r, repr));
    if (e.symbol.empty())
        throw CorruptionError("flat codebook marker desync: line with no letters");
    e.codeword = gamma_decode_after_first_zero(r);
    return e;
}

void require_fixed(LetterRepr repr) {
    if (fixed_letter_width(repr) == 0)
        throw ConfigError("flat codebook requires a fixed-width letter representation");
}

} // namespace

std::string_view to_string(CodebookFormat format) {
    return format == CodebookFormat::Blocks ? "blocks" : "flat";
}

std::optional<CodebookFormat> codebook_format_from_string(std::string_view name) {
    if (name == "blocks") return CodebookFormat::Blocks;
    if (name == "flat") return CodebookFormat::Flat;
    return std::nullopt;
}

BitString serialize_blocks(const CanonicalCode& code, LetterRepr repr) {
    const auto& entries = code.entries();
    if (entries.empty()) throw Error("cannot serialize an empty code");

    uint64_t block_count = 0;
    for (size_t i = 0; i < entries.size(); ++i)
        if (i == 0 || entries[i].length != entries[i - 1].length) ++block_count;

    BitString out;
    gamma_append_int(out, block_count);
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        while (j < entries.size() && entries[j].length == entries[i].length) ++j;
        gamma_append_int(out, entries[i].length);
        gamma_append_int(out, j - i);
        for (size_t k = i; k < j; ++k)
            gamma_append(out, encode_symbol_letters(entries[k].symbol, repr));
        i = j;
    }
    return out;
}

CanonicalCode deserialize_blocks(BitReader& r, LetterRepr repr) {
    uint64_t block_count = gamma_decode_int(r);
    std::vector<std::pair<std::string, uint32_t>> lengths;
    uint64_t prev_z = 0;
    for (uint64_t b = 0; b < block_count; ++b) {
        uint64_t z = gamma_decode_int(r);
        if (z <= prev_z) throw CorruptionError("codebook blocks not in ascending length order");
        if (z > 63) throw CorruptionError("codeword length out of range");
        prev_z = z;
        uint64_t k = gamma_decode_int(r);
        std::string prev_symbol;
        for (uint64_t s = 0; s < k; ++s) {
            std::string symbol = decode_symbol_letters(gamma_decode(r), repr);
            if (symbol.empty()) throw CorruptionError("empty symbol in codebook");
            if (s > 0 && symbol <= prev_symbol)
                throw CorruptionError("codebook symbols not in lexicographic order");
            lengths.emplace_back(symbol, uint32_t(z));
            prev_symbol = std::move(symbol);
        }
    }
    return CanonicalCode::from_lengths(lengths);
}

BitString serialize_flat_entries(std::span<const CodebookEntry> entries, LetterRepr repr) {
    require_fixed(repr);
    BitString out;
    for (const CodebookEntry& e : entries) {
        if (e.symbol.empty()) throw Error("cannot serialize an empty symbol");
        if (e.codeword.empty()) throw Error("cannot serialize an empty codeword");
        for (char c : e.symbol) {
            out.push_back(true);
            append_letter(out, repr, c);
        }
        gamma_append(out, e.codeword);
    }
    return out;
}

BitString serialize_flat(const CanonicalCode& code, LetterRepr repr) {
    std::vector<CodebookEntry> entries;
    entries.reserve(code.size());
    for (const CodeEntry& e : code.entries())
        entries.push_back({e.symbol, code.codeword_bits(e)});
    return serialize_flat_entries(entries, repr);
}

std::vector<CodebookEntry> deserialize_flat(BitReader& r, LetterRepr repr, size_t symbol_count) {
    require_fixed(repr);
    std::vector<CodebookEntry> out;
    out.reserve(symbol_count);
    for (size_t i = 0; i < symbol_count; ++i) out.push_back(read_flat_entry(r, repr));
    return out;
}

std::vector<CodebookEntry> deserialize_flat_until_payload(BitReader& r, LetterRepr repr) {
    require_fixed(repr);
    std::vector<CodebookEntry> out;
    while (r.peek_bit()) out.push_back(read_flat_entry(r, repr));
    return out;
}

uint64_t codebook_length_bits(const CanonicalCode& code, LetterRepr repr, CodebookFormat format) {
    const auto& entries = code.entries();
    if (entries.empty()) throw Error("cannot measure an empty code");

    uint64_t bits = 0;
    if (format == CodebookFormat::Blocks) {
        uint64_t block_count = 0;
        for (size_t i = 0; i < entries.size();) {
            size_t j = i;
            while (j < entries.size() && entries[j].length == entries[i].length) ++j;
            ++block_count;
            bits += gamma_int_length(entries[i].length) + gamma_int_length(j - i);
            i = j;
        }
        bits += gamma_int_length(block_count);
        for (const CodeEntry& e : entries)
            bits += gamma_length(symbol_letters_bits(e.symbol, repr));
    } else {
        require_fixed(repr);
        uint64_t width = fixed_letter_width(repr);
        for (const CodeEntry& e : entries)
            bits += (width + 1) * e.symbol.size() + gamma_length(e.length);
    }
    return bits;
}

} // namespace alphc
