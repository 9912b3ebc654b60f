#include "alphc/letter_repr.hpp"

#include <array>
#include <cmath>

#include "alphc/error.hpp"

namespace alphc {

namespace {

// Fixed per-letter prefix code for the LVariable representation. Adopted
// verbatim as data: regenerating it would depend on Huffman tie-breaking,
// and bit compatibility matters more than the one unused leaf under 'z'
// (the table is prefix-free, which is all decoding needs).
constexpr std::array<std::string_view, 26> kVariableCodes = {
    "1110",       // a
    "110000",     // b
    "01001",      // c
    "11111",      // d
    "100",        // e
    "00100",      // f
    "111100",     // g
    "0110",       // h
    "1011",       // i
    "001011011",  // j
    "0010111",    // k
    "11001",      // l
    "00110",      // m
    "1010",       // n
    "1101",       // o
    "110001",     // p
    "001011000",  // q
    "0101",       // r
    "0111",       // s
    "000",        // t
    "01000",      // u
    "001010",     // v
    "00111",      // w
    "001011010",  // x
    "111101",     // y
    "0010110011", // z
};

// Reference English letter frequencies (Wikipedia letter-frequency
// table, two significant digits).
constexpr std::array<double, 26> kReferenceFrequencies = {
    0.082,   // a
    0.015,   // b
    0.028,   // c
    0.043,   // d
    0.13,    // e
    0.022,   // f
    0.02,    // g
    0.061,   // h
    0.07,    // i
    0.0015,  // j
    0.0077,  // k
    0.04,    // l
    0.024,   // m
    0.067,   // n
    0.075,   // o
    0.019,   // p
    0.00095, // q
    0.06,    // r
    0.063,   // s
    0.091,   // t
    0.028,   // u
    0.0098,  // v
    0.024,   // w
    0.0015,  // x
    0.02,    // y
    0.00074, // z
};

bool is_lower_letter(char c) {
    return c >= 'a' && c <= 'z';
}

[[noreturn]] void throw_unmapped(char c, std::string_view symbol) {
    throw ConfigError("character '" + std::string(1, c) + "' in symbol \"" + std::string(symbol) +
                      "\" has no letter code");
}

// Decoding trie for the variable code, tiny enough to build eagerly.
struct VarTrie {
    struct Node {
        int16_t child[2] = {-1, -1};
        int16_t leaf = -1;
    };
    std::array<Node, 128> nodes{};
    int16_t count = 1;

    VarTrie() {
        for (size_t letter = 0; letter < 26; ++letter) {
            int16_t node = 0;
            for (char bit : kVariableCodes[letter]) {
                unsigned b = bit == '1' ? 1u : 0u;
                if (nodes[size_t(node)].child[b] < 0) {
                    nodes[size_t(node)].child[b] = count;
                    ++count;
                }
                node = nodes[size_t(node)].child[b];
            }
            nodes[size_t(node)].leaf = int16_t(letter);
        }
    }
};

const VarTrie& var_trie() {
    static const VarTrie trie;
    return trie;
}

} // namespace

std::string_view to_string(LetterRepr repr) {
    switch (repr) {
        case LetterRepr::L8: return "l8";
        case LetterRepr::L5: return "l5";
        case LetterRepr::LVariable: return "lvar";
    }
    return "?";
}

std::optional<LetterRepr> letter_repr_from_string(std::string_view name) {
    if (name == "l8") return LetterRepr::L8;
    if (name == "l5") return LetterRepr::L5;
    if (name == "lvar") return LetterRepr::LVariable;
    return std::nullopt;
}

unsigned fixed_letter_width(LetterRepr repr) {
    switch (repr) {
        case LetterRepr::L8: return 8;
        case LetterRepr::L5: return 5;
        case LetterRepr::LVariable: return 0;
    }
    return 0;
}

unsigned letter_code_bits(LetterRepr repr, char letter) {
    if (!is_lower_letter(letter)) throw_unmapped(letter, {&letter, 1});
    if (repr == LetterRepr::LVariable)
        return unsigned(kVariableCodes[size_t(letter - 'a')].size());
    return fixed_letter_width(repr);
}

void append_letter(BitString& out, LetterRepr repr, char letter) {
    if (!is_lower_letter(letter)) throw_unmapped(letter, {&letter, 1});
    switch (repr) {
        case LetterRepr::L8:
            out.append_bits(uint64_t(uint8_t(letter)), 8);
            break;
        case LetterRepr::L5:
            out.append_bits(uint64_t(letter - 'a'), 5);
            break;
        case LetterRepr::LVariable:
            for (char bit : kVariableCodes[size_t(letter - 'a')]) out.push_back(bit == '1');
            break;
    }
}

BitString encode_symbol_letters(std::string_view symbol, LetterRepr repr) {
    BitString out;
    for (char c : symbol) {
        if (!is_lower_letter(c)) throw_unmapped(c, symbol);
        append_letter(out, repr, c);
    }
    return out;
}

uint64_t symbol_letters_bits(std::string_view symbol, LetterRepr repr) {
    uint64_t bits = 0;
    for (char c : symbol) {
        if (!is_lower_letter(c)) throw_unmapped(c, symbol);
        bits += letter_code_bits(repr, c);
    }
    return bits;
}

std::string decode_symbol_letters(const BitString& payload, LetterRepr repr) {
    std::string out;
    if (repr == LetterRepr::LVariable) {
        const VarTrie& trie = var_trie();
        int16_t node = 0;
        for (size_t i = 0; i < payload.size(); ++i) {
            node = trie.nodes[size_t(node)].child[payload.bit(i) ? 1 : 0];
            if (node < 0) throw CorruptionError("symbol letters do not match the letter code");
            int16_t leaf = trie.nodes[size_t(node)].leaf;
            if (leaf >= 0) {
                out.push_back(char('a' + leaf));
                node = 0;
            }
        }
        if (node != 0) throw CorruptionError("symbol payload ends inside a letter codeword");
        return out;
    }

    unsigned width = fixed_letter_width(repr);
    if (payload.size() % width != 0)
        throw CorruptionError("symbol payload is not a whole number of letters");
    BitReader r(payload);
    while (r.remaining() > 0) {
        uint64_t v = r.read_bits(width);
        if (repr == LetterRepr::L5) v += uint64_t('a');
        if (v < uint64_t('a') || v > uint64_t('z'))
            throw CorruptionError("letter value outside a-z in symbol payload");
        out.push_back(char(v));
    }
    return out;
}

std::string_view variable_letter_code(char letter) {
    if (!is_lower_letter(letter)) throw_unmapped(letter, {&letter, 1});
    return kVariableCodes[size_t(letter - 'a')];
}

std::span<const double, 26> reference_letter_frequencies() {
    return kReferenceFrequencies;
}

double shannon_bound_bits_per_letter() {
    double norm = 0.0;
    for (double f : kReferenceFrequencies) norm += f;
    double sum = 0.0;
    for (double f : kReferenceFrequencies) {
        double p = f / norm;
        sum += p * std::ceil(std::log2(1.0 / p));
    }
    return sum;
}

double expected_variable_code_bits_per_letter() {
    double norm = 0.0;
    for (double f : kReferenceFrequencies) norm += f;
    double sum = 0.0;
    for (size_t i = 0; i < 26; ++i)
        sum += (kReferenceFrequencies[i] / norm) * double(kVariableCodes[i].size());
    return sum;
}

} // namespace alphc
