#include <doctest.h>

#include <bit>
#include <cmath>

#include "alphc/codebook.hpp"
#include "alphc/error.hpp"
#include "alphc/gamma.hpp"
#include "support/test_support.hpp"

using namespace alphc;

namespace {

BitString bits(const char* s) {
    return BitString::from_string(s);
}

FrequencyTable table(std::vector<std::pair<std::string, uint64_t>> counts) {
    return FrequencyTable::from_counts(std::move(counts));
}

CanonicalCode random_code(testsupport::Rng& rng, size_t max_symbols = 40) {
    std::vector<std::pair<std::string, uint64_t>> counts;
    std::vector<std::string> vocab = testsupport::random_vocabulary(rng, 1 + rng.below(max_symbols));
    for (const std::string& w : vocab) counts.emplace_back(w, 1 + rng.below(60));
    return build_canonical_code(table(counts));
}

} // namespace

TEST_CASE("letter encodings per representation") {
    CHECK(encode_symbol_letters("the", LetterRepr::LVariable) == bits("000 0110 100"));
    CHECK(symbol_letters_bits("the", LetterRepr::LVariable) == 10);
    CHECK(encode_symbol_letters("a", LetterRepr::L8) == bits("01100001"));
    CHECK(encode_symbol_letters("ab", LetterRepr::L5) == bits("00000 00001"));
    CHECK(symbol_letters_bits("ab", LetterRepr::L5) == 10);
}

TEST_CASE("unmapped characters fail naming character and symbol") {
    CHECK_THROWS_WITH_AS(encode_symbol_letters("cafe9", LetterRepr::L5),
                         "character '9' in symbol \"cafe9\" has no letter code", ConfigError);
    CHECK_THROWS_AS(symbol_letters_bits("Ab", LetterRepr::L8), ConfigError);
}

TEST_CASE("the variable letter table is prefix-free over all 26x26 pairs") {
    for (char a = 'a'; a <= 'z'; ++a) {
        for (char b = 'a'; b <= 'z'; ++b) {
            if (a == b) continue;
            std::string_view ca = variable_letter_code(a);
            std::string_view cb = variable_letter_code(b);
            CHECK(cb.substr(0, ca.size()) != ca);
        }
    }
}

TEST_CASE("symbol letter payloads decode back exactly") {
    testsupport::Rng rng(21);
    for (LetterRepr repr : {LetterRepr::L8, LetterRepr::L5, LetterRepr::LVariable}) {
        for (int i = 0; i < 50; ++i) {
            std::string word = testsupport::random_word(rng);
            CHECK(decode_symbol_letters(encode_symbol_letters(word, repr), repr) == word);
        }
    }
    // a truncated variable payload dies inside a codeword
    BitString partial = bits("00101");
    CHECK_THROWS_AS(decode_symbol_letters(partial, LetterRepr::LVariable), CorruptionError);
    CHECK_THROWS_AS(decode_symbol_letters(bits("0000000"), LetterRepr::L5), CorruptionError);
    // L5 values 26..31 are reserved and never valid letters
    CHECK_THROWS_AS(decode_symbol_letters(bits("11010"), LetterRepr::L5), CorruptionError);
}

TEST_CASE("Shannon-bound constant of the reference frequencies") {
    CHECK(shannon_bound_bits_per_letter() == doctest::Approx(4.5766).epsilon(0.0001 / 4.5766));
    CHECK(expected_variable_code_bits_per_letter() < shannon_bound_bits_per_letter());
    CHECK(expected_variable_code_bits_per_letter() == doctest::Approx(4.202).epsilon(0.001));
}

TEST_CASE("block serialization of a two-symbol code, bit for bit") {
    CanonicalCode code = build_canonical_code(table({{"a", 1}, {"b", 1}}));
    // gamma(1 block) gamma(z=1) gamma(k=2) gamma(00000) gamma(00001)
    BitString expected = bits("011 011 001010 000 101 00000 000 101 00001");
    CHECK(serialize_blocks(code, LetterRepr::L5) == expected);

    BitReader r(expected);
    CanonicalCode back = deserialize_blocks(r, LetterRepr::L5);
    CHECK(r.remaining() == 0);
    REQUIRE(back.size() == 2);
    CHECK(back.codeword_bits(*back.find("a")).to_string() == "0");
    CHECK(back.codeword_bits(*back.find("b")).to_string() == "1");
}

TEST_CASE("block layout groups by length in ascending order") {
    CanonicalCode code = build_canonical_code(table({{"a", 2}, {"b", 1}, {"c", 1}}));
    BitString blocks = serialize_blocks(code, LetterRepr::L8);
    // gamma(2 blocks), then the z=1 block with one symbol, then z=2 with two
    BitString expected;
    gamma_append_int(expected, 2);
    gamma_append_int(expected, 1);
    gamma_append_int(expected, 1);
    gamma_append(expected, encode_symbol_letters("a", LetterRepr::L8));
    gamma_append_int(expected, 2);
    gamma_append_int(expected, 2);
    gamma_append(expected, encode_symbol_letters("b", LetterRepr::L8));
    gamma_append(expected, encode_symbol_letters("c", LetterRepr::L8));
    CHECK(blocks == expected);
}

TEST_CASE("a single-length alphabet forms one block") {
    CanonicalCode code =
        build_canonical_code(table({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}));
    BitString blocks = serialize_blocks(code, LetterRepr::L5);
    BitReader r(blocks);
    CHECK(gamma_decode_int(r) == 1); // one block
    CHECK(gamma_decode_int(r) == 2); // z = 2
    CHECK(gamma_decode_int(r) == 4); // k = 4
}

TEST_CASE("blocks round-trip bit-identically across reprs and alphabets") {
    testsupport::Rng rng(22);
    for (LetterRepr repr : {LetterRepr::L8, LetterRepr::L5, LetterRepr::LVariable}) {
        for (int i = 0; i < 40; ++i) {
            CanonicalCode code = random_code(rng);
            BitString wire = serialize_blocks(code, repr);
            CHECK(wire.size() == codebook_length_bits(code, repr, CodebookFormat::Blocks));
            BitReader r(wire);
            CanonicalCode back = deserialize_blocks(r, repr);
            CHECK(r.remaining() == 0);
            CHECK(serialize_blocks(back, repr) == wire);
            REQUIRE(back.size() == code.size());
            for (size_t k = 0; k < code.size(); ++k) {
                CHECK(back.entries()[k].symbol == code.entries()[k].symbol);
                CHECK(back.entries()[k].code == code.entries()[k].code);
            }
        }
    }
}

TEST_CASE("block deserialization rejects damage") {
    CanonicalCode code = build_canonical_code(table({{"ab", 3}, {"cd", 2}, {"ef", 1}}));
    BitString wire = serialize_blocks(code, LetterRepr::L5);

    // truncation inside a block
    for (size_t cut : {wire.size() - 1, wire.size() / 2, size_t(4)}) {
        BitString clipped;
        for (size_t i = 0; i < cut; ++i) clipped.push_back(wire.bit(i));
        BitReader r(clipped);
        CHECK_THROWS_AS(deserialize_blocks(r, LetterRepr::L5), Error);
    }

    // Kraft violation: one block claiming a lone 2-bit codeword
    BitString bad;
    gamma_append_int(bad, 1);
    gamma_append_int(bad, 2);
    gamma_append_int(bad, 1);
    gamma_append(bad, encode_symbol_letters("a", LetterRepr::L5));
    BitReader rb(bad);
    CHECK_THROWS_AS(deserialize_blocks(rb, LetterRepr::L5), CorruptionError);

    // blocks out of order
    BitString unordered;
    gamma_append_int(unordered, 2);
    gamma_append_int(unordered, 2);
    gamma_append_int(unordered, 2);
    gamma_append(unordered, encode_symbol_letters("b", LetterRepr::L5));
    gamma_append(unordered, encode_symbol_letters("c", LetterRepr::L5));
    gamma_append_int(unordered, 1);
    gamma_append_int(unordered, 1);
    gamma_append(unordered, encode_symbol_letters("a", LetterRepr::L5));
    BitReader ru(unordered);
    CHECK_THROWS_AS(deserialize_blocks(ru, LetterRepr::L5), CorruptionError);
}

TEST_CASE("flat serialization of a lone symbol, bit for bit") {
    CanonicalCode code = build_canonical_code(table({{"a", 1}}));
    // marker 1, letter a, gamma("0") = 010
    BitString expected = bits("1 00000 010");
    CHECK(serialize_flat(code, LetterRepr::L5) == expected);
    CHECK(expected.size() == 9);
    CHECK(codebook_length_bits(code, LetterRepr::L5, CodebookFormat::Flat) == 9);
}

TEST_CASE("flat length follows the closed formula") {
    CanonicalCode code = build_canonical_code(table({{"a", 1}, {"b", 1}}));
    // (5+1)*2 letters + 2 codeword bits + 2*2 length-field bits = 18
    CHECK(serialize_flat(code, LetterRepr::L5).size() == 18);

    testsupport::Rng rng(23);
    for (LetterRepr repr : {LetterRepr::L8, LetterRepr::L5}) {
        for (int i = 0; i < 40; ++i) {
            CanonicalCode rc = random_code(rng);
            uint64_t letters = 0, code_bits = 0, field_bits = 0;
            for (const CodeEntry& e : rc.entries()) {
                letters += e.symbol.size();
                code_bits += e.length;
                field_bits += 2 * uint64_t(std::floor(std::log2(double(e.length)))) + 2;
            }
            uint64_t formula = (fixed_letter_width(repr) + 1) * letters + code_bits + field_bits;
            CHECK(serialize_flat(rc, repr).size() == formula);
            CHECK(codebook_length_bits(rc, repr, CodebookFormat::Flat) == formula);
        }
    }
}

TEST_CASE("flat requires a fixed-width letter representation") {
    CanonicalCode code = build_canonical_code(table({{"a", 1}, {"b", 1}}));
    CHECK_THROWS_AS(serialize_flat(code, LetterRepr::LVariable), ConfigError);
    CHECK_THROWS_AS(codebook_length_bits(code, LetterRepr::LVariable, CodebookFormat::Flat),
                    ConfigError);
}

TEST_CASE("flat round-trips arbitrary non-canonical codebooks") {
    testsupport::Rng rng(24);
    for (int i = 0; i < 40; ++i) {
        // random prefix-free codebook that need not be canonical or complete
        std::vector<CodebookEntry> entries;
        std::vector<std::string> vocab = testsupport::random_vocabulary(rng, 2 + rng.below(12));
        uint64_t next_code = 1; // heap-style: children of c are 2c, 2c+1
        for (const std::string& w : vocab) {
            next_code = next_code * 2 + rng.below(2);
            BitString cw;
            unsigned len = unsigned(std::bit_width(next_code)) - 1;
            cw.append_bits(next_code - (uint64_t(1) << len), len == 0 ? 1 : len);
            entries.push_back({w, cw});
        }
        BitString wire = serialize_flat_entries(entries, LetterRepr::L8);
        BitReader r(wire);
        std::vector<CodebookEntry> back = deserialize_flat(r, LetterRepr::L8, entries.size());
        CHECK(r.remaining() == 0);
        REQUIRE(back.size() == entries.size());
        for (size_t k = 0; k < entries.size(); ++k) {
            CHECK(back[k].symbol == entries[k].symbol);
            CHECK(back[k].codeword == entries[k].codeword);
        }
    }
}

TEST_CASE("flat deserialization detects truncation") {
    CanonicalCode code = build_canonical_code(table({{"ab", 2}, {"cd", 1}, {"ef", 1}}));
    BitString wire = serialize_flat(code, LetterRepr::L5);
    BitString clipped;
    for (size_t i = 0; i + 4 < wire.size(); ++i) clipped.push_back(wire.bit(i));
    BitReader r(clipped);
    CHECK_THROWS_AS(deserialize_flat(r, LetterRepr::L5, 3), Error);
}

TEST_CASE("blocks never lose to flat at equal L") {
    testsupport::Rng rng(25);
    for (LetterRepr repr : {LetterRepr::L8, LetterRepr::L5}) {
        for (int i = 0; i < 60; ++i) {
            CanonicalCode code = random_code(rng);
            CHECK(codebook_length_bits(code, repr, CodebookFormat::Blocks) <=
                  codebook_length_bits(code, repr, CodebookFormat::Flat));
        }
    }
}
