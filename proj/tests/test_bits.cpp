#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "alphc/bits.hpp"
#include "alphc/error.hpp"
#include "alphc/gamma.hpp"
#include "support/test_support.hpp"

using namespace alphc;

namespace {

BitString bits(const char* s) {
    return BitString::from_string(s);
}

// Every bitstring of exactly `len` bits, as integers 0..2^len-1.
BitString nth_bitstring(unsigned len, uint64_t value) {
    BitString b;
    b.append_bits(value, len);
    return b;
}

} // namespace

TEST_CASE("BitString stores MSB-first with zero padding") {
    BitString b;
    CHECK(b.empty());
    b.push_back(true);
    b.push_back(false);
    b.push_back(true);
    CHECK(b.size() == 3);
    CHECK(b.to_string() == "101");
    CHECK(b.bytes() == std::vector<uint8_t>{0xA0});

    b.append_bits(0b11001, 5);
    CHECK(b.to_string() == "10111001");
    CHECK(b.bytes() == std::vector<uint8_t>{0xB9});

    CHECK(bits("1011 1001") == b);
    CHECK(BitString::from_string(b.to_string()) == b);
}

TEST_CASE("BitString append joins unaligned tails") {
    BitString a = bits("101");
    a.append(bits("0111"));
    CHECK(a.to_string() == "1010111");
    BitString aligned = bits("10101010");
    aligned.append(bits("1"));
    CHECK(aligned.to_string() == "101010101");
}

TEST_CASE("BitReader reads, peeks and fails past the end") {
    BitString b = bits("1101");
    BitReader r(b);
    CHECK(r.peek_bit());
    CHECK(r.read_bit());
    CHECK(r.read_bits(3) == 0b101);
    CHECK(r.remaining() == 0);
    CHECK_THROWS_AS(r.read_bit(), TruncationError);
    CHECK_THROWS_AS(r.peek_bit(), TruncationError);
}

TEST_CASE("gamma worked example: 1001101") {
    CHECK(gamma_encode(bits("1001101")) == bits("000 111 1001101"));
    BitReader r(bits("000 111 1001101"));
    CHECK(gamma_decode(r).to_string() == "1001101");
    CHECK(r.remaining() == 0);
}

TEST_CASE("gamma shortest input and power-of-two length") {
    CHECK(gamma_encode(bits("1")) == bits("011"));
    // length 8 needs a 4-digit length field, not the 2*ceil(log2 8) = 6
    // bits of the asymptotic form
    CHECK(gamma_encode(bits("10000000")) == bits("0000 1000 10000000"));
    CHECK(gamma_length(8) == 16);
}

TEST_CASE("gamma integer form") {
    CHECK(gamma_encode_int(7) == bits("000 111 111"));
    CHECK(gamma_encode_int(1) == bits("011"));
    CHECK(gamma_encode_int(13) == bits("000 100 1101"));
    BitReader r(bits("000 100 1101"));
    CHECK(gamma_decode_int(r) == 13);
}

TEST_CASE("gamma rejects empty payload and zero") {
    CHECK_THROWS_AS(gamma_encode(BitString{}), Error);
    CHECK_THROWS_AS(gamma_encode_int(0), Error);
    CHECK_THROWS_AS(gamma_length(0), Error);
    CHECK_THROWS_AS(gamma_int_length(0), Error);
}

TEST_CASE("gamma decode error paths") {
    BitReader truncated(bits("000 11")); // dies inside the length field
    CHECK_THROWS_AS(gamma_decode(truncated), TruncationError);
    BitReader short_payload(bits("000 111 10")); // payload cut short
    CHECK_THROWS_AS(gamma_decode(short_payload), TruncationError);
    BitReader no_zero_run(bits("111"));
    CHECK_THROWS_AS(gamma_decode(no_zero_run), CorruptionError);
    BitReader zero_int(bits("010")); // payload "0" is not an integer
    CHECK_THROWS_AS(gamma_decode_int(zero_int), CorruptionError);
}

TEST_CASE("gamma length examples and oracle across payload sizes") {
    CHECK(gamma_length(7) == 13);
    CHECK(gamma_length(1) == 3);
    testsupport::Rng rng(0x9a5);
    for (uint64_t len = 1; len <= 4096; ++len) {
        BitString payload;
        for (uint64_t i = 0; i < len; ++i) payload.push_back(rng.chance(0.5));
        CHECK(gamma_encode(payload).size() == gamma_length(len));
    }
}

TEST_CASE("gamma round-trips every payload up to 10 bits") {
    for (unsigned len = 1; len <= 10; ++len) {
        for (uint64_t v = 0; v < (uint64_t(1) << len); ++v) {
            BitString payload = nth_bitstring(len, v);
            BitString coded = gamma_encode(payload);
            BitReader r(coded);
            CHECK(gamma_decode(r) == payload);
            CHECK(r.remaining() == 0);
        }
    }
}

TEST_CASE("gamma codewords are prefix-free (payloads up to 9 bits)") {
    // Sorted order: a proper prefix would sit immediately before some
    // string it prefixes.
    std::vector<std::string> codes;
    for (unsigned len = 1; len <= 9; ++len)
        for (uint64_t v = 0; v < (uint64_t(1) << len); ++v)
            codes.push_back(gamma_encode(nth_bitstring(len, v)).to_string());
    std::sort(codes.begin(), codes.end());
    for (size_t i = 0; i + 1 < codes.size(); ++i) {
        CHECK(codes[i] != codes[i + 1]);
        CHECK(codes[i + 1].compare(0, codes[i].size(), codes[i]) != 0);
    }
}

TEST_CASE("concatenated gamma codewords decode in order") {
    BitReader two(bits("011 011"));
    CHECK(gamma_decode(two).to_string() == "1");
    CHECK(two.position() == 3);
    CHECK(gamma_decode(two).to_string() == "1");

    testsupport::Rng rng(0xc0de);
    for (int round = 0; round < 20; ++round) {
        size_t k = 1 + rng.below(100);
        std::vector<BitString> payloads;
        BitString stream;
        for (size_t i = 0; i < k; ++i) {
            BitString p = nth_bitstring(1 + unsigned(rng.below(12)), rng.next());
            payloads.push_back(p);
            gamma_append(stream, p);
        }
        BitReader r(stream);
        for (size_t i = 0; i < k; ++i) CHECK(gamma_decode(r) == payloads[i]);
        CHECK(r.remaining() == 0);
    }
}
