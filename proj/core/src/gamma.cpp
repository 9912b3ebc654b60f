#include "alphc/gamma.hpp"

#include <bit>

#include "alphc/error.hpp"

namespace alphc {

void gamma_append(BitString& out, const BitString& payload) {
    if (payload.empty()) throw Error("gamma code is undefined for the empty string");
    uint64_t len = payload.size();
    unsigned width = std::bit_width(len);
    out.append_bits(0, width);   // zero run sized like the length field
    out.append_bits(len, width); // length field, leading bit is 1
    out.append(payload);
}

BitString gamma_encode(const BitString& payload) {
    BitString out;
    out.reserve_bits(gamma_length(payload.empty() ? 1 : payload.size()));
    gamma_append(out, payload);
    return out;
}

void gamma_append_int(BitString& out, uint64_t n) {
    if (n == 0) throw Error("gamma code is undefined for 0");
    unsigned width = std::bit_width(n);
    unsigned lenwidth = std::bit_width(uint64_t(width));
    out.append_bits(0, lenwidth);
    out.append_bits(width, lenwidth);
    out.append_bits(n, width);
}

BitString gamma_encode_int(uint64_t n) {
    BitString out;
    gamma_append_int(out, n);
    return out;
}

namespace {

// Reads the zero run plus length field, returns the payload length.
uint64_t read_payload_length(BitReader& r) {
    unsigned zeros = 0;
    while (!r.read_bit()) {
        if (++zeros > 64) throw CorruptionError("gamma: length field wider than 64 bits");
    }
    if (zeros == 0) throw CorruptionError("gamma: missing zero run (length field would be empty)");
    // The 1 that ended the run is the leading digit of the length field.
    uint64_t len = 1;
    for (unsigned i = 1; i < zeros; ++i) len = (len << 1) | uint64_t(r.read_bit());
    return len;
}

} // namespace

BitString gamma_decode(BitReader& r) {
    uint64_t len = read_payload_length(r);
    BitString payload;
    payload.reserve_bits(len);
    for (uint64_t i = 0; i < len; ++i) payload.push_back(r.read_bit());
    return payload;
}

uint64_t gamma_decode_int(BitReader& r) {
    uint64_t len = read_payload_length(r);
    if (len > 64) throw CorruptionError("gamma: integer payload wider than 64 bits");
    uint64_t v = r.read_bits(unsigned(len));
    if ((v >> (len - 1)) != 1)
        throw CorruptionError("gamma: integer payload has a leading zero");
    return v;
}

uint64_t gamma_length(uint64_t payload_len) {
    if (payload_len == 0) throw Error("gamma code is undefined for the empty string");
    return payload_len + 2 * uint64_t(std::bit_width(payload_len));
}

uint64_t gamma_int_length(uint64_t n) {
    if (n == 0) throw Error("gamma code is undefined for 0");
    return gamma_length(std::bit_width(n));
}

} // namespace alphc
