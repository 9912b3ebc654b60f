#include "alphc/bits.hpp"

#include <cassert>

#include "alphc/error.hpp"

namespace alphc {

bool BitString::bit(size_t i) const {
    assert(i < nbits_);
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
}

void BitString::push_back(bool b) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    if (b) bytes_.back() |= uint8_t(1u << (7 - (nbits_ & 7)));
    ++nbits_;
}

void BitString::append(const BitString& other) {
    if ((nbits_ & 7) == 0) {
        // Byte-aligned fast path: other's padding is already zero.
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        nbits_ += other.nbits_;
        return;
    }
    for (size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
}

void BitString::append_bits(uint64_t value, unsigned count) {
    assert(count <= 64);
    for (unsigned i = count; i-- > 0;) push_back((value >> i) & 1u);
}

void BitString::clear() {
    bytes_.clear();
    nbits_ = 0;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(nbits_);
    for (size_t i = 0; i < nbits_; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
}

BitString BitString::from_string(std::string_view s) {
    BitString out;
    for (char c : s) {
        if (c == '0') {
            out.push_back(false);
        } else if (c == '1') {
            out.push_back(true);
        } else if (c == ' ') {
            continue;
        } else {
            throw Error("BitString::from_string: unexpected character");
        }
    }
    return out;
}

BitReader::BitReader(std::span<const uint8_t> bytes, size_t nbits)
    : data_(bytes.data()), nbits_(nbits) {
    if (nbits > bytes.size() * 8) throw Error("BitReader: bit count exceeds buffer");
}

bool BitReader::read_bit() {
    if (pos_ >= nbits_) throw TruncationError("bitstream exhausted");
    bool b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
    ++pos_;
    return b;
}

bool BitReader::peek_bit() const {
    if (pos_ >= nbits_) throw TruncationError("bitstream exhausted");
    return (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
}

uint64_t BitReader::read_bits(unsigned count) {
    assert(count <= 64);
    if (remaining() < count) throw TruncationError("bitstream exhausted");
    uint64_t v = 0;
    for (unsigned i = 0; i < count; ++i) v = (v << 1) | uint64_t(read_bit());
    return v;
}

} // namespace alphc
