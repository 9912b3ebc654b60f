#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alphc {

/// Growable sequence of bits. Bits are stored MSB-first inside each byte;
/// unused bits of the final byte are kept zero, so equal bit content means
/// equal backing bytes.
class BitString {
public:
    BitString() = default;

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool bit(size_t i) const; // unchecked beyond debug assert

    void push_back(bool b);
    void append(const BitString& other);

    /// Append the low `count` bits of `value`, most significant first.
    /// `count` may be 0 (no-op); count <= 64.
    void append_bits(uint64_t value, unsigned count);

    /// Backing bytes, final byte zero-padded.
    const std::vector<uint8_t>& bytes() const { return bytes_; }

    void clear();
    void reserve_bits(size_t n) { bytes_.reserve((n + 7) / 8); }

    std::string to_string() const;
    /// Parse from "0"/"1" characters; spaces are ignored so wire layouts
    /// can be written readably in tests.
    static BitString from_string(std::string_view s);

    friend bool operator==(const BitString& a, const BitString& b) {
        return a.nbits_ == b.nbits_ && a.bytes_ == b.bytes_;
    }

private:
    std::vector<uint8_t> bytes_;
    size_t nbits_ = 0;
};

/// Cursor over a bit sequence. Reads advance monotonically; reading past
/// the end throws TruncationError. Non-owning.
class BitReader {
public:
    explicit BitReader(const BitString& bits)
        : data_(bits.bytes().data()), nbits_(bits.size()) {}
    explicit BitReader(BitString&&) = delete; // the reader does not own its bits

    /// View over raw bytes holding `nbits` significant bits (MSB-first).
    BitReader(std::span<const uint8_t> bytes, size_t nbits);

    bool read_bit();
    /// Read `count` (<= 64) bits MSB-first into the low bits of the result.
    uint64_t read_bits(unsigned count);
    /// Look at the next bit without consuming it.
    bool peek_bit() const;

    size_t position() const { return pos_; }
    size_t remaining() const { return nbits_ - pos_; }

private:
    const uint8_t* data_;
    size_t nbits_;
    size_t pos_ = 0;
};

} // namespace alphc
