#include "caqwbh/bits.hpp"

#include <bit>
#include <cctype>

#include "caqwbh/errors.hpp"

namespace caqwbh {

Bits Bits::from_bytes(std::span<const std::uint8_t> bytes) {
    Bits b;
    b.bytes_.assign(bytes.begin(), bytes.end());
    b.nbits_ = bytes.size() * 8;
    return b;
}

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError("invalid hex digit");
}

} // namespace

Bits Bits::from_hex(std::string_view hex) {
    return from_hex(hex, hex.size() * 4);
}

Bits Bits::from_hex(std::string_view hex, std::size_t nbits) {
    if (nbits > hex.size() * 4 || (hex.size() > 0 && nbits <= (hex.size() - 1) * 4)) {
        throw FormatError("hex string length does not match bit count");
    }
    Bits b(nbits);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const int v = hex_value(hex[i]);
        if ((i & 1) == 0) {
            b.bytes_[i >> 1] = static_cast<std::uint8_t>(v << 4);
        } else {
            b.bytes_[i >> 1] |= static_cast<std::uint8_t>(v);
        }
    }
    // spare low bits beyond nbits must be zero
    if (nbits & 7) {
        const std::uint8_t mask = static_cast<std::uint8_t>(0xFFu << (8 - (nbits & 7)));
        std::uint8_t& last = b.bytes_.back();
        if (last & ~mask) throw FormatError("nonzero bits past the declared length");
        last &= mask;
    }
    return b;
}

void Bits::set_bit(std::size_t i, bool v) {
    const std::uint8_t mask = static_cast<std::uint8_t>(0x80u >> (i & 7));
    if (v) {
        bytes_[i >> 3] |= mask;
    } else {
        bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
    }
}

void Bits::push_back(bool v) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    ++nbits_;
    if (v) set_bit(nbits_ - 1, true);
}

void Bits::append(const Bits& other) {
    if ((nbits_ & 7) == 0) {
        // byte-aligned fast path: other's padding invariant carries over
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        nbits_ += other.nbits_;
        return;
    }
    for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
}

void Bits::append_bits(std::uint64_t value, unsigned width) {
    for (unsigned j = width; j-- > 0;) push_back((value >> j) & 1);
}

Bits Bits::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > nbits_) throw DomainError("slice out of range");
    Bits out(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (bit(pos + i)) out.set_bit(i, true);
    }
    return out;
}

std::string Bits::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    const std::size_t nibbles = (nbits_ + 3) / 4;
    for (std::size_t i = 0; i < nibbles; ++i) {
        const std::uint8_t byte = bytes_[i >> 1];
        out.push_back(digits[(i & 1) ? (byte & 0xF) : (byte >> 4)]);
    }
    return out;
}

std::size_t Bits::hamming_distance(const Bits& other) const {
    if (nbits_ != other.nbits_) throw SizeMismatch("bit strings differ in length");
    std::size_t count = 0;
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
        count += std::popcount(static_cast<unsigned>(bytes_[i] ^ other.bytes_[i]));
    }
    return count;
}

} // namespace caqwbh
