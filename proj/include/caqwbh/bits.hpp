// bits.hpp -- packed bit string with MSB-first byte semantics
//
// Messages, digests, keys and PRNG output are all bit sequences.  Bytes are
// unpacked most-significant-bit first, so from_bytes/to_bytes round-trip and
// bit i lives at byte[i/8], mask 0x80 >> (i%8).  Trailing bits of the final
// byte are kept zero, which lets equality and popcount work on whole bytes.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace caqwbh {

class Bits {
public:
    Bits() = default;

    /// n zero bits.
    explicit Bits(std::size_t nbits) : bytes_((nbits + 7) / 8, 0), nbits_(nbits) {}

    /// All bits of the given bytes, MSB first.
    static Bits from_bytes(std::span<const std::uint8_t> bytes);

    /// Parse hex (case-insensitive).  nbits defaults to 4 * #digits and may
    /// name any length in (4*(digits-1), 4*digits]; spare low bits must be 0.
    static Bits from_hex(std::string_view hex);
    static Bits from_hex(std::string_view hex, std::size_t nbits);

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool bit(std::size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1; }
    void set_bit(std::size_t i, bool v);
    void flip_bit(std::size_t i) { bytes_[i >> 3] ^= static_cast<std::uint8_t>(0x80u >> (i & 7)); }

    void push_back(bool v);
    void append(const Bits& other);
    /// Append the low `width` bits of value, most significant first.
    void append_bits(std::uint64_t value, unsigned width);

    /// Bits [pos, pos+len).
    Bits slice(std::size_t pos, std::size_t len) const;

    /// Packed bytes; final partial byte (if any) is zero-padded at the low end.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    /// Lowercase hex of the packed bytes (final nibble zero-padded).
    std::string to_hex() const;

    /// Number of differing bits; sizes must match.
    std::size_t hamming_distance(const Bits& other) const;

    bool operator==(const Bits& other) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

} // namespace caqwbh
