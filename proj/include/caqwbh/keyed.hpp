// keyed.hpp -- MAC and PRNG built on the CAQWBH walk
//
// MAC: the secret initial state (key1) replaces alpha, and the init evolution
// is driven by a secret bit string (key2) instead of the all-zero block.
// With key1 = e_0 and key2 = N zero bits the MAC reduces to the plain hash.
//
// PRNG: each call runs one step controlled by the previous output's last N
// bits, and the digest post-processing of the resulting distribution is the
// next N*k output bits.  The state carries forward between calls.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "caqwbh/hash.hpp"

namespace caqwbh {

struct MacKey {
    std::vector<Amplitude> key1;  ///< secret initial state, unit norm
    Bits key2;                    ///< secret init string, length >= N
};

/// Throws InvalidKey unless key1 is unit-norm with N entries and key2 has at
/// least N bits.
void validate_key(const HashParams& params, const MacKey& key);

/// N*k-bit authentication tag.
Digest mac(const HashParams& params, const MacKey& key, const Bits& message);

class Prng {
public:
    /// alpha empty means e_0.  init_block drives the first step.
    /// Throws InvalidAlpha for an unnormalized alpha.
    Prng(HashParams params, std::span<const Amplitude> alpha,
         ControlBlock init_block);

    const HashParams& params() const { return params_; }
    std::size_t bits_per_block() const { return params_.digest_bits(); }

    /// One step plus post-processing; returns N*k bits and chains the last N
    /// of them into the next control block.
    Bits next_block();

    /// Concatenates next_block outputs and truncates to nbits.
    Bits fill(std::size_t nbits);

private:
    HashParams params_;
    WalkState state_;
    std::vector<std::uint8_t> next_select_;
};

// --- key file format -------------------------------------------------------
//
// JSON document holding the instance parameters, key1 as (re, im) decimal
// string pairs with 17 significant digits (binary64 round-trip exact), and
// key2 as hex with an explicit bit length.

std::string key_to_json(const HashParams& params, const MacKey& key);
void key_from_json(const std::string& text, HashParams& params, MacKey& key);

void save_key_file(const std::string& path, const HashParams& params,
                   const MacKey& key);
void load_key_file(const std::string& path, HashParams& params, MacKey& key);

/// 17-significant-digit decimal rendering that parses back to the same double.
std::string double_to_decimal(double v);
double decimal_to_double(const std::string& text);

} // namespace caqwbh
