// hash.hpp -- the CAQWBH block hash pipeline
//
// Pipeline: validate parameters, build the initial state, run one step under
// the all-zero block, absorb the message N bits at a time (bit j selects the
// coin at position j), pad a final partial block with the Hadamard coin, and
// post-process the measurement distribution into an N*k-bit digest via
// floor(p(x) * 10^k) mod 2^k per position, k bits MSB-first, ascending x.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "caqwbh/bits.hpp"
#include "caqwbh/walk.hpp"

namespace caqwbh {

struct MacKey;

using Digest = Bits;

/// Full configuration of a CAQWBH instance.
struct HashParams {
    unsigned q = 0;       ///< position bits; block width N = 2^q
    unsigned k = 0;       ///< digest bits extracted per position
    double theta1 = 0.0;  ///< coin angle selected by message bit 0
    double theta2 = 0.0;  ///< coin angle selected by message bit 1
    Coin2 coin1 = Coin2::hadamard();  ///< operator for theta1
    Coin2 coin2 = Coin2::hadamard();  ///< operator for theta2
    std::vector<Amplitude> alpha;     ///< initial position amplitudes

    std::size_t block_bits() const { return std::size_t{1} << q; }
    std::size_t digest_bits() const { return block_bits() * k; }

    /// CAQWBH-256: N=32, k=8, cos(theta1)=3/5, cos(theta2)=8/17, alpha=e_0.
    /// Coin entries are the exact rationals, not libm round-trips.
    static HashParams caqwbh256();
    /// CAQWBH-512: N=64, k=8, same coins and default alpha.
    static HashParams caqwbh512();
    /// Arbitrary parameters; coins are built with make_coin(theta).
    /// An empty alpha means the default e_0.
    static HashParams custom(unsigned q, unsigned k, double theta1, double theta2,
                             std::vector<Amplitude> alpha = {});
};

/// Checks every HashParams invariant; returns its argument on success.
/// Throws InvalidTheta, InvalidAlpha or InvalidSize naming the violation.
const HashParams& validate_params(const HashParams& params);

/// Streaming absorb/finalize context.
class HashContext {
public:
    /// Validates params, builds the initial state and runs the zero-block
    /// init step.  Throws DegenerateInit if any position probability of the
    /// resulting state is below 1e-300.
    explicit HashContext(HashParams params);

    const HashParams& params() const { return params_; }
    const WalkState& state() const { return state_; }
    std::size_t pending_bits() const { return pending_.size(); }
    /// Walk steps executed so far, the init step included.
    std::size_t steps_executed() const { return steps_; }

    /// Appends message bits; every full N-bit block drives one walk step.
    void absorb(const Bits& message);
    /// Bytes are unpacked MSB-first.
    void absorb_bytes(std::span<const std::uint8_t> data);

    /// Runs the Hadamard-padded final step if bits are pending, then maps the
    /// probability distribution to the digest.  The context is consumed.
    Digest finalize();

private:
    friend Digest mac(const HashParams&, const MacKey&, const Bits&);

    struct keyed_tag {};
    /// MAC path: adopts an externally prepared state, skips the zero-block
    /// init step and its degeneracy check.
    HashContext(keyed_tag, HashParams params, WalkState state);

    void absorb_bit(bool bit);
    void flush_padded();

    HashParams params_;
    WalkState state_;
    std::vector<std::uint8_t> pending_;
    std::size_t steps_ = 0;
    bool finalized_ = false;
};

/// floor(p[x] * 10^k) mod 2^k for each position, concatenated as k-bit
/// MSB-first groups.  The multiply is a single binary64 operation; exactness
/// of the floor/mod in 64-bit integers bounds k to [1, 19].
Digest postprocess(std::span<const double> p, unsigned k);

/// One-shot hash of a bit sequence.
Digest hash(const HashParams& params, const Bits& message);

/// One-shot hash of bytes (MSB-first unpacking).
Digest hash_bytes(const HashParams& params, std::span<const std::uint8_t> data);

} // namespace caqwbh
