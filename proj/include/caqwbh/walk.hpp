// walk.hpp -- controlled alternate quantum walk on the complete graph G_N
//
// The walker lives in the product space H_p (N = 2^q positions) x H_c (2 coin
// values).  State layout is position-major: amplitude (x, c) sits at index
// 2*x + c.  One walk step is q alternations of a per-position coin operator
// and a single-bit shift, U = S_q C ... S_2 C S_1 C, where every coin
// application within the step is selected by the same N-bit control block.
//
// Arithmetic is normative: IEEE-754 binary64, ascending-index loops, each
// output component formed as two multiplies followed by one add/subtract.
// The build disables FP contraction so results are bit-stable.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "caqwbh/errors.hpp"

namespace caqwbh {

using Amplitude = std::complex<double>;

/// 2x2 reflection coin [[c, s], [s, -c]] with c = cos(theta), s = sin(theta).
class Coin2 {
public:
    /// Coin from an angle in (0, pi/2); c and s come from libm cos/sin.
    static Coin2 from_theta(double theta);

    /// Coin from explicit entries; must satisfy c,s > 0 and c^2 + s^2 = 1
    /// within 1e-15.  Lets the named instances use exact rational entries
    /// (e.g. c = 3/5, s = 4/5) independent of libm rounding.
    static Coin2 from_cos_sin(double c, double s);

    /// Padding coin, c = s = sqrt(1/2).
    static Coin2 hadamard();

    double c() const { return c_; }
    double s() const { return s_; }

    bool operator==(const Coin2&) const = default;

private:
    Coin2(double c, double s) : c_(c), s_(s) {}
    double c_;
    double s_;
};

/// Coin from an angle; DomainError outside (0, pi/2).
Coin2 make_coin(double theta);

/// N control bits; bit j selects the coin applied at position x = j.
class ControlBlock {
public:
    ControlBlock() = default;
    /// Entries must be 0 or 1.
    explicit ControlBlock(std::vector<std::uint8_t> bits);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t x) const { return bits_[x]; }
    std::span<const std::uint8_t> bits() const { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// The 2N-amplitude state vector of the walker.
class WalkState {
public:
    /// Basis state |0>_p |0>_c on N = 2^q positions.
    explicit WalkState(unsigned q);

    /// (sum_i alpha_i |i>_p) (x) |0>_c.  alpha must have exactly N entries;
    /// normalization is the caller's contract and is not checked here.
    WalkState(unsigned q, std::span<const Amplitude> alpha);

    /// State from a full 2N-amplitude vector in position-major layout.
    static WalkState from_amplitudes(unsigned q, std::vector<Amplitude> amplitudes);

    unsigned q() const { return q_; }
    std::size_t positions() const { return std::size_t{1} << q_; }
    std::size_t dim() const { return amps_.size(); }

    Amplitude amp(std::size_t x, unsigned coin) const { return amps_[2 * x + coin]; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    /// sum |amp|^2 accumulated in ascending index order.
    double norm_squared() const;

    bool operator==(const WalkState&) const = default;

private:
    unsigned q_;
    std::vector<Amplitude> amps_;

    friend void apply_coin_select(WalkState&, std::span<const std::uint8_t>,
                                  std::span<const Coin2>);
    friend void apply_shift(WalkState&, unsigned);
};

/// Per-position coin application: position x gets coins[select[x]].
/// select must have N entries, each < coins.size().
void apply_coin_select(WalkState& state, std::span<const std::uint8_t> select,
                       std::span<const Coin2> coins);

/// Coin operator C: position x gets coin0 if block[x] == 0, else coin1.
void apply_coin(WalkState& state, const ControlBlock& block, const Coin2& coin0,
                const Coin2& coin1);

/// Shift operator S_i, i in [1, q]: flips bit i of the position register on
/// the coin-1 subspace.  A pure permutation (exact in floating point).
void apply_shift(WalkState& state, unsigned i);

/// One step U = S_q C ... S_1 C with per-position coin selection.
void step_select(WalkState& state, std::span<const std::uint8_t> select,
                 std::span<const Coin2> coins);

/// One step controlled by an N-bit block choosing between two coins.
void step(WalkState& state, const ControlBlock& block, const Coin2& coin0,
          const Coin2& coin1);

/// Folds step over the blocks in order (blocks[0] is applied first).
void evolve(WalkState& state, std::span<const ControlBlock> blocks,
            const Coin2& coin0, const Coin2& coin1);

/// Measurement distribution: p(x) = |amp(x,0)|^2 + |amp(x,1)|^2.
std::vector<double> probabilities(const WalkState& state);

} // namespace caqwbh
