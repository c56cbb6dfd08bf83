#include "caqwbh/walk.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace caqwbh {

Coin2 Coin2::from_theta(double theta) {
    if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
        throw DomainError("theta must lie in (0, pi/2)");
    }
    return Coin2(std::cos(theta), std::sin(theta));
}

Coin2 Coin2::from_cos_sin(double c, double s) {
    if (!(c > 0.0) || !(s > 0.0) || std::abs(c * c + s * s - 1.0) > 1e-15) {
        throw DomainError("coin entries must be positive with c^2 + s^2 = 1");
    }
    return Coin2(c, s);
}

Coin2 Coin2::hadamard() {
    const double r = std::sqrt(0.5);
    return Coin2(r, r);
}

Coin2 make_coin(double theta) { return Coin2::from_theta(theta); }

ControlBlock::ControlBlock(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (const std::uint8_t b : bits_) {
        if (b > 1) throw DomainError("control block entries must be 0 or 1");
    }
}

namespace {

std::size_t checked_dim(unsigned q) {
    if (q == 0 || q > 30) throw DomainError("q must lie in [1, 30]");
    return std::size_t{2} << q;
}

} // namespace

WalkState::WalkState(unsigned q) : q_(q), amps_(checked_dim(q)) {
    amps_[0] = Amplitude{1.0, 0.0};
}

WalkState::WalkState(unsigned q, std::span<const Amplitude> alpha)
    : q_(q), amps_(checked_dim(q)) {
    if (alpha.size() != positions()) {
        throw SizeMismatch("alpha must have one amplitude per position");
    }
    for (std::size_t x = 0; x < alpha.size(); ++x) {
        amps_[2 * x] = alpha[x];
    }
}

WalkState WalkState::from_amplitudes(unsigned q, std::vector<Amplitude> amplitudes) {
    WalkState st(q);
    if (amplitudes.size() != st.dim()) {
        throw SizeMismatch("amplitude vector must have 2N entries");
    }
    st.amps_ = std::move(amplitudes);
    return st;
}

double WalkState::norm_squared() const {
    double total = 0.0;
    for (const Amplitude& a : amps_) {
        total += a.real() * a.real() + a.imag() * a.imag();
    }
    return total;
}

void apply_coin_select(WalkState& state, std::span<const std::uint8_t> select,
                       std::span<const Coin2> coins) {
    const std::size_t n = state.positions();
    if (select.size() != n) throw SizeMismatch("control block length must equal N");
    std::vector<Amplitude>& amps = state.amps_;
    for (std::size_t x = 0; x < n; ++x) {
        const Coin2& coin = coins[select[x]];
        const double c = coin.c();
        const double s = coin.s();
        const Amplitude a0 = amps[2 * x];
        const Amplitude a1 = amps[2 * x + 1];
        amps[2 * x] = Amplitude{c * a0.real() + s * a1.real(),
                                c * a0.imag() + s * a1.imag()};
        amps[2 * x + 1] = Amplitude{s * a0.real() - c * a1.real(),
                                    s * a0.imag() - c * a1.imag()};
    }
}

void apply_coin(WalkState& state, const ControlBlock& block, const Coin2& coin0,
                const Coin2& coin1) {
    const Coin2 coins[2] = {coin0, coin1};
    apply_coin_select(state, block.bits(), coins);
}

void apply_shift(WalkState& state, unsigned i) {
    if (i < 1 || i > state.q()) throw DomainError("shift index must lie in [1, q]");
    const std::size_t flip = std::size_t{1} << (i - 1);
    const std::size_t n = state.positions();
    std::vector<Amplitude>& amps = state.amps_;
    for (std::size_t x = 0; x < n; ++x) {
        if (x & flip) continue;
        std::swap(amps[2 * x + 1], amps[2 * (x | flip) + 1]);
    }
}

void step_select(WalkState& state, std::span<const std::uint8_t> select,
                 std::span<const Coin2> coins) {
    for (unsigned i = 1; i <= state.q(); ++i) {
        apply_coin_select(state, select, coins);
        apply_shift(state, i);
    }
}

void step(WalkState& state, const ControlBlock& block, const Coin2& coin0,
          const Coin2& coin1) {
    const Coin2 coins[2] = {coin0, coin1};
    step_select(state, block.bits(), coins);
}

void evolve(WalkState& state, std::span<const ControlBlock> blocks,
            const Coin2& coin0, const Coin2& coin1) {
    for (const ControlBlock& block : blocks) {
        step(state, block, coin0, coin1);
    }
}

std::vector<double> probabilities(const WalkState& state) {
    const std::size_t n = state.positions();
    std::vector<double> p(n);
    for (std::size_t x = 0; x < n; ++x) {
        const Amplitude a0 = state.amp(x, 0);
        const Amplitude a1 = state.amp(x, 1);
        p[x] = (a0.real() * a0.real() + a0.imag() * a0.imag()) +
               (a1.real() * a1.real() + a1.imag() * a1.imag());
    }
    return p;
}

} // namespace caqwbh
