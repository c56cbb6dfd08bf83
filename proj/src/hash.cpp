#include "caqwbh/hash.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace caqwbh {

namespace {

std::vector<Amplitude> basis_alpha(std::size_t n) {
    std::vector<Amplitude> alpha(n);
    alpha[0] = Amplitude{1.0, 0.0};
    return alpha;
}

// Exact powers of ten; every entry is representable in binary64.
constexpr std::array<double, 20> kPow10 = {
    1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,  1e8,  1e9,
    1e10, 1e11, 1e12, 1e13, 1e14, 1e15, 1e16, 1e17, 1e18, 1e19,
};

} // namespace

HashParams HashParams::caqwbh256() {
    HashParams p;
    p.q = 5;
    p.k = 8;
    p.theta1 = std::acos(3.0 / 5.0);
    p.theta2 = std::acos(8.0 / 17.0);
    p.coin1 = Coin2::from_cos_sin(3.0 / 5.0, 4.0 / 5.0);
    p.coin2 = Coin2::from_cos_sin(8.0 / 17.0, 15.0 / 17.0);
    p.alpha = basis_alpha(p.block_bits());
    return p;
}

HashParams HashParams::caqwbh512() {
    HashParams p = caqwbh256();
    p.q = 6;
    p.alpha = basis_alpha(p.block_bits());
    return p;
}

HashParams HashParams::custom(unsigned q, unsigned k, double theta1, double theta2,
                              std::vector<Amplitude> alpha) {
    HashParams p;
    p.q = q;
    p.k = k;
    p.theta1 = theta1;
    p.theta2 = theta2;
    for (const double theta : {theta1, theta2}) {
        if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
            throw InvalidTheta("theta must lie in (0, pi/2)");
        }
    }
    p.coin1 = make_coin(theta1);
    p.coin2 = make_coin(theta2);
    if (q >= 1 && q <= 30) {
        p.alpha = alpha.empty() ? basis_alpha(p.block_bits()) : std::move(alpha);
    } else {
        p.alpha = std::move(alpha);
    }
    return p;
}

const HashParams& validate_params(const HashParams& params) {
    if (params.q < 1 || params.q > 30) {
        throw InvalidSize("q must lie in [1, 30]");
    }
    if (params.k < 1 || params.k > 19) {
        throw InvalidSize("k must lie in [1, 19]");
    }
    if (params.digest_bits() % 8 != 0) {
        throw InvalidSize("digest length N*k must be a multiple of 8");
    }
    const double quarter_pi = std::numbers::pi / 4;
    for (const double theta : {params.theta1, params.theta2}) {
        if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
            throw InvalidTheta("theta must lie in (0, pi/2)");
        }
        if (theta == quarter_pi) {
            throw InvalidTheta("theta = pi/4 is reserved for the padding coin");
        }
    }
    if (params.theta1 == params.theta2 || params.coin1 == params.coin2) {
        throw InvalidTheta("theta1 and theta2 must differ");
    }
    // a coin with c == s is the padding coin regardless of how it was built
    if (params.coin1.c() == params.coin1.s() || params.coin2.c() == params.coin2.s()) {
        throw InvalidTheta("theta = pi/4 is reserved for the padding coin");
    }
    if (params.alpha.size() != params.block_bits()) {
        throw InvalidAlpha("alpha must have one amplitude per position");
    }
    double norm2 = 0.0;
    for (const Amplitude& a : params.alpha) {
        norm2 += a.real() * a.real() + a.imag() * a.imag();
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw InvalidAlpha("alpha amplitudes must have unit norm");
    }
    return params;
}

namespace {

HashParams validated(HashParams params) {
    validate_params(params);
    return params;
}

} // namespace

HashContext::HashContext(HashParams params)
    : params_(validated(std::move(params))), state_(params_.q, params_.alpha) {
    pending_.reserve(params_.block_bits());
    // init step: one walk step under the all-zero block, i.e. coin1 everywhere
    const std::vector<std::uint8_t> zeros(params_.block_bits(), 0);
    const Coin2 coins[2] = {params_.coin1, params_.coin2};
    step_select(state_, zeros, coins);
    ++steps_;
    for (const double p : probabilities(state_)) {
        if (!(p >= 1e-300)) {
            throw DegenerateInit("a position has zero probability after the init step");
        }
    }
}

HashContext::HashContext(keyed_tag, HashParams params, WalkState state)
    : params_(validated(std::move(params))), state_(std::move(state)) {
    if (state_.q() != params_.q) throw SizeMismatch("state size does not match params");
    pending_.reserve(params_.block_bits());
}

void HashContext::absorb_bit(bool bit) {
    pending_.push_back(bit ? 1 : 0);
    if (pending_.size() == params_.block_bits()) {
        const Coin2 coins[2] = {params_.coin1, params_.coin2};
        step_select(state_, pending_, coins);
        ++steps_;
        pending_.clear();
    }
}

void HashContext::absorb(const Bits& message) {
    if (finalized_) throw std::logic_error("HashContext reused after finalize");
    for (std::size_t i = 0; i < message.size(); ++i) absorb_bit(message.bit(i));
}

void HashContext::absorb_bytes(std::span<const std::uint8_t> data) {
    if (finalized_) throw std::logic_error("HashContext reused after finalize");
    for (const std::uint8_t byte : data) {
        for (int j = 7; j >= 0; --j) absorb_bit((byte >> j) & 1);
    }
}

void HashContext::flush_padded() {
    if (pending_.empty()) return;
    // positions holding message bits keep their selected coin; the rest of
    // the block uses the Hadamard padding coin
    std::vector<std::uint8_t> select(params_.block_bits(), 2);
    for (std::size_t j = 0; j < pending_.size(); ++j) select[j] = pending_[j];
    const Coin2 coins[3] = {params_.coin1, params_.coin2, Coin2::hadamard()};
    step_select(state_, select, coins);
    ++steps_;
    pending_.clear();
}

Digest HashContext::finalize() {
    if (finalized_) throw std::logic_error("HashContext reused after finalize");
    flush_padded();
    finalized_ = true;
    return postprocess(probabilities(state_), params_.k);
}

Digest postprocess(std::span<const double> p, unsigned k) {
    if (k < 1 || k > 19) throw InvalidSize("k must lie in [1, 19]");
    const double scale = kPow10[k];
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    Digest digest;
    for (const double px : p) {
        const std::uint64_t v = static_cast<std::uint64_t>(std::floor(px * scale));
        digest.append_bits(v & mask, k);
    }
    return digest;
}

Digest hash(const HashParams& params, const Bits& message) {
    HashContext ctx(params);
    ctx.absorb(message);
    return ctx.finalize();
}

Digest hash_bytes(const HashParams& params, std::span<const std::uint8_t> data) {
    HashContext ctx(params);
    ctx.absorb_bytes(data);
    return ctx.finalize();
}

} // namespace caqwbh
