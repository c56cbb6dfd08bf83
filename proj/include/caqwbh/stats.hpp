// stats.hpp -- statistical evaluation harness
//
// Sensitivity (original/flip/delete/insert digests), diffusion & confusion
// indicators (B_min, B_max, B mean, changed-bit probability, standard
// deviations), per-location uniformity counts, byte-collision statistics with
// their binomial model W_T(omega), and the birthday bound.
//
// All trial randomness is counter-based: trial i draws from a generator
// derived from (seed, i), so reports are bit-identical whether trials run
// serially or across worker threads.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "caqwbh/hash.hpp"

namespace caqwbh {

/// SplitMix64-style counter-based generator.  (seed, stream) fully determines
/// the output sequence.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();
    /// Uniform value in [0, bound); unbiased via rejection.  bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);
    /// n random bits.
    Bits next_bits(std::size_t n);

private:
    std::uint64_t state_;
};

enum class Mutation { flip, erase, insert };

/// One random single-bit mutation.  flip/erase need a nonempty message
/// (EmptyMessage otherwise).  Draw order: position, then (for insert) the bit.
Bits mutate(const Bits& message, Mutation kind, TrialRng& rng);

struct SensitivityReport {
    std::size_t n_bits = 0;
    /// original, flip, erase, insert
    std::array<Digest, 4> digests;
    /// Hamming distance of digests[1..3] from digests[0]
    std::array<std::size_t, 3> changed_bits{};
};

/// Hashes the message and its three mutants; draws for the flip, erase and
/// insert mutations come from rng in that order.
SensitivityReport sensitivity_report(const HashParams& params, const Bits& message,
                                     TrialRng& rng);

struct DiffusionReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t msg_len_bits = 0;
    std::size_t n_bits = 0;
    std::vector<std::uint32_t> changed_bits;  ///< per-trial B_i
    std::uint32_t b_min = 0;
    std::uint32_t b_max = 0;
    double b_mean = 0.0;
    double p_mean_percent = 0.0;
    double delta_b = 0.0;
    double delta_p_percent = 0.0;
};

struct UniformityReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t msg_len_bits = 0;
    std::size_t n_bits = 0;
    std::vector<std::uint32_t> per_location;  ///< flip count per digest bit
    double mean_count = 0.0;
};

struct CollisionReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t msg_len_bits = 0;
    std::size_t n_bytes = 0;
    std::vector<std::uint64_t> counts;        ///< observed draws per omega, 0..n
    std::vector<double> theory;               ///< W_T(omega)
    std::vector<std::uint16_t> per_trial_omega;
};

/// Diffusion/confusion indicators over T trials: random msg_len_bits message,
/// hash, flip one random bit, hash again, B_i = Hamming distance.
DiffusionReport diffusion_confusion(const HashParams& params, std::size_t trials,
                                    std::size_t msg_len_bits, std::uint64_t seed,
                                    unsigned jobs = 1);

/// Same trial generation; counts per digest-bit location how many trials
/// flipped that bit.
UniformityReport uniformity(const HashParams& params, std::size_t trials,
                            std::size_t msg_len_bits, std::uint64_t seed,
                            unsigned jobs = 1);

/// Same trial generation; per trial records omega, the number of equal bytes
/// at equal positions, and attaches the theoretical draw counts.
CollisionReport collision_test(const HashParams& params, std::size_t trials,
                               std::size_t msg_len_bits, std::uint64_t seed,
                               unsigned jobs = 1);

/// Indicator computation alone, exposed for testing: the six diffusion
/// numbers as a pure function of the per-trial counts.
DiffusionReport diffusion_indicators(std::vector<std::uint32_t> changed_bits,
                                     std::size_t n_bits);

/// Number of byte positions at which the two digests hold equal bytes.
/// Lengths must match and be byte-aligned.
unsigned omega(const Digest& a, const Digest& b);

/// W_T(omega) = T * C(n, omega) * (1/256)^omega * (255/256)^(n-omega),
/// with an exactly computed binomial coefficient.
double w_theoretical(std::size_t trials, unsigned n, unsigned om);

/// 2^(n_bits/2) in binary64.  n_bits must be even, positive, and small enough
/// not to overflow (n_bits <= 2046).
double birthday_bound(unsigned n_bits);

/// Exact decimal rendering of 2^(n_bits/2).
std::string birthday_bound_exact(unsigned n_bits);

// --- acceptance bands -------------------------------------------------------
//
// Scale-aware bands around the ideal binomial behaviour (mean n/2, standard
// deviation sqrt(n)/2 for an n-bit digest).  At n = 256 and T = 10000 they
// evaluate to: b_mean in [127, 129], p_mean in [49.6, 50.4]%, delta_b in
// [7.3, 8.7], b_min >= 90, b_max <= 166, per-location counts in [4700, 5300]
// with grand mean in [4950, 5050], and the omega = 0 count within 100 of its
// model value.  Each function returns violation messages; empty means pass.

std::vector<std::string> check_diffusion_bands(const DiffusionReport& report);
std::vector<std::string> check_uniformity_bands(const UniformityReport& report);
std::vector<std::string> check_collision_bands(const CollisionReport& report);
std::vector<std::string> check_sensitivity_bands(const SensitivityReport& report);

// --- report documents -------------------------------------------------------

std::string sensitivity_report_json(const HashParams& params,
                                    const SensitivityReport& report);
std::string diffusion_report_json(const HashParams& params,
                                  const DiffusionReport& report,
                                  bool include_raw = false);
std::string uniformity_report_json(const HashParams& params,
                                   const UniformityReport& report);
std::string collision_report_json(const HashParams& params,
                                  const CollisionReport& report,
                                  bool include_raw = false);

} // namespace caqwbh
