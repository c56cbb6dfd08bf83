#include "caqwbh/stats.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <json.hpp>

#include "json_util.hpp"

namespace caqwbh {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + kGolden * (stream + 1))) {}

std::uint64_t TrialRng::next() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t TrialRng::next_below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

Bits TrialRng::next_bits(std::size_t n) {
    std::vector<std::uint8_t> bytes((n + 7) / 8);
    std::size_t i = 0;
    while (i < bytes.size()) {
        std::uint64_t word = next();
        for (int j = 7; j >= 0 && i < bytes.size(); --j) {
            bytes[i++] = static_cast<std::uint8_t>(word >> (8 * j));
        }
    }
    Bits all = Bits::from_bytes(bytes);
    return (n % 8 == 0) ? all : all.slice(0, n);
}

Bits mutate(const Bits& message, Mutation kind, TrialRng& rng) {
    switch (kind) {
    case Mutation::flip: {
        if (message.empty()) throw EmptyMessage("cannot flip a bit of an empty message");
        Bits out = message;
        out.flip_bit(rng.next_below(message.size()));
        return out;
    }
    case Mutation::erase: {
        if (message.empty()) throw EmptyMessage("cannot delete a bit of an empty message");
        const std::size_t pos = rng.next_below(message.size());
        Bits out;
        for (std::size_t i = 0; i < message.size(); ++i) {
            if (i != pos) out.push_back(message.bit(i));
        }
        return out;
    }
    case Mutation::insert: {
        const std::size_t pos = rng.next_below(message.size() + 1);
        const bool bit = rng.next_below(2) != 0;
        Bits out;
        for (std::size_t i = 0; i < pos; ++i) out.push_back(message.bit(i));
        out.push_back(bit);
        for (std::size_t i = pos; i < message.size(); ++i) out.push_back(message.bit(i));
        return out;
    }
    }
    throw DomainError("unknown mutation");
}

SensitivityReport sensitivity_report(const HashParams& params, const Bits& message,
                                     TrialRng& rng) {
    SensitivityReport report;
    report.n_bits = params.digest_bits();
    report.digests[0] = hash(params, message);
    report.digests[1] = hash(params, mutate(message, Mutation::flip, rng));
    report.digests[2] = hash(params, mutate(message, Mutation::erase, rng));
    report.digests[3] = hash(params, mutate(message, Mutation::insert, rng));
    for (int i = 0; i < 3; ++i) {
        report.changed_bits[i] = report.digests[0].hamming_distance(report.digests[i + 1]);
    }
    return report;
}

namespace {

// Shared trial campaign for the diffusion, uniformity and collision tests:
// trial i hashes a fresh random message and its one-bit-flip mutant, both
// drawn from TrialRng(seed, i).
struct Campaign {
    std::vector<std::uint32_t> changed_bits;   // per trial
    std::vector<std::uint16_t> omegas;         // per trial
    std::vector<std::uint32_t> per_location;   // per digest bit
};

Campaign run_campaign(const HashParams& params, std::size_t trials,
                      std::size_t msg_len_bits, std::uint64_t seed, unsigned jobs) {
    validate_params(params);
    if (trials == 0) throw DomainError("trial count must be positive");
    if (msg_len_bits == 0) throw DomainError("message length must be positive");
    const std::size_t n_bits = params.digest_bits();

    Campaign total;
    total.changed_bits.assign(trials, 0);
    total.omegas.assign(trials, 0);
    total.per_location.assign(n_bits, 0);

    const std::size_t capped = std::min<std::size_t>(jobs, trials);
    const unsigned workers = capped == 0 ? 1u : static_cast<unsigned>(capped);
    std::vector<std::vector<std::uint32_t>> location_parts(
        workers, std::vector<std::uint32_t>(n_bits, 0));

    auto run_range = [&](unsigned worker, std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t>& locations = location_parts[worker];
        for (std::size_t i = begin; i < end; ++i) {
            TrialRng rng(seed, i);
            const Bits message = rng.next_bits(msg_len_bits);
            const Digest d1 = hash(params, message);
            const Digest d2 = hash(params, mutate(message, Mutation::flip, rng));
            total.changed_bits[i] = static_cast<std::uint32_t>(d1.hamming_distance(d2));
            total.omegas[i] = static_cast<std::uint16_t>(omega(d1, d2));
            for (std::size_t bit = 0; bit < n_bits; ++bit) {
                if (d1.bit(bit) != d2.bit(bit)) ++locations[bit];
            }
        }
    };

    if (workers == 1) {
        run_range(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = trials * w / workers;
            const std::size_t end = trials * (w + 1) / workers;
            pool.emplace_back(run_range, w, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }

    for (const std::vector<std::uint32_t>& part : location_parts) {
        for (std::size_t bit = 0; bit < n_bits; ++bit) total.per_location[bit] += part[bit];
    }
    return total;
}

} // namespace

DiffusionReport diffusion_indicators(std::vector<std::uint32_t> changed_bits,
                                     std::size_t n_bits) {
    if (changed_bits.size() < 2) throw DomainError("need at least two trials");
    DiffusionReport r;
    r.trials = changed_bits.size();
    r.n_bits = n_bits;
    r.b_min = *std::min_element(changed_bits.begin(), changed_bits.end());
    r.b_max = *std::max_element(changed_bits.begin(), changed_bits.end());
    std::uint64_t sum = 0;
    for (const std::uint32_t b : changed_bits) sum += b;
    const double t = static_cast<double>(r.trials);
    const double n = static_cast<double>(n_bits);
    r.b_mean = static_cast<double>(sum) / t;
    r.p_mean_percent = r.b_mean / n * 100.0;
    double var_b = 0.0;
    double var_p = 0.0;
    const double mean_frac = r.b_mean / n;
    for (const std::uint32_t b : changed_bits) {
        const double db = static_cast<double>(b) - r.b_mean;
        var_b += db * db;
        const double dp = static_cast<double>(b) / n - mean_frac;
        var_p += dp * dp;
    }
    r.delta_b = std::sqrt(var_b / (t - 1.0));
    r.delta_p_percent = std::sqrt(var_p / (t - 1.0)) * 100.0;
    r.changed_bits = std::move(changed_bits);
    return r;
}

DiffusionReport diffusion_confusion(const HashParams& params, std::size_t trials,
                                    std::size_t msg_len_bits, std::uint64_t seed,
                                    unsigned jobs) {
    if (trials < 2) throw DomainError("diffusion test needs at least two trials");
    Campaign campaign = run_campaign(params, trials, msg_len_bits, seed, jobs);
    DiffusionReport report =
        diffusion_indicators(std::move(campaign.changed_bits), params.digest_bits());
    report.seed = seed;
    report.msg_len_bits = msg_len_bits;
    return report;
}

UniformityReport uniformity(const HashParams& params, std::size_t trials,
                            std::size_t msg_len_bits, std::uint64_t seed,
                            unsigned jobs) {
    Campaign campaign = run_campaign(params, trials, msg_len_bits, seed, jobs);
    UniformityReport report;
    report.seed = seed;
    report.trials = trials;
    report.msg_len_bits = msg_len_bits;
    report.n_bits = params.digest_bits();
    report.per_location = std::move(campaign.per_location);
    std::uint64_t sum = 0;
    for (const std::uint32_t c : report.per_location) sum += c;
    report.mean_count = static_cast<double>(sum) / static_cast<double>(report.n_bits);
    return report;
}

CollisionReport collision_test(const HashParams& params, std::size_t trials,
                               std::size_t msg_len_bits, std::uint64_t seed,
                               unsigned jobs) {
    Campaign campaign = run_campaign(params, trials, msg_len_bits, seed, jobs);
    CollisionReport report;
    report.seed = seed;
    report.trials = trials;
    report.msg_len_bits = msg_len_bits;
    report.n_bytes = params.digest_bits() / 8;
    report.counts.assign(report.n_bytes + 1, 0);
    for (const std::uint16_t om : campaign.omegas) ++report.counts[om];
    report.theory.resize(report.n_bytes + 1);
    for (unsigned om = 0; om <= report.n_bytes; ++om) {
        report.theory[om] = w_theoretical(trials, static_cast<unsigned>(report.n_bytes), om);
    }
    report.per_trial_omega = std::move(campaign.omegas);
    return report;
}

unsigned omega(const Digest& a, const Digest& b) {
    if (a.size() != b.size()) throw SizeMismatch("digest lengths differ");
    if (a.size() % 8 != 0) throw SizeMismatch("digest length must be byte-aligned");
    const std::vector<std::uint8_t>& ba = a.bytes();
    const std::vector<std::uint8_t>& bb = b.bytes();
    unsigned same = 0;
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (ba[i] == bb[i]) ++same;
    }
    return same;
}

double w_theoretical(std::size_t trials, unsigned n, unsigned om) {
    if (om > n) throw DomainError("omega must lie in [0, n]");
    // exact binomial coefficient; C(n, om) = C(n, n-om), n <= 64 in practice
    unsigned k = std::min(om, n - om);
    unsigned __int128 binom = 1;
    for (unsigned i = 0; i < k; ++i) {
        binom = binom * (n - i) / (i + 1);
    }
    const double p = 1.0 / 256.0;
    return static_cast<double>(trials) * static_cast<double>(binom) *
           std::pow(p, static_cast<double>(om)) *
           std::pow(1.0 - p, static_cast<double>(n - om));
}

double birthday_bound(unsigned n_bits) {
    if (n_bits == 0 || n_bits % 2 != 0) throw DomainError("n_bits must be positive and even");
    if (n_bits > 2046) throw DomainError("2^(n_bits/2) overflows binary64");
    return std::ldexp(1.0, static_cast<int>(n_bits / 2));
}

std::string birthday_bound_exact(unsigned n_bits) {
    if (n_bits == 0 || n_bits % 2 != 0) throw DomainError("n_bits must be positive and even");
    // 2^(n_bits/2) by repeated doubling of a decimal string
    std::vector<std::uint8_t> digits{1};  // little-endian decimal
    for (unsigned i = 0; i < n_bits / 2; ++i) {
        std::uint8_t carry = 0;
        for (std::uint8_t& d : digits) {
            const std::uint8_t v = static_cast<std::uint8_t>(d * 2 + carry);
            d = v % 10;
            carry = v / 10;
        }
        if (carry) digits.push_back(carry);
    }
    std::string out(digits.rbegin(), digits.rend());
    for (char& c : out) c = static_cast<char>('0' + c);
    return out;
}

// --- acceptance bands -------------------------------------------------------

namespace {

void band_check(std::vector<std::string>& out, bool ok, const std::string& message) {
    if (!ok) out.push_back(message);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::vector<std::string> check_diffusion_bands(const DiffusionReport& r) {
    std::vector<std::string> v;
    const double n = static_cast<double>(r.n_bits);
    const double ideal_mean = n / 2.0;
    const double ideal_sd = std::sqrt(n) / 2.0;
    const double mean_tol = n / 256.0;
    band_check(v, std::abs(r.b_mean - ideal_mean) <= mean_tol,
               "b_mean " + num(r.b_mean) + " outside [" + num(ideal_mean - mean_tol) +
                   ", " + num(ideal_mean + mean_tol) + "]");
    band_check(v, r.p_mean_percent >= 49.6 && r.p_mean_percent <= 50.4,
               "p_mean " + num(r.p_mean_percent) + "% outside [49.6, 50.4]%");
    band_check(v,
               r.delta_b >= ideal_sd * 0.9125 && r.delta_b <= ideal_sd * 1.0875,
               "delta_b " + num(r.delta_b) + " outside [" + num(ideal_sd * 0.9125) +
                   ", " + num(ideal_sd * 1.0875) + "]");
    band_check(v, static_cast<double>(r.b_min) >= ideal_mean - 4.75 * ideal_sd,
               "b_min " + num(r.b_min) + " below " + num(ideal_mean - 4.75 * ideal_sd));
    band_check(v, static_cast<double>(r.b_max) <= ideal_mean + 4.75 * ideal_sd,
               "b_max " + num(r.b_max) + " above " + num(ideal_mean + 4.75 * ideal_sd));
    return v;
}

std::vector<std::string> check_uniformity_bands(const UniformityReport& r) {
    std::vector<std::string> v;
    const double t = static_cast<double>(r.trials);
    for (std::size_t i = 0; i < r.per_location.size(); ++i) {
        const double c = r.per_location[i];
        if (c < 0.47 * t || c > 0.53 * t) {
            v.push_back("location " + std::to_string(i) + " count " + num(c) +
                        " outside [" + num(0.47 * t) + ", " + num(0.53 * t) + "]");
        }
    }
    band_check(v, r.mean_count >= 0.495 * t && r.mean_count <= 0.505 * t,
               "mean count " + num(r.mean_count) + " outside [" + num(0.495 * t) +
                   ", " + num(0.505 * t) + "]");
    return v;
}

std::vector<std::string> check_collision_bands(const CollisionReport& r) {
    std::vector<std::string> v;
    const double t = static_cast<double>(r.trials);
    const double p0 = r.theory[0] / t;
    const double sd = std::sqrt(t * p0 * (1.0 - p0));
    band_check(v,
               std::abs(static_cast<double>(r.counts[0]) - r.theory[0]) <= 3.1 * sd,
               "omega=0 count " + std::to_string(r.counts[0]) + " further than " +
                   num(3.1 * sd) + " from the model value " + num(r.theory[0]));
    for (std::size_t om = 0; om < r.counts.size(); ++om) {
        if (r.theory[om] < 0.01 && r.counts[om] != 0) {
            v.push_back("omega=" + std::to_string(om) + " observed " +
                        std::to_string(r.counts[om]) + " draws where the model expects " +
                        num(r.theory[om]));
        }
    }
    return v;
}

std::vector<std::string> check_sensitivity_bands(const SensitivityReport& r) {
    std::vector<std::string> v;
    static const char* kNames[3] = {"flip", "delete", "insert"};
    for (int i = 0; i < 3; ++i) {
        if (r.changed_bits[i] * 4 < r.n_bits) {
            v.push_back(std::string(kNames[i]) + " changed only " +
                        std::to_string(r.changed_bits[i]) + " of " +
                        std::to_string(r.n_bits) + " bits (floor is 25%)");
        }
    }
    return v;
}

// --- report documents -------------------------------------------------------

namespace {

using json = nlohmann::ordered_json;

json report_header(const char* test, const HashParams& params) {
    json doc;
    doc["format"] = "caqwbh-report-v1";
    doc["test"] = test;
    doc["params"] = detail::params_to_json(params, /*include_alpha=*/true);
    return doc;
}

} // namespace

std::string sensitivity_report_json(const HashParams& params,
                                    const SensitivityReport& report) {
    json doc = report_header("sensitivity", params);
    doc["n_bits"] = report.n_bits;
    static const char* kConditions[4] = {"original", "flip", "delete", "insert"};
    json digests;
    for (int i = 0; i < 4; ++i) digests[kConditions[i]] = report.digests[i].to_hex();
    doc["digests"] = std::move(digests);
    json changed;
    for (int i = 0; i < 3; ++i) changed[kConditions[i + 1]] = report.changed_bits[i];
    doc["changed_bits_vs_original"] = std::move(changed);
    return doc.dump(2) + "\n";
}

std::string diffusion_report_json(const HashParams& params,
                                  const DiffusionReport& report, bool include_raw) {
    json doc = report_header("diffusion", params);
    doc["seed"] = report.seed;
    doc["trials"] = report.trials;
    doc["msg_len_bits"] = report.msg_len_bits;
    doc["n_bits"] = report.n_bits;
    doc["b_min"] = report.b_min;
    doc["b_max"] = report.b_max;
    doc["b_mean"] = report.b_mean;
    doc["p_mean_percent"] = report.p_mean_percent;
    doc["delta_b"] = report.delta_b;
    doc["delta_p_percent"] = report.delta_p_percent;
    if (include_raw) doc["per_trial_changed_bits"] = report.changed_bits;
    return doc.dump(2) + "\n";
}

std::string uniformity_report_json(const HashParams& params,
                                   const UniformityReport& report) {
    json doc = report_header("uniformity", params);
    doc["seed"] = report.seed;
    doc["trials"] = report.trials;
    doc["msg_len_bits"] = report.msg_len_bits;
    doc["n_bits"] = report.n_bits;
    doc["mean_count"] = report.mean_count;
    doc["per_location"] = report.per_location;
    return doc.dump(2) + "\n";
}

std::string collision_report_json(const HashParams& params,
                                  const CollisionReport& report, bool include_raw) {
    json doc = report_header("collision", params);
    doc["seed"] = report.seed;
    doc["trials"] = report.trials;
    doc["msg_len_bits"] = report.msg_len_bits;
    doc["n_bytes"] = report.n_bytes;
    doc["observed"] = report.counts;
    doc["theory"] = report.theory;
    if (include_raw) doc["per_trial_omega"] = report.per_trial_omega;
    return doc.dump(2) + "\n";
}

} // namespace caqwbh
