// acceptance.cpp -- end-to-end acceptance suite
//
// Runs the full-scale statistical reproductions and the structural
// correctness checks, printing one PASS/FAIL line per criterion.  Exits
// nonzero if any criterion fails.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "caqwbh/keyed.hpp"
#include "caqwbh/stats.hpp"
#include "caqwbh/vectors.hpp"
#include "oracle.hpp"

using namespace caqwbh;

namespace {

int g_failures = 0;

void report(int index, const char* label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, label,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, ...) {
    va_list args;
    va_start(args, pattern);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

WalkState random_state(unsigned q, TrialRng& rng) {
    const std::size_t dim = std::size_t{2} << q;
    std::vector<Amplitude> amps(dim);
    double norm2 = 0.0;
    for (Amplitude& a : amps) {
        a = Amplitude{static_cast<double>(rng.next()) / 1.8446744073709552e19 - 0.5,
                      static_cast<double>(rng.next()) / 1.8446744073709552e19 - 0.5};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Amplitude& a : amps) a *= inv;
    return WalkState::from_amplitudes(q, std::move(amps));
}

ControlBlock random_block(std::size_t n, TrialRng& rng) {
    std::vector<std::uint8_t> bits(n);
    for (std::uint8_t& b : bits) b = static_cast<std::uint8_t>(rng.next_below(2));
    return ControlBlock(std::move(bits));
}

// criterion 1: closed-form collision model values
void criterion_theory() {
    const double expected[5] = {8822.81, 1107.18, 67.30, 2.64, 0.08};
    bool ok = true;
    std::string detail;
    for (unsigned om = 0; om < 5; ++om) {
        const double v = w_theoretical(10000, 32, om);
        if (std::abs(v - expected[om]) >= 0.005) {
            ok = false;
            detail += fmt("W(%u)=%.4f!=%.2f ", om, v, expected[om]);
        }
    }
    if (ok) detail = "W(0..4) = 8822.81, 1107.18, 67.30, 2.64, 0.08 at 2 decimals";
    report(1, "theoretical byte-match counts (T=10000, n=32)", ok, detail);
}

// criteria 2-4: one campaign at T = 10000, shared seed
void criteria_statistics() {
    const HashParams params = HashParams::caqwbh256();
    const std::size_t trials = 10000;
    const std::size_t msg_len = 1024;
    const std::uint64_t seed = 20240601;
    const unsigned jobs = 4;

    const DiffusionReport diff = diffusion_confusion(params, trials, msg_len, seed, jobs);
    {
        const bool ok = diff.b_mean >= 127.0 && diff.b_mean <= 129.0 &&
                        diff.p_mean_percent >= 49.6 && diff.p_mean_percent <= 50.4 &&
                        diff.delta_b >= 7.3 && diff.delta_b <= 8.7 && diff.b_min >= 90 &&
                        diff.b_max <= 166;
        report(2, "diffusion statistics in their reference bands", ok,
               fmt("b_mean=%.2f p=%.2f%% delta_b=%.2f delta_p=%.2f%% min=%u max=%u",
                   diff.b_mean, diff.p_mean_percent, diff.delta_b, diff.delta_p_percent,
                   diff.b_min, diff.b_max));
    }

    const CollisionReport coll = collision_test(params, trials, msg_len, seed, jobs);
    {
        const double dev = std::abs(static_cast<double>(coll.counts[0]) - 8822.81);
        std::uint64_t tail = 0;
        for (std::size_t om = 5; om < coll.counts.size(); ++om) tail += coll.counts[om];
        const bool ok = dev <= 100.0 && tail == 0;
        report(3, "byte-collision counts near the binomial model", ok,
               fmt("observed(0)=%llu (model 8822.81, |dev|=%.2f), counts(>=5)=%llu",
                   static_cast<unsigned long long>(coll.counts[0]), dev,
                   static_cast<unsigned long long>(tail)));
    }

    const UniformityReport uni = uniformity(params, trials, msg_len, seed, jobs);
    {
        std::uint32_t lo = uni.per_location[0];
        std::uint32_t hi = uni.per_location[0];
        for (const std::uint32_t c : uni.per_location) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        const bool ok = lo >= 4700 && hi <= 5300 && uni.mean_count >= 4950.0 &&
                        uni.mean_count <= 5050.0;
        report(4, "per-location flip counts uniform across the digest", ok,
               fmt("min=%u max=%u mean=%.2f (bands [4700,5300], mean [4950,5050])", lo,
                   hi, uni.mean_count));
    }

    // sensitivity conditions: the avalanche band applied to flip/delete/insert
    {
        const std::size_t t_sens = 4000;
        std::uint64_t sums[3] = {0, 0, 0};
        for (std::size_t i = 0; i < t_sens; ++i) {
            TrialRng rng(seed ^ 0x5e5e5e5eull, i);
            const Bits message = rng.next_bits(msg_len);
            const SensitivityReport r = sensitivity_report(params, message, rng);
            for (int c = 0; c < 3; ++c) sums[c] += r.changed_bits[c];
        }
        const double mean_flip = static_cast<double>(sums[0]) / t_sens;
        const double mean_del = static_cast<double>(sums[1]) / t_sens;
        const double mean_ins = static_cast<double>(sums[2]) / t_sens;
        const bool ok = mean_flip >= 127.0 && mean_flip <= 129.0 && mean_del >= 127.0 &&
                        mean_del <= 129.0 && mean_ins >= 127.0 && mean_ins <= 129.0;
        report(2, "single-bit flip/delete/insert all avalanche (sensitivity conditions)",
               ok,
               fmt("mean changed bits: flip=%.2f delete=%.2f insert=%.2f", mean_flip,
                   mean_del, mean_ins));
    }
}

// criterion 5: dense-matrix oracle equivalence
void criterion_oracle() {
    const Coin2 coin1 = Coin2::from_cos_sin(0.6, 0.8);
    const Coin2 coin2 = Coin2::from_cos_sin(8.0 / 17.0, 15.0 / 17.0);
    TrialRng rng(51);
    double worst = 0.0;
    for (unsigned q = 1; q <= 4; ++q) {
        const std::size_t n = std::size_t{1} << q;
        for (int trial = 0; trial < 100; ++trial) {
            WalkState st = random_state(q, rng);
            const std::vector<Amplitude> input(st.amplitudes().begin(),
                                               st.amplitudes().end());
            const ControlBlock block = random_block(n, rng);
            step(st, block, coin1, coin2);
            const oracle::Mat u = oracle::step_matrix(q, block.bits(), coin1, coin2);
            const std::vector<Amplitude> expected = oracle::matvec(u, input);
            for (std::size_t i = 0; i < input.size(); ++i) {
                worst = std::max(worst, std::abs(st.amplitudes()[i] - expected[i]));
            }
        }
    }
    report(5, "walk step equals the dense Kronecker-product operator (q=1..4)",
           worst < 1e-12, fmt("max amplitude deviation %.3e over 400 cases", worst));
}

// criterion 6: unitarity over long evolutions
void criterion_unitarity() {
    const Coin2 coin1 = Coin2::from_cos_sin(0.6, 0.8);
    const Coin2 coin2 = Coin2::from_cos_sin(8.0 / 17.0, 15.0 / 17.0);
    TrialRng rng(61);
    WalkState st = random_state(5, rng);
    for (int t = 0; t < 1000; ++t) step(st, random_block(32, rng), coin1, coin2);
    const double norm_dev = std::abs(st.norm_squared() - 1.0);
    double prob_sum = 0.0;
    for (const double p : probabilities(st)) prob_sum += p;
    const double sum_dev = std::abs(prob_sum - 1.0);
    report(6, "1000-step evolutions preserve the norm", norm_dev < 1e-10 && sum_dev < 1e-10,
           fmt("|norm-1|=%.3e, |sum(p)-1|=%.3e", norm_dev, sum_dev));
}

// criterion 7: golden-vector determinism
void criterion_vectors() {
    const HashParams params = HashParams::caqwbh256();
    const std::vector<TestVector> run1 = generate_vectors(params);
    const std::vector<TestVector> run2 = generate_vectors(params);
    bool ok = run1.size() >= 20 && run2.size() == run1.size();
    std::string detail = fmt("%zu vectors", run1.size());
    for (std::size_t i = 0; ok && i < run1.size(); ++i) {
        if (run1[i].digest != run2[i].digest || run1[i].message != run2[i].message) {
            ok = false;
            detail = fmt("in-process regeneration differs at vector %zu", i);
        }
    }

    // cross-run check against the committed vector file
    const std::filesystem::path path =
        std::filesystem::path(CAQWBH_DATA_DIR) / "caqwbh256_vectors.json";
    if (ok) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            ok = false;
            detail = "committed vector file missing: " + path.string();
        } else {
            std::ostringstream buf;
            buf << in.rdbuf();
            const std::string committed = buf.str();
            std::string mismatch_log;
            const std::vector<std::size_t> bad =
                verify_vectors_json(committed, &mismatch_log);
            if (!bad.empty()) {
                ok = false;
                detail = fmt("%zu committed vectors mismatch", bad.size());
            } else if (committed != vectors_to_json(params, run1)) {
                ok = false;
                detail = "regenerated vector document differs from the committed one";
            } else {
                detail += ", committed file verified bit-exactly";
            }
        }
    }
    report(7, "golden vectors verify across independent runs", ok, detail);
}

// criterion 8: MAC reduction and streaming equivalence
void criterion_reductions() {
    const HashParams params = HashParams::caqwbh256();
    MacKey key;
    key.key1.assign(32, Amplitude{});
    key.key1[0] = Amplitude{1.0, 0.0};
    key.key2 = Bits(32);

    bool ok = true;
    std::string detail;
    TrialRng rng(81);
    for (int trial = 0; ok && trial < 100; ++trial) {
        const Bits message = rng.next_bits(rng.next_below(700));
        if (mac(params, key, message) != hash(params, message)) {
            ok = false;
            detail = fmt("mac/hash reduction differs on trial %d", trial);
        }
    }
    for (int trial = 0; ok && trial < 50; ++trial) {
        const std::size_t len = 1 + rng.next_below(400);
        const Bits message = rng.next_bits(len);
        const Digest whole = hash(params, message);
        HashContext ctx(params);
        std::size_t pos = 0;
        while (pos < len) {
            const std::size_t chunk = 1 + rng.next_below(len - pos);
            ctx.absorb(message.slice(pos, chunk));
            pos += chunk;
        }
        if (ctx.finalize() != whole) {
            ok = false;
            detail = fmt("streaming partition differs on trial %d", trial);
        }
    }
    if (ok) detail = "100 mac/hash reductions, 50 random absorb partitions";
    report(8, "trivial-key MAC equals the hash; streaming partitions agree", ok, detail);
}

// criterion 9: birthday bound rendering
void criterion_birthday() {
    const double v = birthday_bound(256);
    const std::string exact = birthday_bound_exact(256);
    const double approx_ref = 3.4028e38;
    const bool ok = v == std::ldexp(1.0, 128) &&
                    std::abs(v - approx_ref) / approx_ref < 1e-4 &&
                    exact == "340282366920938463463374607431768211456";
    report(9, "256-bit birthday bound is 2^128 ~= 3.4028e38", ok,
           fmt("value %.5g, exact %s", v, exact.c_str()));
}

} // namespace

int main() {
    criterion_theory();
    criteria_statistics();
    criterion_oracle();
    criterion_unitarity();
    criterion_vectors();
    criterion_reductions();
    criterion_birthday();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
