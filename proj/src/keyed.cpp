#include "caqwbh/keyed.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "json_util.hpp"

namespace caqwbh {

void validate_key(const HashParams& params, const MacKey& key) {
    if (key.key1.size() != params.block_bits()) {
        throw InvalidKey("key1 must have one amplitude per position");
    }
    double norm2 = 0.0;
    for (const Amplitude& a : key.key1) {
        norm2 += a.real() * a.real() + a.imag() * a.imag();
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw InvalidKey("key1 amplitudes must have unit norm");
    }
    if (key.key2.size() < params.block_bits()) {
        throw InvalidKey("key2 must be at least N bits long");
    }
}

Digest mac(const HashParams& params, const MacKey& key, const Bits& message) {
    validate_key(params, key);
    WalkState state(params.q, key.key1);
    HashContext ctx(HashContext::keyed_tag{}, params, std::move(state));
    // init evolution: ceil(|key2| / N) steps controlled by key2, the final
    // partial block padded with the Hadamard coin
    ctx.absorb(key.key2);
    ctx.flush_padded();
    ctx.absorb(message);
    return ctx.finalize();
}

namespace {

std::vector<Amplitude> seed_alpha(const HashParams& params,
                                  std::span<const Amplitude> alpha) {
    validate_params(params);
    std::vector<Amplitude> amps(alpha.begin(), alpha.end());
    if (amps.empty()) {
        amps.assign(params.block_bits(), Amplitude{});
        amps[0] = Amplitude{1.0, 0.0};
    }
    if (amps.size() != params.block_bits()) {
        throw InvalidAlpha("alpha must have one amplitude per position");
    }
    double norm2 = 0.0;
    for (const Amplitude& a : amps) {
        norm2 += a.real() * a.real() + a.imag() * a.imag();
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw InvalidAlpha("alpha amplitudes must have unit norm");
    }
    return amps;
}

} // namespace

Prng::Prng(HashParams params, std::span<const Amplitude> alpha, ControlBlock init_block)
    : params_(std::move(params)), state_(params_.q, seed_alpha(params_, alpha)) {
    if (init_block.size() != params_.block_bits()) {
        throw SizeMismatch("init block length must equal N");
    }
    next_select_.assign(init_block.bits().begin(), init_block.bits().end());
}

Bits Prng::next_block() {
    const Coin2 coins[2] = {params_.coin1, params_.coin2};
    step_select(state_, next_select_, coins);
    const Bits out = postprocess(probabilities(state_), params_.k);
    // chain: the last N output bits control the next step
    const std::size_t n = params_.block_bits();
    const std::size_t offset = out.size() - n;
    for (std::size_t j = 0; j < n; ++j) {
        next_select_[j] = out.bit(offset + j) ? 1 : 0;
    }
    return out;
}

Bits Prng::fill(std::size_t nbits) {
    Bits out;
    while (out.size() < nbits) {
        out.append(next_block());
    }
    return nbits == out.size() ? out : out.slice(0, nbits);
}

// --- key file format --------------------------------------------------------

std::string double_to_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double decimal_to_double(const std::string& text) {
    if (text.empty()) throw FormatError("empty decimal value");
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw FormatError("malformed decimal value: " + text);
    }
    return v;
}

using json = nlohmann::ordered_json;

std::string key_to_json(const HashParams& params, const MacKey& key) {
    json doc;
    doc["format"] = "caqwbh-key-v1";
    doc["params"] = detail::params_to_json(params, /*include_alpha=*/false);
    json key1 = json::array();
    for (const Amplitude& a : key.key1) {
        key1.push_back({double_to_decimal(a.real()), double_to_decimal(a.imag())});
    }
    doc["key1"] = std::move(key1);
    doc["key2"] = {{"hex", key.key2.to_hex()}, {"bits", key.key2.size()}};
    return doc.dump(2) + "\n";
}

void key_from_json(const std::string& text, HashParams& params, MacKey& key) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad key file: ") + e.what());
    }
    try {
        if (doc.at("format") != "caqwbh-key-v1") {
            throw FormatError("unsupported key file format");
        }
        std::vector<Amplitude> key1;
        for (const auto& pair : doc.at("key1")) {
            key1.emplace_back(decimal_to_double(pair.at(0).get<std::string>()),
                              decimal_to_double(pair.at(1).get<std::string>()));
        }
        const auto& k2 = doc.at("key2");
        key.key2 = Bits::from_hex(k2.at("hex").get<std::string>(),
                                  k2.at("bits").get<std::size_t>());
        key.key1 = std::move(key1);
        params = detail::params_from_json(doc.at("params"));
        // key1 doubles as the initial-state alpha
        params.alpha = key.key1;
        validate_params(params);
        validate_key(params, key);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad key file: ") + e.what());
    }
}

void save_key_file(const std::string& path, const HashParams& params, const MacKey& key) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open key file for writing: " + path);
    out << key_to_json(params, key);
    if (!out.flush()) throw IoError("failed to write key file: " + path);
}

void load_key_file(const std::string& path, HashParams& params, MacKey& key) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open key file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    key_from_json(buf.str(), params, key);
}

} // namespace caqwbh
