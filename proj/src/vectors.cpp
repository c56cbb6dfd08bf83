#include "caqwbh/vectors.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "caqwbh/stats.hpp"
#include "json_util.hpp"

namespace caqwbh {

namespace {

constexpr std::uint64_t kCorpusSeed = 0x63617177u;  // fixed corpus stream seed

Bits repeated(std::size_t nbits, bool value) {
    Bits b(nbits);
    if (value) {
        for (std::size_t i = 0; i < nbits; ++i) b.set_bit(i, true);
    }
    return b;
}

} // namespace

std::vector<Bits> vector_corpus(std::size_t block_bits) {
    const std::size_t n = block_bits;
    std::vector<Bits> corpus;
    // fixed patterns
    corpus.push_back(Bits{});               // empty message
    corpus.push_back(repeated(1, false));   // "0"
    corpus.push_back(repeated(1, true));    // "1"
    corpus.push_back(repeated(8, false));   // 0x00
    corpus.push_back(repeated(8, true));    // 0xff
    corpus.push_back(repeated(n, false));   // one all-zero block
    corpus.push_back(repeated(n, true));    // one all-one block
    // counter-seeded random messages over sub-block, aligned and padded sizes
    const std::size_t lengths[] = {2,       n / 2,   n - 1,   n + 1,    2 * n,
                                   2 * n + 1, 3 * n - 1, 4 * n, 8 * n, 8 * n + 7,
                                   16 * n,  32 * n,  32 * n + 1};
    std::uint64_t stream = 0;
    for (const std::size_t len : lengths) {
        TrialRng rng(kCorpusSeed, stream++);
        corpus.push_back(rng.next_bits(len));
    }
    return corpus;
}

std::vector<TestVector> generate_vectors(const HashParams& params) {
    validate_params(params);
    std::vector<TestVector> vectors;
    for (Bits& message : vector_corpus(params.block_bits())) {
        TestVector v;
        v.digest = hash(params, message);
        v.message = std::move(message);
        vectors.push_back(std::move(v));
    }
    return vectors;
}

namespace {

using json = nlohmann::ordered_json;

} // namespace

std::string vectors_to_json(const HashParams& params,
                            const std::vector<TestVector>& vectors) {
    json doc;
    doc["format"] = "caqwbh-vectors-v1";
    doc["params"] = detail::params_to_json(params, /*include_alpha=*/true);
    json entries = json::array();
    for (const TestVector& v : vectors) {
        json e;
        e["bit_len"] = v.message.size();
        e["message"] = v.message.to_hex();
        e["digest"] = v.digest.to_hex();
        entries.push_back(std::move(e));
    }
    doc["vectors"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::vector<std::size_t> verify_vectors_json(const std::string& text,
                                             std::string* details) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad vector file: ") + e.what());
    }
    std::vector<std::size_t> mismatches;
    std::ostringstream log;
    try {
        if (doc.at("format") != "caqwbh-vectors-v1") {
            throw FormatError("unsupported vector file format");
        }
        HashParams params = detail::params_from_json(doc.at("params"));
        validate_params(params);
        std::size_t index = 0;
        for (const auto& e : doc.at("vectors")) {
            const Bits message = Bits::from_hex(e.at("message").get<std::string>(),
                                                e.at("bit_len").get<std::size_t>());
            const Digest expected = Digest::from_hex(e.at("digest").get<std::string>());
            const Digest actual = hash(params, message);
            if (actual != expected) {
                mismatches.push_back(index);
                log << "vector " << index << " (" << message.size()
                    << " bits): expected " << expected.to_hex() << ", got "
                    << actual.to_hex() << "\n";
            }
            ++index;
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad vector file: ") + e.what());
    }
    if (details) *details = log.str();
    return mismatches;
}

void save_vectors_file(const std::string& path, const HashParams& params) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open vector file for writing: " + path);
    out << vectors_to_json(params, generate_vectors(params));
    if (!out.flush()) throw IoError("failed to write vector file: " + path);
}

std::vector<std::size_t> verify_vectors_file(const std::string& path,
                                             std::string* details) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vector file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return verify_vectors_json(buf.str(), details);
}

} // namespace caqwbh
