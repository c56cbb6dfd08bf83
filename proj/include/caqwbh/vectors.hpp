// vectors.hpp -- golden test vectors
//
// A fixed, deterministic message corpus (empty, single-bit, sub-block,
// block-aligned and padded lengths) hashed under a given instance.  Vector
// files pin the full parameter set alongside each message and digest so a
// verify run on any build or platform is a bit-exact determinism check.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caqwbh/hash.hpp"

namespace caqwbh {

struct TestVector {
    Bits message;
    Digest digest;
};

/// The corpus messages for a block width of N bits: fixed patterns plus
/// counter-seeded random fills, covering lengths 0, 1, sub-block, aligned
/// multiples of N and off-by-one padded sizes.  At least 20 entries.
std::vector<Bits> vector_corpus(std::size_t block_bits);

/// Hashes the corpus.
std::vector<TestVector> generate_vectors(const HashParams& params);

std::string vectors_to_json(const HashParams& params,
                            const std::vector<TestVector>& vectors);

/// Recomputes every digest in the document; returns the indices of
/// mismatching entries (empty means all verified).
std::vector<std::size_t> verify_vectors_json(const std::string& text,
                                             std::string* details = nullptr);

void save_vectors_file(const std::string& path, const HashParams& params);
std::vector<std::size_t> verify_vectors_file(const std::string& path,
                                             std::string* details = nullptr);

} // namespace caqwbh
