// json_util.hpp -- internal parameter (de)serialization shared by the key
// file, report and test-vector writers.  Doubles travel as 17-significant-
// digit decimal strings so they round-trip bit-exactly.
#pragma once

#include <json.hpp>

#include "caqwbh/hash.hpp"

namespace caqwbh::detail {

nlohmann::ordered_json params_to_json(const HashParams& params, bool include_alpha);

/// Inverse of params_to_json; alpha is taken from the document when present,
/// left empty otherwise.
HashParams params_from_json(const nlohmann::ordered_json& doc);

} // namespace caqwbh::detail
