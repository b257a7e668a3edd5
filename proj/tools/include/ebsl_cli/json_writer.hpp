#pragma once

#include <string>

#include <json.hpp>

namespace ebsl::cli {

/// Pretty-prints with two-space indentation and every floating-point value at
/// 17 significant digits; non-finite values become null. Keys come out
/// sorted, so equal documents give equal bytes.
std::string dump_json(const nlohmann::json& value);

}  // namespace ebsl::cli
