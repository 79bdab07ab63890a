#pragma once

#include <cstdint>
#include <string>

namespace knotforge {

/// SHA-256 of a byte string, as lowercase hex.
std::string sha256_hex(const std::string& data);

} // namespace knotforge
