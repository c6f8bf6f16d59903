#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace ocedforge {

/// FIPS 180-1 SHA-1. Used for minting stable resource identifiers; the
/// setting is non-adversarial, collision resistance is not relied upon.
std::array<std::uint8_t, 20> sha1(std::string_view data);

/// 40 lowercase hex characters.
std::string sha1_hex(std::string_view data);

}  // namespace ocedforge
