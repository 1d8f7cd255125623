#pragma once

#include <span>
#include <vector>

#include "airstack/core/bytes.hpp"

namespace airstack::core {

Digest sha256(std::span<const std::uint8_t> data);

}  // namespace airstack::core
