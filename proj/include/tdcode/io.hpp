#pragma once

// Weight ingestion: whitespace/newline separated integers, or a JSON array.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tdcode {

// Throws InvalidInput on anything that is not a non-negative 64-bit integer.
std::vector<std::int64_t> parse_weights(std::string_view text);

std::vector<std::int64_t> read_weights_file(const std::string& path);

}  // namespace tdcode
