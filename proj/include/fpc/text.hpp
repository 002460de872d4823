#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fpc::text {

std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split_ws(std::string_view line);

/// Decimal unsigned integer; throws ErrorCode::parse with `what` in the message.
std::uint64_t parse_uint(std::string_view token, std::string_view what);

/// Parses `key=<uint>`.
std::uint64_t parse_field(std::string_view token, std::string_view key);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace fpc::text
