#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace adjdyn::text {

/// Shortest decimal form that parses back to the same double.
std::string format_real(double x);

/// Parses a whole token as a double; throws ParseError with `what` in the message.
double parse_real(std::string_view token, std::string_view what);

long long parse_int(std::string_view token, std::string_view what);

std::string_view trim(std::string_view s) noexcept;

/// Splits on any of `delims`, dropping empty pieces.
std::vector<std::string_view> split(std::string_view s, std::string_view delims);

}  // namespace adjdyn::text
