#include "adjdyn/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "adjdyn/error.hpp"

namespace adjdyn::text {

std::string format_real(double x) {
    if (x == 0.0) return "0";  // folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view token, std::string_view what) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw Error(ErrorKind::ParseError,
                    "expected a real for " + std::string(what) + ", got '" + std::string(token) + "'");
    }
    return value;
}

long long parse_int(std::string_view token, std::string_view what) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    long long value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw Error(ErrorKind::ParseError,
                    "expected an integer for " + std::string(what) + ", got '" + std::string(token) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) noexcept {
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, std::string_view delims) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto b = s.find_first_not_of(delims, pos);
        if (b == std::string_view::npos) break;
        auto e = s.find_first_of(delims, b);
        if (e == std::string_view::npos) e = s.size();
        out.push_back(s.substr(b, e - b));
        pos = e;
    }
    return out;
}

}  // namespace adjdyn::text
