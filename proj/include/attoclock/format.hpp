#pragma once

#include <charconv>
#include <string>
#include <string_view>

namespace attoclock {

// All emitted numbers carry 9 significant digits, '.' decimal separator,
// no locale involvement; identical inputs produce identical bytes.
inline std::string format_g9(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 9);
    return std::string(buffer, result.ptr);
}

// Locale-free strict parse of a full token; returns false on trailing
// garbage or empty input.
inline bool parse_double(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto result = std::from_chars(first, last, out);
    return result.ec == std::errc{} && result.ptr == last;
}

// Round a value to the 9-significant-digit wire representation. Values
// that travel through CSV/JSON compare exactly against model predictions
// passed through the same quantization.
inline double wire_round(double value) {
    double out = value;
    const std::string text = format_g9(value);
    parse_double(text, out);
    return out;
}

}  // namespace attoclock
