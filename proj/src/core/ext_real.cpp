#include "tropikit/ext_real.hpp"

#include "tropikit/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace tropikit {

ExtReal::ExtReal(double v) : v_(v) {
    if (std::isnan(v)) {
        throw DomainError("NaN is not an extended real");
    }
    if (v == 0.0) {
        v_ = 0.0;
    }
}

std::string format_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        return "0";
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), end);
}

ExtReal parse_ext(const std::string& token) {
    if (token == "inf" || token == "+inf") {
        return ExtReal::pos_inf();
    }
    if (token == "-inf") {
        return ExtReal::neg_inf();
    }
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || token.empty() || std::isnan(v)) {
        throw ParseError("not a number: '" + token + "'");
    }
    return ExtReal(v);
}

} // namespace tropikit
