#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <string>

namespace tropikit {

// An IEEE double restricted to the extended reals: +inf and -inf are
// allowed, NaN is not. Negative zero is folded into +0 so that equality can
// be bitwise.
class ExtReal {
public:
    constexpr ExtReal() noexcept = default;
    ExtReal(double v); // NOLINT(google-explicit-constructor): throws DomainError on NaN

    constexpr double value() const noexcept { return v_; }
    constexpr explicit operator double() const noexcept { return v_; }

    bool is_finite() const noexcept { return v_ - v_ == 0.0; }
    constexpr bool is_pos_inf() const noexcept { return v_ == kInf; }
    constexpr bool is_neg_inf() const noexcept { return v_ == -kInf; }

    static ExtReal pos_inf() noexcept { return ExtReal(Raw{}, kInf); }
    static ExtReal neg_inf() noexcept { return ExtReal(Raw{}, -kInf); }

    friend bool operator==(ExtReal a, ExtReal b) noexcept {
        return std::bit_cast<std::uint64_t>(a.v_) == std::bit_cast<std::uint64_t>(b.v_);
    }

private:
    static constexpr double kInf = std::numeric_limits<double>::infinity();
    struct Raw {};
    constexpr ExtReal(Raw, double v) noexcept : v_(v) {}

    double v_ = 0.0;
};

// Lossless text form: 17 significant digits, `inf` / `-inf` for infinities.
std::string format_double(double v);
inline std::string format_ext(ExtReal v) { return format_double(v.value()); }

// Accepts decimal / scientific literals and the tokens inf, +inf, -inf.
// Throws ParseError on anything else, including nan.
ExtReal parse_ext(const std::string& token);

} // namespace tropikit
