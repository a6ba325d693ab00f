#include "tropikit/rational.hpp"

#include "tropikit/errors.hpp"

#include <cmath>
#include <regex>

namespace tropikit {

std::string format_rational(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& token) {
    static const std::regex pattern(R"(([+-]?[0-9]+)(?:/([+-]?[0-9]+))?)");
    std::smatch m;
    if (!std::regex_match(token, m, pattern)) {
        throw ParseError("not a rational: '" + token + "'");
    }
    using boost::multiprecision::cpp_int;
    const cpp_int num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    cpp_int den(1);
    if (m[2].matched) {
        den = cpp_int(m[2].str().front() == '+' ? m[2].str().substr(1) : m[2].str());
        if (den == 0) {
            throw ParseError("zero denominator in '" + token + "'");
        }
    }
    return Rational(num, den);
}

Rational exact_rational(double v) {
    if (!std::isfinite(v)) {
        throw DomainError("cannot convert a non-finite value to a rational");
    }
    if (v == 0.0) {
        return Rational(0);
    }
    // v = mantissa * 2^(exp - 53) with an integral 53-bit mantissa.
    int exp = 0;
    const double frac = std::frexp(v, &exp);
    const auto mantissa = static_cast<long long>(std::ldexp(frac, 53));
    using boost::multiprecision::cpp_int;
    const int shift = exp - 53;
    if (shift >= 0) {
        return Rational(cpp_int(mantissa) << shift);
    }
    return Rational(cpp_int(mantissa), cpp_int(1) << -shift);
}

} // namespace tropikit
