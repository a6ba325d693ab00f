#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tropikit {

using Rational = boost::multiprecision::cpp_rational;

// Point with exact rational coordinates.
using RationalVector = std::vector<Rational>;

// Always `p/q`, also for integers (`3/1`).
std::string format_rational(const Rational& r);

// Accepts `p/q` or an integer literal. Throws ParseError.
Rational parse_rational(const std::string& token);

// Exact value of a finite double. Throws DomainError for infinities / NaN.
Rational exact_rational(double v);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace tropikit
