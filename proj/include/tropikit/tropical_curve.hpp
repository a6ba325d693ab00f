#pragma once

#include "tropikit/rational.hpp"
#include "tropikit/semiring.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace tropikit {

using Point2 = std::array<Rational, 2>;

// One affine piece c + (d, x) of a max-plus polynomial in two variables.
struct TropicalTerm {
    double coeff = 0.0;
    Point2 exponent;
};

// base + t * direction for t in [t0, t1]; an empty bound means -inf / +inf.
// Directions are primitive integer vectors. Rays start at their finite end
// and run over [0, inf); full lines use the point closest to the origin.
struct CurvePiece {
    Point2 base;
    Point2 direction;
    std::optional<Rational> t0;
    std::optional<Rational> t1;

    Point2 at(const Rational& t) const;

    friend bool operator==(const CurvePiece&, const CurvePiece&) = default;
};

// Corner locus of p(x) = max_i (c_i + (d_i, x)), max-plus convention.
struct TropicalCurve {
    std::vector<CurvePiece> pieces;
    // Terms after folding equal exponents (max of their coefficients).
    std::vector<TropicalTerm> terms;
    // Set when the input repeated an exponent and terms were folded.
    bool merged_duplicate_exponents = false;
};

// Enumerates term pairs, solves each tie line exactly and clips it against
// dominance of every other term. Throws DomainError for fewer than two
// distinct exponents or non-finite coefficients.
TropicalCurve tropical_curve_2d(std::vector<TropicalTerm> terms);

// Exact values c_i + (d_i, x) of every term at x.
std::vector<Rational> term_values(const std::vector<TropicalTerm>& terms, const Point2& x);

// Euclidean distance from a point to the union of the curve's pieces.
double distance_to_curve(const TropicalCurve& curve, double x, double y);

// (h log|t|, h log|1 + t|): the Log_h image of the zero (t, -1 - t) of
// x + y + 1. Throws DomainError for t == 0 or t == -1.
std::array<double, 2> amoeba_line_point(std::complex<double> t, DeformationParam h);

// Log_h image of the line {x + y + 1 = 0} in (C*)^2: zeros (t, -1 - t) with
// t on a log-polar grid of samples x samples nodes (log|t| in [-8, 8],
// angles offset by half a step so t never equals -1), mapped to
// (h log|t|, h log|1 + t|). Points are ordered by grid index.
std::vector<std::array<double, 2>> amoeba_line_sample(DeformationParam h, std::size_t samples);

} // namespace tropikit
