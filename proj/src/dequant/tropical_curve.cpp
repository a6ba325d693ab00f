#include "tropikit/tropical_curve.hpp"

#include "tropikit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace tropikit {
namespace {

using boost::multiprecision::cpp_int;

Rational dot(const Point2& a, const Point2& b) { return a[0] * b[0] + a[1] * b[1]; }

Point2 minus(const Point2& a, const Point2& b) { return {a[0] - b[0], a[1] - b[1]}; }

// Positive multiple of v with coprime integer coordinates.
Point2 primitive(const Point2& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const cpp_int l = boost::multiprecision::lcm(denominator(v[0]), denominator(v[1]));
    const cpp_int x = numerator(v[0]) * (l / denominator(v[0]));
    const cpp_int y = numerator(v[1]) * (l / denominator(v[1]));
    const cpp_int g = boost::multiprecision::gcd(abs(x), abs(y));
    return {Rational(x / g), Rational(y / g)};
}

struct Affine {
    Rational coeff;
    Point2 exponent;
};

std::optional<CurvePiece> tie_piece(const std::vector<Affine>& terms, std::size_t i,
                                    std::size_t j) {
    const Point2 normal = minus(terms[i].exponent, terms[j].exponent);
    const Rational rhs = terms[j].coeff - terms[i].coeff;
    const Point2 dir = primitive({-normal[1], normal[0]});
    const Rational scale = rhs / dot(normal, normal);
    const Point2 foot{normal[0] * scale, normal[1] * scale};

    // Along foot + t * dir, term i stays at least as large as every term k:
    // alpha + beta * t >= 0.
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == i || k == j) {
            continue;
        }
        const Point2 diff = minus(terms[i].exponent, terms[k].exponent);
        const Rational alpha = terms[i].coeff - terms[k].coeff + dot(diff, foot);
        const Rational beta = dot(diff, dir);
        if (beta == 0) {
            if (alpha < 0) {
                return std::nullopt;
            }
            continue;
        }
        const Rational bound = -alpha / beta;
        if (beta > 0) {
            lo = lo ? std::max(*lo, bound) : bound;
        } else {
            hi = hi ? std::min(*hi, bound) : bound;
        }
    }
    if (lo && hi && *lo >= *hi) {
        return std::nullopt;
    }

    const auto point = [&](const Rational& t) {
        return Point2{foot[0] + t * dir[0], foot[1] + t * dir[1]};
    };
    const Point2 back{-dir[0], -dir[1]};
    if (!lo && !hi) {
        return CurvePiece{foot, dir, std::nullopt, std::nullopt};
    }
    if (lo && !hi) {
        return CurvePiece{point(*lo), dir, Rational(0), std::nullopt};
    }
    if (!lo && hi) {
        return CurvePiece{point(*hi), back, Rational(0), std::nullopt};
    }
    const Point2 a = point(*lo);
    const Point2 b = point(*hi);
    if (a < b) {
        return CurvePiece{a, dir, Rational(0), *hi - *lo};
    }
    return CurvePiece{b, back, Rational(0), *hi - *lo};
}

double segment_distance(const CurvePiece& p, double x, double y) {
    const double bx = to_double(p.base[0]);
    const double by = to_double(p.base[1]);
    const double vx = to_double(p.direction[0]);
    const double vy = to_double(p.direction[1]);
    double t = ((x - bx) * vx + (y - by) * vy) / (vx * vx + vy * vy);
    if (p.t0) {
        t = std::max(t, to_double(*p.t0));
    }
    if (p.t1) {
        t = std::min(t, to_double(*p.t1));
    }
    return std::hypot(x - (bx + t * vx), y - (by + t * vy));
}

} // namespace

Point2 CurvePiece::at(const Rational& t) const {
    return {base[0] + t * direction[0], base[1] + t * direction[1]};
}

TropicalCurve tropical_curve_2d(std::vector<TropicalTerm> terms) {
    TropicalCurve curve;
    std::map<Point2, double> folded;
    for (const TropicalTerm& t : terms) {
        if (!std::isfinite(t.coeff)) {
            throw DomainError("tropical coefficients must be finite");
        }
        auto [it, inserted] = folded.emplace(t.exponent, t.coeff);
        if (!inserted) {
            curve.merged_duplicate_exponents = true;
            it->second = std::max(it->second, t.coeff);
        }
    }
    if (folded.size() < 2) {
        throw DomainError("a tropical curve needs at least two distinct exponents");
    }

    std::vector<Affine> exact;
    for (const auto& [d, c] : folded) {
        curve.terms.push_back({c, d});
        exact.push_back({exact_rational(c), d});
    }
    for (std::size_t i = 0; i < exact.size(); ++i) {
        for (std::size_t j = i + 1; j < exact.size(); ++j) {
            auto piece = tie_piece(exact, i, j);
            if (piece && std::find(curve.pieces.begin(), curve.pieces.end(), *piece) ==
                             curve.pieces.end()) {
                curve.pieces.push_back(std::move(*piece));
            }
        }
    }
    return curve;
}

std::vector<Rational> term_values(const std::vector<TropicalTerm>& terms, const Point2& x) {
    std::vector<Rational> out;
    out.reserve(terms.size());
    for (const TropicalTerm& t : terms) {
        out.push_back(exact_rational(t.coeff) + dot(t.exponent, x));
    }
    return out;
}

double distance_to_curve(const TropicalCurve& curve, double x, double y) {
    double best = std::numeric_limits<double>::infinity();
    for (const CurvePiece& p : curve.pieces) {
        best = std::min(best, segment_distance(p, x, y));
    }
    return best;
}

std::array<double, 2> amoeba_line_point(std::complex<double> t, DeformationParam h) {
    const double a = std::abs(t);
    const double b = std::abs(1.0 + t);
    if (a == 0.0 || b == 0.0) {
        throw DomainError("t = 0 and t = -1 are not points of the line in (C*)^2");
    }
    return {h.value() * std::log(a), h.value() * std::log(b)};
}

std::vector<std::array<double, 2>> amoeba_line_sample(DeformationParam h, std::size_t samples) {
    if (samples == 0) {
        throw DomainError("amoeba sampling needs at least one sample per axis");
    }
    constexpr double kLogRadius = 8.0;
    const double pi = std::numbers::pi;
    std::vector<std::array<double, 2>> out;
    out.reserve(samples * samples);
    for (std::size_t r = 0; r < samples; ++r) {
        const double s = samples == 1 ? 0.0
                                      : -kLogRadius + 2.0 * kLogRadius * static_cast<double>(r) /
                                                          static_cast<double>(samples - 1);
        for (std::size_t a = 0; a < samples; ++a) {
            const double theta =
                -pi + 2.0 * pi * (static_cast<double>(a) + 0.5) / static_cast<double>(samples);
            out.push_back(amoeba_line_point(std::polar(std::exp(s), theta), h));
        }
    }
    return out;
}

} // namespace tropikit
