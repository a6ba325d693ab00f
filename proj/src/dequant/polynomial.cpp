#include "tropikit/polynomial.hpp"

#include "tropikit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace tropikit {
namespace {

void require_point(const GenPolynomial& f, std::span<const double> x) {
    if (x.size() != f.dim()) {
        throw DimensionMismatch("point has " + std::to_string(x.size()) +
                                " coordinates, polynomial has dimension " +
                                std::to_string(f.dim()));
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw DomainError("evaluation point must be finite");
        }
    }
}

} // namespace

GenPolynomial::GenPolynomial(std::size_t n, std::vector<Term> terms) : n_(n) {
    if (n_ == 0) {
        throw DimensionMismatch("polynomial dimension must be positive");
    }
    std::map<RationalVector, double> merged;
    for (Term& t : terms) {
        if (t.exponent.size() != n_) {
            throw DimensionMismatch("exponent of length " + std::to_string(t.exponent.size()) +
                                    " in a polynomial of dimension " + std::to_string(n_));
        }
        if (!std::isfinite(t.coeff)) {
            throw DomainError("polynomial coefficients must be finite");
        }
        merged[std::move(t.exponent)] += t.coeff;
    }
    for (auto& [exponent, coeff] : merged) {
        if (coeff != 0.0) {
            positive_ = positive_ && coeff > 0.0;
            terms_.push_back({coeff, exponent});
        }
    }
    if (terms_.empty()) {
        throw DomainError("polynomial has no nonzero terms");
    }
}

GenPolynomial operator+(const GenPolynomial& f, const GenPolynomial& g) {
    if (f.dim() != g.dim()) {
        throw DimensionMismatch("adding polynomials of different dimensions");
    }
    std::vector<Term> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return {f.dim(), std::move(terms)};
}

GenPolynomial operator*(const GenPolynomial& f, const GenPolynomial& g) {
    if (f.dim() != g.dim()) {
        throw DimensionMismatch("multiplying polynomials of different dimensions");
    }
    std::vector<Term> terms;
    terms.reserve(f.terms().size() * g.terms().size());
    for (const Term& a : f.terms()) {
        for (const Term& b : g.terms()) {
            RationalVector d(f.dim());
            for (std::size_t i = 0; i < d.size(); ++i) {
                d[i] = a.exponent[i] + b.exponent[i];
            }
            terms.push_back({a.coeff * b.coeff, std::move(d)});
        }
    }
    return {f.dim(), std::move(terms)};
}

ExtReal eval_dequantized(const GenPolynomial& f, std::span<const double> x, DeformationParam h,
                         EvalReport* report) {
    require_point(f, x);
    const double hv = h.value();
    // log of each term's magnitude at exp(x/h); the sum is rescaled by the
    // largest so no exponential overflows.
    std::vector<double> logs;
    logs.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            dot += to_double(t.exponent[i]) * x[i];
        }
        logs.push_back(dot / hv + std::log(std::fabs(t.coeff)));
    }
    const double top = *std::max_element(logs.begin(), logs.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        const double mag = std::exp(logs[i] - top);
        sum += f.terms()[i].coeff > 0.0 ? mag : -mag;
    }
    if (report) {
        report->cancellation_at_point = (sum == 0.0);
    }
    if (sum == 0.0) {
        return ExtReal::neg_inf();
    }
    return ExtReal(hv * top + hv * std::log(std::fabs(sum)));
}

ExtReal dequantize_limit(const GenPolynomial& f, std::span<const double> x) {
    require_point(f, x);
    RationalVector point;
    point.reserve(x.size());
    for (double v : x) {
        point.push_back(exact_rational(v));
    }
    std::vector<Rational> values;
    values.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Rational dot = 0;
        for (std::size_t i = 0; i < point.size(); ++i) {
            dot += t.exponent[i] * point[i];
        }
        values.push_back(std::move(dot));
    }
    const Rational& top = *std::max_element(values.begin(), values.end());
    const auto ties = std::count(values.begin(), values.end(), top);
    if (!f.positive() && ties > 1) {
        throw AmbiguousLimit(std::to_string(ties) +
                             " mixed-sign terms tie for the maximum at this point");
    }
    return ExtReal(to_double(top));
}

} // namespace tropikit
