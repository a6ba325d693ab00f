#pragma once

#include "tropikit/ext_real.hpp"
#include "tropikit/rational.hpp"
#include "tropikit/semiring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tropikit {

// Generalized monomial a * prod x_i^{d_i} with real coefficient and
// rational exponent vector.
struct Term {
    double coeff = 1.0;
    RationalVector exponent;
};

// Finite sum of generalized monomials with pairwise distinct exponents.
// Like terms are merged on construction and zero coefficients dropped.
class GenPolynomial {
public:
    // Throws DimensionMismatch if an exponent has the wrong length,
    // DomainError for non-finite coefficients or an empty result.
    GenPolynomial(std::size_t n, std::vector<Term> terms);

    std::size_t dim() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    // All coefficients > 0.
    bool positive() const noexcept { return positive_; }

    friend GenPolynomial operator+(const GenPolynomial& f, const GenPolynomial& g);
    friend GenPolynomial operator*(const GenPolynomial& f, const GenPolynomial& g);

private:
    std::size_t n_;
    std::vector<Term> terms_;
    bool positive_ = true;
};

struct EvalReport {
    // Set when the sum cancelled to zero (mixed signs); the value is then -inf.
    bool cancellation_at_point = false;
};

// h log|f(exp(x/h))| via log-sum-exp over the terms.
ExtReal eval_dequantized(const GenPolynomial& f, std::span<const double> x, DeformationParam h,
                         EvalReport* report = nullptr);

// lim_{h->0} of the above: max_i (d_i, x). Throws AmbiguousLimit when f has
// mixed-sign coefficients and two or more terms tie for the maximum at x.
ExtReal dequantize_limit(const GenPolynomial& f, std::span<const double> x);

} // namespace tropikit
