#pragma once

#include "tropikit/polynomial.hpp"
#include "tropikit/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tropikit {

// Nonempty convex polytope with exact rational vertices, kept in canonical
// form:
//   n == 1: [min, max] (a single vertex when degenerate);
//   n == 2: counterclockwise hull from the lexicographic minimum, without
//           collinear vertices;
//   n  > 2: the raw (sorted, deduplicated) point set, reduced() == false.
class Polytope {
public:
    // Throws DomainError for an empty point set, DimensionMismatch for
    // points of the wrong length.
    Polytope(std::size_t n, std::vector<RationalVector> points);

    std::size_t dim() const noexcept { return n_; }
    const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
    bool reduced() const noexcept { return n_ <= 2; }

    // max over vertices of (v, x).
    Rational support(std::span<const Rational> direction) const;

    // Canonical-vertex equality for n <= 2. For n > 2, support functions are
    // compared on 64 fixed pseudo-random integer directions.
    friend bool operator==(const Polytope& a, const Polytope& b);

private:
    std::size_t n_;
    std::vector<RationalVector> vertices_;
};

// Throws UnsupportedDimension if `require_reduced` and f.dim() > 2.
Polytope newton_set(const GenPolynomial& f, bool require_reduced = false);

enum class PolytopeOp { add, mul };

// add: hull of the union; mul: Minkowski sum (edge merge in 2-D).
// Throws DimensionMismatch.
Polytope polytope_semiring_ops(const Polytope& p, const Polytope& q, PolytopeOp which);

// Planar hull by monotone chain; exposed for tests and tooling.
std::vector<RationalVector> convex_hull_2d(std::vector<RationalVector> points);

// p(x) = max_i (form_i, x): a sublinear function given by finitely many
// rational linear forms.
class SublinearFunction {
public:
    SublinearFunction(std::size_t n, std::vector<RationalVector> forms);

    std::size_t dim() const noexcept { return n_; }
    const std::vector<RationalVector>& forms() const noexcept { return forms_; }

    Rational operator()(std::span<const Rational> x) const;

    // (p1 + p2)(x) = p1(x) + p2(x); forms are all pairwise sums.
    friend SublinearFunction operator+(const SublinearFunction& a, const SublinearFunction& b);
    // max{p1, p2}; forms are the union.
    friend SublinearFunction max(const SublinearFunction& a, const SublinearFunction& b);

private:
    std::size_t n_;
    std::vector<RationalVector> forms_;
};

// {v : (v, x) <= p(x) for all x}, i.e. the hull of the forms.
Polytope subdifferential(const SublinearFunction& p);

// The sublinear limit function x -> max_i (d_i, x) of a polynomial.
SublinearFunction dequantized_sublinear(const GenPolynomial& f);

} // namespace tropikit
