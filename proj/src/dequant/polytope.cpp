#include "tropikit/polytope.hpp"

#include "tropikit/errors.hpp"

#include <algorithm>
#include <random>

namespace tropikit {
namespace {

Rational cross(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

RationalVector sum(const RationalVector& a, const RationalVector& b) {
    RationalVector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        s[i] = a[i] + b[i];
    }
    return s;
}

// Direction set for comparing unreduced (n > 2) polytopes.
std::vector<RationalVector> probe_directions(std::size_t n) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<RationalVector> dirs(64, RationalVector(n));
    for (auto& d : dirs) {
        for (auto& c : d) {
            c = static_cast<long long>(rng() % 2001) - 1000;
        }
    }
    return dirs;
}

// Starting at the lowest (then leftmost) vertex, padded with two wrap-around
// vertices as the edge merge expects.
std::vector<RationalVector> bottom_first_cyclic(std::vector<RationalVector> poly) {
    const auto lowest = std::min_element(poly.begin(), poly.end(), [](const auto& a, const auto& b) {
        return a[1] < b[1] || (a[1] == b[1] && a[0] < b[0]);
    });
    std::rotate(poly.begin(), lowest, poly.end());
    poly.push_back(poly[0]);
    poly.push_back(poly[poly.size() > 2 ? 1 : 0]);
    return poly;
}

std::vector<RationalVector> minkowski_2d(const std::vector<RationalVector>& p,
                                         const std::vector<RationalVector>& q) {
    const auto a = bottom_first_cyclic(p);
    const auto b = bottom_first_cyclic(q);
    const std::size_t na = a.size() - 2;
    const std::size_t nb = b.size() - 2;
    std::vector<RationalVector> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < na || j < nb) {
        out.push_back(sum(a[i], b[j]));
        const RationalVector ea{a[i + 1][0] - a[i][0], a[i + 1][1] - a[i][1]};
        const RationalVector eb{b[j + 1][0] - b[j][0], b[j + 1][1] - b[j][1]};
        const Rational turn = ea[0] * eb[1] - ea[1] * eb[0];
        if (turn >= 0 && i < na) {
            ++i;
        }
        if (turn <= 0 && j < nb) {
            ++j;
        }
    }
    return out;
}

} // namespace

std::vector<RationalVector> convex_hull_2d(std::vector<RationalVector> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) {
        return points;
    }
    std::vector<RationalVector> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) {
            --k;
        }
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

Polytope::Polytope(std::size_t n, std::vector<RationalVector> points) : n_(n) {
    if (n_ == 0) {
        throw DimensionMismatch("polytope dimension must be positive");
    }
    if (points.empty()) {
        throw DomainError("polytope needs at least one point");
    }
    for (const auto& p : points) {
        if (p.size() != n_) {
            throw DimensionMismatch("point of length " + std::to_string(p.size()) +
                                    " in dimension " + std::to_string(n_));
        }
    }
    if (n_ == 1) {
        const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
        vertices_.push_back(*lo);
        if (*hi != *lo) {
            vertices_.push_back(*hi);
        }
    } else if (n_ == 2) {
        vertices_ = convex_hull_2d(std::move(points));
    } else {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        vertices_ = std::move(points);
    }
}

Rational Polytope::support(std::span<const Rational> direction) const {
    if (direction.size() != n_) {
        throw DimensionMismatch("support direction has the wrong length");
    }
    Rational best = dot(vertices_.front(), direction);
    for (const auto& v : vertices_) {
        best = std::max(best, dot(v, direction));
    }
    return best;
}

bool operator==(const Polytope& a, const Polytope& b) {
    if (a.n_ != b.n_) {
        return false;
    }
    if (a.reduced()) {
        return a.vertices_ == b.vertices_;
    }
    for (const auto& d : probe_directions(a.n_)) {
        if (a.support(d) != b.support(d)) {
            return false;
        }
    }
    return true;
}

Polytope newton_set(const GenPolynomial& f, bool require_reduced) {
    if (require_reduced && f.dim() > 2) {
        throw UnsupportedDimension("exact Newton polytopes are computed for n <= 2, got n = " +
                                   std::to_string(f.dim()));
    }
    std::vector<RationalVector> exps;
    exps.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        exps.push_back(t.exponent);
    }
    return {f.dim(), std::move(exps)};
}

Polytope polytope_semiring_ops(const Polytope& p, const Polytope& q, PolytopeOp which) {
    if (p.dim() != q.dim()) {
        throw DimensionMismatch("polytopes of dimension " + std::to_string(p.dim()) + " and " +
                                std::to_string(q.dim()));
    }
    if (which == PolytopeOp::add) {
        std::vector<RationalVector> pts = p.vertices();
        pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
        return {p.dim(), std::move(pts)};
    }
    if (p.dim() == 2) {
        return {2, minkowski_2d(p.vertices(), q.vertices())};
    }
    // 1-D segments and unreduced point sets: all pairwise sums.
    std::vector<RationalVector> pts;
    pts.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            pts.push_back(sum(a, b));
        }
    }
    return {p.dim(), std::move(pts)};
}

SublinearFunction::SublinearFunction(std::size_t n, std::vector<RationalVector> forms)
    : n_(n), forms_(std::move(forms)) {
    if (forms_.empty()) {
        throw DomainError("sublinear function needs at least one linear form");
    }
    for (const auto& f : forms_) {
        if (f.size() != n_) {
            throw DimensionMismatch("linear form has the wrong length");
        }
    }
}

Rational SublinearFunction::operator()(std::span<const Rational> x) const {
    if (x.size() != n_) {
        throw DimensionMismatch("point has the wrong length");
    }
    Rational best = dot(forms_.front(), x);
    for (const auto& f : forms_) {
        best = std::max(best, dot(f, x));
    }
    return best;
}

SublinearFunction operator+(const SublinearFunction& a, const SublinearFunction& b) {
    if (a.n_ != b.n_) {
        throw DimensionMismatch("sublinear functions of different dimensions");
    }
    std::vector<RationalVector> forms;
    for (const auto& u : a.forms_) {
        for (const auto& v : b.forms_) {
            forms.push_back(sum(u, v));
        }
    }
    return {a.n_, std::move(forms)};
}

SublinearFunction max(const SublinearFunction& a, const SublinearFunction& b) {
    if (a.n_ != b.n_) {
        throw DimensionMismatch("sublinear functions of different dimensions");
    }
    std::vector<RationalVector> forms = a.forms_;
    forms.insert(forms.end(), b.forms_.begin(), b.forms_.end());
    return {a.n_, std::move(forms)};
}

Polytope subdifferential(const SublinearFunction& p) { return {p.dim(), p.forms()}; }

SublinearFunction dequantized_sublinear(const GenPolynomial& f) {
    std::vector<RationalVector> forms;
    for (const Term& t : f.terms()) {
        forms.push_back(t.exponent);
    }
    return {f.dim(), std::move(forms)};
}

} // namespace tropikit
