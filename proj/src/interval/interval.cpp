#include "tropikit/interval.hpp"

#include "tropikit/errors.hpp"

#include <algorithm>

namespace tropikit {

IntervalValue::IntervalValue(ExtReal lower, ExtReal upper, SemiringSpec spec)
    : lower_(lower), upper_(upper), spec_(std::move(spec)) {
    if (!leq(lower_, upper_, spec_)) {
        throw DomainError("interval bounds [" + format_ext(lower_) + ", " + format_ext(upper_) +
                          "] are not ordered in " + spec_.name());
    }
}

IntervalValue IntervalValue::from_numeric(ExtReal a, ExtReal b, const SemiringSpec& spec) {
    if (b.value() < a.value()) {
        std::swap(a, b);
    }
    if (leq(a, b, spec)) {
        return {a, b, spec};
    }
    return {b, a, spec};
}

double IntervalValue::numeric_min() const noexcept {
    return std::min(lower_.value(), upper_.value());
}

double IntervalValue::numeric_max() const noexcept {
    return std::max(lower_.value(), upper_.value());
}

bool IntervalValue::contains(ExtReal x) const {
    return leq(lower_, x, spec_) && leq(x, upper_, spec_);
}

bool IntervalValue::subset_of(const IntervalValue& outer) const {
    if (!(spec_ == outer.spec_)) {
        throw SpecMismatch("intervals over " + spec_.name() + " and " + outer.spec_.name());
    }
    return leq(outer.lower_, lower_, spec_) && leq(upper_, outer.upper_, spec_);
}

IntervalValue interval_ops(const IntervalValue& x, const IntervalValue& y, IntervalOp which) {
    if (!(x.spec() == y.spec())) {
        throw SpecMismatch("intervals over " + x.spec().name() + " and " + y.spec().name());
    }
    const SemiringSpec& s = x.spec();
    if (which == IntervalOp::add) {
        return {s.add_unchecked(x.lower(), y.lower()), s.add_unchecked(x.upper(), y.upper()), s};
    }
    return {s.mul_unchecked(x.lower(), y.lower()), s.mul_unchecked(x.upper(), y.upper()), s};
}

IntervalMatrix::IntervalMatrix(std::size_t rows, std::size_t cols,
                               std::vector<IntervalValue> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
        throw ShapeMismatch("interval matrix needs rows*cols entries");
    }
    for (const IntervalValue& e : entries_) {
        if (!(e.spec() == entries_.front().spec())) {
            throw SpecMismatch("interval matrix mixes semirings");
        }
    }
}

IntervalMatrix::IntervalMatrix(const SemiringMatrix& lower, const SemiringMatrix& upper)
    : rows_(lower.rows()), cols_(lower.cols()) {
    if (!(lower.spec() == upper.spec())) {
        throw SpecMismatch("endpoint matrices over different semirings");
    }
    if (upper.rows() != rows_ || upper.cols() != cols_) {
        throw ShapeMismatch("endpoint matrices differ in shape");
    }
    entries_.reserve(rows_ * cols_);
    for (std::size_t k = 0; k < rows_ * cols_; ++k) {
        entries_.emplace_back(lower.entries()[k], upper.entries()[k], lower.spec());
    }
}

SemiringMatrix IntervalMatrix::lower() const {
    std::vector<ExtReal> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_) {
        v.push_back(e.lower());
    }
    return {rows_, cols_, std::move(v), spec()};
}

SemiringMatrix IntervalMatrix::upper() const {
    std::vector<ExtReal> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_) {
        v.push_back(e.upper());
    }
    return {rows_, cols_, std::move(v), spec()};
}

bool IntervalMatrix::contains(const SemiringMatrix& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) {
        throw ShapeMismatch("point matrix shape differs from interval matrix");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!entries_[k].contains(m.entries()[k])) {
            return false;
        }
    }
    return true;
}

IntervalMatrix interval_bellman(const IntervalMatrix& h, const IntervalMatrix& f,
                                std::optional<std::size_t> max_iter) {
    std::optional<SemiringMatrix> lo;
    std::optional<SemiringMatrix> hi;
    std::size_t iterations = 0;
    try {
        lo = solve_bellman_jacobi(h.lower(), f.lower(), max_iter);
    } catch (const NonConvergent& e) {
        iterations = e.iterations();
    }
    try {
        hi = solve_bellman_jacobi(h.upper(), f.upper(), max_iter);
    } catch (const NonConvergent& e) {
        iterations = e.iterations();
    }
    if (!lo && !hi) {
        throw IntervalNonConvergent(Endpoint::both, iterations);
    }
    if (!lo) {
        throw IntervalNonConvergent(Endpoint::lower, iterations);
    }
    if (!hi) {
        throw IntervalNonConvergent(Endpoint::upper, iterations);
    }
    return {*lo, *hi};
}

} // namespace tropikit
