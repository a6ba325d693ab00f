#pragma once

#include "tropikit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropikit {

// Closed order interval [lower, upper] of an idempotent semiring, with
// lower <= upper in the semiring's standard order. For min-plus this makes
// `lower` the numerically larger bound; use from_numeric / numeric_min /
// numeric_max at human-facing boundaries.
class IntervalValue {
public:
    // Throws NotIdempotent, DomainError, or DomainError if lower is not
    // below upper in the standard order.
    IntervalValue(ExtReal lower, ExtReal upper, SemiringSpec spec);

    static IntervalValue point(ExtReal x, const SemiringSpec& spec) { return {x, x, spec}; }
    // Builds the interval of all values between a and b in numeric order.
    static IntervalValue from_numeric(ExtReal a, ExtReal b, const SemiringSpec& spec);

    ExtReal lower() const noexcept { return lower_; }
    ExtReal upper() const noexcept { return upper_; }
    const SemiringSpec& spec() const noexcept { return spec_; }

    double numeric_min() const noexcept;
    double numeric_max() const noexcept;

    // True if x lies in the interval (standard order on both sides).
    bool contains(ExtReal x) const;
    // True if this interval is a subset of `outer`.
    bool subset_of(const IntervalValue& outer) const;

    friend bool operator==(const IntervalValue& a, const IntervalValue& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_ && a.spec_ == b.spec_;
    }

private:
    ExtReal lower_;
    ExtReal upper_;
    SemiringSpec spec_;
};

enum class IntervalOp { add, mul };

// Endpoint-wise (+) / (.). Throws SpecMismatch for different semirings.
IntervalValue interval_ops(const IntervalValue& x, const IntervalValue& y, IntervalOp which);

class IntervalMatrix {
public:
    IntervalMatrix(std::size_t rows, std::size_t cols, std::vector<IntervalValue> entries);
    // Pairs two point matrices entrywise; throws if some lower > upper.
    IntervalMatrix(const SemiringMatrix& lower, const SemiringMatrix& upper);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const SemiringSpec& spec() const noexcept { return entries_.front().spec(); }
    const IntervalValue& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<IntervalValue>& entries() const noexcept { return entries_; }

    SemiringMatrix lower() const;
    SemiringMatrix upper() const;

    // Entrywise membership of a point matrix.
    bool contains(const SemiringMatrix& m) const;

    friend bool operator==(const IntervalMatrix& a, const IntervalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<IntervalValue> entries_;
};

// Exact interval solution of X = H (.) X (+) F: the lower and upper endpoint
// systems are solved independently (exactly two point solves). By
// monotonicity every point selection inside H and F has its solution inside
// the result, and both endpoints are attained. Throws IntervalNonConvergent
// naming the endpoint(s) that diverged.
IntervalMatrix interval_bellman(const IntervalMatrix& h, const IntervalMatrix& f,
                                std::optional<std::size_t> max_iter = {});

} // namespace tropikit
