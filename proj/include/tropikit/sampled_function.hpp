#pragma once

#include "tropikit/ext_real.hpp"

#include <cstddef>
#include <vector>

namespace tropikit {

enum class Convention { maxplus, minplus };

const char* to_string(Convention c);

// Uniform closed grid start, start + step, ...
struct Grid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 1;

    double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

// Extended-real function on a uniform grid, read in the max-plus or min-plus
// semiring. 0 of the convention (-inf resp. +inf) marks "no value".
class SampledFunction {
public:
    // Throws DomainError for an empty value list, a non-positive or
    // non-finite step, or an infinity of the wrong sign for the convention.
    SampledFunction(double start, double step, std::vector<ExtReal> values,
                    Convention convention = Convention::maxplus);

    double start() const noexcept { return start_; }
    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return values_.size(); }
    Convention convention() const noexcept { return convention_; }
    const std::vector<ExtReal>& values() const noexcept { return values_; }
    Grid grid() const noexcept { return {start_, step_, values_.size()}; }

    double x(std::size_t i) const { return start_ + static_cast<double>(i) * step_; }
    ExtReal operator[](std::size_t i) const { return values_[i]; }

    // Zero and one of the convention's semiring.
    ExtReal zero() const noexcept;
    ExtReal one() const noexcept { return ExtReal(0.0); }

    // Same start, step, size and convention.
    bool same_grid(const SampledFunction& other) const noexcept;

    friend bool operator==(const SampledFunction&, const SampledFunction&) = default;

private:
    double start_;
    double step_;
    std::vector<ExtReal> values_;
    Convention convention_;
};

// Pointwise (+) of two functions on the same grid. Throws GridMismatch.
SampledFunction oplus(const SampledFunction& a, const SampledFunction& b);

// lambda (.) phi, i.e. lambda + phi(x) with the zero absorbing.
SampledFunction scale(ExtReal lambda, const SampledFunction& phi);

} // namespace tropikit
