#include "tropikit/sampled_function.hpp"

#include "tropikit/errors.hpp"

#include <cmath>

namespace tropikit {

const char* to_string(Convention c) {
    return c == Convention::maxplus ? "maxplus" : "minplus";
}

SampledFunction::SampledFunction(double start, double step, std::vector<ExtReal> values,
                                 Convention convention)
    : start_(start), step_(step), values_(std::move(values)), convention_(convention) {
    if (values_.empty()) {
        throw DomainError("sampled function needs at least one value");
    }
    if (!std::isfinite(start_) || !(step_ > 0.0) || !std::isfinite(step_)) {
        throw DomainError("grid start must be finite and step positive");
    }
    if (start_ == 0.0) {
        start_ = 0.0;
    }
    const ExtReal forbidden =
        convention_ == Convention::maxplus ? ExtReal::pos_inf() : ExtReal::neg_inf();
    for (ExtReal v : values_) {
        if (v == forbidden) {
            throw DomainError(std::string(format_ext(v)) + " is not allowed in a " +
                              to_string(convention_) + " function");
        }
    }
}

ExtReal SampledFunction::zero() const noexcept {
    return convention_ == Convention::maxplus ? ExtReal::neg_inf() : ExtReal::pos_inf();
}

bool SampledFunction::same_grid(const SampledFunction& other) const noexcept {
    return start_ == other.start_ && step_ == other.step_ && size() == other.size() &&
           convention_ == other.convention_;
}

SampledFunction oplus(const SampledFunction& a, const SampledFunction& b) {
    if (!a.same_grid(b)) {
        throw GridMismatch("pointwise sum needs identical grids");
    }
    std::vector<ExtReal> out(a.size());
    const bool maxp = a.convention() == Convention::maxplus;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double x = a[i].value();
        const double y = b[i].value();
        out[i] = maxp ? (x < y ? y : x) : (y < x ? y : x);
    }
    return {a.start(), a.step(), std::move(out), a.convention()};
}

SampledFunction scale(ExtReal lambda, const SampledFunction& phi) {
    const ExtReal z = phi.zero();
    if (lambda.value() == -z.value()) {
        throw DomainError("scalar is outside the " + std::string(to_string(phi.convention())) +
                          " semiring");
    }
    std::vector<ExtReal> out(phi.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (lambda == z || phi[i] == z) ? z : ExtReal(lambda.value() + phi[i].value());
    }
    return {phi.start(), phi.step(), std::move(out), phi.convention()};
}

} // namespace tropikit
