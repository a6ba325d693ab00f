#include "tropikit/semiring.hpp"

#include "tropikit/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace tropikit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool not_nan(double x) { return !std::isnan(x); }

double plain_max(double a, double b) { return a < b ? b : a; }
double plain_min(double a, double b) { return b < a ? b : a; }
double plain_sum(double a, double b) { return a + b; }

// Log-sum-exp form of h ln(e^{u/h} + e^{v/h}); -inf inputs never reach the
// exponentials.
double deformed_sum(double u, double v, double h) {
    if (u == -kInf) {
        return v;
    }
    if (v == -kInf) {
        return u;
    }
    const double hi = plain_max(u, v);
    const double gap = std::fabs(u - v);
    return hi + h * std::log1p(std::exp(-gap / h));
}

std::string shortest(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

} // namespace

DeformationParam::DeformationParam(double h) : h_(h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("deformation parameter h must be positive and finite");
    }
}

SemiringSpec::SemiringSpec(SemiringDefinition def)
    : def_(std::make_shared<const SemiringDefinition>(std::move(def))),
      zero_(def_->zero),
      one_(def_->one) {
    if (!def_->contains || !def_->add || !def_->mul) {
        throw DomainError("semiring '" + def_->name + "' is missing an operation");
    }
    if (!def_->contains(def_->zero) || !def_->contains(def_->one)) {
        throw DomainError("semiring '" + def_->name + "': zero and one must lie in the domain");
    }
    if (zero_ == one_) {
        throw DomainError("semiring '" + def_->name + "': zero must differ from one");
    }
}

ExtReal SemiringSpec::add_unchecked(ExtReal a, ExtReal b) const {
    return ExtReal(def_->add(a.value(), b.value()));
}

ExtReal SemiringSpec::mul_unchecked(ExtReal a, ExtReal b) const {
    if (a == zero_ || b == zero_) {
        return zero_;
    }
    return ExtReal(def_->mul(a.value(), b.value()));
}

void SemiringSpec::require(ExtReal x) const {
    if (!contains(x)) {
        throw DomainError(format_ext(x) + " is outside the domain of " + name() + " (" +
                          domain() + ")");
    }
}

SemiringSpec bool_semiring() {
    return SemiringSpec({
        .name = "bool",
        .domain = "{0, 1}",
        .contains = [](double x) { return x == 0.0 || x == 1.0; },
        .add = plain_max,
        .mul = plain_min,
        .zero = 0.0,
        .one = 1.0,
        .idempotent = true,
    });
}

SemiringSpec maxplus() {
    return SemiringSpec({
        .name = "maxplus",
        .domain = "R u {-inf}",
        .contains = [](double x) { return not_nan(x) && x != kInf; },
        .add = plain_max,
        .mul = plain_sum,
        .zero = -kInf,
        .one = 0.0,
        .idempotent = true,
    });
}

SemiringSpec minplus() {
    return SemiringSpec({
        .name = "minplus",
        .domain = "R u {+inf}",
        .contains = [](double x) { return not_nan(x) && x != -kInf; },
        .add = plain_min,
        .mul = plain_sum,
        .zero = kInf,
        .one = 0.0,
        .idempotent = true,
    });
}

SemiringSpec maxmin() {
    return SemiringSpec({
        .name = "maxmin",
        .domain = "R u {-inf, +inf}",
        .contains = not_nan,
        .add = plain_max,
        .mul = plain_min,
        .zero = -kInf,
        .one = kInf,
        .idempotent = true,
    });
}

SemiringSpec nonneg() {
    return SemiringSpec({
        .name = "nonneg",
        .domain = "[0, +inf)",
        .contains = [](double x) { return x >= 0.0 && x != kInf; },
        .add = plain_sum,
        .mul = [](double a, double b) { return a * b; },
        .zero = 0.0,
        .one = 1.0,
        .idempotent = false,
    });
}

SemiringSpec deformed(DeformationParam h) {
    const double hv = h.value();
    return SemiringSpec({
        .name = "deformed:" + shortest(hv),
        .domain = "R u {-inf}",
        .contains = [](double x) { return not_nan(x) && x != kInf; },
        .add = [hv](double u, double v) { return deformed_sum(u, v, hv); },
        .mul = plain_sum,
        .zero = -kInf,
        .one = 0.0,
        .idempotent = false,
    });
}

SemiringSpec parse_semiring_id(std::string_view id) {
    if (id == "bool") return bool_semiring();
    if (id == "maxplus") return maxplus();
    if (id == "minplus") return minplus();
    if (id == "maxmin") return maxmin();
    if (id == "nonneg") return nonneg();
    constexpr std::string_view prefix = "deformed:";
    if (id.substr(0, prefix.size()) == prefix) {
        const std::string_view literal = id.substr(prefix.size());
        double h = 0.0;
        auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), h,
                                         std::chars_format::fixed);
        if (ec == std::errc() && ptr == literal.data() + literal.size() && !literal.empty() &&
            h > 0.0 && std::isfinite(h)) {
            return deformed(DeformationParam(h));
        }
        throw ParseError("deformed:<h> needs a positive decimal h, got '" + std::string(literal) +
                         "'");
    }
    throw ParseError("unknown semiring '" + std::string(id) +
                     "' (expected bool, maxplus, minplus, maxmin, nonneg, deformed:<h>)");
}

SemiringRegistry::SemiringRegistry() {
    for (auto spec : {bool_semiring(), maxplus(), minplus(), maxmin(), nonneg()}) {
        add(std::move(spec));
    }
}

void SemiringRegistry::add(SemiringSpec spec) {
    const std::string key = spec.name();
    if (!specs_.emplace(key, std::move(spec)).second) {
        throw SpecMismatch("semiring '" + key + "' is already registered");
    }
}

std::optional<SemiringSpec> SemiringRegistry::find(std::string_view name) const {
    if (auto it = specs_.find(name); it != specs_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::vector<std::string> SemiringRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& [name, spec] : specs_) {
        out.push_back(name);
    }
    return out;
}

ExtReal add(ExtReal a, ExtReal b, const SemiringSpec& spec) {
    spec.require(a);
    spec.require(b);
    return spec.add_unchecked(a, b);
}

ExtReal mul(ExtReal a, ExtReal b, const SemiringSpec& spec) {
    spec.require(a);
    spec.require(b);
    return spec.mul_unchecked(a, b);
}

ExtReal deformed_add(ExtReal u, ExtReal v, DeformationParam h) {
    if (u.is_pos_inf() || v.is_pos_inf()) {
        throw DomainError("deformed addition is defined on R u {-inf}");
    }
    return ExtReal(deformed_sum(u.value(), v.value(), h.value()));
}

bool leq(ExtReal a, ExtReal b, const SemiringSpec& spec) {
    if (!spec.idempotent()) {
        throw NotIdempotent("standard order needs an idempotent semiring, " + spec.name() +
                            " is not");
    }
    return add(a, b, spec) == b;
}

} // namespace tropikit
