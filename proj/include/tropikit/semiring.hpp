#pragma once

#include "tropikit/ext_real.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropikit {

// Deformation scale h of the deformed addition. Positive and finite.
class DeformationParam {
public:
    explicit DeformationParam(double h);
    double value() const noexcept { return h_; }

private:
    double h_;
};

// Raw description of a semiring over a subset of the extended reals.
// `mul` is never called with a zero operand; the absorbing rule is applied
// by SemiringSpec before any arithmetic happens.
struct SemiringDefinition {
    std::string name;
    std::string domain;
    std::function<bool(double)> contains;
    std::function<double(double, double)> add;
    std::function<double(double, double)> mul;
    double zero = 0.0;
    double one = 1.0;
    bool idempotent = false;
};

// Immutable, cheaply copyable handle to a semiring definition. Two specs are
// equal when their names are equal.
class SemiringSpec {
public:
    explicit SemiringSpec(SemiringDefinition def);

    const std::string& name() const noexcept { return def_->name; }
    const std::string& domain() const noexcept { return def_->domain; }
    ExtReal zero() const noexcept { return zero_; }
    ExtReal one() const noexcept { return one_; }
    bool idempotent() const noexcept { return def_->idempotent; }
    bool contains(ExtReal x) const { return def_->contains(x.value()); }

    // Operations without the domain check; callers must have validated
    // their operands already (matrix constructors do).
    ExtReal add_unchecked(ExtReal a, ExtReal b) const;
    ExtReal mul_unchecked(ExtReal a, ExtReal b) const;

    // Throws DomainError naming this semiring if `x` is outside the domain.
    void require(ExtReal x) const;

    friend bool operator==(const SemiringSpec& a, const SemiringSpec& b) noexcept {
        return a.def_ == b.def_ || a.def_->name == b.def_->name;
    }

private:
    std::shared_ptr<const SemiringDefinition> def_;
    ExtReal zero_;
    ExtReal one_;
};

SemiringSpec bool_semiring();
SemiringSpec maxplus();
SemiringSpec minplus();
SemiringSpec maxmin();
SemiringSpec nonneg();
SemiringSpec deformed(DeformationParam h);

// Closed set of CLI identifiers: bool, maxplus, minplus, maxmin, nonneg,
// deformed:<h>. Throws ParseError on anything else.
SemiringSpec parse_semiring_id(std::string_view id);

// Name lookup for library users who define their own instances. Starts out
// holding the five fixed built-ins.
class SemiringRegistry {
public:
    SemiringRegistry();

    // Throws SpecMismatch if the name is already taken.
    void add(SemiringSpec spec);
    std::optional<SemiringSpec> find(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, SemiringSpec, std::less<>> specs_;
};

ExtReal add(ExtReal a, ExtReal b, const SemiringSpec& spec);
ExtReal mul(ExtReal a, ExtReal b, const SemiringSpec& spec);

// u (+)_h v = h ln(e^{u/h} + e^{v/h}), evaluated as
// max(u,v) + h ln(1 + e^{-|u-v|/h}). -inf is neutral.
ExtReal deformed_add(ExtReal u, ExtReal v, DeformationParam h);

// Standard order: a <= b iff a (+) b == b. Throws NotIdempotent otherwise.
bool leq(ExtReal a, ExtReal b, const SemiringSpec& spec);

} // namespace tropikit
