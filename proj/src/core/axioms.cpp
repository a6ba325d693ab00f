#include "tropikit/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tropikit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Portable draws from raw mt19937_64 output; the standard distributions are
// implementation-defined.
class Sampler {
public:
    Sampler(const SemiringSpec& spec, std::uint64_t seed, bool exact)
        : spec_(spec), rng_(seed), exact_(exact) {}

    ExtReal next() {
        for (;;) {
            const std::uint64_t category = rng_() % 20;
            double x = 0.0;
            if (category == 0) {
                x = spec_.zero().value();
            } else if (category == 1) {
                x = spec_.one().value();
            } else if (category == 2) {
                x = kInf;
            } else if (category == 3) {
                x = -kInf;
            } else if (exact_) {
                // k / 4 with |k| <= 4000: sums and products stay exact.
                const auto k = static_cast<std::int64_t>(rng_() % 8001) - 4000;
                x = static_cast<double>(k) / 4.0;
            } else {
                const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
                x = -100.0 + 200.0 * unit;
            }
            if (spec_.contains(ExtReal(x))) {
                return ExtReal(x);
            }
        }
    }

private:
    const SemiringSpec& spec_;
    std::mt19937_64 rng_;
    bool exact_;
};

struct Comparator {
    bool exact;
    double rel_tol;

    bool operator()(ExtReal a, ExtReal b) const {
        if (exact || !a.is_finite() || !b.is_finite()) {
            return a == b;
        }
        const double x = a.value();
        const double y = b.value();
        const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
        return std::fabs(x - y) <= rel_tol * scale;
    }
};

} // namespace

bool AxiomReport::passed() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed(); });
}

AxiomReport check_axioms(const SemiringSpec& spec, const AxiomOptions& options) {
    const bool exact = spec.idempotent();
    const Comparator same{exact, options.rel_tol};
    Sampler sampler(spec, options.seed, exact);

    const auto plus = [&](ExtReal a, ExtReal b) { return spec.add_unchecked(a, b); };
    const auto times = [&](ExtReal a, ExtReal b) { return spec.mul_unchecked(a, b); };
    const ExtReal zero = spec.zero();
    const ExtReal one = spec.one();

    AxiomReport report{spec.name(), exact, {}};
    report.laws.reserve(10); // references below must stay valid
    auto law = [&](std::string name, bool expected = true) -> LawResult& {
        report.laws.push_back({std::move(name), 0, 0, expected});
        return report.laws.back();
    };
    LawResult& add_assoc = law("add_associative");
    LawResult& add_comm = law("add_commutative");
    LawResult& mul_assoc = law("mul_associative");
    LawResult& left_dist = law("left_distributive");
    LawResult& right_dist = law("right_distributive");
    LawResult& add_zero = law("zero_neutral");
    LawResult& mul_zero = law("zero_absorbing");
    LawResult& mul_one = law("one_neutral");
    LawResult& idem = law("add_idempotent", spec.idempotent());
    LawResult& zero_one = law("zero_ne_one");

    auto record = [](LawResult& l, bool ok) {
        ++l.checked;
        if (!ok) {
            ++l.failures;
        }
    };

    record(zero_one, !(zero == one));
    for (std::size_t i = 0; i < options.samples; ++i) {
        const ExtReal x = sampler.next();
        const ExtReal y = sampler.next();
        const ExtReal z = sampler.next();
        record(add_assoc, same(plus(plus(x, y), z), plus(x, plus(y, z))));
        record(add_comm, same(plus(x, y), plus(y, x)));
        record(mul_assoc, same(times(times(x, y), z), times(x, times(y, z))));
        record(left_dist, same(times(x, plus(y, z)), plus(times(x, y), times(x, z))));
        record(right_dist, same(times(plus(x, y), z), plus(times(x, z), times(y, z))));
        record(add_zero, plus(zero, x) == x && plus(x, zero) == x);
        record(mul_zero, times(zero, x) == zero && times(x, zero) == zero);
        record(mul_one, same(times(one, x), x) && same(times(x, one), x));
        record(idem, plus(x, x) == x);
    }
    return report;
}

} // namespace tropikit
