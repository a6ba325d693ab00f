#include "tropikit/transforms.hpp"

#include "tropikit/errors.hpp"
#include "tropikit/parallel.hpp"

#include <cmath>
#include <string>

namespace tropikit {
namespace {

// (+) of the convention on raw doubles.
struct Reducer {
    bool maxplus;

    double operator()(double a, double b) const {
        if (maxplus) {
            return a < b ? b : a;
        }
        return b < a ? b : a;
    }
};

double zero_of(Convention c) {
    return c == Convention::maxplus ? -INFINITY : INFINITY;
}

} // namespace

ExtReal idempotent_integral(const SampledFunction& phi) {
    const Reducer plus{phi.convention() == Convention::maxplus};
    double acc = zero_of(phi.convention());
    for (ExtReal v : phi.values()) {
        acc = plus(acc, v.value());
    }
    return ExtReal(acc);
}

ExtReal integral_wrt_measure(const SampledFunction& phi, const SampledFunction& psi) {
    if (!phi.same_grid(psi)) {
        throw GridMismatch("integrand and density must share a grid");
    }
    const Reducer plus{phi.convention() == Convention::maxplus};
    const double zero = zero_of(phi.convention());
    double acc = zero;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const double a = phi[i].value();
        const double b = psi[i].value();
        if (a != zero && b != zero) {
            acc = plus(acc, a + b);
        }
    }
    return ExtReal(acc);
}

SampledFunction convolution(const SampledFunction& phi, const SampledFunction& psi) {
    if (phi.step() != psi.step() || phi.convention() != psi.convention()) {
        throw GridMismatch("convolution needs equal steps and conventions");
    }
    const Reducer plus{phi.convention() == Convention::maxplus};
    const double zero = zero_of(phi.convention());
    const std::size_t n = phi.size();
    const std::size_t m = psi.size();
    std::vector<ExtReal> out(n + m - 1);
    parallel_for(out.size(), [&](std::size_t k) {
        const std::size_t first = k >= m ? k - m + 1 : 0;
        const std::size_t last = std::min(k, n - 1);
        double acc = zero;
        for (std::size_t i = first; i <= last; ++i) {
            const double a = phi[i].value();
            const double b = psi[k - i].value();
            if (a != zero && b != zero) {
                acc = plus(acc, a + b);
            }
        }
        out[k] = ExtReal(acc);
    });
    return {phi.start() + psi.start(), phi.step(), std::move(out), phi.convention()};
}

SampledFunction legendre(const SampledFunction& phi, const Grid& xi) {
    if (phi.convention() != Convention::maxplus) {
        throw DomainError("the Legendre transform is taken in the max-plus convention");
    }
    if (xi.count == 0) {
        throw DomainError("xi grid is empty");
    }
    std::vector<ExtReal> out(xi.count);
    parallel_for(xi.count, [&](std::size_t k) {
        const double slope = xi.at(k);
        double acc = -INFINITY;
        for (std::size_t i = 0; i < phi.size(); ++i) {
            const double v = phi[i].value();
            if (v != -INFINITY) {
                const double cand = slope * phi.x(i) + v;
                acc = acc < cand ? cand : acc;
            }
        }
        out[k] = ExtReal(acc);
    });
    return {xi.start, xi.step, std::move(out), Convention::maxplus};
}

SampledFunction legendre_inverse(const SampledFunction& phi_tilde, const Grid& x) {
    if (phi_tilde.convention() != Convention::maxplus) {
        throw DomainError("expected a max-plus transform");
    }
    if (x.count == 0) {
        throw DomainError("x grid is empty");
    }
    std::vector<ExtReal> out(x.count);
    parallel_for(x.count, [&](std::size_t k) {
        const double at = x.at(k);
        double acc = INFINITY;
        bool any = false;
        for (std::size_t i = 0; i < phi_tilde.size(); ++i) {
            const double v = phi_tilde[i].value();
            if (v == -INFINITY) {
                // phi was identically -inf.
                continue;
            }
            any = true;
            const double cand = v - phi_tilde.x(i) * at;
            acc = cand < acc ? cand : acc;
        }
        out[k] = any ? ExtReal(acc) : ExtReal::neg_inf();
    });
    return {x.start, x.step, std::move(out), Convention::maxplus};
}

SampledFunction hopf_lax_evolve(const SampledFunction& s0, const EvolveParams& p) {
    if (s0.convention() != Convention::minplus) {
        throw DomainError("Hopf-Lax evolution works on min-plus functions");
    }
    if (!(p.t > 0.0) || !std::isfinite(p.t) || !(p.mass > 0.0) || !std::isfinite(p.mass)) {
        throw DomainError("evolution needs t > 0 and m > 0");
    }
    const double coeff = p.mass / (2.0 * p.t);
    std::vector<ExtReal> out(s0.size());
    parallel_for(s0.size(), [&](std::size_t i) {
        const double x = s0.x(i);
        double acc = INFINITY;
        for (std::size_t j = 0; j < s0.size(); ++j) {
            const double v = s0[j].value();
            if (v != INFINITY) {
                const double d = x - s0.x(j);
                const double cand = v + coeff * (d * d);
                acc = cand < acc ? cand : acc;
            }
        }
        out[i] = ExtReal(acc);
    });
    return {s0.start(), s0.step(), std::move(out), Convention::minplus};
}

} // namespace tropikit
