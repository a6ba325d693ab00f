#pragma once

#include "tropikit/semiring.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tropikit {

struct AxiomOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    // Used only for non-idempotent instances; idempotent ones are compared
    // bitwise. Scale is max(1, |a|, |b|).
    double rel_tol = 1e-12;
};

struct LawResult {
    std::string law;
    std::size_t checked = 0;
    std::size_t failures = 0;
    // Idempotency of (+) is expected to fail on non-idempotent instances.
    bool expected_to_hold = true;

    bool passed() const { return expected_to_hold ? failures == 0 : failures > 0; }
};

struct AxiomReport {
    std::string semiring;
    bool exact = true;
    std::vector<LawResult> laws;

    bool passed() const;
};

// Draws random triples from the spec's domain and checks the semiring laws.
// Idempotent instances draw finite values from a dyadic lattice so every
// operation is exact in IEEE arithmetic.
AxiomReport check_axioms(const SemiringSpec& spec, const AxiomOptions& options = {});

} // namespace tropikit
