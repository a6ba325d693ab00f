#pragma once

#include <stdexcept>
#include <string>

namespace tropikit {

// Base of every library error. `code()` is the stable identifier printed by
// the CLI as `ERROR <code>: <message>`.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define TROPIKIT_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    protected:                                                                 \
        Name(std::string code, const std::string& what)                        \
            : Error(std::move(code), what) {}                                  \
    }

TROPIKIT_DEFINE_ERROR(DomainError);
TROPIKIT_DEFINE_ERROR(NotIdempotent);
TROPIKIT_DEFINE_ERROR(ShapeMismatch);
TROPIKIT_DEFINE_ERROR(SpecMismatch);
TROPIKIT_DEFINE_ERROR(GridMismatch);
TROPIKIT_DEFINE_ERROR(AmbiguousLimit);
TROPIKIT_DEFINE_ERROR(UnsupportedDimension);
TROPIKIT_DEFINE_ERROR(DimensionMismatch);
TROPIKIT_DEFINE_ERROR(ParseError);

#undef TROPIKIT_DEFINE_ERROR

// No fixpoint reached within the iteration budget.
class NonConvergent : public Error {
public:
    NonConvergent(const std::string& what, std::size_t iterations)
        : Error("NonConvergent", what), iterations_(iterations) {}

    std::size_t iterations() const noexcept { return iterations_; }

protected:
    NonConvergent(std::string code, const std::string& what, std::size_t iterations)
        : Error(std::move(code), what), iterations_(iterations) {}

private:
    std::size_t iterations_;
};

// Min-plus closure of a graph diverged.
class NegativeCycle : public NonConvergent {
public:
    NegativeCycle(const std::string& what, std::size_t iterations)
        : NonConvergent("NegativeCycle", what, iterations) {}
};

enum class Endpoint { lower, upper, both };

inline const char* to_string(Endpoint e) {
    switch (e) {
    case Endpoint::lower: return "lower";
    case Endpoint::upper: return "upper";
    case Endpoint::both: return "both";
    }
    return "?";
}

// One (or both) endpoint systems of an interval Bellman problem diverged.
class IntervalNonConvergent : public NonConvergent {
public:
    IntervalNonConvergent(Endpoint which, std::size_t iterations)
        : NonConvergent("NonConvergent",
                        std::string("interval Bellman system diverged at the ") +
                            to_string(which) + " endpoint",
                        iterations),
          which_(which) {}

    Endpoint which() const noexcept { return which_; }

private:
    Endpoint which_;
};

} // namespace tropikit
