#include "tropikit/matrix.hpp"

#include "tropikit/errors.hpp"
#include "tropikit/parallel.hpp"

#include <atomic>
#include <string>

namespace tropikit {
namespace {

std::atomic<std::uint64_t> g_bellman_solves{0};

std::string shape(const SemiringMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_spec(const SemiringMatrix& a, const SemiringMatrix& b) {
    if (!(a.spec() == b.spec())) {
        throw SpecMismatch("matrices over " + a.spec().name() + " and " + b.spec().name());
    }
}

void require_idempotent(const SemiringSpec& spec, const char* what) {
    if (!spec.idempotent()) {
        throw NotIdempotent(std::string(what) + " needs an idempotent semiring, " + spec.name() +
                            " is not");
    }
}

void require_bellman_shapes(const SemiringMatrix& h, const SemiringMatrix& f) {
    require_same_spec(h, f);
    if (h.rows() != h.cols()) {
        throw ShapeMismatch("H must be square, got " + shape(h));
    }
    if (f.rows() != h.rows()) {
        throw ShapeMismatch("F must have " + std::to_string(h.rows()) + " rows, got " + shape(f));
    }
    require_idempotent(h.spec(), "the Bellman solver");
}

} // namespace

SemiringMatrix::SemiringMatrix(std::size_t rows, std::size_t cols, std::vector<ExtReal> entries,
                               SemiringSpec spec)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), spec_(std::move(spec)) {
    if (rows_ == 0 || cols_ == 0) {
        throw ShapeMismatch("matrix dimensions must be positive");
    }
    if (entries_.size() != rows_ * cols_) {
        throw ShapeMismatch("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                            std::to_string(entries_.size()));
    }
    for (ExtReal e : entries_) {
        spec_.require(e);
    }
}

SemiringMatrix::SemiringMatrix(std::initializer_list<std::initializer_list<double>> rows,
                               SemiringSpec spec)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), spec_(std::move(spec)) {
    if (rows_ == 0 || cols_ == 0) {
        throw ShapeMismatch("matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ShapeMismatch("ragged matrix literal");
        }
        for (double v : row) {
            ExtReal e(v);
            spec_.require(e);
            entries_.push_back(e);
        }
    }
}

SemiringMatrix SemiringMatrix::zeros(std::size_t rows, std::size_t cols, const SemiringSpec& spec) {
    return {rows, cols, std::vector<ExtReal>(rows * cols, spec.zero()), spec};
}

SemiringMatrix SemiringMatrix::identity(std::size_t n, const SemiringSpec& spec) {
    SemiringMatrix m = zeros(n, n, spec);
    for (std::size_t i = 0; i < n; ++i) {
        m.entries_[i * n + i] = spec.one();
    }
    return m;
}

void SemiringMatrix::set(std::size_t i, std::size_t j, ExtReal v) {
    spec_.require(v);
    entries_[i * cols_ + j] = v;
}

SemiringMatrix matrix_ops(const SemiringMatrix& a, const SemiringMatrix& b, MatrixOp which) {
    require_same_spec(a, b);
    const SemiringSpec& s = a.spec();
    if (which == MatrixOp::add) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) {
            throw ShapeMismatch("cannot add " + shape(a) + " and " + shape(b));
        }
        std::vector<ExtReal> out(a.entries().size());
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = s.add_unchecked(a.entries()[k], b.entries()[k]);
        }
        return {a.rows(), a.cols(), std::move(out), s};
    }
    if (a.cols() != b.rows()) {
        throw ShapeMismatch("cannot multiply " + shape(a) + " by " + shape(b));
    }
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    std::vector<ExtReal> out(n * m, s.zero());
    // Rows are independent and each is reduced in a fixed order.
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t k = 0; k < m; ++k) {
            ExtReal acc = s.zero();
            for (std::size_t j = 0; j < a.cols(); ++j) {
                acc = s.add_unchecked(acc, s.mul_unchecked(a(i, j), b(j, k)));
            }
            out[i * m + k] = acc;
        }
    });
    return {n, m, std::move(out), s};
}

bool leq(const SemiringMatrix& a, const SemiringMatrix& b) {
    require_same_spec(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch("cannot compare " + shape(a) + " and " + shape(b));
    }
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        if (!leq(a.entries()[k], b.entries()[k], a.spec())) {
            return false;
        }
    }
    return true;
}

SemiringMatrix kleene_star(const SemiringMatrix& a, std::optional<std::size_t> max_iter,
                           SolveStats* stats) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("Kleene star needs a square matrix, got " + shape(a));
    }
    require_idempotent(a.spec(), "Kleene star");
    const std::size_t n = a.rows();
    const std::size_t budget = max_iter.value_or(n + 1);
    const SemiringMatrix eye = SemiringMatrix::identity(n, a.spec());

    SemiringMatrix s = eye;
    for (std::size_t it = 1; it <= budget; ++it) {
        SemiringMatrix next = eye + a * s;
        if (next == s) {
            if (stats) {
                stats->iterations = it;
            }
            return s;
        }
        s = std::move(next);
    }
    throw NonConvergent("Kleene star did not stabilize within " + std::to_string(budget) +
                            " iterations",
                        budget);
}

SemiringMatrix solve_bellman_jacobi(const SemiringMatrix& h, const SemiringMatrix& f,
                                    std::optional<std::size_t> max_iter, SolveStats* stats) {
    require_bellman_shapes(h, f);
    g_bellman_solves.fetch_add(1, std::memory_order_relaxed);
    const std::size_t budget = max_iter.value_or(h.rows() + 1);

    SemiringMatrix x = f;
    for (std::size_t it = 1; it <= budget; ++it) {
        SemiringMatrix next = h * x + f;
        if (next == x) {
            if (stats) {
                stats->iterations = it;
            }
            return x;
        }
        x = std::move(next);
    }
    throw NonConvergent("Jacobi iteration did not stabilize within " + std::to_string(budget) +
                            " iterations",
                        budget);
}

SemiringMatrix solve_bellman_gauss_seidel(const SemiringMatrix& h, const SemiringMatrix& f,
                                          std::optional<std::size_t> max_iter,
                                          SolveStats* stats) {
    require_bellman_shapes(h, f);
    g_bellman_solves.fetch_add(1, std::memory_order_relaxed);
    const SemiringSpec& s = h.spec();
    const std::size_t n = h.rows();
    const std::size_t k = f.cols();
    const std::size_t budget = max_iter.value_or(n + 1);

    std::vector<ExtReal> x(f.entries().begin(), f.entries().end());
    for (std::size_t sweep = 1; sweep <= budget; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < k; ++c) {
                ExtReal acc = f(i, c);
                for (std::size_t j = 0; j < n; ++j) {
                    acc = s.add_unchecked(acc, s.mul_unchecked(h(i, j), x[j * k + c]));
                }
                if (!(acc == x[i * k + c])) {
                    x[i * k + c] = acc;
                    changed = true;
                }
            }
        }
        if (!changed) {
            if (stats) {
                stats->iterations = sweep;
            }
            return {n, k, std::move(x), s};
        }
    }
    throw NonConvergent("Gauss-Seidel iteration did not stabilize within " +
                            std::to_string(budget) + " sweeps",
                        budget);
}

std::uint64_t bellman_solve_count() noexcept {
    return g_bellman_solves.load(std::memory_order_relaxed);
}

} // namespace tropikit
