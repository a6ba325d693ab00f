#pragma once

#include "tropikit/semiring.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tropikit {

// Dense row-major matrix of extended reals read under a semiring.
class SemiringMatrix {
public:
    // Throws ShapeMismatch for zero dimensions or a wrong entry count and
    // DomainError for entries outside the semiring.
    SemiringMatrix(std::size_t rows, std::size_t cols, std::vector<ExtReal> entries,
                   SemiringSpec spec);
    SemiringMatrix(std::initializer_list<std::initializer_list<double>> rows, SemiringSpec spec);

    static SemiringMatrix zeros(std::size_t rows, std::size_t cols, const SemiringSpec& spec);
    static SemiringMatrix identity(std::size_t n, const SemiringSpec& spec);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const SemiringSpec& spec() const noexcept { return spec_; }
    std::span<const ExtReal> entries() const noexcept { return entries_; }

    ExtReal operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    // Throws DomainError if v is outside the semiring.
    void set(std::size_t i, std::size_t j, ExtReal v);

    friend bool operator==(const SemiringMatrix& a, const SemiringMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.spec_ == b.spec_ &&
               a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<ExtReal> entries_;
    SemiringSpec spec_;
};

enum class MatrixOp { add, mul };

// Entrywise (+) or the semiring product (A (.) B)_ik = (+)_j A_ij (.) B_jk.
SemiringMatrix matrix_ops(const SemiringMatrix& a, const SemiringMatrix& b, MatrixOp which);

inline SemiringMatrix operator+(const SemiringMatrix& a, const SemiringMatrix& b) {
    return matrix_ops(a, b, MatrixOp::add);
}
inline SemiringMatrix operator*(const SemiringMatrix& a, const SemiringMatrix& b) {
    return matrix_ops(a, b, MatrixOp::mul);
}

// Entrywise standard order; requires an idempotent semiring.
bool leq(const SemiringMatrix& a, const SemiringMatrix& b);

// Iteration counts reported by the fixpoint solvers. For Gauss-Seidel the
// count is in sweeps and includes the final sweep that changed nothing.
struct SolveStats {
    std::size_t iterations = 0;
};

// A* = I (+) A (+) A^2 (+) ..., iterating S <- I (+) A (.) S from S = I
// until the iterate repeats exactly. max_iter defaults to n + 1.
SemiringMatrix kleene_star(const SemiringMatrix& a, std::optional<std::size_t> max_iter = {},
                           SolveStats* stats = nullptr);

// Least solution of X = H (.) X (+) F by the simultaneous (Jacobi) scheme
// X <- H (.) X (+) F starting at X = F.
SemiringMatrix solve_bellman_jacobi(const SemiringMatrix& h, const SemiringMatrix& f,
                                    std::optional<std::size_t> max_iter = {},
                                    SolveStats* stats = nullptr);

// Same least solution, but rows are rewritten in place in ascending order so
// later rows already see this sweep's updates.
SemiringMatrix solve_bellman_gauss_seidel(const SemiringMatrix& h, const SemiringMatrix& f,
                                          std::optional<std::size_t> max_iter = {},
                                          SolveStats* stats = nullptr);

// Number of Bellman point solves (Jacobi or Gauss-Seidel) performed by this
// process so far. Used to audit the cost of derived solvers.
std::uint64_t bellman_solve_count() noexcept;

} // namespace tropikit
