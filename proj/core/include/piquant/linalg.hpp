#pragma once

#include "piquant/matrix.hpp"

#include <vector>

namespace piquant {

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivot_columns; // strictly increasing
};

/// Exact reduced row echelon form.
RrefResult rref(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Canonical nullspace basis: one vector per RREF free column in column
/// order, scaled to integer entries with content 1 and first nonzero entry
/// positive. Exactly cols - rank vectors, each with a.apply(x) == 0.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& a);

/// Exact inverse; throws DomainError if singular.
RatMatrix invert(const RatMatrix& a);

/// Exact Moore-Penrose pseudoinverse via the rank factorization B = CF,
/// B+ = F^T (F F^T)^-1 (C^T C)^-1 C^T. All four Penrose conditions hold
/// exactly in rational arithmetic.
RatMatrix pinv(const RatMatrix& b);

/// Numerical Moore-Penrose pseudoinverse (SVD based) for general real input.
/// tol is the singular-value cutoff; tol < 0 selects the default
/// 1e-12 * max(rows, cols) * largest_singular_value.
RealMatrix pinv(const RealMatrix& b, double tol = -1.0);

/// Maximum absolute row sum (the operator norm for the max-norm).
Rational inf_norm(const RatMatrix& b);
double inf_norm(const RealMatrix& b);

struct MinNormSolution {
    std::vector<Rational> y; // minimum-norm least-squares solution A+ b
    Rational residual;       // ||A y^T - b^T||_inf, exact; 0 iff b in range(A)
};

MinNormSolution min_norm_solve(const RatMatrix& a, const std::vector<Rational>& b);

} // namespace piquant
