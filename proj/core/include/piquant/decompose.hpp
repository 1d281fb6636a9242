#pragma once

#include "piquant/linalg.hpp"
#include "piquant/problem.hpp"

#include <string>
#include <vector>

namespace piquant {

/// One dimensionless monomial group: exponents over the problem variables
/// (a canonical kernel vector of the dimension matrix) and its rendering,
/// e.g. "m1/m2".
struct PiGroup {
    std::vector<Rational> exponents;
    std::string text;
};

/// Result of the Buckingham decomposition of a problem.
struct PiDecomposition {
    std::vector<std::string> variables; // column order of A
    std::string target;

    RatMatrix matrix;             // A, basis-size x n
    std::vector<Rational> beta;   // target dimension exponents
    std::size_t rank = 0;         // r
    std::size_t kernel_dim = 0;   // k = n - r

    std::vector<Rational> y;      // exponent vector, minimum-norm when canonical
    Rational delta;               // ||A y^T - beta^T||_inf, exact
    bool y_canonical = true;      // y is the A+ beta solution (prints as rationals)

    std::vector<std::vector<Rational>> kernel; // canonical basis, k vectors
    std::vector<PiGroup> pi_groups;            // k entries

    std::vector<std::vector<Rational>> x_dagger; // X+, n x k, exact; empty when k = 0

    double max_kernel_entry = 0.0; // M = max |x_sj|; 0 when k = 0
    double d_norm = 0.0;           // ||(A^T)+||_inf
    double xdag_norm = 0.0;        // ||X+||_inf; 0 when k = 0

    std::string formula; // rendered template, e.g. "T = C * l^(1/2) * g^(-1/2)"

    bool target_in_range() const { return delta == 0; }
};

/// Dimension matrix: column j is the dimension of variable j.
RatMatrix build_matrix(const DimensionProblem& prob);

PiDecomposition decompose(const DimensionProblem& prob);

/// Same decomposition with a replacement exponent vector; the residual is
/// recomputed exactly and the template re-rendered.
PiDecomposition with_exponents(PiDecomposition dec, std::vector<Rational> y);

/// pi_s(v) for s = 1..k.
std::vector<double> pi_values(const PiDecomposition& dec, const std::vector<double>& v);

/// The section u = exp(X+ log w) of the pi map: pi(psi(w)) = w.
std::vector<double> psi(const PiDecomposition& dec, const std::vector<double>& w);

/// v^y with the decomposition's exponent vector.
double power_product(const PiDecomposition& dec, const std::vector<double>& v);

/// G(w) = F(psi(w)) / psi(w)^y. The unique factor function when the
/// decomposition is exact.
ScalarFunction reconstruct_g(const PiDecomposition& dec, const ScalarFunction& f);

} // namespace piquant
