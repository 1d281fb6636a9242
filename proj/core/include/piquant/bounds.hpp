#pragma once

#include "piquant/decompose.hpp"

#include <cstdint>

namespace piquant {

/// Sampled lower bound on the scaling defect of a candidate function: the
/// smallest eps for which the function could lie in the approximate-scaling
/// class of (A, beta). A sampled maximum, never an upper bound.
struct EpsilonEstimate {
    double eps_hat = 0.0;
    std::size_t samples = 0;
    double k_v = 0.0; // variable box radius
    double l_c = 0.0; // scale box radius
    std::vector<double> worst_v, worst_c;
};

/// One membership defect ratio |F(v o c^A) - F(v) c^beta| / (|F(v)| c^beta).
/// Zero numerator with zero denominator counts as 0, otherwise infinity.
double scaling_defect(const ScalarFunction& f, const RatMatrix& a,
                      const std::vector<Rational>& beta, const std::vector<double>& v,
                      const std::vector<double>& c);

EpsilonEstimate estimate_epsilon(const ScalarFunction& f, const RatMatrix& a,
                                 const std::vector<Rational>& beta, double k_v, double l_c,
                                 std::size_t samples, std::uint64_t seed);
EpsilonEstimate estimate_epsilon(const ScalarFunction& f, const RatMatrix& a,
                                 const Dimension& beta, double k_v, double l_c,
                                 std::size_t samples, std::uint64_t seed);

/// (1+eps) * K^(m delta ||D||) - 1: the relative-error bound on
/// |F(v) - C v^y| over the box [1/K, K]^n in the full-column-rank case.
double bound_full_rank(double eps, double delta, double box_radius, std::size_t m,
                       double d_norm);

/// (1+eps) * K^(m delta ||D|| (n M ||X+|| + 1)) - 1: the rank-deficient
/// counterpart for |F(v) - G(pi(v)) v^y|.
double bound_rank_deficient(double eps, double delta, double box_radius, std::size_t m,
                            std::size_t n, double d_norm, double max_kernel_entry,
                            double xdag_norm);

/// F(v) = H(v) v^y with H a deterministic pseudo-random field into
/// [1-tau, 1+tau] (hash of v quantized to 6 significant digits and the
/// seed). Whenever A y^T = beta^T, F has scaling defect at most
/// (1+tau)/(1-tau) - 1. tau = 0 gives v^y exactly.
ScalarFunction make_perturbed(const std::vector<Rational>& y, double tau, std::uint64_t seed);

/// The two-level variant: H = 1-tau at (1,...,1) and 1+tau elsewhere.
/// Same defect ceiling, but never an exact-scaling member for A != 0.
ScalarFunction make_two_level(const std::vector<Rational>& y, double tau);

struct BoundReport {
    double eps = 0.0;
    double delta = 0.0;
    double box_radius = 0.0; // K
    std::size_t m = 0, n = 0;
    double d_norm = 0.0;
    double max_kernel_entry = 0.0; // M
    double xdag_norm = 0.0;
    bool full_rank = true;
    double bound = 0.0;
};

BoundReport evaluate_bound(const PiDecomposition& dec, double eps, double box_radius);

struct VerifyReport {
    BoundReport bound;
    std::size_t trials = 0;
    std::size_t violations = 0;
    double max_ratio = 0.0; // lhs / rhs over all samples
    std::vector<double> worst_v;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    double c_value = 0.0; // F(1,...,1), meaningful when full rank
};

/// Samples v in [1/K, K]^n and checks
///   |F(v) - C v^y|          <= |F(v)| * bound   (k = 0, C = F(1,...,1))
///   |F(v) - G(pi(v)) v^y|   <= |F(v)| * bound   (k > 0, G reconstructed)
/// A zero bound is checked against the absolute tolerance 1e-9 |F(v)|.
VerifyReport verify_bound(const PiDecomposition& dec, const ScalarFunction& f,
                          double box_radius, double eps, std::size_t trials,
                          std::uint64_t seed);

} // namespace piquant
