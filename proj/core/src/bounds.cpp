#include "piquant/bounds.hpp"

#include "piquant/errors.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace piquant {

namespace {

std::string sample_text(const std::vector<double>& v) {
    std::string out = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) {
            out += ", ";
        }
        out += format_double_12(v[j]);
    }
    return out + ")";
}

double call_at(const ScalarFunction& f, const std::vector<double>& v) {
    try {
        return f(v);
    } catch (const EvalError& e) {
        throw EvalError(std::string(e.what()) + " at v = " + sample_text(v));
    }
}

void check_box_radius(double radius, const char* name) {
    if (!(radius > 1.0)) {
        throw DomainError(std::string(name) + " must be greater than 1");
    }
}

void check_nonnegative(double x, const char* name) {
    if (!(x >= 0.0)) {
        throw DomainError(std::string(name) + " must be nonnegative");
    }
}

} // namespace

double scaling_defect(const ScalarFunction& f, const RatMatrix& a,
                      const std::vector<Rational>& beta, const std::vector<double>& v,
                      const std::vector<double>& c) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (v.size() != n || c.size() != m || beta.size() != m) {
        throw DimensionError("sample lengths do not match the matrix shape");
    }
    std::vector<double> log_c(m);
    for (std::size_t i = 0; i < m; ++i) {
        log_c[i] = std::log(c[i]);
    }
    std::vector<double> scaled(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (a.at(i, j) == 0) {
                continue;
            }
            s += to_double(a.at(i, j)) * log_c[i];
        }
        scaled[j] = v[j] * std::exp(s); // v_j c^{alpha_j}
    }
    double log_cb = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (beta[i] == 0) {
            continue;
        }
        log_cb += to_double(beta[i]) * log_c[i];
    }
    const double c_beta = std::exp(log_cb);

    const double f_v = call_at(f, v);
    const double f_scaled = call_at(f, scaled);
    const double numer = std::abs(f_scaled - f_v * c_beta);
    const double denom = std::abs(f_v) * c_beta;
    if (denom == 0.0) {
        return numer == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return numer / denom;
}

EpsilonEstimate estimate_epsilon(const ScalarFunction& f, const RatMatrix& a,
                                 const std::vector<Rational>& beta, double k_v, double l_c,
                                 std::size_t samples, std::uint64_t seed) {
    check_box_radius(k_v, "variable box radius");
    check_box_radius(l_c, "scale box radius");
    if (samples < 1) {
        throw DomainError("at least one sample is required");
    }
    detail::SampleRng rng(seed);
    EpsilonEstimate est;
    est.samples = samples;
    est.k_v = k_v;
    est.l_c = l_c;
    std::vector<double> v(a.cols());
    std::vector<double> c(a.rows());
    for (std::size_t t = 0; t < samples; ++t) {
        for (auto& x : v) {
            x = rng.log_box(k_v);
        }
        for (auto& x : c) {
            x = rng.log_box(l_c);
        }
        const double ratio = scaling_defect(f, a, beta, v, c);
        if (ratio > est.eps_hat) {
            est.eps_hat = ratio;
            est.worst_v = v;
            est.worst_c = c;
        }
    }
    return est;
}

EpsilonEstimate estimate_epsilon(const ScalarFunction& f, const RatMatrix& a,
                                 const Dimension& beta, double k_v, double l_c,
                                 std::size_t samples, std::uint64_t seed) {
    return estimate_epsilon(f, a, beta.exponents(), k_v, l_c, samples, seed);
}

double bound_full_rank(double eps, double delta, double box_radius, std::size_t m,
                       double d_norm) {
    check_nonnegative(eps, "eps");
    check_nonnegative(delta, "delta");
    check_nonnegative(d_norm, "d_norm");
    check_box_radius(box_radius, "box radius");
    return (1.0 + eps) * std::pow(box_radius, static_cast<double>(m) * delta * d_norm) - 1.0;
}

double bound_rank_deficient(double eps, double delta, double box_radius, std::size_t m,
                            std::size_t n, double d_norm, double max_kernel_entry,
                            double xdag_norm) {
    check_nonnegative(eps, "eps");
    check_nonnegative(delta, "delta");
    check_nonnegative(d_norm, "d_norm");
    check_nonnegative(max_kernel_entry, "max kernel entry");
    check_nonnegative(xdag_norm, "xdag_norm");
    check_box_radius(box_radius, "box radius");
    const double exponent = static_cast<double>(m) * delta * d_norm *
                            (static_cast<double>(n) * max_kernel_entry * xdag_norm + 1.0);
    return (1.0 + eps) * std::pow(box_radius, exponent) - 1.0;
}

namespace {

// FNV-1a over the 6-significant-digit decimal forms of the coordinates, so
// equal inputs always see the same field value.
double hash_field01(const std::vector<double>& v, std::uint64_t seed) {
    std::uint64_t h = 14695981039346656037ull;
    const auto mix_byte = [&h](unsigned char b) {
        h ^= b;
        h *= 1099511628211ull;
    };
    for (int i = 0; i < 8; ++i) {
        mix_byte(static_cast<unsigned char>(seed >> (8 * i)));
    }
    char buf[32];
    for (const double x : v) {
        const int len = std::snprintf(buf, sizeof(buf), "%.5e", x);
        for (int i = 0; i < len; ++i) {
            mix_byte(static_cast<unsigned char>(buf[i]));
        }
    }
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::vector<double> to_doubles(const std::vector<Rational>& y) {
    std::vector<double> out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
        out[j] = to_double(y[j]);
    }
    return out;
}

double positive_power_product(const std::vector<double>& v, const std::vector<double>& y) {
    if (v.size() != y.size()) {
        throw EvalError("argument count mismatch");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!(v[j] > 0.0)) {
            throw EvalError("arguments must be strictly positive");
        }
        sum += y[j] * std::log(v[j]);
    }
    return std::exp(sum);
}

void check_tau(double tau) {
    if (!(tau >= 0.0 && tau < 1.0)) {
        throw DomainError("tau must lie in [0, 1)");
    }
}

} // namespace

ScalarFunction make_perturbed(const std::vector<Rational>& y, double tau, std::uint64_t seed) {
    check_tau(tau);
    const std::vector<double> yd = to_doubles(y);
    return [yd, tau, seed](const std::vector<double>& v) {
        double h = 1.0;
        if (tau > 0.0) {
            h = 1.0 - tau + 2.0 * tau * hash_field01(v, seed);
        }
        return h * positive_power_product(v, yd);
    };
}

ScalarFunction make_two_level(const std::vector<Rational>& y, double tau) {
    check_tau(tau);
    const std::vector<double> yd = to_doubles(y);
    return [yd, tau](const std::vector<double>& v) {
        const bool at_ones = std::all_of(v.begin(), v.end(), [](double x) { return x == 1.0; });
        const double h = at_ones ? 1.0 - tau : 1.0 + tau;
        return h * positive_power_product(v, yd);
    };
}

BoundReport evaluate_bound(const PiDecomposition& dec, double eps, double box_radius) {
    BoundReport rep;
    rep.eps = eps;
    rep.delta = to_double(dec.delta);
    rep.box_radius = box_radius;
    rep.m = dec.matrix.rows();
    rep.n = dec.matrix.cols();
    rep.d_norm = dec.d_norm;
    rep.max_kernel_entry = dec.max_kernel_entry;
    rep.xdag_norm = dec.xdag_norm;
    rep.full_rank = dec.kernel_dim == 0;
    rep.bound = rep.full_rank
                    ? bound_full_rank(eps, rep.delta, box_radius, rep.m, rep.d_norm)
                    : bound_rank_deficient(eps, rep.delta, box_radius, rep.m, rep.n,
                                           rep.d_norm, rep.max_kernel_entry, rep.xdag_norm);
    return rep;
}

VerifyReport verify_bound(const PiDecomposition& dec, const ScalarFunction& f,
                          double box_radius, double eps, std::size_t trials,
                          std::uint64_t seed) {
    VerifyReport rep;
    rep.bound = evaluate_bound(dec, eps, box_radius);
    rep.trials = trials;

    const std::size_t n = dec.matrix.cols();
    ScalarFunction model;
    if (dec.kernel_dim == 0) {
        const std::vector<double> ones(n, 1.0);
        const double c = call_at(f, ones);
        rep.c_value = c;
        model = [dec, c](const std::vector<double>& v) { return c * power_product(dec, v); };
    } else {
        const ScalarFunction g = reconstruct_g(dec, f);
        model = [dec, g](const std::vector<double>& v) {
            return g(pi_values(dec, v)) * power_product(dec, v);
        };
    }

    detail::SampleRng rng(seed);
    std::vector<double> v(n);
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto& x : v) {
            x = rng.log_box(box_radius);
        }
        const double f_v = call_at(f, v);
        const double m_v = call_at(model, v);
        const double lhs = std::abs(f_v - m_v);
        double rhs = std::abs(f_v) * rep.bound.bound;
        if (rep.bound.bound == 0.0) {
            rhs = 1e-9 * std::abs(f_v); // absolute-tolerance substitute
        }
        const double ratio =
            rhs > 0.0 ? lhs / rhs
                      : (lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        if (lhs > rhs) {
            ++rep.violations;
        }
        if (ratio > rep.max_ratio || t == 0) {
            rep.max_ratio = ratio;
            rep.worst_v = v;
            rep.worst_lhs = lhs;
            rep.worst_rhs = rhs;
        }
    }
    return rep;
}

} // namespace piquant
