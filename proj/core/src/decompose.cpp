#include "piquant/decompose.hpp"

#include "piquant/errors.hpp"

#include <algorithm>
#include <cmath>

namespace piquant {

namespace {

// "m1/m2", "a^2*b/(c*d^3)", "1" for the empty monomial
std::string render_monomial(const std::vector<Rational>& exponents,
                            const std::vector<std::string>& names) {
    const auto factor_text = [&](std::size_t j, const Rational& e) {
        std::string out = names[j];
        if (e != 1) {
            if (denominator(e) == 1) {
                out += "^" + numerator(e).str();
            } else {
                out += "^(" + format_rational(e) + ")";
            }
        }
        return out;
    };
    std::vector<std::string> num, den;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] > 0) {
            num.push_back(factor_text(j, exponents[j]));
        } else if (exponents[j] < 0) {
            den.push_back(factor_text(j, Rational(-exponents[j])));
        }
    }
    const auto join = [](const std::vector<std::string>& parts) {
        std::string out = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) {
            out += "*" + parts[i];
        }
        return out;
    };
    if (num.empty() && den.empty()) {
        return "1";
    }
    std::string out = num.empty() ? "1" : join(num);
    if (!den.empty()) {
        out += "/";
        out += den.size() == 1 ? join(den) : "(" + join(den) + ")";
    }
    return out;
}

std::string exponent_suffix(const Rational& q, bool canonical) {
    if (q == 1) {
        return "";
    }
    if (!canonical) {
        const double v = to_double(q);
        return v < 0 ? "^(" + format_double_12(v) + ")" : "^" + format_double_12(v);
    }
    if (denominator(q) == 1 && q > 0) {
        return "^" + numerator(q).str();
    }
    return "^(" + format_rational(q) + ")";
}

std::string render_formula(const PiDecomposition& dec) {
    std::string out = dec.target + " = ";
    if (dec.kernel_dim == 0) {
        out += "C";
    } else {
        out += "G(";
        for (std::size_t s = 0; s < dec.pi_groups.size(); ++s) {
            if (s) {
                out += ", ";
            }
            out += dec.pi_groups[s].text;
        }
        out += ")";
    }
    for (std::size_t j = 0; j < dec.y.size(); ++j) {
        if (dec.y[j] == 0) {
            continue;
        }
        out += " * " + dec.variables[j] + exponent_suffix(dec.y[j], dec.y_canonical);
    }
    return out;
}

void check_positive(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!(x > 0.0) || !std::isfinite(x)) {
            throw DomainError(std::string(what) + " entries must be strictly positive");
        }
    }
}

double log_linear(const std::vector<Rational>& coeffs, const std::vector<double>& v) {
    double sum = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) {
            continue;
        }
        sum += to_double(coeffs[j]) * std::log(v[j]);
    }
    return sum;
}

} // namespace

RatMatrix build_matrix(const DimensionProblem& prob) {
    std::vector<std::vector<Rational>> columns;
    columns.reserve(prob.variable_count());
    for (const auto& v : prob.variables()) {
        columns.push_back(v.dimension.exponents());
    }
    return RatMatrix::from_columns(columns);
}

PiDecomposition decompose(const DimensionProblem& prob) {
    PiDecomposition dec{
        .variables = prob.variable_names(),
        .target = prob.target().name,
        .matrix = build_matrix(prob),
        .beta = prob.target().dimension.exponents(),
    };
    const std::size_t n = dec.matrix.cols();
    dec.rank = rank(dec.matrix);
    dec.kernel_dim = n - dec.rank;

    MinNormSolution sol = min_norm_solve(dec.matrix, dec.beta);
    dec.y = std::move(sol.y);
    dec.delta = std::move(sol.residual);
    dec.y_canonical = true;

    dec.kernel = kernel_basis(dec.matrix);
    for (const auto& x : dec.kernel) {
        dec.pi_groups.push_back({x, render_monomial(x, dec.variables)});
        for (const auto& e : x) {
            dec.max_kernel_entry = std::max(dec.max_kernel_entry, std::abs(to_double(e)));
        }
    }

    dec.d_norm = to_double(inf_norm(pinv(dec.matrix.transposed())));

    if (dec.kernel_dim > 0) {
        const RatMatrix xdag = pinv(RatMatrix::from_rows(dec.kernel)); // n x k
        dec.xdag_norm = to_double(inf_norm(xdag));
        dec.x_dagger.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            dec.x_dagger[j] = xdag.row(j);
        }
    }

    dec.formula = render_formula(dec);
    return dec;
}

PiDecomposition with_exponents(PiDecomposition dec, std::vector<Rational> y) {
    if (y.size() != dec.matrix.cols()) {
        throw DimensionError("exponent vector length does not match variable count");
    }
    dec.y = std::move(y);
    const std::vector<Rational> image = dec.matrix.apply(dec.y);
    dec.delta = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        const Rational diff = abs(image[i] - dec.beta[i]);
        dec.delta = std::max(dec.delta, diff);
    }
    dec.y_canonical = false;
    dec.formula = render_formula(dec);
    return dec;
}

std::vector<double> pi_values(const PiDecomposition& dec, const std::vector<double>& v) {
    if (v.size() != dec.variables.size()) {
        throw DimensionError("sample length does not match variable count");
    }
    check_positive(v, "variable");
    std::vector<double> w(dec.kernel_dim);
    for (std::size_t s = 0; s < dec.kernel_dim; ++s) {
        w[s] = std::exp(log_linear(dec.kernel[s], v));
    }
    return w;
}

std::vector<double> psi(const PiDecomposition& dec, const std::vector<double>& w) {
    if (dec.kernel_dim == 0) {
        throw DomainError("psi requires at least one dimensionless group");
    }
    if (w.size() != dec.kernel_dim) {
        throw DimensionError("argument length does not match the group count");
    }
    check_positive(w, "group value");
    std::vector<double> u(dec.variables.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        double sum = 0.0;
        for (std::size_t s = 0; s < dec.kernel_dim; ++s) {
            if (dec.x_dagger[j][s] == 0) {
                continue;
            }
            sum += to_double(dec.x_dagger[j][s]) * std::log(w[s]);
        }
        u[j] = std::exp(sum);
    }
    return u;
}

double power_product(const PiDecomposition& dec, const std::vector<double>& v) {
    if (v.size() != dec.variables.size()) {
        throw DimensionError("sample length does not match variable count");
    }
    check_positive(v, "variable");
    return std::exp(log_linear(dec.y, v));
}

ScalarFunction reconstruct_g(const PiDecomposition& dec, const ScalarFunction& f) {
    if (dec.kernel_dim == 0) {
        throw DomainError("reconstruction requires at least one dimensionless group");
    }
    return [dec, f](const std::vector<double>& w) {
        const std::vector<double> u = psi(dec, w);
        return f(u) / power_product(dec, u);
    };
}

} // namespace piquant
