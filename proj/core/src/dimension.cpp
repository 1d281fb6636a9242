#include "piquant/dimension.hpp"

#include "piquant/errors.hpp"

#include <algorithm>
#include <cmath>

namespace piquant {

Basis::Basis(std::vector<std::string> symbols)
    : symbols_(std::make_shared<const std::vector<std::string>>(std::move(symbols))) {
    if (symbols_->empty()) {
        throw DimensionError("a basis needs at least one base unit");
    }
}

const Basis& Basis::si() {
    static const Basis basis(std::vector<std::string>{"m", "kg", "s", "A", "K", "mol", "cd"});
    return basis;
}

Dimension::Dimension(Basis basis, std::vector<Rational> exponents)
    : basis_(std::move(basis)), exponents_(std::move(exponents)) {
    if (exponents_.size() != basis_.size()) {
        throw DimensionError("exponent vector length does not match basis size");
    }
}

Dimension Dimension::zero(const Basis& basis) {
    return Dimension(basis, std::vector<Rational>(basis.size(), Rational(0)));
}

Dimension Dimension::base(const Basis& basis, std::size_t index) {
    if (index >= basis.size()) {
        throw DimensionError("base unit index out of range");
    }
    std::vector<Rational> exps(basis.size(), Rational(0));
    exps[index] = 1;
    return Dimension(basis, std::move(exps));
}

bool Dimension::dimensionless() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](const Rational& q) { return q == 0; });
}

namespace {

void check_same_basis(const Basis& a, const Basis& b) {
    if (!(a == b)) {
        throw DimensionError("operands live over different bases");
    }
}

} // namespace

Dimension Dimension::operator+(const Dimension& other) const {
    check_same_basis(basis_, other.basis_);
    std::vector<Rational> exps(exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        exps[i] = exponents_[i] + other.exponents_[i];
    }
    return Dimension(basis_, std::move(exps));
}

Dimension Dimension::operator-(const Dimension& other) const {
    check_same_basis(basis_, other.basis_);
    std::vector<Rational> exps(exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        exps[i] = exponents_[i] - other.exponents_[i];
    }
    return Dimension(basis_, std::move(exps));
}

Dimension Dimension::operator-() const {
    std::vector<Rational> exps(exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        exps[i] = -exponents_[i];
    }
    return Dimension(basis_, std::move(exps));
}

Dimension Dimension::scaled(const Rational& q) const {
    std::vector<Rational> exps(exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        exps[i] = exponents_[i] * q;
    }
    return Dimension(basis_, std::move(exps));
}

bool Dimension::operator==(const Dimension& other) const {
    return basis_ == other.basis_ && exponents_ == other.exponents_;
}

std::string Dimension::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += format_rational(exponents_[i]);
    }
    return out + ")";
}

ScaleVector::ScaleVector(Basis basis, std::vector<double> factors)
    : basis_(std::move(basis)), factors_(std::move(factors)) {
    if (factors_.size() != basis_.size()) {
        throw DimensionError("scale vector length does not match basis size");
    }
    for (double f : factors_) {
        if (!(f > 0.0) || !std::isfinite(f)) {
            throw DomainError("scale factors must be strictly positive");
        }
    }
}

ScaleVector ScaleVector::ones(const Basis& basis) {
    return ScaleVector(basis, std::vector<double>(basis.size(), 1.0));
}

double scale_power(const ScaleVector& scale, const Dimension& alpha) {
    check_same_basis(scale.basis(), alpha.basis());
    double log_sum = 0.0;
    for (std::size_t i = 0; i < scale.size(); ++i) {
        log_sum += to_double(alpha[i]) * std::log(scale[i]);
    }
    if (std::abs(log_sum) > 700.0) {
        throw DomainError("scale power overflows the double range");
    }
    double out = 1.0;
    for (std::size_t i = 0; i < scale.size(); ++i) {
        if (alpha[i] == 0) {
            continue;
        }
        out *= std::pow(scale[i], to_double(alpha[i]));
    }
    return out;
}

} // namespace piquant
