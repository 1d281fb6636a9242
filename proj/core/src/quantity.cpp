#include "piquant/quantity.hpp"

#include "piquant/errors.hpp"

#include <algorithm>
#include <cmath>

namespace piquant {

namespace {

bool rel_equal(double a, double b, double tol) {
    const double diff = std::abs(a - b);
    if (diff == 0.0) {
        return true;
    }
    return diff <= tol * std::max(std::abs(a), std::abs(b));
}

} // namespace

Quantity::Quantity(double canonical_value, Dimension dim)
    : value_(canonical_value), dim_(std::move(dim)) {}

Quantity Quantity::from(double value, const ScaleVector& scale, const Dimension& dim) {
    return Quantity(value * scale_power(scale, dim), dim);
}

Quantity Quantity::one(const Basis& basis) {
    return Quantity(1.0, Dimension::zero(basis));
}

double Quantity::coordinate_in(const ScaleVector& scale) const {
    return value_ / scale_power(scale, dim_);
}

Quantity Quantity::inverse() const {
    if (value_ == 0.0) {
        throw DomainError("a quantity with zero value is not invertible");
    }
    return Quantity(1.0 / value_, -dim_);
}

Quantity operator*(const Quantity& a, const Quantity& b) {
    return Quantity(a.value_ * b.value_, a.dim_ + b.dim_);
}

Quantity operator*(double s, const Quantity& a) {
    return Quantity(s * a.value_, a.dim_);
}

Quantity operator+(const Quantity& a, const Quantity& b) {
    if (!(a.dim_.basis() == b.dim_.basis())) {
        throw DimensionError("cannot add quantities over different bases");
    }
    if (!(a.dim_ == b.dim_)) {
        throw DimensionError("cannot add quantities of different dimensions");
    }
    return Quantity(a.value_ + b.value_, a.dim_);
}

Quantity operator-(const Quantity& a) {
    return Quantity(-a.value_, a.dim_);
}

bool Quantity::operator==(const Quantity& other) const {
    return dim_ == other.dim_ && rel_equal(value_, other.value_, 1e-12);
}

bool equivalent(double x, const ScaleVector& c, const Dimension& alpha,
                double y, const ScaleVector& d, const Dimension& beta) {
    if (!(c.basis() == d.basis()) || !(alpha.basis() == beta.basis()) ||
        !(c.basis() == alpha.basis())) {
        throw DimensionError("equivalence requires one shared basis");
    }
    if (!(alpha == beta)) {
        return false;
    }
    return rel_equal(x * scale_power(c, alpha), y * scale_power(d, alpha), 1e-12);
}

} // namespace piquant
