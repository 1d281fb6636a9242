#pragma once

#include "piquant/dimension.hpp"

namespace piquant {

/// A physical quantity: the equivalence class of (value, scale, dimension)
/// triples under simultaneous rescaling. Stored canonically at scale one.
class Quantity {
public:
    /// The class [value, (1,...,1), dim].
    Quantity(double canonical_value, Dimension dim);

    /// The class [value, scale, dim]; canonical value is value * scale^dim.
    static Quantity from(double value, const ScaleVector& scale, const Dimension& dim);

    /// Neutral element of multiplication: [1, (1,...,1), 0].
    static Quantity one(const Basis& basis);

    /// Canonical coordinate, i.e. the value at scale one.
    double value() const noexcept { return value_; }

    /// Coordinate when the base units are rescaled by `scale`.
    double coordinate_in(const ScaleVector& scale) const;

    const Dimension& dimension() const noexcept { return dim_; }

    bool positive() const noexcept { return value_ > 0.0; }

    /// Multiplicative inverse; throws DomainError when value() == 0.
    Quantity inverse() const;

    friend Quantity operator*(const Quantity& a, const Quantity& b);
    friend Quantity operator*(double s, const Quantity& a);
    /// Defined only within one dimension class; throws DimensionError.
    friend Quantity operator+(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a);

    /// Exact dimension equality plus 1e-12 relative value tolerance.
    bool operator==(const Quantity& other) const;

private:
    double value_;
    Dimension dim_;
};

/// Definition-level equivalence of two raw (value, scale, dimension) triples:
/// equal dimensions and x c^alpha = y d^alpha within 1e-12 relative.
bool equivalent(double x, const ScaleVector& c, const Dimension& alpha,
                double y, const ScaleVector& d, const Dimension& beta);

} // namespace piquant
