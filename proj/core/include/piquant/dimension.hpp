#pragma once

#include "piquant/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace piquant {

/// Ordered list of base-unit symbols. Cheap to copy, immutable once built.
/// Two bases compare equal when their symbol lists are equal.
class Basis {
public:
    explicit Basis(std::vector<std::string> symbols);

    /// The seven SI base units: m, kg, s, A, K, mol, cd.
    static const Basis& si();

    std::size_t size() const noexcept { return symbols_->size(); }
    const std::vector<std::string>& symbols() const noexcept { return *symbols_; }

    bool operator==(const Basis& other) const {
        return symbols_ == other.symbols_ || *symbols_ == *other.symbols_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> symbols_;
};

/// Exponent vector of a quantity over an ordered basis. Exact rationals.
class Dimension {
public:
    Dimension(Basis basis, std::vector<Rational> exponents);

    static Dimension zero(const Basis& basis);
    /// One-hot exponent vector for base unit `index`.
    static Dimension base(const Basis& basis, std::size_t index);

    const Basis& basis() const noexcept { return basis_; }
    const std::vector<Rational>& exponents() const noexcept { return exponents_; }
    std::size_t size() const noexcept { return exponents_.size(); }
    const Rational& operator[](std::size_t i) const { return exponents_[i]; }

    bool dimensionless() const;

    Dimension operator+(const Dimension& other) const;
    Dimension operator-(const Dimension& other) const;
    Dimension operator-() const;
    /// Exponentiation of the underlying unit: all exponents scaled by q.
    Dimension scaled(const Rational& q) const;

    /// Exact equality; dimensions over different bases are never equal.
    bool operator==(const Dimension& other) const;

    /// "(1, 0, -2)" style rendering.
    std::string str() const;

private:
    Basis basis_;
    std::vector<Rational> exponents_;
};

/// Strictly positive per-base-unit rescaling factors.
class ScaleVector {
public:
    ScaleVector(Basis basis, std::vector<double> factors);

    /// The neutral scale (1, ..., 1).
    static ScaleVector ones(const Basis& basis);

    const Basis& basis() const noexcept { return basis_; }
    const std::vector<double>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    double operator[](std::size_t i) const { return factors_[i]; }

private:
    Basis basis_;
    std::vector<double> factors_;
};

/// prod scale_i ^ alpha_i, with a DomainError once |sum alpha_i log scale_i|
/// exceeds 700 (the double overflow threshold).
double scale_power(const ScaleVector& scale, const Dimension& alpha);

} // namespace piquant
