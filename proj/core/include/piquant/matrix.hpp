#pragma once

#include "piquant/rational.hpp"

#include <initializer_list>
#include <vector>

namespace piquant {

/// Dense matrix with exact rational entries, row-major.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_columns(const std::vector<std::vector<Rational>>& columns);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    std::vector<Rational> column(std::size_t j) const;
    RatMatrix transposed() const;

    bool operator==(const RatMatrix&) const = default;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    /// A * x for a column vector x.
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

/// Dense matrix with double entries, row-major.
class RealMatrix {
public:
    RealMatrix(std::size_t rows, std::size_t cols);
    RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static RealMatrix identity(std::size_t n);
    static RealMatrix from(const RatMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RealMatrix transposed() const;
    friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

} // namespace piquant
