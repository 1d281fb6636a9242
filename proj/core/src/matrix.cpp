#include "piquant/matrix.hpp"

#include "piquant/errors.hpp"

namespace piquant {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw DimensionError(what);
    }
}

} // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
    require(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1x1");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RatMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix initializer");
        std::size_t j = 0;
        for (const auto& v : r) {
            at(i, j++) = v;
        }
        ++i;
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
    require(!columns.empty() && !columns.front().empty(), "matrix dimensions must be at least 1x1");
    RatMatrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require(columns[j].size() == m.rows(), "ragged column list");
        for (std::size_t i = 0; i < m.rows(); ++i) {
            m.at(i, j) = columns[j][i];
        }
    }
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    require(!rows.empty() && !rows.front().empty(), "matrix dimensions must be at least 1x1");
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == m.cols(), "ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
    std::vector<Rational> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        out[j] = at(i, j);
    }
    return out;
}

std::vector<Rational> RatMatrix::column(std::size_t j) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = at(i, j);
    }
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t.at(j, i) = at(i, j);
        }
    }
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    require(a.cols() == b.rows(), "incompatible shapes in matrix product");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return c;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
    require(x.size() == cols_, "vector length does not match matrix columns");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i] += at(i, j) * x[j];
        }
    }
    return out;
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
    require(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1x1");
}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : RealMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix initializer");
        std::size_t j = 0;
        for (double v : r) {
            at(i, j++) = v;
        }
        ++i;
    }
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

RealMatrix RealMatrix::from(const RatMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.at(i, j) = to_double(m.at(i, j));
        }
    }
    return out;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t.at(j, i) = at(i, j);
        }
    }
    return t;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    require(a.cols() == b.rows(), "incompatible shapes in matrix product");
    RealMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return c;
}

} // namespace piquant
