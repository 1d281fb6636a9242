#include "piquant/linalg.hpp"

#include "piquant/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace piquant {

RrefResult rref(const RatMatrix& a) {
    RatMatrix r = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && r.at(p, col) == 0) {
            ++p;
        }
        if (p == r.rows()) {
            continue;
        }
        if (p != row) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                std::swap(r.at(p, j), r.at(row, j));
            }
        }
        const Rational pivot = r.at(row, col);
        for (std::size_t j = col; j < r.cols(); ++j) {
            r.at(row, j) /= pivot;
        }
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col) == 0) {
                continue;
            }
            const Rational factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) {
                r.at(i, j) -= factor * r.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const RatMatrix& a) {
    return rref(a).pivot_columns.size();
}

namespace {

// Integer entries, content 1, first nonzero entry positive.
void canonicalize(std::vector<Rational>& x) {
    Integer denom_lcm = 1;
    for (const auto& q : x) {
        denom_lcm = lcm(denom_lcm, denominator(q));
    }
    Integer content = 0;
    for (auto& q : x) {
        q *= Rational(denom_lcm);
        content = gcd(content, numerator(q));
    }
    if (content != 0) {
        for (auto& q : x) {
            q /= Rational(content);
        }
    }
    for (const auto& q : x) {
        if (q == 0) {
            continue;
        }
        if (q < 0) {
            for (auto& v : x) {
                v = -v;
            }
        }
        break;
    }
}

} // namespace

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& a) {
    const auto [r, pivots] = rref(a);
    std::vector<std::vector<Rational>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < a.cols(); ++col) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<Rational> x(a.cols(), Rational(0));
        x[col] = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            x[pivots[t]] = -r.at(t, col);
        }
        canonicalize(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

RatMatrix invert(const RatMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DomainError("only square matrices can be inverted");
    }
    const std::size_t n = a.rows();
    RatMatrix work = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && work.at(p, col) == 0) {
            ++p;
        }
        if (p == n) {
            throw DomainError("matrix is singular");
        }
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(p, j), work.at(col, j));
                std::swap(inv.at(p, j), inv.at(col, j));
            }
        }
        const Rational pivot = work.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) /= pivot;
            inv.at(col, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work.at(i, col) == 0) {
                continue;
            }
            const Rational factor = work.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= factor * work.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMatrix pinv(const RatMatrix& b) {
    const auto [r, pivots] = rref(b);
    const std::size_t rk = pivots.size();
    if (rk == 0) {
        return RatMatrix(b.cols(), b.rows()); // pseudoinverse of the zero matrix
    }
    RatMatrix c(b.rows(), rk);
    for (std::size_t t = 0; t < rk; ++t) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            c.at(i, t) = b.at(i, pivots[t]);
        }
    }
    RatMatrix f(rk, b.cols());
    for (std::size_t t = 0; t < rk; ++t) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            f.at(t, j) = r.at(t, j);
        }
    }
    const RatMatrix ft = f.transposed();
    const RatMatrix ct = c.transposed();
    return ft * invert(f * ft) * invert(ct * c) * ct;
}

RealMatrix pinv(const RealMatrix& b, double tol) {
    Eigen::MatrixXd m(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (!std::isfinite(b.at(i, j))) {
                throw DomainError("pseudoinverse of a matrix with non-finite entries");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = b.at(i, j);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv(0) : 0.0;
    const double cutoff =
        tol >= 0.0 ? tol : 1e-12 * static_cast<double>(std::max(b.rows(), b.cols())) * largest;
    Eigen::VectorXd inv_sv(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        inv_sv(i) = sv(i) > cutoff ? 1.0 / sv(i) : 0.0;
    }
    const Eigen::MatrixXd p = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
    RealMatrix out(b.cols(), b.rows());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out.at(i, j) = p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

Rational inf_norm(const RatMatrix& b) {
    Rational best(0);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            sum += abs(b.at(i, j));
        }
        best = std::max(best, sum);
    }
    return best;
}

double inf_norm(const RealMatrix& b) {
    double best = 0.0;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            sum += std::abs(b.at(i, j));
        }
        best = std::max(best, sum);
    }
    return best;
}

MinNormSolution min_norm_solve(const RatMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) {
        throw DimensionError("right-hand side length does not match matrix rows");
    }
    MinNormSolution sol;
    sol.y = pinv(a).apply(b);
    const std::vector<Rational> image = a.apply(sol.y);
    sol.residual = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Rational diff = abs(image[i] - b[i]);
        sol.residual = std::max(sol.residual, diff);
    }
    return sol;
}

} // namespace piquant
