#include "necone/linalg.hpp"

#include "necone/error.hpp"

#include <utility>

namespace necone {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_symmetric() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const
{
    require(x.size() == cols_, ErrorKind::Internal, "matrix/vector size mismatch");
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    require(a.cols_ == b.rows_, ErrorKind::Internal, "matrix product size mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

CongruenceDiagonalization congruence_diagonalize(const RationalMatrix& gram)
{
    require(gram.is_symmetric(), ErrorKind::Internal, "congruence_diagonalize needs a symmetric matrix");
    const std::size_t n = gram.rows();
    RationalMatrix m = gram;
    RationalMatrix p = RationalMatrix::identity(n);

    auto swap_index = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
        for (std::size_t j = 0; j < n; ++j) std::swap(p(a, j), p(b, j));
    };
    // row_a += f*row_b together with col_a += f*col_b
    auto add_index = [&](std::size_t a, std::size_t b, const Rational& f) {
        for (std::size_t j = 0; j < n; ++j) m(a, j) += f * m(b, j);
        for (std::size_t i = 0; i < n; ++i) m(i, a) += f * m(i, b);
        for (std::size_t j = 0; j < n; ++j) p(a, j) += f * p(b, j);
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t j = k + 1;
            while (j < n && sgn(m(j, j)) == 0) ++j;
            if (j < n) {
                swap_index(k, j);
            } else {
                j = k + 1;
                while (j < n && sgn(m(k, j)) == 0) ++j;
                if (j == n) continue;  // null direction
                add_index(k, j, Rational(1));
            }
        }
        const Rational pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0) continue;
            add_index(i, k, Rational(-m(i, k) / pivot));
        }
    }
    RationalVector diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = m(i, i);
    return {std::move(p), std::move(diag)};
}

bool is_negative_definite(const RationalMatrix& gram)
{
    if (gram.rows() == 0) return true;
    const auto dz = congruence_diagonalize(gram);
    for (const auto& v : dz.diagonal)
        if (sgn(v) >= 0) return false;
    return true;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b)
{
    require(a.rows() == a.cols() && a.rows() == b.size(), ErrorKind::Internal, "solve_linear size mismatch");
    const std::size_t n = a.rows();
    RationalMatrix m = a;
    RationalVector rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(m(piv, k)) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(rhs[k], rhs[piv]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || sgn(m(i, k)) == 0) continue;
            const Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m(i, i);
    return x;
}

}  // namespace necone
