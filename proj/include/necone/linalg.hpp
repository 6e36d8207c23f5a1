#pragma once

#include "necone/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace necone {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] bool is_symmetric() const;
    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] RationalVector apply(const RationalVector& x) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// transform * G * transform^T = diag(diagonal), transform invertible.
struct CongruenceDiagonalization {
    RationalMatrix transform;
    RationalVector diagonal;
};

/// Symmetric Gaussian elimination with symmetric pivoting; no square roots.
CongruenceDiagonalization congruence_diagonalize(const RationalMatrix& gram);

bool is_negative_definite(const RationalMatrix& gram);

/// Unique solution of A x = b, or nullopt when A is singular.
std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b);

}  // namespace necone
