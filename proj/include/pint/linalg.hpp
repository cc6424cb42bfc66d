#pragma once

#include <cstddef>
#include <vector>

namespace pint {

using Vector = std::vector<double>;

/// Dense row-major matrix. Small sizes only; no expression templates, no views.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

Vector matvec(const Matrix& A, const Vector& x);
Matrix matmul(const Matrix& A, const Matrix& B);

/// Solve A x = b by LU with partial pivoting. Throws SingularSystem.
Vector lu_solve(Matrix A, Vector b);

/// Solve a tridiagonal system by the Thomas algorithm.
/// sub has n-1 entries (below diagonal), diag n, sup n-1. Throws SingularSystem
/// on a vanishing pivot; no pivoting, intended for diagonally dominant systems.
Vector thomas_solve(const Vector& sub, const Vector& diag, const Vector& sup, Vector rhs);

} // namespace pint
