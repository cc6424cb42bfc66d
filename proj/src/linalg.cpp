#include "pint/linalg.hpp"

#include <cassert>
#include <cmath>
#include <numeric>

#include "pint/errors.hpp"

namespace pint {

Matrix Matrix::identity(std::size_t n) {
    Matrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

Vector matvec(const Matrix& A, const Vector& x) {
    assert(A.cols() == x.size());
    Vector y(A.rows(), 0.0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    assert(A.cols() == B.rows());
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const double a = A(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
        }
    return C;
}

Vector lu_solve(Matrix A, Vector b) {
    const std::size_t n = A.rows();
    assert(A.cols() == n && b.size() == n);
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(A(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(A(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best == 0.0) throw SingularSystem("lu_solve: zero pivot column " + std::to_string(k));
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
            std::swap(b[k], b[p]);
        }
        const double pivot = A(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = A(i, k) / pivot;
            if (m == 0.0) continue;
            A(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= m * A(k, j);
            b[i] -= m * b[k];
        }
    }
    // back substitution
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= A(ii, j) * x[j];
        x[ii] = s / A(ii, ii);
    }
    return x;
}

Vector thomas_solve(const Vector& sub, const Vector& diag, const Vector& sup, Vector rhs) {
    const std::size_t n = diag.size();
    assert(sub.size() + 1 == n && sup.size() + 1 == n && rhs.size() == n);
    Vector c(n - 1), d = std::move(rhs);
    double pivot = diag[0];
    if (pivot == 0.0) throw SingularSystem("thomas_solve: zero pivot at row 0");
    c[0] = sup[0] / pivot;
    d[0] /= pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - sub[i - 1] * c[i - 1];
        if (pivot == 0.0) throw SingularSystem("thomas_solve: zero pivot at row " + std::to_string(i));
        if (i < n - 1) c[i] = sup[i] / pivot;
        d[i] = (d[i] - sub[i - 1] * d[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
}

} // namespace pint
