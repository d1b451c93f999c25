#include "indep/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace indep {

Matrix Matrix::identity(std::size_t n, const FieldDescriptor& fd) {
    Matrix m(n, n, zero(fd));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one(fd);
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, const FieldDescriptor& fd) {
    return Matrix(rows, cols, indep::zero(fd));
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, Scalar());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldDescriptor& fd) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    Matrix c(a.rows(), b.cols(), zero(fd));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (is_effectively_zero(aik, 0.0, fd) && fd.is_exact()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) = add(c(i, j), mul(aik, b(k, j), fd), fd);
            }
        }
    }
    return c;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x,
                            const FieldDescriptor& fd) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product");
    std::vector<Scalar> y(a.rows(), zero(fd));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] = add(y[i], mul(a(i, j), x[j], fd), fd);
    return y;
}

std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const Matrix& a,
                            const FieldDescriptor& fd) {
    if (a.rows() != x.size()) throw DimensionMismatch("vector-matrix product");
    std::vector<Scalar> y(a.cols(), zero(fd));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[j] = add(y[j], mul(x[i], a(i, j), fd), fd);
    return y;
}

std::size_t mat_rank(Matrix m, const FieldDescriptor& fd) {
    const std::size_t rows = m.rows(), cols = m.cols();
    double scale = 0.0;
    if (!fd.is_exact()) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                scale = std::max(scale, magnitude(m(i, j)));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows; // sentinel: none found
        if (fd.is_exact()) {
            for (std::size_t i = rank; i < rows; ++i) {
                if (!is_effectively_zero(m(i, col), 0.0, fd)) {
                    pivot = i;
                    break;
                }
            }
        } else {
            double best = 0.0;
            for (std::size_t i = rank; i < rows; ++i) {
                double mag = magnitude(m(i, col));
                if (mag > best) {
                    best = mag;
                    pivot = i;
                }
            }
            if (pivot < rows && is_effectively_zero(m(pivot, col), scale, fd)) pivot = rows;
        }
        if (pivot == rows) continue;
        m.swap_rows(rank, pivot);
        Scalar inv = invert(m(rank, col), fd);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (is_effectively_zero(m(i, col), 0.0, fd)) continue;
            Scalar factor = mul(m(i, col), inv, fd);
            for (std::size_t j = col; j < cols; ++j) {
                m(i, j) = sub(m(i, j), mul(factor, m(rank, j), fd), fd);
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<Scalar> solve_upper(const Matrix& u, const std::vector<Scalar>& b,
                                const FieldDescriptor& fd) {
    const std::size_t n = u.rows();
    if (u.cols() != n || b.size() != n) throw DimensionMismatch("triangular solve");
    std::vector<Scalar> x(n, zero(fd));
    for (std::size_t ii = n; ii-- > 0;) {
        Scalar s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s = sub(s, mul(u(ii, j), x[j], fd), fd);
        if (is_effectively_zero(u(ii, ii), 0.0, fd)) throw SingularMatrix();
        x[ii] = div(s, u(ii, ii), fd);
    }
    return x;
}

std::vector<Scalar> solve_lower(const Matrix& l, const std::vector<Scalar>& b,
                                const FieldDescriptor& fd) {
    const std::size_t n = l.rows();
    if (l.cols() != n || b.size() != n) throw DimensionMismatch("triangular solve");
    std::vector<Scalar> x(n, zero(fd));
    for (std::size_t i = 0; i < n; ++i) {
        Scalar s = b[i];
        for (std::size_t j = 0; j < i; ++j) s = sub(s, mul(l(i, j), x[j], fd), fd);
        if (is_effectively_zero(l(i, i), 0.0, fd)) throw SingularMatrix();
        x[i] = div(s, l(i, i), fd);
    }
    return x;
}

bool mat_equal(const Matrix& a, const Matrix& b, const FieldDescriptor& fd) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!scalar_equal(a(i, j), b(i, j), fd)) return false;
    return true;
}

} // namespace indep
