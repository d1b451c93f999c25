#ifndef INDEP_MATRIX_HPP
#define INDEP_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "indep/field.hpp"

namespace indep {

// Dense row-major matrix of Scalars. Arithmetic goes through free
// functions carrying the FieldDescriptor, like Scalar itself.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const FieldDescriptor& fd);
    static Matrix zero(std::size_t rows, std::size_t cols, const FieldDescriptor& fd);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Scalar>& data() const { return data_; }

    std::vector<Scalar> row(std::size_t i) const;
    void swap_rows(std::size_t a, std::size_t b);
    Matrix transposed() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldDescriptor& fd);

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x,
                            const FieldDescriptor& fd);

// x^T A, i.e. combine the rows of A with coefficients x.
std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const Matrix& a,
                            const FieldDescriptor& fd);

// Rank by row echelon form. Exact fields use literal zero tests with
// first-nonzero pivots; ApproxReal uses partial pivoting with the
// relative zero test scaled by the largest magnitude in the matrix.
std::size_t mat_rank(Matrix m, const FieldDescriptor& fd);

// Solve U x = b for upper-triangular U (back substitution) and
// L x = b for lower-triangular L (forward substitution). Both throw
// SingularMatrix when a diagonal entry is effectively zero.
std::vector<Scalar> solve_upper(const Matrix& u, const std::vector<Scalar>& b,
                                const FieldDescriptor& fd);
std::vector<Scalar> solve_lower(const Matrix& l, const std::vector<Scalar>& b,
                                const FieldDescriptor& fd);

bool mat_equal(const Matrix& a, const Matrix& b, const FieldDescriptor& fd);

} // namespace indep

#endif // INDEP_MATRIX_HPP
