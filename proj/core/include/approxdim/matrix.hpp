#ifndef APPROXDIM_MATRIX_HPP
#define APPROXDIM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "approxdim/field.hpp"

namespace approxdim {

using Vec = std::vector<Fel>;

// dense row-major matrix over GF(p); zero-row and zero-column shapes are
// first-class values and every operation accepts them
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const Fp& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0)
    {
    }

    static Matrix identity(const Fp& f, std::size_t n);
    static Matrix from_rows(const Fp& f, const std::vector<Vec>& rows, std::size_t cols);

    const Fp& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_zero() const;

    Fel at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Fel& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Fel* row_ptr(std::size_t r) const { return a_.data() + r * cols_; }
    Fel* row_ptr(std::size_t r) { return a_.data() + r * cols_; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Matrix transpose() const;
    Matrix mul(const Matrix& rhs) const;
    Vec mul_vec(const Vec& x) const; // column-vector action
    Matrix add(const Matrix& rhs) const;
    Matrix sub(const Matrix& rhs) const;
    Matrix scale(Fel c) const;

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    Fp field_;
    std::size_t rows_, cols_;
    std::vector<Fel> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivots; // pivot column per pivot row, ascending
    std::size_t rank = 0;

    bool is_pivot_col(std::size_t c) const;
};

// reduced row echelon form with deterministic pivoting: leftmost pivot
// column, smallest remaining row
Rref rref(const Matrix& a);

std::size_t rank(const Matrix& a);

// residue of a row vector after reduction by the rref rows; zero iff the
// vector lies in the row space
Vec reduce_row(const Rref& rr, Vec v);

// rows form a basis of the right null space: a * v^T = 0 for each row v
Matrix kernel_basis(const Matrix& a);

// particular solution X of A*X = B, or nullopt when B is outside the column
// space of A; throws DimensionMismatch on incompatible row counts
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

// the pivot columns of A, as a matrix whose columns are a basis of the
// column space (original columns, not reduced ones)
Matrix column_space_basis(const Matrix& a);

// linear data of the quotient k^d / rowspace(S): proj is (d-r) x d and
// section is d x (d-r) with proj*section = id; kernel of proj = rowspace(S)
struct QuotientMap {
    Matrix proj;
    Matrix section;
};
QuotientMap quotient_map(const Matrix& span_rows);

} // namespace approxdim

#endif
