#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ria/scalar.hpp"

namespace ria {

/// Dense row-major matrix with a uniform backend across entries.
/// Immutable in spirit: operations return new values, nothing is shared.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, Backend backend);

    static Matrix zeros(int rows, int cols, Backend backend = Backend::exact);
    static Matrix identity(int n, Backend backend = Backend::exact);
    static Matrix diagonal(const std::vector<Scalar>& d);
    /// Exact matrix from integer literals, e.g. {{1,0},{0,-1}}.
    static Matrix from_int(std::initializer_list<std::initializer_list<long>> rows);
    /// Assembles a block matrix from a conformable grid; throws
    /// DimensionMismatch on ragged rows/columns.
    static Matrix block(const std::vector<std::vector<Matrix>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Backend backend() const { return backend_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Scalar& at(int i, int j) const;
    void set(int i, int j, Scalar s);

    Matrix adjoint() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& o) const;

    Matrix submatrix(int r0, int c0, int nrows, int ncols) const;

    /// Exact -> float conversion of every entry; float input is returned as is.
    Matrix lift() const;

    /// Largest entrywise |M[i][j] - conj(M[j][i])| (float backend helper).
    double max_asymmetry() const;
    bool is_hermitian_literal() const;

    std::string to_pretty_string() const;

private:
    int rows_ = 0, cols_ = 0;
    Backend backend_ = Backend::exact;
    std::vector<Scalar> entries_; // row-major, rows_*cols_

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
    void check_same_shape(const Matrix& o) const;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);

/// Entrywise equality: exact backend literal, float backend within
/// tol * (1 + largest magnitude present).
bool approx_equal(const Matrix& a, const Matrix& b, double tol);

/// Square matrix certified equal to its own adjoint.  Exact backend: literal
/// equality required.  Float backend: asymmetry must stay within tol, then
/// the matrix is symmetrized to (M + M*)/2.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    const Matrix& matrix() const { return m_; }
    operator const Matrix&() const { return m_; }
    int order() const { return m_.rows(); }
    Backend backend() const { return m_.backend(); }

    friend HermitianMatrix as_hermitian(const Matrix& m, double tol);

private:
    explicit HermitianMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

HermitianMatrix as_hermitian(const Matrix& m, double tol = 0.0);

} // namespace ria
