#include "ria/matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ria {

Matrix::Matrix(int rows, int cols, Backend backend)
    : rows_(rows), cols_(cols), backend_(backend) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    Scalar zero = backend == Backend::exact ? Scalar::exact(0) : Scalar::floating({0.0, 0.0});
    entries_.assign(static_cast<std::size_t>(rows) * cols, zero);
}

Matrix Matrix::zeros(int rows, int cols, Backend backend) {
    return Matrix(rows, cols, backend);
}

Matrix Matrix::identity(int n, Backend backend) {
    Matrix m(n, n, backend);
    Scalar one = backend == Backend::exact ? Scalar::exact(1) : Scalar::floating({1.0, 0.0});
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    if (d.empty()) return Matrix(0, 0, Backend::exact);
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), d.front().backend());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

Matrix Matrix::from_int(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(r, c, Backend::exact);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw DimensionMismatch("ragged integer literal");
        int j = 0;
        for (long v : row) m.set(i, j++, Scalar::exact(v));
        ++i;
    }
    return m;
}

Matrix Matrix::block(const std::vector<std::vector<Matrix>>& grid) {
    if (grid.empty()) return Matrix();
    const std::size_t ncols_blocks = grid.front().size();
    for (const auto& row : grid)
        if (row.size() != ncols_blocks) throw DimensionMismatch("ragged block grid");
    if (ncols_blocks == 0) return Matrix();

    Backend be = grid[0][0].backend();
    std::vector<int> row_heights(grid.size()), col_widths(ncols_blocks);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        row_heights[i] = grid[i][0].rows();
        for (std::size_t j = 0; j < ncols_blocks; ++j) {
            if (grid[i][j].backend() != be) throw BackendMismatch("mixed backends in block grid");
            if (grid[i][j].rows() != row_heights[i])
                throw DimensionMismatch("block row heights disagree");
        }
    }
    for (std::size_t j = 0; j < ncols_blocks; ++j) {
        col_widths[j] = grid[0][j].cols();
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (grid[i][j].cols() != col_widths[j])
                throw DimensionMismatch("block column widths disagree");
    }

    int total_rows = 0, total_cols = 0;
    for (int h : row_heights) total_rows += h;
    for (int w : col_widths) total_cols += w;

    Matrix out(total_rows, total_cols, be);
    int roff = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        int coff = 0;
        for (std::size_t j = 0; j < ncols_blocks; ++j) {
            const Matrix& blk = grid[i][j];
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c)
                    out.set(roff + r, coff + c, blk.at(r, c));
            coff += col_widths[j];
        }
        roff += row_heights[i];
    }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

const Scalar& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionMismatch("matrix index out of range");
    return entries_[idx(i, j)];
}

void Matrix::set(int i, int j, Scalar s) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionMismatch("matrix index out of range");
    if (s.backend() != backend_) throw BackendMismatch("entry backend differs from matrix backend");
    entries_[idx(i, j)] = std::move(s);
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_, backend_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.set(j, i, at(i, j).conj());
    return out;
}

void Matrix::check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix shapes differ");
    if (backend_ != o.backend_)
        throw BackendMismatch("mixed exact/float matrices; lift() explicitly first");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(rows_, cols_, backend_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + o.entries_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(rows_, cols_, backend_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - o.entries_[k];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_, backend_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("inner dimensions differ in product");
    if (backend_ != o.backend_)
        throw BackendMismatch("mixed exact/float matrices; lift() explicitly first");
    Matrix out(rows_, o.cols_, backend_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                out.entries_[out.idx(i, j)] = out.entries_[out.idx(i, j)] + aik * o.at(k, j);
        }
    }
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (s.backend() != backend_) throw BackendMismatch("scale factor backend differs");
    Matrix out(rows_, cols_, backend_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * s;
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || backend_ != o.backend_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!(entries_[k] == o.entries_[k])) return false;
    return true;
}

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || nrows < 0 || ncols < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw DimensionMismatch("submatrix range out of bounds");
    Matrix out(nrows, ncols, backend_);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j)
            out.set(i, j, at(r0 + i, c0 + j));
    return out;
}

Matrix Matrix::lift() const {
    if (backend_ == Backend::floating) return *this;
    Matrix out(rows_, cols_, Backend::floating);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.set(i, j, at(i, j).lift());
    return out;
}

double Matrix::max_asymmetry() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Scalar d = at(i, j) - at(j, i).conj();
            worst = std::max(worst, d.abs());
        }
    return worst;
}

bool Matrix::is_hermitian_literal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (!(at(i, j) == at(j, i).conj())) return false;
    return true;
}

std::string Matrix::to_pretty_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " " << to_string(backend_) << " [";
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : "; [");
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            const Scalar& s = at(i, j);
            if (s.backend() == Backend::exact) {
                os << format_rational(s.rat().re());
                if (!s.rat().is_real()) os << (sgn(s.rat().im()) > 0 ? "+" : "") << format_rational(s.rat().im()) << "i";
            } else {
                os << format_double(s.cplx().real());
                if (s.cplx().imag() != 0.0) os << (s.cplx().imag() > 0 ? "+" : "") << format_double(s.cplx().imag()) << "i";
            }
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix hcat(const Matrix& a, const Matrix& b) { return Matrix::block({{a, b}}); }
Matrix vcat(const Matrix& a, const Matrix& b) { return Matrix::block({{a}, {b}}); }

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.backend() != b.backend()) return false;
    if (a.backend() == Backend::exact) return a == b;
    double scale = 1.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            scale = std::max({scale, a.at(i, j).abs(), b.at(i, j).abs()});
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if ((a.at(i, j) - b.at(i, j)).abs() > tol * scale) return false;
    return true;
}

HermitianMatrix as_hermitian(const Matrix& m, double tol) {
    if (!m.is_square()) throw NotHermitian("non-square matrix cannot be Hermitian");
    if (m.backend() == Backend::exact) {
        if (!m.is_hermitian_literal())
            throw NotHermitian("exact matrix is not literally Hermitian");
        return HermitianMatrix(m);
    }
    double asym = m.max_asymmetry();
    if (asym > tol)
        throw NotHermitian("asymmetry " + format_double(asym) + " exceeds tolerance " +
                           format_double(tol));
    // Symmetrize to (M + M*)/2 so downstream code sees an exactly Hermitian value.
    Matrix sym = (m + m.adjoint()).scaled(Scalar::floating({0.5, 0.0}));
    for (int i = 0; i < sym.rows(); ++i)
        sym.set(i, i, Scalar::floating({sym.at(i, i).cplx().real(), 0.0}));
    return HermitianMatrix(sym);
}

} // namespace ria
