#include "ria/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <vector>

#include "ria/errors.hpp"

namespace ria {

Inertia operator+(const Inertia& a, const Inertia& b) {
    return {a.plus + b.plus, a.minus + b.minus, a.zero + b.zero};
}

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "PD";
        case Definiteness::positive_semidefinite: return "PSD";
        case Definiteness::negative_definite: return "ND";
        case Definiteness::negative_semidefinite: return "NSD";
        case Definiteness::indefinite: return "INDEFINITE";
        case Definiteness::zero: return "ZERO";
    }
    return "?";
}

namespace {

using Q = GaussianRational;

// Row-major rational working copy.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Q> a;

    explicit QMat(const Matrix& m) : rows(m.rows()), cols(m.cols()) {
        a.reserve(static_cast<std::size_t>(rows) * cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.push_back(m.at(i, j).rat());
    }
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Q& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Q& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Matrix to_matrix() const {
        Matrix m(rows, cols, Backend::exact);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.set(i, j, Scalar::exact(at(i, j)));
        return m;
    }
};

int rank_exact(const Matrix& m) {
    QMat w(m);
    int r = 0;
    for (int col = 0; col < w.cols && r < w.rows; ++col) {
        int piv = -1;
        for (int i = r; i < w.rows; ++i)
            if (!w.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(r, j));
        for (int i = r + 1; i < w.rows; ++i) {
            if (w.at(i, col).is_zero()) continue;
            Q f = w.at(i, col) / w.at(r, col);
            for (int j = col; j < w.cols; ++j)
                w.at(i, j) = w.at(i, j) - f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

Eigen::MatrixXcd to_eigen(const Matrix& m) {
    Matrix f = m.lift();
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = f.at(i, j).cplx();
    return e;
}

Matrix from_eigen(const Eigen::MatrixXcd& e) {
    Matrix m(static_cast<int>(e.rows()), static_cast<int>(e.cols()), Backend::floating);
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) m.set(i, j, Scalar::floating(e(i, j)));
    return m;
}

void check_cfg(const ToleranceConfig& cfg) {
    if (!(cfg.rank_rel_tol > 0.0) || !(cfg.hermitian_tol > 0.0))
        throw InputError("tolerances must be positive");
}

int rank_float(const Matrix& m, const ToleranceConfig& cfg) {
    check_cfg(cfg);
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double smax = sv(0);
    if (smax == 0.0) return 0;
    double cutoff = cfg.rank_rel_tol * std::max(m.rows(), m.cols()) * smax;
    int r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cutoff) ++r;
    return r;
}

// Symmetric congruence reduction.  Each elimination step is X -> PXP* for
// nonsingular P, so the sign counts are preserved throughout.
Inertia inertia_exact(const Matrix& m) {
    const int n = m.rows();
    QMat w(m);
    std::vector<bool> active(n, true);
    Inertia out;

    auto eliminate_with_diagonal = [&](int k) {
        const Q piv = w.at(k, k);
        std::vector<Q> coef(n);
        for (int r = 0; r < n; ++r)
            if (active[r] && r != k) coef[r] = w.at(r, k) / piv;
        for (int r = 0; r < n; ++r) {
            if (!active[r] || r == k || coef[r].is_zero()) continue;
            for (int c = 0; c < n; ++c)
                if (active[c]) w.at(r, c) = w.at(r, c) - coef[r] * w.at(k, c);
        }
        for (int r = 0; r < n; ++r) {
            if (!active[r] || r == k) continue;
            w.at(k, r) = Q{};
            w.at(r, k) = Q{};
        }
    };

    int remaining = n;
    while (remaining > 0) {
        int diag = -1;
        for (int k = 0; k < n; ++k)
            if (active[k] && !w.at(k, k).is_zero()) { diag = k; break; }

        if (diag >= 0) {
            eliminate_with_diagonal(diag);
            if (sgn(w.at(diag, diag).re()) > 0) ++out.plus; else ++out.minus;
            active[diag] = false;
            --remaining;
            continue;
        }

        // All active diagonal entries are zero; look for an off-diagonal
        // coupling.  None left means the active block is zero.
        int p = -1, q = -1;
        for (int i = 0; i < n && p < 0; ++i) {
            if (!active[i]) continue;
            for (int j = i + 1; j < n; ++j)
                if (active[j] && !w.at(i, j).is_zero()) { p = i; q = j; break; }
        }
        if (p < 0) {
            out.zero += remaining;
            break;
        }

        // Antidiagonal 2x2 pivot [[0, a],[conj(a), 0]]: contributes (1, 1).
        const Q a = w.at(p, q);
        std::vector<Q> xc(n), yc(n);
        for (int r = 0; r < n; ++r) {
            if (!active[r] || r == p || r == q) continue;
            xc[r] = w.at(r, q) / a;          // coefficient on row p
            yc[r] = w.at(r, p) / a.conj();   // coefficient on row q
        }
        for (int r = 0; r < n; ++r) {
            if (!active[r] || r == p || r == q) continue;
            if (xc[r].is_zero() && yc[r].is_zero()) continue;
            for (int c = 0; c < n; ++c)
                if (active[c])
                    w.at(r, c) = w.at(r, c) - xc[r] * w.at(p, c) - yc[r] * w.at(q, c);
        }
        for (int r = 0; r < n; ++r) {
            if (!active[r] || r == p || r == q) continue;
            w.at(p, r) = Q{};
            w.at(q, r) = Q{};
            w.at(r, p) = Q{};
            w.at(r, q) = Q{};
        }
        ++out.plus;
        ++out.minus;
        active[p] = active[q] = false;
        remaining -= 2;
    }
    return out;
}

Inertia inertia_float(const Matrix& m, const ToleranceConfig& cfg) {
    check_cfg(cfg);
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m));
    if (es.info() != Eigen::Success)
        throw VerificationError("float eigenvalue decomposition failed");
    const auto& ev = es.eigenvalues();
    double lmax = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) lmax = std::max(lmax, std::abs(ev(k)));
    double cutoff = cfg.rank_rel_tol * m.rows() * lmax;
    Inertia out;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (ev(k) > cutoff) ++out.plus;
        else if (ev(k) < -cutoff) ++out.minus;
        else ++out.zero;
    }
    return out;
}

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMat& w) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < w.cols && r < w.rows; ++col) {
        int piv = -1;
        for (int i = r; i < w.rows; ++i)
            if (!w.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(r, j));
        Q inv = Q::integer(1) / w.at(r, col);
        for (int j = col; j < w.cols; ++j) w.at(r, j) = w.at(r, j) * inv;
        for (int i = 0; i < w.rows; ++i) {
            if (i == r || w.at(i, col).is_zero()) continue;
            Q f = w.at(i, col);
            for (int j = col; j < w.cols; ++j)
                w.at(i, j) = w.at(i, j) - f * w.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

Matrix inverse_exact(const Matrix& m) {
    const int n = m.rows();
    QMat w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j).rat();
        w.at(i, n + i) = Q::integer(1);
    }
    std::vector<int> piv = rref(w);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1)
        throw VerificationError("inverse of a singular matrix requested");
    QMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
    return out.to_matrix();
}

bool penrose_equations_hold(const Matrix& m, const Matrix& g) {
    Matrix mg = m * g, gm = g * m;
    return mg * m == m && gm * g == g && mg.adjoint() == mg && gm.adjoint() == gm;
}

Matrix pinv_exact(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    QMat w(m);
    std::vector<int> piv = rref(w);
    const int r = static_cast<int>(piv.size());
    if (r == 0) return Matrix::zeros(cols, rows, Backend::exact);

    // Full-rank factorization M = F G: F = pivot columns of M, G = nonzero
    // rows of the reduced echelon form.
    Matrix f(rows, r, Backend::exact), g(r, cols, Backend::exact);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < rows; ++i) f.set(i, k, m.at(i, piv[k]));
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < cols; ++j) g.set(k, j, Scalar::exact(w.at(k, j)));

    Matrix gs = g.adjoint(), fs = f.adjoint();
    Matrix result = gs * inverse_exact(g * gs) * inverse_exact(fs * f) * fs;
    if (!penrose_equations_hold(m, result))
        throw VerificationError("pseudoinverse failed its defining equations",
                                m.to_pretty_string());
    return result;
}

Matrix pinv_float(const Matrix& m, const ToleranceConfig& cfg) {
    check_cfg(cfg);
    if (m.rows() == 0 || m.cols() == 0) return Matrix::zeros(m.cols(), m.rows(), Backend::floating);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    double cutoff = cfg.rank_rel_tol * std::max(m.rows(), m.cols()) * smax;
    Eigen::VectorXd inv = sv;
    for (Eigen::Index k = 0; k < sv.size(); ++k) inv(k) = sv(k) > cutoff ? 1.0 / sv(k) : 0.0;
    Eigen::MatrixXcd p = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
    return from_eigen(p);
}

} // namespace

int rank(const Matrix& m, const ToleranceConfig& cfg) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return m.backend() == Backend::exact ? rank_exact(m) : rank_float(m, cfg);
}

Inertia inertia(const HermitianMatrix& h, const ToleranceConfig& cfg) {
    const Matrix& m = h.matrix();
    if (m.rows() == 0) return {};
    return m.backend() == Backend::exact ? inertia_exact(m) : inertia_float(m, cfg);
}

Matrix pinv(const Matrix& m, const ToleranceConfig& cfg) {
    return m.backend() == Backend::exact ? pinv_exact(m) : pinv_float(m, cfg);
}

std::pair<HermitianMatrix, HermitianMatrix> projectors(const Matrix& m,
                                                       const ToleranceConfig& cfg) {
    Matrix g = pinv(m, cfg);
    Matrix e = Matrix::identity(m.rows(), m.backend()) - m * g;
    Matrix f = Matrix::identity(m.cols(), m.backend()) - g * m;
    double tol = m.backend() == Backend::exact ? 0.0 : cfg.hermitian_tol;
    return {as_hermitian(e, tol), as_hermitian(f, tol)};
}

Definiteness classify(const Inertia& i) {
    if (i.plus == 0 && i.minus == 0) return Definiteness::zero;
    if (i.minus == 0) return i.zero == 0 ? Definiteness::positive_definite
                                         : Definiteness::positive_semidefinite;
    if (i.plus == 0) return i.zero == 0 ? Definiteness::negative_definite
                                        : Definiteness::negative_semidefinite;
    return Definiteness::indefinite;
}

Definiteness loewner_compare(const HermitianMatrix& h1, const HermitianMatrix& h2,
                             const ToleranceConfig& cfg) {
    if (h1.order() != h2.order())
        throw DimensionMismatch("order mismatch in semidefinite comparison");
    Matrix d = h1.matrix() - h2.matrix();
    double tol = d.backend() == Backend::exact ? 0.0 : cfg.hermitian_tol;
    return classify(inertia(as_hermitian(d, tol), cfg));
}

bool is_psd(const HermitianMatrix& h, const ToleranceConfig& cfg) {
    return inertia(h, cfg).minus == 0;
}

bool is_nsd(const HermitianMatrix& h, const ToleranceConfig& cfg) {
    return inertia(h, cfg).plus == 0;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    if (m.backend() == Backend::exact) return inverse_exact(m);
    Eigen::MatrixXcd e = to_eigen(m);
    return from_eigen(e.inverse());
}

bool range_contains(const Matrix& a, const Matrix& b, const ToleranceConfig& cfg) {
    if (a.rows() != b.rows()) throw DimensionMismatch("range test needs equal row counts");
    return rank(hcat(a, b), cfg) == rank(a, cfg);
}

std::vector<double> singular_values(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m.lift()));
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

} // namespace ria
