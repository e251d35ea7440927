#pragma once

#include <utility>

#include "ria/matrix.hpp"

namespace ria {

/// Eigenvalue sign counts of a Hermitian matrix.  Integer-valued; the
/// central objective of every optimization routine in this library.
struct Inertia {
    int plus = 0;
    int minus = 0;
    int zero = 0;

    int order() const { return plus + minus + zero; }
    int rank() const { return plus + minus; }
    Inertia swapped() const { return {minus, plus, zero}; }

    bool operator==(const Inertia&) const = default;
};

Inertia operator+(const Inertia& a, const Inertia& b);

struct ToleranceConfig {
    /// Relative singular-value cutoff for float rank decisions.
    double rank_rel_tol = 2.220446049250313e-16;
    /// Allowed asymmetry when certifying float matrices Hermitian.
    double hermitian_tol = 1e-12;
};

/// Classification of a Hermitian matrix (or difference) in the semidefinite
/// order.
enum class Definiteness {
    positive_definite,
    positive_semidefinite, // singular but no negative eigenvalues
    negative_definite,
    negative_semidefinite,
    indefinite,
    zero,
};

std::string to_string(Definiteness d);

/// Rank.  Exact backend: Gaussian elimination over the rationals, no
/// tolerance involved.  Float backend: singular values above
/// rank_rel_tol * max(m,n) * sigma_max.
int rank(const Matrix& m, const ToleranceConfig& cfg = {});

/// Inertia via symmetric congruence reduction (exact) or eigenvalue signs
/// (float).  Zero diagonals with nonzero off-diagonal couplings are handled
/// by an antidiagonal 2x2 pivot contributing one positive and one negative
/// count.
Inertia inertia(const HermitianMatrix& h, const ToleranceConfig& cfg = {});

/// Moore-Penrose inverse.  Exact backend: full-rank factorization M = FG and
/// M+ = G*(GG*)^-1 (F*F)^-1 F*; result verified against all four defining
/// equations.  Always exists; pinv(0) = 0 of transposed shape.
Matrix pinv(const Matrix& m, const ToleranceConfig& cfg = {});

/// The orthogonal projectors (E_M, F_M) = (I - M M+, I - M+ M) onto the
/// cokernel and kernel of M.
std::pair<HermitianMatrix, HermitianMatrix> projectors(const Matrix& m,
                                                       const ToleranceConfig& cfg = {});

Definiteness classify(const Inertia& i);
Definiteness loewner_compare(const HermitianMatrix& h1, const HermitianMatrix& h2,
                             const ToleranceConfig& cfg = {});

bool is_psd(const HermitianMatrix& h, const ToleranceConfig& cfg = {});
bool is_nsd(const HermitianMatrix& h, const ToleranceConfig& cfg = {});

/// Exact inverse of a nonsingular square matrix (Gauss-Jordan); throws
/// VerificationError if the matrix turns out singular.
Matrix inverse(const Matrix& m);

/// Range inclusion R(b) ⊆ R(a), decided by the rank test r[a, b] = r(a).
bool range_contains(const Matrix& a, const Matrix& b, const ToleranceConfig& cfg = {});

/// Descending singular values, computed in floating point (exact input is
/// lifted).  Used for conditioning diagnostics only.
std::vector<double> singular_values(const Matrix& m);

} // namespace ria
