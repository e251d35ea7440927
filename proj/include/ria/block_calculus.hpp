#pragma once

#include <optional>

#include "ria/spectral.hpp"

namespace ria {

/// The Hermitian block [[A, B], [B*, 0]] built from A (m x m) and B (m x n).
struct BorderedPair {
    HermitianMatrix a;
    Matrix b;
};

Matrix bordered(const Matrix& a, const Matrix& b);

/// Every operation here evaluates both a closed-form expansion and the
/// direct computation, throws VerificationError if they disagree, and
/// returns the closed-form value.  The point of this module is trustworthy
/// formula evaluation, so the cross-check is not optional.

struct RankExpansion {
    int row_rank; // r[A, B]
    int col_rank; // r[A; C]
};

/// r[A,B] = r(A) + r(E_A B) = r(B) + r(E_B A) and the column-stack dual.
RankExpansion rank_expansion(const Matrix& a, const Matrix& b, const Matrix& c,
                             const ToleranceConfig& cfg = {});

/// i±[[A,B],[B*,0]] = r(B) + i±(E_B A E_B); definite special cases when
/// A is semidefinite are asserted as well.
Inertia bordered_inertia(const BorderedPair& p, const ToleranceConfig& cfg = {});

/// i±[[A,B],[B*,D]] expanded through the generalized Schur complement
/// D - B* A+ B; the range-inclusion shortcut is cross-checked when it
/// applies.
Inertia schur_inertia(const HermitianMatrix& a, const Matrix& b, const HermitianMatrix& d,
                      const ToleranceConfig& cfg = {});

/// Inertia of D - B* A+ B itself, via the bordered form with A*AA* blocks
/// (valid unconditionally) and via the plain bordered form when
/// R(B) ⊆ R(A).
Inertia schur_complement_inertia(const HermitianMatrix& a, const Matrix& b,
                                 const HermitianMatrix& d, const ToleranceConfig& cfg = {});

/// Closed-form pseudoinverse of the bordered matrix, applicable exactly when
/// r[[A,B],[B*,0]] = r[A,B] + r(B); returns nullopt otherwise.  The result
/// is verified against the four defining equations and against pinv().
std::optional<Matrix> bordered_pinv(const BorderedPair& p, const ToleranceConfig& cfg = {});

/// i±[[A, B F_P],[F_P B*, 0]] through the three-block bordered identity
/// minus r(P).
Inertia projected_border_inertia(const HermitianMatrix& a, const Matrix& b, const Matrix& p,
                                 const ToleranceConfig& cfg = {});

} // namespace ria
