#pragma once

#include <string>
#include <vector>

#include "ria/spectral.hpp"

namespace ria {

struct ParamSlot {
    std::string name;
    int rows = 0;
    int cols = 0;
    bool hermitian = false; // slot accepts Hermitian parameters only
};

/// Closed-form solution family of a linear matrix equation.  realize()
/// substitutes concrete parameter matrices and, on the exact backend,
/// verifies the defining equation bit-exactly before returning (these
/// families exist to be trusted, so every realization is checked).
class ParametricAffineFamily {
public:
    enum class Kind {
        ax_b_hermitian, // AX = B,  X Hermitian
        ax_b_psd,       // AX = B,  X >= 0
        axa_hermitian,  // A X A* = B,  X Hermitian
        axa_psd,        // A X A* = B,  X >= 0
    };

    Kind kind() const { return kind_; }
    const std::vector<ParamSlot>& slots() const { return slots_; }
    /// The particular solution: realize() with every parameter zero.
    const Matrix& base() const { return base_; }
    /// The kernel projector F_A the free terms are built from.
    const Matrix& projector() const { return fa_; }

    Matrix realize(const std::vector<Matrix>& params) const;

private:
    friend ParametricAffineFamily solve_ax_b_hermitian(const Matrix&, const Matrix&,
                                                       const ToleranceConfig&);
    friend ParametricAffineFamily solve_ax_b_psd(const Matrix&, const Matrix&,
                                                 const ToleranceConfig&);
    friend ParametricAffineFamily solve_axa_hermitian(const Matrix&, const HermitianMatrix&,
                                                      const ToleranceConfig&);
    friend ParametricAffineFamily solve_axa_psd(const Matrix&, const HermitianMatrix&,
                                                const ToleranceConfig&);

    Kind kind_ = Kind::ax_b_hermitian;
    Matrix a_, b_;      // the defining equation's data
    Matrix base_, fa_;  // particular solution and kernel projector
    Matrix apinv_;      // A+, kept for the g-inverse parametrization
    std::vector<ParamSlot> slots_;
    ToleranceConfig cfg_;

    void verify_realization(const Matrix& x) const;
};

/// AX = B with X Hermitian; solvable iff R(B) ⊆ R(A) and AB* = BA*.
/// Family: A+B + (A+B)* - A+BA+A + F_A U F_A with U Hermitian.
ParametricAffineFamily solve_ax_b_hermitian(const Matrix& a, const Matrix& b,
                                            const ToleranceConfig& cfg = {});

/// AX = B with X ⪰ 0; solvable iff R(B) ⊆ R(A), AB* ⪰ 0, r(AB*) = r(B).
/// Family: B*(AB*)+B + F_A U U* F_A with U arbitrary.
ParametricAffineFamily solve_ax_b_psd(const Matrix& a, const Matrix& b,
                                      const ToleranceConfig& cfg = {});

/// A X A* = B with X Hermitian; solvable iff A A+ B = B.
/// Family: A+B(A+)* + F_A V + V* F_A with V arbitrary.
ParametricAffineFamily solve_axa_hermitian(const Matrix& a, const HermitianMatrix& b,
                                           const ToleranceConfig& cfg = {});

/// A X A* = B with X ⪰ 0; solvable iff B ⪰ 0 and R(B) ⊆ R(A).
/// Family: (A+ + F_A V) B (A+ + F_A V)* + F_A U U* F_A, V and U arbitrary
/// (the V term ranges over all g-inverses of A).
ParametricAffineFamily solve_axa_psd(const Matrix& a, const HermitianMatrix& b,
                                     const ToleranceConfig& cfg = {});

} // namespace ria
