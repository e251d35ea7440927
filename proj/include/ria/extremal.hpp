#pragma once

#include <array>
#include <map>

#include "ria/lmi.hpp"

namespace ria {

enum class ConstraintKind { inequality, equality };

/// Optimize rank/inertia of A1 - B1 X B1* over Hermitian X subject to
/// B2 X B2* (rel) A2, or to the equation B2 X B2* = A2.
struct ConstrainedProblem {
    HermitianMatrix a1;
    Matrix b1;
    HermitianMatrix a2;
    Matrix b2;
    Relation rel = Relation::geq;
    ConstraintKind kind = ConstraintKind::inequality;

    int m1() const { return a1.order(); }
    int m2() const { return a2.order(); }
    int n() const { return b1.cols(); }
};

/// One yes/no attribute of a feasible set, evaluated twice: from its own
/// closed-form criterion and from the extremal values through the
/// rank/inertia dictionary (nonsingular attainable iff max rank = order,
/// and so on).  The two routes must agree.
struct PredicateResult {
    bool closed_form = false;
    bool from_report = false;
    bool agree() const { return closed_form == from_report; }
};

using PropertyBattery = std::map<std::string, PredicateResult>;

struct ExtremalReport {
    int max_rank = 0, min_rank = 0;
    int max_iplus = 0, min_iplus = 0;
    int max_iminus = 0, min_iminus = 0;
    /// Every block rank/inertia the closed forms consumed, by name, so a
    /// wrong value is diagnosable to a single ingredient.
    std::map<std::string, int> ingredients;
    PropertyBattery properties;

    std::array<int, 6> six() const {
        return {max_rank, min_rank, max_iplus, min_iplus, max_iminus, min_iminus};
    }
    /// i+ <-> i- everywhere, as under negation of the matrix function.
    ExtremalReport sign_swapped() const;
};

/// Block matrices shared by the constrained formulas.
Matrix constrained_m(const ConstrainedProblem& p); // [[A1,0,B1],[0,-A2,B2],[B1*,B2*,0]]
Matrix constrained_n(const ConstrainedProblem& p); // [[A1,B1,0],[B1*,0,B2*]]
Matrix constraint_j(const HermitianMatrix& a2, const Matrix& b2); // [[-A2,B2],[B2*,0]]

/// Free optimization of A - B X B* over all Hermitian X.
ExtremalReport unconstrained_extremal(const HermitianMatrix& a, const Matrix& b,
                                      const ToleranceConfig& cfg = {});

/// Free optimization of A - B X C - (B X C)* over rectangular X; the
/// range-inclusion and C = I specializations are cross-checked against the
/// general formulas whenever they apply.
ExtremalReport congruence_extremal(const HermitianMatrix& a, const Matrix& b, const Matrix& c,
                                   const ToleranceConfig& cfg = {});

/// Free optimization of A + sign * B X X* B* over X with k columns; at
/// k = n the dedicated square-case formulas are verified against the
/// general ones.
ExtremalReport quadratic_extremal(const HermitianMatrix& a, const Matrix& b, int k, int sign,
                                  const ToleranceConfig& cfg = {});

/// Optimization subject to B2 X B2* = A2 (consistency required).
ExtremalReport equality_constrained_extremal(const ConstrainedProblem& p,
                                             const ToleranceConfig& cfg = {});

/// Optimization subject to B2 X B2* >= A2 or <= A2 (feasibility required,
/// and re-verified here).
ExtremalReport inequality_constrained_extremal(const ConstrainedProblem& p,
                                               const ToleranceConfig& cfg = {});

/// The full predicate battery for a constrained problem; throws
/// VerificationError if any predicate's two evaluation routes disagree.
PropertyBattery analyze_constrained(const ConstrainedProblem& p, const ToleranceConfig& cfg = {});

/// Extremal rank/inertia of the solution X itself over {X : B X B* rel A},
/// with the battery of structural consequences.
ExtremalReport solution_inertia_extremal(const LmiProblem& p, const ToleranceConfig& cfg = {});

/// Which principal block of the solution to optimize once the unknown is
/// split as X = [[X1, X2], [X2*, X3]] against B = [B1, B2].
struct SubmatrixSelector {
    int n1 = 0;
    int n2 = 0;
    enum class Which { x1, x3 } which = Which::x1;

    int selected_order() const { return which == Which::x1 ? n1 : n2; }
    /// The slicing map P with X_sel = P X P*.
    Matrix selector(Backend be = Backend::exact) const;
};

/// Extremal rank/inertia of X1 (or X3) over the Hermitian solutions of
/// [B1, B2] X [B1, B2]* (rel) A.  Inequality cases evaluate the dedicated
/// formulas and the reduction onto the constrained engine (objective
/// -X_sel), which must agree; the equality case is computed by the
/// reduction alone.
ExtremalReport submatrix_extremal(const HermitianMatrix& a, const Matrix& b1, const Matrix& b2,
                                  const SubmatrixSelector& sel, Relation rel,
                                  ConstraintKind kind = ConstraintKind::inequality,
                                  const ToleranceConfig& cfg = {});

} // namespace ria
