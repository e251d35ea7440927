#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ria/block_calculus.hpp"
#include "ria/spectral.hpp"

namespace ria {

/// Direction of the semidefinite inequality B X B* (rel) A.
enum class Relation { geq, gt, leq, lt };

std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);
bool is_strict(Relation r);
/// geq <-> leq, gt <-> lt.
Relation reversed(Relation r);

class SignConditionViolated : public InputError {
public:
    using InputError::InputError;
};

struct LmiProblem {
    HermitianMatrix a; // m x m
    Matrix b;          // m x n
    Relation rel = Relation::geq;

    int m() const { return a.order(); }
    int n() const { return b.cols(); }
};

/// Decision data for solvability of B X B* (rel) A.  Both equivalent
/// criterion forms are evaluated; they must agree.
struct FeasibilityCertificate {
    bool feasible = false;
    Relation rel = Relation::geq;
    bool projector_form = false; // condition on E_B A E_B and its rank
    bool inertia_form = false;   // condition on the bordered matrix counts

    Inertia core;     // inertia(E_B A E_B)
    int core_rank = 0;
    int eba_rank = 0; // r(E_B A)
    int eb_rank = 0;  // r(E_B)
    Inertia border;   // inertia[[A,B],[B*,0]]
    int row_rank = 0; // r[A, B]
    int b_rank = 0;   // r(B)
};

FeasibilityCertificate lmi_feasible(const LmiProblem& p, const ToleranceConfig& cfg = {});

/// The distinguished solution B+A(B+)* - B+AE_B(E_B A E_B)+E_B A(B+)*.
/// Total in (A, B); when the problem is solvable it equals the lower-right
/// corner of the pseudoinverse of [[-A, B],[B*, 0]], and that route is
/// cross-checked.
HermitianMatrix lmi_xhat(const HermitianMatrix& a, const Matrix& b,
                         const ToleranceConfig& cfg = {});

/// Complete parametric Hermitian solution family of a solvable LMI:
///   X(U, V) = X^ + U U* + F_B V + V* F_B          (geq / gt)
///   X(U, V) = X^ - U U* + F_B V + V* F_B          (leq / lt)
/// with U, V in C^{n x n} free.  Strict relations keep the same family but
/// constrain U through a rank side-condition; realize() rejects offending U.
/// Every realization is verified: the induced closed forms of B X B* and of
/// A - B X B* must match the direct products, and the relation itself must
/// hold exactly.
class LmiSolution {
public:
    const LmiProblem& problem() const { return prob_; }
    const HermitianMatrix& xhat() const { return xhat_; }
    const Matrix& kernel_projector() const { return fb_; }
    /// A E_B (E_B A E_B)+ E_B A, the fixed semidefinite part of the residual.
    const Matrix& residual_core() const { return corr_; }
    int param_order() const { return prob_.n(); }

    bool strict_param_ok(const Matrix& u) const;
    HermitianMatrix realize(const Matrix& u, const Matrix& v) const;
    /// Closed form of B X(U,V) B*; depends on U only.
    Matrix induced_bxb(const Matrix& u) const;
    /// Closed form of A - B X(U,V) B*.
    Matrix induced_residual(const Matrix& u) const;

private:
    friend LmiSolution lmi_general_solution(const LmiProblem&, const ToleranceConfig&);
    LmiProblem prob_;
    HermitianMatrix xhat_;
    Matrix fb_, corr_;
    ToleranceConfig cfg_;
};

LmiSolution lmi_general_solution(const LmiProblem& p, const ToleranceConfig& cfg = {});

/// The five closed-form identities satisfied by X^ plus the semidefinite
/// extremality of its residual, checked against sampled realizations.
struct XhatReport {
    Relation rel = Relation::geq;
    HermitianMatrix xhat;
    Inertia xhat_inertia, bxb_inertia, a_inertia, residual_inertia;
    int rank_a = 0, b_rank = 0, row_rank = 0;
    int dominance_samples = 0;
};

XhatReport xhat_properties(const LmiProblem& p, const ToleranceConfig& cfg = {},
                           int samples = 50, std::uint64_t seed = 1);

/// Semidefinite-extremal matrices of B X B* and B X B* - A over the solution
/// set, with the six extremal counts of B X B* and the two extremal ranks of
/// the difference.
struct SolutionSetExtremal {
    Relation rel = Relation::geq;
    HermitianMatrix extremal_bxb;      // minimal (geq) or maximal (leq)
    HermitianMatrix extremal_residual; // of B X B* - A
    int max_rank_bxb = 0, min_rank_bxb = 0;
    int max_iplus_bxb = 0, min_iplus_bxb = 0;
    int max_iminus_bxb = 0, min_iminus_bxb = 0;
    int max_rank_diff = 0, min_rank_diff = 0;
};

SolutionSetExtremal solution_set_extremal(const LmiProblem& p, const ToleranceConfig& cfg = {});

/// Semidefinite right-hand sides: feasibility collapses to a range test
/// (non-strict) or to full row rank of B (strict), and the solution family
/// loses its correction term.  Cases are labelled a-f in the order
/// (geq, gt, leq, lt, geq psd-X, gt psd-X).
struct PsdSpecialCertificate {
    char case_label = 'a';
    bool feasible = false;
    bool range_ok = false;      // R(A) ⊆ R(B)
    bool full_row_rank = false; // r(B) = m
};

class PsdSpecialSolution {
public:
    char case_label() const { return label_; }
    Relation relation() const { return rel_; }
    bool psd_x() const { return psd_x_; }
    const HermitianMatrix& base() const { return base_; }
    const Matrix& kernel_projector() const { return fb_; }

    /// X = base ± U U* (+ F_B V + V* F_B unless psd-X).  V is ignored for
    /// the psd-X cases.
    HermitianMatrix realize(const Matrix& u, const Matrix& v) const;
    /// Strict cases admit parameters whose realization is not strict; the
    /// caller decides what to do with flagged draws.
    bool realization_strict(const HermitianMatrix& x, const ToleranceConfig& cfg = {}) const;

private:
    friend std::pair<PsdSpecialCertificate, std::optional<PsdSpecialSolution>>
    psd_special_cases(const LmiProblem&, bool, const ToleranceConfig&);
    char label_ = 'a';
    Relation rel_ = Relation::geq;
    bool psd_x_ = false;
    LmiProblem prob_;
    HermitianMatrix base_;
    Matrix fb_;
    ToleranceConfig cfg_;
};

std::pair<PsdSpecialCertificate, std::optional<PsdSpecialSolution>>
psd_special_cases(const LmiProblem& p, bool psd_x = false, const ToleranceConfig& cfg = {});

} // namespace ria
