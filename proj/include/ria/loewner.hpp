#pragma once

#include <optional>

#include "ria/extremal.hpp"

namespace ria {

enum class Sense { max, min };

std::string to_string(Sense s);

/// A semidefinite-order extremal element of {A1 - B1 X B1*} over the
/// constraint's solution set: Phi = A1 - B1 X0 B1* dominates (sense max)
/// or is dominated by (sense min) every member.
struct LoewnerBound {
    HermitianMatrix x0;
    HermitianMatrix phi;
    Inertia phi_inertia;
    // Ingredients of the identity i±(phi) = i±(M) - i±(J).
    Inertia m_inertia;
    Inertia j_inertia;
};

/// Computes the extremal matrix when it exists.  The sense is tied to the
/// constraint direction: an upper bound over the geq-constrained set, a
/// lower bound over the leq-constrained set; the shared extremizer X0 is the
/// solution-set corner of the constraint's bordered pseudoinverse.
///
/// Returns nullopt when the feasible set is nonempty but no extremal element
/// exists (the range condition fails); throws InfeasibleConstraint when the
/// constraint itself is unsolvable.
std::optional<LoewnerBound> loewner_extremal(const ConstrainedProblem& p, Sense sense,
                                             const ToleranceConfig& cfg = {});

} // namespace ria
