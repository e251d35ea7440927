#include "ria/loewner.hpp"

namespace ria {

std::string to_string(Sense s) { return s == Sense::max ? "max" : "min"; }

std::optional<LoewnerBound> loewner_extremal(const ConstrainedProblem& p, Sense sense,
                                             const ToleranceConfig& cfg) {
    if (p.kind != ConstraintKind::inequality || is_strict(p.rel))
        throw InputError("semidefinite-order bounds are defined for geq/leq constraints");
    if ((sense == Sense::max) != (p.rel == Relation::geq))
        throw InputError("the geq-constrained set has a max, the leq-constrained set a min");
    if (p.b1.rows() != p.m1() || p.b2.rows() != p.m2() || p.b1.cols() != p.b2.cols())
        throw DimensionMismatch("malformed constrained problem");

    FeasibilityCertificate cert = lmi_feasible({p.a2, p.b2, p.rel}, cfg);
    if (!cert.feasible)
        throw InfeasibleConstraint("constraint B2 X B2* " + to_string(p.rel) +
                                   " A2 has no Hermitian solution");

    Backend be = p.b1.backend();
    const int m1 = p.m1(), m2 = p.m2(), n = p.n();
    Matrix j = constraint_j(p.a2, p.b2);
    Matrix k = hcat(Matrix::zeros(m1, m2, be), p.b1); // m1 x (m2 + n)

    // Existence: the objective's coupling range must live inside R(J).
    if (rank(hcat(j, k.adjoint()), cfg) != rank(j, cfg)) return std::nullopt;

    Matrix jp = pinv(j, cfg);
    Matrix x0 = jp.submatrix(m2, m2, n, n);
    Matrix phi = p.a1.matrix() - k * jp * k.adjoint();
    double tol = be == Backend::exact ? 0.0 : cfg.hermitian_tol;

    LoewnerBound out;
    out.x0 = as_hermitian(x0, tol);
    out.phi = as_hermitian(phi, tol);
    out.phi_inertia = inertia(out.phi, cfg);

    // i±(Phi) = i±(M) - i±(J), and Phi is the generalized Schur complement
    // of J in the three-block matrix M.
    Inertia im = inertia(as_hermitian(constrained_m(p), tol), cfg);
    Inertia ij = inertia(as_hermitian(j, tol), cfg);
    out.m_inertia = im;
    out.j_inertia = ij;
    if (out.phi_inertia.plus != im.plus - ij.plus ||
        out.phi_inertia.minus != im.minus - ij.minus)
        throw VerificationError("extremal matrix inertia identity failed",
                                phi.to_pretty_string());
    Inertia via_schur = schur_complement_inertia(as_hermitian(j, tol), k.adjoint(), p.a1, cfg);
    if (!(via_schur == out.phi_inertia))
        throw VerificationError("Schur-complement reading of the extremal matrix failed",
                                phi.to_pretty_string());

    // X0 solves the constraint it extremizes over.
    Matrix slack = p.b2 * x0 * p.b2.adjoint() - p.a2.matrix();
    Inertia islack = inertia(as_hermitian(slack, tol), cfg);
    bool x0_feasible = p.rel == Relation::geq ? islack.minus == 0 : islack.plus == 0;
    if (!x0_feasible)
        throw VerificationError("extremizer is not itself feasible", x0.to_pretty_string());

    return out;
}

} // namespace ria
