#include "ria/linear_equations.hpp"

#include "ria/errors.hpp"

namespace ria {

namespace {
double htol(const Matrix& m, const ToleranceConfig& cfg) {
    return m.backend() == Backend::exact ? 0.0 : cfg.hermitian_tol;
}
} // namespace

Matrix ParametricAffineFamily::realize(const std::vector<Matrix>& params) const {
    if (params.size() != slots_.size())
        throw DimensionMismatch("expected " + std::to_string(slots_.size()) + " parameters");
    for (std::size_t k = 0; k < params.size(); ++k) {
        const ParamSlot& s = slots_[k];
        if (params[k].rows() != s.rows || params[k].cols() != s.cols)
            throw DimensionMismatch("parameter '" + s.name + "' must be " +
                                    std::to_string(s.rows) + "x" + std::to_string(s.cols));
        if (params[k].backend() != base_.backend())
            throw BackendMismatch("parameter backend differs from family backend");
        if (s.hermitian && params[k].backend() == Backend::exact &&
            !params[k].is_hermitian_literal())
            throw NotHermitian("parameter '" + s.name + "' must be Hermitian");
    }

    Matrix x = base_;
    switch (kind_) {
        case Kind::ax_b_hermitian:
            x = base_ + fa_ * params[0] * fa_;
            break;
        case Kind::ax_b_psd: {
            Matrix fu = fa_ * params[0];
            x = base_ + fu * fu.adjoint();
            break;
        }
        case Kind::axa_hermitian: {
            Matrix fv = fa_ * params[0];
            x = base_ + fv + fv.adjoint();
            break;
        }
        case Kind::axa_psd: {
            Matrix g = apinv_ + fa_ * params[0]; // a g-inverse of A
            Matrix fu = fa_ * params[1];
            x = g * b_ * g.adjoint() + fu * fu.adjoint();
            break;
        }
    }
    verify_realization(x);
    return x;
}

void ParametricAffineFamily::verify_realization(const Matrix& x) const {
    if (x.backend() != Backend::exact) return; // float families are best-effort
    bool ok = true;
    switch (kind_) {
        case Kind::ax_b_hermitian:
            ok = (a_ * x == b_) && x.is_hermitian_literal();
            break;
        case Kind::ax_b_psd:
            ok = (a_ * x == b_) && inertia(as_hermitian(x), cfg_).minus == 0;
            break;
        case Kind::axa_hermitian:
            ok = (a_ * x * a_.adjoint() == b_) && x.is_hermitian_literal();
            break;
        case Kind::axa_psd:
            ok = (a_ * x * a_.adjoint() == b_) && inertia(as_hermitian(x), cfg_).minus == 0;
            break;
    }
    if (!ok)
        throw VerificationError("realization violates its defining equation",
                                x.to_pretty_string());
}

ParametricAffineFamily solve_ax_b_hermitian(const Matrix& a, const Matrix& b,
                                            const ToleranceConfig& cfg) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("AX = B needs A and B of equal shape");
    if (!range_contains(a, b, cfg))
        throw InconsistentEquation("AX = B unsolvable: R(B) is not inside R(A)");
    Matrix abs = a * b.adjoint();
    double eqtol = a.backend() == Backend::exact ? 0.0 : cfg.hermitian_tol;
    if (!approx_equal(abs, b * a.adjoint(), eqtol))
        throw InconsistentEquation("AX = B has no Hermitian solution: AB* != BA*");

    ParametricAffineFamily fam;
    fam.kind_ = ParametricAffineFamily::Kind::ax_b_hermitian;
    fam.a_ = a;
    fam.b_ = b;
    fam.cfg_ = cfg;
    Matrix ap = pinv(a, cfg);
    Matrix apb = ap * b;
    fam.base_ = apb + apb.adjoint() - apb * ap * a;
    fam.fa_ = projectors(a, cfg).second.matrix();
    fam.slots_ = {{"U", a.cols(), a.cols(), true}};
    fam.realize({Matrix::zeros(a.cols(), a.cols(), a.backend())}); // self-check the base
    return fam;
}

ParametricAffineFamily solve_ax_b_psd(const Matrix& a, const Matrix& b,
                                      const ToleranceConfig& cfg) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("AX = B needs A and B of equal shape");
    if (!range_contains(a, b, cfg))
        throw InconsistentEquation("AX = B unsolvable: R(B) is not inside R(A)");
    Matrix abs = a * b.adjoint();
    if (!approx_equal(abs, abs.adjoint(), htol(abs, cfg)) ||
        inertia(as_hermitian(abs, htol(abs, cfg)), cfg).minus != 0)
        throw InconsistentEquation("AX = B has no psd solution: AB* is not psd");
    if (rank(abs, cfg) != rank(b, cfg))
        throw InconsistentEquation("AX = B has no psd solution: r(AB*) != r(B)");

    ParametricAffineFamily fam;
    fam.kind_ = ParametricAffineFamily::Kind::ax_b_psd;
    fam.a_ = a;
    fam.b_ = b;
    fam.cfg_ = cfg;
    fam.base_ = b.adjoint() * pinv(abs, cfg) * b;
    fam.fa_ = projectors(a, cfg).second.matrix();
    fam.slots_ = {{"U", a.cols(), a.cols(), false}};
    fam.realize({Matrix::zeros(a.cols(), a.cols(), a.backend())});
    return fam;
}

ParametricAffineFamily solve_axa_hermitian(const Matrix& a, const HermitianMatrix& b,
                                           const ToleranceConfig& cfg) {
    if (b.order() != a.rows())
        throw DimensionMismatch("A X A* = B needs order(B) = rows(A)");
    Matrix ap = pinv(a, cfg);
    if (!approx_equal(a * ap * b.matrix(), b.matrix(), htol(a, cfg)))
        throw InconsistentEquation("A X A* = B unsolvable: R(B) is not inside R(A)");

    ParametricAffineFamily fam;
    fam.kind_ = ParametricAffineFamily::Kind::axa_hermitian;
    fam.a_ = a;
    fam.b_ = b.matrix();
    fam.cfg_ = cfg;
    fam.base_ = ap * b.matrix() * ap.adjoint();
    fam.fa_ = projectors(a, cfg).second.matrix();
    fam.slots_ = {{"V", a.cols(), a.cols(), false}};
    fam.realize({Matrix::zeros(a.cols(), a.cols(), a.backend())});
    return fam;
}

ParametricAffineFamily solve_axa_psd(const Matrix& a, const HermitianMatrix& b,
                                     const ToleranceConfig& cfg) {
    if (b.order() != a.rows())
        throw DimensionMismatch("A X A* = B needs order(B) = rows(A)");
    if (inertia(b, cfg).minus != 0)
        throw InconsistentEquation("A X A* = B has no psd solution: B is not psd");
    Matrix ap = pinv(a, cfg);
    if (!approx_equal(a * ap * b.matrix(), b.matrix(), htol(a, cfg)))
        throw InconsistentEquation("A X A* = B unsolvable: R(B) is not inside R(A)");

    ParametricAffineFamily fam;
    fam.kind_ = ParametricAffineFamily::Kind::axa_psd;
    fam.a_ = a;
    fam.b_ = b.matrix();
    fam.cfg_ = cfg;
    fam.apinv_ = ap;
    fam.fa_ = projectors(a, cfg).second.matrix();
    fam.base_ = ap * b.matrix() * ap.adjoint();
    fam.slots_ = {{"V", a.cols(), a.rows(), false}, {"U", a.cols(), a.cols(), false}};
    fam.realize({Matrix::zeros(a.cols(), a.rows(), a.backend()),
                 Matrix::zeros(a.cols(), a.cols(), a.backend())});
    return fam;
}

} // namespace ria
