#include "ria/block_calculus.hpp"

#include <sstream>

#include "ria/errors.hpp"

namespace ria {

namespace {

void require_identity(bool ok, const std::string& name, const Matrix& a, const Matrix& b) {
    if (ok) return;
    std::ostringstream os;
    os << "A=" << a.to_pretty_string() << " B=" << b.to_pretty_string();
    throw VerificationError("identity check failed: " + name, os.str());
}

double hermitian_tol(const Matrix& m, const ToleranceConfig& cfg) {
    return m.backend() == Backend::exact ? 0.0 : cfg.hermitian_tol;
}

} // namespace

Matrix bordered(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw DimensionMismatch("bordered block needs square A with matching B rows");
    return Matrix::block({{a, b}, {b.adjoint(), Matrix::zeros(b.cols(), b.cols(), a.backend())}});
}

RankExpansion rank_expansion(const Matrix& a, const Matrix& b, const Matrix& c,
                             const ToleranceConfig& cfg) {
    if (b.rows() != a.rows()) throw DimensionMismatch("B must share A's row count");
    if (c.cols() != a.cols()) throw DimensionMismatch("C must share A's column count");

    auto [ea, fa] = projectors(a, cfg);
    int ra = rank(a, cfg);

    int row_direct = rank(hcat(a, b), cfg);
    int row_via_ea = ra + rank(ea.matrix() * b, cfg);
    int row_via_eb = rank(b, cfg) + rank(projectors(b, cfg).first.matrix() * a, cfg);
    require_identity(row_direct == row_via_ea && row_direct == row_via_eb,
                     "row-block rank expansion", a, b);

    int col_direct = rank(vcat(a, c), cfg);
    int col_via_fa = ra + rank(c * fa.matrix(), cfg);
    int col_via_fc = rank(c, cfg) + rank(a * projectors(c, cfg).second.matrix(), cfg);
    require_identity(col_direct == col_via_fa && col_direct == col_via_fc,
                     "column-block rank expansion", a, c);

    return {row_direct, col_direct};
}

Inertia bordered_inertia(const BorderedPair& p, const ToleranceConfig& cfg) {
    const Matrix& a = p.a.matrix();
    const Matrix& b = p.b;
    Matrix m1 = bordered(a, b);

    Matrix eb = projectors(b, cfg).first.matrix();
    Matrix core = eb * a * eb;
    Inertia icore = inertia(as_hermitian(core, hermitian_tol(core, cfg)), cfg);
    int rb = rank(b, cfg);

    Inertia closed{rb + icore.plus, rb + icore.minus,
                   m1.rows() - 2 * rb - icore.plus - icore.minus};
    Inertia direct = inertia(as_hermitian(m1, hermitian_tol(m1, cfg)), cfg);
    require_identity(closed == direct, "bordered inertia expansion", a, b);

    // Semidefinite A collapses the counts to r[A,B] and r(B).
    Inertia ia = inertia(p.a, cfg);
    int rab = rank(hcat(a, b), cfg);
    if (ia.minus == 0)
        require_identity(direct.plus == rab && direct.minus == rb,
                         "bordered inertia, A psd case", a, b);
    if (ia.plus == 0)
        require_identity(direct.plus == rb && direct.minus == rab,
                         "bordered inertia, A nsd case", a, b);
    return direct;
}

Inertia schur_inertia(const HermitianMatrix& a, const Matrix& b, const HermitianMatrix& d,
                      const ToleranceConfig& cfg) {
    if (b.rows() != a.order() || b.cols() != d.order())
        throw DimensionMismatch("inner block B must be (order A) x (order D)");

    Matrix m2 = Matrix::block({{a.matrix(), b}, {b.adjoint(), d.matrix()}});
    Inertia direct = inertia(as_hermitian(m2, hermitian_tol(m2, cfg)), cfg);

    Matrix ea = projectors(a.matrix(), cfg).first.matrix();
    Matrix schur = d.matrix() - b.adjoint() * pinv(a.matrix(), cfg) * b;
    Matrix inner = Matrix::block(
        {{Matrix::zeros(a.order(), a.order(), b.backend()), ea * b},
         {b.adjoint() * ea, schur}});
    Inertia ia = inertia(a, cfg);
    Inertia ii = inertia(as_hermitian(inner, hermitian_tol(inner, cfg)), cfg);
    Inertia closed{ia.plus + ii.plus, ia.minus + ii.minus,
                   m2.rows() - ia.rank() - ii.rank()};
    require_identity(closed == direct, "two-block inertia expansion", a.matrix(), b);

    Inertia ischur = inertia(as_hermitian(schur, hermitian_tol(schur, cfg)), cfg);
    if (range_contains(a.matrix(), b, cfg))
        require_identity(direct.plus == ia.plus + ischur.plus &&
                             direct.minus == ia.minus + ischur.minus,
                         "two-block inertia, range-inclusion case", a.matrix(), b);
    // Monotone lower bounds hold unconditionally.
    require_identity(direct.plus >= ia.plus + ischur.plus && direct.minus >= ia.minus + ischur.minus,
                     "two-block inertia lower bound", a.matrix(), b);
    return direct;
}

Inertia schur_complement_inertia(const HermitianMatrix& a, const Matrix& b,
                                 const HermitianMatrix& d, const ToleranceConfig& cfg) {
    if (b.rows() != a.order() || b.cols() != d.order())
        throw DimensionMismatch("inner block B must be (order A) x (order D)");

    Matrix schur = d.matrix() - b.adjoint() * pinv(a.matrix(), cfg) * b;
    Inertia direct = inertia(as_hermitian(schur, hermitian_tol(schur, cfg)), cfg);

    // Bordered route with cubed corner; works without any range condition.
    const Matrix& am = a.matrix();
    Matrix cube = am * am * am;
    Matrix blk = Matrix::block({{cube, am * b}, {b.adjoint() * am, d.matrix()}});
    Inertia ia = inertia(a, cfg);
    Inertia ib = inertia(as_hermitian(blk, hermitian_tol(blk, cfg)), cfg);
    require_identity(direct.plus == ib.plus - ia.plus && direct.minus == ib.minus - ia.minus,
                     "schur complement inertia, cubed-corner route", am, b);

    if (range_contains(am, b, cfg)) {
        Inertia im2 = inertia(
            as_hermitian(Matrix::block({{am, b}, {b.adjoint(), d.matrix()}}),
                         hermitian_tol(am, cfg)),
            cfg);
        require_identity(direct.plus == im2.plus - ia.plus && direct.minus == im2.minus - ia.minus,
                         "schur complement inertia, range-inclusion route", am, b);
    }
    return direct;
}

std::optional<Matrix> bordered_pinv(const BorderedPair& p, const ToleranceConfig& cfg) {
    const Matrix& a = p.a.matrix();
    const Matrix& b = p.b;
    Matrix m1 = bordered(a, b);

    Matrix eb = projectors(b, cfg).first.matrix();
    Matrix core = eb * a * eb;
    bool applicable_rank = rank(m1, cfg) == rank(hcat(a, b), cfg) + rank(b, cfg);
    bool applicable_proj = rank(core, cfg) == rank(eb * a, cfg);
    require_identity(applicable_rank == applicable_proj,
                     "bordered pinv applicability criteria disagree", a, b);
    if (!applicable_rank) return std::nullopt;

    Matrix core_p = pinv(core, cfg);
    Matrix bp = pinv(b, cfg);
    Matrix bps = bp.adjoint();
    Matrix tl = core_p;
    Matrix tr = bps - core_p * eb * a * bps;
    Matrix bl = bp - bp * a * eb * core_p;
    Matrix br = -(bp * a * bps) + bp * a * eb * core_p * eb * a * bps;
    Matrix closed = Matrix::block({{tl, tr}, {bl, br}});

    double ptol = a.backend() == Backend::exact ? 0.0 : 1e-9;
    require_identity(approx_equal(closed, pinv(m1, cfg), ptol), "bordered pinv block formula",
                     a, b);
    return closed;
}

Inertia projected_border_inertia(const HermitianMatrix& a, const Matrix& b, const Matrix& p,
                                 const ToleranceConfig& cfg) {
    if (b.rows() != a.order()) throw DimensionMismatch("B must share A's order");
    if (p.cols() != b.cols()) throw DimensionMismatch("P must act on B's column space");

    Matrix fp = projectors(p, cfg).second.matrix();
    Matrix direct_m = bordered(a.matrix(), b * fp);
    Inertia direct = inertia(as_hermitian(direct_m, hermitian_tol(direct_m, cfg)), cfg);

    Backend be = b.backend();
    int m = a.order(), n = b.cols(), q = p.rows();
    Matrix triple = Matrix::block(
        {{a.matrix(), b, Matrix::zeros(m, q, be)},
         {b.adjoint(), Matrix::zeros(n, n, be), p.adjoint()},
         {Matrix::zeros(q, m, be), p, Matrix::zeros(q, q, be)}});
    Inertia it = inertia(as_hermitian(triple, hermitian_tol(triple, cfg)), cfg);
    int rp = rank(p, cfg);
    require_identity(direct.plus == it.plus - rp && direct.minus == it.minus - rp,
                     "projected border inertia", a.matrix(), b);
    return direct;
}

} // namespace ria
