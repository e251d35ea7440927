#include "ria/lmi.hpp"

#include <sstream>

#include "ria/rng.hpp"

namespace ria {

std::string to_string(Relation r) {
    switch (r) {
        case Relation::geq: return "geq";
        case Relation::gt: return "gt";
        case Relation::leq: return "leq";
        case Relation::lt: return "lt";
    }
    return "?";
}

Relation relation_from_string(const std::string& s) {
    if (s == "geq") return Relation::geq;
    if (s == "gt") return Relation::gt;
    if (s == "leq") return Relation::leq;
    if (s == "lt") return Relation::lt;
    throw ParseError("unknown relation '" + s + "' (expected geq|gt|leq|lt)");
}

bool is_strict(Relation r) { return r == Relation::gt || r == Relation::lt; }

Relation reversed(Relation r) {
    switch (r) {
        case Relation::geq: return Relation::leq;
        case Relation::gt: return Relation::lt;
        case Relation::leq: return Relation::geq;
        case Relation::lt: return Relation::gt;
    }
    return r;
}

namespace {

double htol(const Matrix& m, const ToleranceConfig& cfg) {
    return m.backend() == Backend::exact ? 0.0 : cfg.hermitian_tol;
}

void check_problem(const LmiProblem& p) {
    if (p.b.rows() != p.a.order())
        throw DimensionMismatch("B must have as many rows as A's order");
}

struct LmiWork {
    Matrix eb, fb;   // projectors of B
    Matrix core;     // E_B A E_B
    Matrix corr;     // A E_B (E_B A E_B)+ E_B A
    Inertia icore;
    int core_rank, eba_rank, eb_rank, row_rank, b_rank;
    Inertia border;
};

LmiWork analyze(const LmiProblem& p, const ToleranceConfig& cfg) {
    check_problem(p);
    LmiWork w;
    auto pr = projectors(p.b, cfg);
    w.eb = pr.first.matrix();
    w.fb = pr.second.matrix();
    const Matrix& a = p.a.matrix();
    w.core = w.eb * a * w.eb;
    w.corr = a * w.eb * pinv(w.core, cfg) * w.eb * a;
    w.icore = inertia(as_hermitian(w.core, htol(w.core, cfg)), cfg);
    w.core_rank = w.icore.rank();
    w.eba_rank = rank(w.eb * a, cfg);
    w.eb_rank = rank(w.eb, cfg);
    w.row_rank = rank(hcat(a, p.b), cfg);
    w.b_rank = rank(p.b, cfg);
    w.border = bordered_inertia({p.a, p.b}, cfg);
    return w;
}

FeasibilityCertificate certificate_from(const LmiProblem& p, const LmiWork& w) {
    FeasibilityCertificate c;
    c.rel = p.rel;
    c.core = w.icore;
    c.core_rank = w.core_rank;
    c.eba_rank = w.eba_rank;
    c.eb_rank = w.eb_rank;
    c.border = w.border;
    c.row_rank = w.row_rank;
    c.b_rank = w.b_rank;

    const int m = p.m();
    switch (p.rel) {
        case Relation::geq:
            c.projector_form = w.icore.plus == 0 && w.core_rank == w.eba_rank;
            c.inertia_form = w.border.plus == w.b_rank && w.border.minus == w.row_rank;
            break;
        case Relation::gt:
            c.projector_form = w.icore.plus == 0 && w.core_rank == w.eb_rank;
            c.inertia_form = w.border.minus == m;
            break;
        case Relation::leq:
            c.projector_form = w.icore.minus == 0 && w.core_rank == w.eba_rank;
            c.inertia_form = w.border.minus == w.b_rank && w.border.plus == w.row_rank;
            break;
        case Relation::lt:
            c.projector_form = w.icore.minus == 0 && w.core_rank == w.eb_rank;
            c.inertia_form = w.border.plus == m;
            break;
    }
    if (c.projector_form != c.inertia_form) {
        std::ostringstream os;
        os << "A=" << p.a.matrix().to_pretty_string() << " B=" << p.b.to_pretty_string()
           << " rel=" << to_string(p.rel);
        throw VerificationError("feasibility criterion forms disagree", os.str());
    }
    c.feasible = c.projector_form;
    return c;
}

} // namespace

FeasibilityCertificate lmi_feasible(const LmiProblem& p, const ToleranceConfig& cfg) {
    return certificate_from(p, analyze(p, cfg));
}

HermitianMatrix lmi_xhat(const HermitianMatrix& a, const Matrix& b, const ToleranceConfig& cfg) {
    if (b.rows() != a.order())
        throw DimensionMismatch("B must have as many rows as A's order");
    Matrix bp = pinv(b, cfg);
    Matrix eb = projectors(b, cfg).first.matrix();
    Matrix core = eb * a.matrix() * eb;
    Matrix base = bp * a.matrix() * bp.adjoint();
    Matrix xhat = base - bp * a.matrix() * eb * pinv(core, cfg) * eb * a.matrix() * bp.adjoint();
    HermitianMatrix result = as_hermitian(xhat, htol(xhat, cfg));

    // When either inequality direction is solvable, the corner of the
    // bordered pseudoinverse gives the same matrix.
    FeasibilityCertificate geq = lmi_feasible({a, b, Relation::geq}, cfg);
    FeasibilityCertificate leq = lmi_feasible({a, b, Relation::leq}, cfg);
    if (geq.feasible || leq.feasible) {
        int n = b.cols();
        Matrix bord = bordered((-a.matrix()), b);
        Matrix corner = pinv(bord, cfg).submatrix(a.order(), a.order(), n, n);
        if (xhat.backend() == Backend::exact && !(corner == xhat))
            throw VerificationError("distinguished solution: corner route disagrees",
                                    xhat.to_pretty_string() + " vs " + corner.to_pretty_string());
    }
    return result;
}

bool LmiSolution::strict_param_ok(const Matrix& u) const {
    if (!is_strict(prob_.rel)) return true;
    // The residual of a strict solution must reach full rank: it equals
    // corr - B U U* B* (gt) or corr + B U U* B* (lt), two same-sign
    // semidefinite parts, so full rank makes it definite.
    Matrix bu = prob_.b * u;
    Matrix probe = prob_.rel == Relation::gt ? corr_ - bu * bu.adjoint()
                                             : corr_ + bu * bu.adjoint();
    return rank(probe, cfg_) == prob_.m();
}

HermitianMatrix LmiSolution::realize(const Matrix& u, const Matrix& v) const {
    const int n = prob_.n();
    if (u.rows() != n || u.cols() != n || v.rows() != n || v.cols() != n)
        throw DimensionMismatch("parameters U, V must be n x n");
    if (is_strict(prob_.rel) && !strict_param_ok(u))
        throw InputError("parameter U violates the strict-solution rank condition");

    Matrix uu = u * u.adjoint();
    Matrix fv = fb_ * v;
    bool plus = prob_.rel == Relation::geq || prob_.rel == Relation::gt;
    Matrix x = xhat_.matrix() + (plus ? uu : -uu) + fv + fv.adjoint();
    HermitianMatrix result = as_hermitian(x, htol(x, cfg_));

    if (x.backend() == Backend::exact) {
        const Matrix& a = prob_.a.matrix();
        const Matrix& b = prob_.b;
        Matrix bxb = b * x * b.adjoint();
        if (!(bxb == induced_bxb(u)))
            throw VerificationError("induced form of B X B* disagrees with direct product",
                                    x.to_pretty_string());
        Matrix resid = a - bxb;
        if (!(resid == induced_residual(u)))
            throw VerificationError("induced residual form disagrees with direct product",
                                    x.to_pretty_string());
        Inertia ir = inertia(as_hermitian(bxb - a), cfg_);
        bool ok = true;
        switch (prob_.rel) {
            case Relation::geq: ok = ir.minus == 0; break;
            case Relation::gt: ok = ir.minus == 0 && ir.zero == 0; break;
            case Relation::leq: ok = ir.plus == 0; break;
            case Relation::lt: ok = ir.plus == 0 && ir.zero == 0; break;
        }
        if (!ok)
            throw VerificationError("realization violates its relation", x.to_pretty_string());
    }
    return result;
}

Matrix LmiSolution::induced_bxb(const Matrix& u) const {
    const Matrix& b = prob_.b;
    Matrix bu = b * u;
    bool plus = prob_.rel == Relation::geq || prob_.rel == Relation::gt;
    Matrix term = bu * bu.adjoint();
    return prob_.a.matrix() - corr_ + (plus ? term : -term);
}

Matrix LmiSolution::induced_residual(const Matrix& u) const {
    const Matrix& b = prob_.b;
    Matrix bu = b * u;
    bool plus = prob_.rel == Relation::geq || prob_.rel == Relation::gt;
    Matrix term = bu * bu.adjoint();
    return plus ? corr_ - term : corr_ + term;
}

LmiSolution lmi_general_solution(const LmiProblem& p, const ToleranceConfig& cfg) {
    LmiWork w = analyze(p, cfg);
    FeasibilityCertificate cert = certificate_from(p, w);
    if (!cert.feasible)
        throw InfeasibleConstraint("LMI B X B* " + to_string(p.rel) + " A has no Hermitian solution");

    LmiSolution sol;
    sol.prob_ = p;
    sol.fb_ = w.fb;
    sol.corr_ = w.corr;
    sol.cfg_ = cfg;
    sol.xhat_ = lmi_xhat(p.a, p.b, cfg);
    return sol;
}

XhatReport xhat_properties(const LmiProblem& p, const ToleranceConfig& cfg, int samples,
                           std::uint64_t seed) {
    LmiSolution sol = lmi_general_solution(p, cfg);
    const Matrix& a = p.a.matrix();
    const Matrix& b = p.b;
    const Matrix& xh = sol.xhat().matrix();

    XhatReport rep;
    rep.rel = p.rel;
    rep.xhat = sol.xhat();
    Matrix bxb = b * xh * b.adjoint();
    Matrix resid = a - bxb;
    rep.xhat_inertia = inertia(as_hermitian(xh, htol(xh, cfg)), cfg);
    rep.bxb_inertia = inertia(as_hermitian(bxb, htol(bxb, cfg)), cfg);
    rep.a_inertia = inertia(p.a, cfg);
    rep.residual_inertia = inertia(as_hermitian(resid, htol(resid, cfg)), cfg);
    rep.rank_a = rep.a_inertia.rank();
    rep.b_rank = rank(b, cfg);
    rep.row_rank = rank(hcat(a, b), cfg);

    const int deficit = rep.row_rank - rep.b_rank;
    bool ok;
    if (p.rel == Relation::geq || p.rel == Relation::gt) {
        ok = rep.xhat_inertia.plus == rep.a_inertia.plus &&
             rep.bxb_inertia.plus == rep.a_inertia.plus &&
             rep.xhat_inertia.minus == rep.a_inertia.minus - deficit &&
             rep.bxb_inertia.minus == rep.a_inertia.minus - deficit &&
             rep.xhat_inertia.rank() == rep.rank_a - deficit &&
             rep.bxb_inertia.rank() == rep.rank_a - deficit &&
             rep.residual_inertia.minus == deficit && rep.residual_inertia.rank() == deficit &&
             rep.residual_inertia.rank() == rep.rank_a - rep.bxb_inertia.rank();
    } else {
        ok = rep.xhat_inertia.minus == rep.a_inertia.minus &&
             rep.bxb_inertia.minus == rep.a_inertia.minus &&
             rep.xhat_inertia.plus == rep.a_inertia.plus - deficit &&
             rep.bxb_inertia.plus == rep.a_inertia.plus - deficit &&
             rep.xhat_inertia.rank() == rep.rank_a - deficit &&
             rep.bxb_inertia.rank() == rep.rank_a - deficit &&
             rep.residual_inertia.plus == deficit && rep.residual_inertia.rank() == deficit &&
             rep.residual_inertia.rank() == rep.rank_a - rep.bxb_inertia.rank();
    }
    if (!ok)
        throw VerificationError("distinguished-solution identities failed",
                                a.to_pretty_string() + " " + b.to_pretty_string());

    // Residual extremality against sampled members of the family.
    Rng rng(seed);
    const int n = p.n();
    bool exact = b.backend() == Backend::exact;
    for (int s = 0; s < samples; ++s) {
        Matrix u = exact ? random_matrix(rng, n, n) : random_float_matrix(rng, n, n);
        Matrix v = exact ? random_matrix(rng, n, n) : random_float_matrix(rng, n, n);
        if (is_strict(p.rel) && !sol.strict_param_ok(u)) continue;
        HermitianMatrix x = sol.realize(u, v);
        Matrix sample_resid = a - b * x.matrix() * b.adjoint();
        Matrix gap = (p.rel == Relation::geq || p.rel == Relation::gt)
                         ? resid - sample_resid  // residual at X^ dominates
                         : sample_resid - resid;
        if (inertia(as_hermitian(gap, htol(gap, cfg)), cfg).minus != 0)
            throw VerificationError("residual extremality violated by a sample",
                                    x.matrix().to_pretty_string());
        ++rep.dominance_samples;
    }
    return rep;
}

SolutionSetExtremal solution_set_extremal(const LmiProblem& p, const ToleranceConfig& cfg) {
    if (is_strict(p.rel))
        throw InputError("solution-set extremal matrices are defined for geq/leq only");
    LmiWork w = analyze(p, cfg);
    FeasibilityCertificate cert = certificate_from(p, w);
    if (!cert.feasible) throw InfeasibleConstraint("LMI has no Hermitian solution");

    const Matrix& a = p.a.matrix();
    Inertia ia = inertia(p.a, cfg);

    SolutionSetExtremal r;
    r.rel = p.rel;
    Matrix ext_bxb = a - w.corr;
    Matrix ext_resid = -w.corr;
    r.extremal_bxb = as_hermitian(ext_bxb, htol(ext_bxb, cfg));
    r.extremal_residual = as_hermitian(ext_resid, htol(ext_resid, cfg));

    // The distinguished solution attains the extremal value of B X B*.
    Matrix xh = lmi_xhat(p.a, p.b, cfg).matrix();
    if (a.backend() == Backend::exact && !(p.b * xh * p.b.adjoint() == ext_bxb))
        throw VerificationError("extremal B X B* is not attained at the distinguished solution",
                                a.to_pretty_string());

    if (p.rel == Relation::geq) {
        r.max_rank_bxb = w.b_rank;
        r.max_iplus_bxb = w.b_rank;
        r.min_rank_bxb = ia.plus;
        r.min_iplus_bxb = ia.plus;
        r.max_iminus_bxb = w.b_rank + ia.minus - w.row_rank;
        r.min_iminus_bxb = 0;
    } else {
        r.max_rank_bxb = w.b_rank;
        r.max_iminus_bxb = w.b_rank;
        r.min_rank_bxb = ia.minus;
        r.min_iminus_bxb = ia.minus;
        r.max_iplus_bxb = w.b_rank + ia.plus - w.row_rank;
        r.min_iplus_bxb = 0;
    }
    r.max_rank_diff = w.row_rank;
    r.min_rank_diff = w.row_rank - w.b_rank;
    return r;
}

HermitianMatrix PsdSpecialSolution::realize(const Matrix& u, const Matrix& v) const {
    const int n = prob_.n();
    if (u.rows() != n || u.cols() != n)
        throw DimensionMismatch("parameter U must be n x n");
    Matrix uu = u * u.adjoint();
    bool plus = rel_ == Relation::geq || rel_ == Relation::gt;
    Matrix x = base_.matrix() + (plus ? uu : -uu);
    if (!psd_x_) {
        if (v.rows() != n || v.cols() != n)
            throw DimensionMismatch("parameter V must be n x n");
        Matrix fv = fb_ * v;
        x = x + fv + fv.adjoint();
    }
    HermitianMatrix result = as_hermitian(x, htol(x, cfg_));

    if (x.backend() == Backend::exact) {
        Matrix diff = prob_.b * x * prob_.b.adjoint() - prob_.a.matrix();
        Inertia idiff = inertia(as_hermitian(diff), cfg_);
        bool ok = plus ? idiff.minus == 0 : idiff.plus == 0;
        if (psd_x_ && inertia(result, cfg_).minus != 0) ok = false;
        if (!ok)
            throw VerificationError("special-case realization violates its relation",
                                    x.to_pretty_string());
    }
    return result;
}

bool PsdSpecialSolution::realization_strict(const HermitianMatrix& x,
                                            const ToleranceConfig& cfg) const {
    Matrix diff = prob_.b * x.matrix() * prob_.b.adjoint() - prob_.a.matrix();
    Inertia idiff = inertia(as_hermitian(diff, htol(diff, cfg)), cfg);
    bool plus = rel_ == Relation::geq || rel_ == Relation::gt;
    return plus ? (idiff.minus == 0 && idiff.zero == 0) : (idiff.plus == 0 && idiff.zero == 0);
}

std::pair<PsdSpecialCertificate, std::optional<PsdSpecialSolution>>
psd_special_cases(const LmiProblem& p, bool psd_x, const ToleranceConfig& cfg) {
    check_problem(p);
    Inertia ia = inertia(p.a, cfg);
    bool upper = p.rel == Relation::geq || p.rel == Relation::gt;
    if (upper && ia.minus != 0)
        throw SignConditionViolated("this case needs A psd");
    if (!upper && ia.plus != 0)
        throw SignConditionViolated("this case needs A nsd");
    if (psd_x && !upper)
        throw SignConditionViolated("psd-X cases are stated for the lower-bound directions");

    PsdSpecialCertificate cert;
    if (psd_x)
        cert.case_label = p.rel == Relation::geq ? 'e' : 'f';
    else
        switch (p.rel) {
            case Relation::geq: cert.case_label = 'a'; break;
            case Relation::gt: cert.case_label = 'b'; break;
            case Relation::leq: cert.case_label = 'c'; break;
            case Relation::lt: cert.case_label = 'd'; break;
        }

    cert.range_ok = range_contains(p.b, p.a.matrix(), cfg);
    cert.full_row_rank = rank(p.b, cfg) == p.m();
    cert.feasible = is_strict(p.rel) ? cert.full_row_rank : cert.range_ok;
    if (!cert.feasible) return {cert, std::nullopt};

    PsdSpecialSolution fam;
    fam.label_ = cert.case_label;
    fam.rel_ = p.rel;
    fam.psd_x_ = psd_x;
    fam.prob_ = p;
    fam.cfg_ = cfg;
    Matrix bp = pinv(p.b, cfg);
    Matrix base = bp * p.a.matrix() * bp.adjoint();
    fam.base_ = as_hermitian(base, htol(base, cfg));
    fam.fb_ = projectors(p.b, cfg).second.matrix();
    return {cert, fam};
}

} // namespace ria
