// The floating backend drives the same engine through tolerance-based
// primitives.  Verdict-grade verification stays exact; these tests pin down
// that well-conditioned float problems reproduce the exact answers.

#include <doctest.h>

#include "ria/linear_equations.hpp"
#include "ria/loewner.hpp"
#include "ria/oracle.hpp"

using namespace ria;

namespace {

ToleranceConfig loose() {
    ToleranceConfig cfg;
    cfg.rank_rel_tol = 1e-9;
    return cfg;
}

ConstrainedProblem worked(Backend be) {
    Matrix a1 = Matrix::from_int({{1, 0}, {0, -1}});
    Matrix b1 = Matrix::from_int({{1}, {0}});
    Matrix a2 = Matrix::from_int({{1}});
    Matrix b2 = Matrix::from_int({{1}});
    if (be == Backend::floating) {
        a1 = a1.lift();
        b1 = b1.lift();
        a2 = a2.lift();
        b2 = b2.lift();
    }
    return {as_hermitian(a1, 0.0), b1, as_hermitian(a2, 0.0), b2, Relation::geq,
            ConstraintKind::inequality};
}

} // namespace

TEST_CASE("float primitives on the worked data") {
    ToleranceConfig cfg = loose();
    Matrix a = Matrix::from_int({{1, 0}, {0, -1}}).lift();
    Matrix b = Matrix::from_int({{1}, {0}}).lift();

    CHECK(rank(a, cfg) == 2);
    CHECK(inertia(as_hermitian(a, cfg.hermitian_tol), cfg) == Inertia{1, 1, 0});

    Matrix g = pinv(b, cfg);
    CHECK(approx_equal(b * g * b, b, 1e-12));
    auto [e, f] = projectors(b, cfg);
    CHECK(approx_equal(e.matrix() * e.matrix(), e.matrix(), 1e-12));
    CHECK(loewner_compare(as_hermitian(Matrix::identity(2, Backend::floating), 0.0),
                          as_hermitian(Matrix::zeros(2, 2, Backend::floating), 0.0),
                          cfg) == Definiteness::positive_definite);
}

TEST_CASE("float feasibility and solution family match the exact ones") {
    ToleranceConfig cfg = loose();
    ConstrainedProblem p = worked(Backend::floating);
    FeasibilityCertificate c = lmi_feasible({p.a2, p.b2, p.rel}, cfg);
    CHECK(c.feasible);

    LmiSolution sol = lmi_general_solution({p.a2, p.b2, p.rel}, cfg);
    CHECK(approx_equal(sol.xhat().matrix(), Matrix::from_int({{1}}).lift(), 1e-9));

    Matrix u(1, 1, Backend::floating), v(1, 1, Backend::floating);
    u.set(0, 0, Scalar::floating({1.5, 0.5}));
    HermitianMatrix x = sol.realize(u, v);
    CHECK(x.matrix().at(0, 0).cplx().real() == doctest::Approx(1.0 + 1.5 * 1.5 + 0.25));
}

TEST_CASE("float constrained report and order bound match the exact ones") {
    ToleranceConfig cfg = loose();
    ExtremalReport exact = inequality_constrained_extremal(worked(Backend::exact));
    ExtremalReport flt = inequality_constrained_extremal(worked(Backend::floating), cfg);
    CHECK(exact.six() == flt.six());
    CHECK(exact.ingredients == flt.ingredients);

    auto bound = loewner_extremal(worked(Backend::floating), Sense::max, cfg);
    REQUIRE(bound.has_value());
    CHECK(approx_equal(bound->phi.matrix(), Matrix::from_int({{0, 0}, {0, -1}}).lift(), 1e-9));
    CHECK(bound->phi_inertia == Inertia{0, 1, 1});
}

TEST_CASE("float linear-equation families solve approximately") {
    ToleranceConfig cfg = loose();
    Matrix a = Matrix::from_int({{1, 0}}).lift();
    Matrix b = Matrix::from_int({{2}}).lift();
    auto fam = solve_axa_hermitian(a, as_hermitian(b, 0.0), cfg);
    Matrix v(2, 2, Backend::floating);
    v.set(1, 0, Scalar::floating({0.25, -1.0}));
    Matrix x = fam.realize({v});
    CHECK(approx_equal(a * x * a.adjoint(), b, 1e-12));
}
