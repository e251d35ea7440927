#include "ria/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "ria/json_io.hpp"

namespace ria {

namespace {

nlohmann::json problem_witness(const ConstrainedProblem& p) {
    return {{"a1", matrix_to_json(p.a1.matrix())},
            {"b1", matrix_to_json(p.b1)},
            {"a2", matrix_to_json(p.a2.matrix())},
            {"b2", matrix_to_json(p.b2)},
            {"rel", to_string(p.rel)}};
}

bool satisfies(const Matrix& bxb_minus_a, Relation rel, const ToleranceConfig& cfg) {
    Inertia i = inertia(as_hermitian(bxb_minus_a), cfg);
    switch (rel) {
        case Relation::geq: return i.minus == 0;
        case Relation::gt: return i.minus == 0 && i.zero == 0;
        case Relation::leq: return i.plus == 0;
        case Relation::lt: return i.plus == 0 && i.zero == 0;
    }
    return false;
}

struct BoundChecker {
    std::array<int, 6> six; // max_r, min_r, max_ip, min_ip, max_im, min_im
    std::string label;
    std::map<std::string, bool>* attained;
    Verdict* verdict;

    void see(const Inertia& i, const nlohmann::json& witness) {
        ++verdict->checks_run;
        auto fail = [&](const std::string& which, int value, int bound) {
            verdict->violations.push_back(
                {label + ":" + which,
                 {{"value", value}, {"bound", bound}, {"witness", witness}}});
        };
        if (i.rank() > six[0]) fail("max_rank", i.rank(), six[0]);
        if (i.rank() < six[1]) fail("min_rank", i.rank(), six[1]);
        if (i.plus > six[2]) fail("max_iplus", i.plus, six[2]);
        if (i.plus < six[3]) fail("min_iplus", i.plus, six[3]);
        if (i.minus > six[4]) fail("max_iminus", i.minus, six[4]);
        if (i.minus < six[5]) fail("min_iminus", i.minus, six[5]);
        if (attained) {
            auto mark = [&](const std::string& which, bool hit) {
                auto& slot = (*attained)[label + ":" + which];
                slot = slot || hit;
            };
            mark("max_rank", i.rank() == six[0]);
            mark("min_rank", i.rank() == six[1]);
            mark("max_iplus", i.plus == six[2]);
            mark("min_iplus", i.plus == six[3]);
            mark("max_iminus", i.minus == six[4]);
            mark("min_iminus", i.minus == six[5]);
        }
    }
};

// Exhaustive piecewise scan for 1x1 unknowns; every minor of A - x W is
// linear in x when W has rank at most one, so rank and inertia are piecewise
// constant between rational breakpoints.
GaussianRational minor_det(const Matrix& mat, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    GaussianRational det;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        GaussianRational term = GaussianRational::integer(inv % 2 ? -1 : 1);
        for (int i = 0; i < k; ++i) term = term * mat.at(rows[i], cols[perm[i]]).rat();
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Matrix pencil_at(const Matrix& a, const Matrix& w, const mpq_class& x) {
    return a - w.scaled(Scalar::exact(GaussianRational(x, 0)));
}

std::vector<mpq_class> pencil_breakpoints(const Matrix& a, const Matrix& w) {
    const int m = a.rows();
    std::vector<mpq_class> roots;
    Matrix at1 = pencil_at(a, w, 1);
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        subsets.push_back(std::move(idx));
    }
    for (const auto& rows : subsets) {
        for (const auto& cols : subsets) {
            if (rows.size() != cols.size()) continue;
            GaussianRational d0 = minor_det(a, rows, cols);
            GaussianRational d1 = minor_det(at1, rows, cols);
            mpq_class br = d1.re() - d0.re();
            mpq_class bi = d1.im() - d0.im();
            if (sgn(br) != 0) roots.push_back(mpq_class(-d0.re() / br));
            if (sgn(bi) != 0) roots.push_back(mpq_class(-d0.im() / bi));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

PencilScan scan_pencil(const HermitianMatrix& a, const Matrix& w,
                       const std::optional<mpq_class>& at_least,
                       const std::optional<mpq_class>& at_most) {
    if (w.rows() != a.order() || w.cols() != a.order())
        throw DimensionMismatch("pencil direction must match A's order");
    std::vector<mpq_class> pts;
    std::vector<mpq_class> bps = pencil_breakpoints(a.matrix(), w);
    if (bps.empty()) {
        pts.push_back(0);
    } else {
        pts.push_back(bps.front() - 1);
        for (std::size_t i = 0; i < bps.size(); ++i) {
            pts.push_back(bps[i]);
            if (i + 1 < bps.size()) pts.push_back(mpq_class((bps[i] + bps[i + 1]) / 2));
        }
        pts.push_back(bps.back() + 1);
    }
    if (at_least) {
        pts.push_back(*at_least);
        pts.push_back(mpq_class(*at_least + 1));
        std::erase_if(pts, [&](const mpq_class& x) { return cmp(x, *at_least) < 0; });
    }
    if (at_most) {
        pts.push_back(*at_most);
        pts.push_back(mpq_class(*at_most - 1));
        std::erase_if(pts, [&](const mpq_class& x) { return cmp(x, *at_most) > 0; });
    }
    if (at_least)
        std::erase_if(pts, [&](const mpq_class& x) { return cmp(x, *at_least) < 0; });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    PencilScan s;
    for (const mpq_class& x : pts) s.absorb(inertia(as_hermitian(pencil_at(a.matrix(), w, x))));
    return s;
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& viol : violations)
        v.push_back({{"check", viol.check}, {"witness", viol.witness}});
    return {{"instance_id", instance_id},
            {"checks_run", checks_run},
            {"violations", v},
            {"attained", attained},
            {"pass", pass()}};
}

ConstrainedProblem generate_feasible_instance(const InstanceSpec& spec, GenerationStats* stats) {
    if (is_strict(spec.rel)) throw InputError("instance generation covers geq/leq constraints");
    Rng rng(spec.seed);
    HermitianMatrix a1 = random_hermitian(rng, spec.m1, spec.grid_span);
    Matrix b1 = random_matrix(rng, spec.m1, spec.n, spec.grid_span);

    if (spec.forced_construction) {
        Matrix b2 = random_matrix(rng, spec.m2, spec.n, spec.grid_span);
        Matrix h = random_hermitian(rng, spec.n, spec.grid_span).matrix();
        Matrix g = random_matrix(rng, spec.m2, rng.uniform_int(1, spec.m2), spec.grid_span);
        Matrix gg = g * g.adjoint();
        Matrix a2 = spec.rel == Relation::geq ? b2 * h * b2.adjoint() - gg
                                              : b2 * h * b2.adjoint() + gg;
        if (stats) stats->rejections = 0;
        return {a1, b1, as_hermitian(a2), b2, spec.rel, ConstraintKind::inequality};
    }

    for (int attempt = 0; attempt < spec.max_rejections; ++attempt) {
        HermitianMatrix a2 = random_hermitian(rng, spec.m2, spec.grid_span);
        Matrix b2 = random_matrix(rng, spec.m2, spec.n, spec.grid_span);
        if (lmi_feasible({a2, b2, spec.rel}).feasible) {
            if (stats) stats->rejections = attempt;
            return {a1, b1, a2, b2, spec.rel, ConstraintKind::inequality};
        }
    }
    throw GenerationExhausted("no feasible constraint within " +
                              std::to_string(spec.max_rejections) + " draws");
}

Verdict sample_verify(const ConstrainedProblem& p, int n_samples, std::uint64_t seed,
                      const std::optional<std::array<int, 6>>& report_override,
                      const ToleranceConfig& cfg, int split_n1) {
    Verdict v;
    {
        std::ostringstream id;
        id << "sample-verify:" << to_string(p.rel) << ":" << p.m1() << "x" << p.m2() << "x"
           << p.n() << ":seed" << seed;
        v.instance_id = id.str();
    }
    const int n = p.n();

    auto engine_violation = [&](const char* stage, const std::exception& e) {
        v.violations.push_back(
            {std::string("engine:") + stage,
             {{"error", e.what()}, {"problem", problem_witness(p)}}});
    };

    // Closed forms under test.
    std::optional<ExtremalReport> objective;
    try {
        objective = inequality_constrained_extremal(p, cfg);
    } catch (const VerificationError& e) {
        engine_violation("objective-report", e);
    }
    std::array<int, 6> six = report_override
                                 ? *report_override
                                 : (objective ? objective->six() : std::array<int, 6>{});
    if (!objective && !report_override) return v;

    LmiProblem constraint{p.a2, p.b2, p.rel};
    std::optional<ExtremalReport> solution_report;
    std::optional<SolutionSetExtremal> set_extremal;
    std::optional<XhatReport> xhat_report;
    std::optional<LoewnerBound> loewner;
    try {
        solution_report = solution_inertia_extremal(constraint, cfg);
        set_extremal = solution_set_extremal(constraint, cfg);
        xhat_report = xhat_properties(constraint, cfg, std::min(n_samples, 25), seed ^ 0x5eedULL);
        loewner = loewner_extremal(p, p.rel == Relation::geq ? Sense::max : Sense::min, cfg);
    } catch (const VerificationError& e) {
        engine_violation("auxiliary-reports", e);
    } catch (const NegativeResult& e) {
        engine_violation("auxiliary-reports", e);
    }

    std::optional<ExtremalReport> sub1, sub3;
    int n1 = 0, n2 = 0;
    if (n >= 2) {
        n1 = split_n1 > 0 ? std::min(split_n1, n - 1) : std::max(1, n / 2);
        n2 = n - n1;
        try {
            Matrix b2_left = p.b2.submatrix(0, 0, p.m2(), n1);
            Matrix b2_right = p.b2.submatrix(0, n1, p.m2(), n2);
            sub1 = submatrix_extremal(p.a2, b2_left, b2_right,
                                      {n1, n2, SubmatrixSelector::Which::x1}, p.rel,
                                      ConstraintKind::inequality, cfg);
            sub3 = submatrix_extremal(p.a2, b2_left, b2_right,
                                      {n1, n2, SubmatrixSelector::Which::x3}, p.rel,
                                      ConstraintKind::inequality, cfg);
        } catch (const VerificationError& e) {
            engine_violation("submatrix-reports", e);
        }
    }

    LmiSolution family = lmi_general_solution(constraint, cfg);

    BoundChecker objective_bounds{six, "objective", &v.attained, &v};
    BoundChecker solution_bounds{};
    if (solution_report)
        solution_bounds = {solution_report->six(), "solution", &v.attained, &v};
    BoundChecker sub1_bounds{}, sub3_bounds{};
    if (sub1) sub1_bounds = {sub1->six(), "submatrix-leading", &v.attained, &v};
    if (sub3) sub3_bounds = {sub3->six(), "submatrix-trailing", &v.attained, &v};

    Rng rng(seed);
    for (int s = 0; s < n_samples; ++s) {
        Rng draw = rng.fork(static_cast<std::uint64_t>(s));
        Matrix u = random_matrix(draw, n, n);
        Matrix vparam = random_matrix(draw, n, n);
        HermitianMatrix x;
        try {
            x = family.realize(u, vparam);
        } catch (const VerificationError& e) {
            engine_violation("family-realization", e);
            continue;
        }
        nlohmann::json witness = {{"sample", s}, {"x", matrix_to_json(x.matrix())}};

        // The sample really solves its constraint.
        Matrix slack = p.b2 * x.matrix() * p.b2.adjoint() - p.a2.matrix();
        ++v.checks_run;
        if (!satisfies(slack, p.rel, cfg))
            v.violations.push_back({"family:relation", witness});

        Inertia iobj = inertia(
            as_hermitian(p.a1.matrix() - p.b1 * x.matrix() * p.b1.adjoint()), cfg);
        objective_bounds.see(iobj, witness);

        if (solution_report) solution_bounds.see(inertia(x, cfg), witness);
        if (sub1) {
            Inertia i1 = inertia(as_hermitian(x.matrix().submatrix(0, 0, n1, n1)), cfg);
            sub1_bounds.see(i1, witness);
        }
        if (sub3) {
            Inertia i3 = inertia(as_hermitian(x.matrix().submatrix(n1, n1, n2, n2)), cfg);
            sub3_bounds.see(i3, witness);
        }

        if (set_extremal) {
            Matrix bxb = p.b2 * x.matrix() * p.b2.adjoint();
            Matrix gap = p.rel == Relation::geq ? bxb - set_extremal->extremal_bxb.matrix()
                                                : set_extremal->extremal_bxb.matrix() - bxb;
            ++v.checks_run;
            if (inertia(as_hermitian(gap), cfg).minus != 0)
                v.violations.push_back({"solution-set:extremal-dominance", witness});
        }
        if (loewner) {
            Matrix phi_x = p.a1.matrix() - p.b1 * x.matrix() * p.b1.adjoint();
            Matrix gap = p.rel == Relation::geq ? loewner->phi.matrix() - phi_x
                                                : phi_x - loewner->phi.matrix();
            ++v.checks_run;
            if (inertia(as_hermitian(gap), cfg).minus != 0)
                v.violations.push_back({"order-bound:dominance", witness});
        }
    }

    // 1-dimensional unknowns admit a complete enumeration; the scan extremes
    // must match the closed form exactly, which also certifies attainment.
    if (n == 1) {
        Matrix w = p.b1 * p.b1.adjoint();
        std::optional<mpq_class> lo, hi;
        if (rank(p.b2, cfg) > 0) {
            mpq_class boundary = lmi_xhat(p.a2, p.b2, cfg).matrix().at(0, 0).rat().re();
            if (p.rel == Relation::geq) lo = boundary; else hi = boundary;
        }
        PencilScan scan = scan_pencil(p.a1, w, lo, hi);
        ++v.checks_run;
        if (scan.six() != six) {
            v.violations.push_back(
                {"objective:scan-equality",
                 {{"scan", scan.six()}, {"report", six}, {"problem", problem_witness(p)}}});
        } else {
            for (const char* which :
                 {"max_rank", "min_rank", "max_iplus", "min_iplus", "max_iminus", "min_iminus"})
                v.attained[std::string("objective:") + which] = true;
        }
    }
    return v;
}

Verdict metamorphic_suite(const ConstrainedProblem& p, std::uint64_t seed,
                          const ToleranceConfig& cfg) {
    Verdict v;
    v.instance_id = "metamorphic:seed" + std::to_string(seed);
    Rng rng(seed);

    ExtremalReport base;
    try {
        base = inequality_constrained_extremal(p, cfg);
    } catch (const VerificationError& e) {
        v.violations.push_back({"engine:base-report", {{"error", e.what()}}});
        return v;
    }

    // Negation swaps the constraint direction and the sign counts.
    {
        ConstrainedProblem neg{as_hermitian(-p.a1.matrix()), p.b1,
                               as_hermitian(-p.a2.matrix()), p.b2, reversed(p.rel), p.kind};
        ++v.checks_run;
        ExtremalReport swapped = inequality_constrained_extremal(neg, cfg);
        if (swapped.six() != base.sign_swapped().six())
            v.violations.push_back({"metamorphic:negation-swap", problem_witness(p)});
    }

    // Congruence of either side leaves every ingredient unchanged.
    auto check_transformed = [&](const Matrix& p1, const Matrix& p2, const char* label) {
        ConstrainedProblem t{as_hermitian(p1 * p.a1.matrix() * p1.adjoint()), p1 * p.b1,
                             as_hermitian(p2 * p.a2.matrix() * p2.adjoint()), p2 * p.b2,
                             p.rel, p.kind};
        ++v.checks_run;
        ExtremalReport rt = inequality_constrained_extremal(t, cfg);
        if (rt.six() != base.six() || rt.ingredients != base.ingredients)
            v.violations.push_back({std::string("metamorphic:") + label, problem_witness(p)});
    };
    check_transformed(random_nonsingular(rng, p.m1()), random_nonsingular(rng, p.m2()),
                      "congruence-invariance");
    check_transformed(random_unit_diagonal(rng, p.m1()), random_unit_diagonal(rng, p.m2()),
                      "unitary-diagonal-invariance");

    // Backend agreement on the well-conditioned ingredient blocks.
    auto agree = [&](const Matrix& m, const char* label) {
        int exact_rank = rank(m, cfg);
        std::vector<double> sv = singular_values(m);
        bool well_conditioned =
            exact_rank == 0 || (exact_rank <= static_cast<int>(sv.size()) &&
                                sv[exact_rank - 1] > 1e-6 * sv[0]);
        if (!well_conditioned) return;
        ++v.checks_run;
        ToleranceConfig loose;
        loose.rank_rel_tol = 1e-9;
        if (rank(m.lift(), loose) != exact_rank) {
            v.violations.push_back({std::string("backend:rank:") + label, matrix_to_json(m)});
            return;
        }
        if (m.is_square() && m.is_hermitian_literal()) {
            Inertia ie = inertia(as_hermitian(m), cfg);
            Inertia il = inertia(as_hermitian(m.lift(), loose.hermitian_tol), loose);
            if (!(ie == il))
                v.violations.push_back(
                    {std::string("backend:inertia:") + label, matrix_to_json(m)});
        }
    };
    agree(constrained_m(p), "three-block");
    agree(bordered(p.a1.matrix(), p.b1), "objective-border");
    agree(bordered(p.a2.matrix(), p.b2), "constraint-border");
    agree(constrained_n(p), "wide-block");
    return v;
}

nlohmann::json ConjectureOutcome::to_json() const {
    return {{"instances", instances},
            {"common_found", common_found},
            {"criterion_disagreements", criterion_disagreements},
            {"candidates", candidates}};
}

namespace {

// Smallest power-of-two shift that makes X + cI positive definite.
std::optional<Matrix> pd_shift(const HermitianMatrix& x, const ToleranceConfig& cfg) {
    const int n = x.order();
    for (long c = 0; c <= (1L << 40); c = c == 0 ? 1 : 2 * c) {
        Matrix shifted = x.matrix() + Matrix::identity(n).scaled(Scalar::exact(c));
        Inertia i = inertia(as_hermitian(shifted), cfg);
        if (i.plus == n) return shifted;
    }
    return std::nullopt;
}

} // namespace

std::optional<HermitianMatrix> find_common_solution(const std::vector<LmiProblem>& lmis,
                                                    int samples, std::uint64_t seed,
                                                    const ToleranceConfig& cfg) {
    if (lmis.empty()) throw InputError("need at least one inequality");
    const int n = lmis.front().n();
    std::vector<LmiSolution> families;
    for (const LmiProblem& q : lmis) {
        if (q.rel != Relation::geq) throw InputError("the common-solution search covers geq");
        if (q.n() != n) throw DimensionMismatch("inequalities must share the unknown's order");
        families.push_back(lmi_general_solution(q, cfg)); // throws if one is infeasible
    }

    auto is_common = [&](const Matrix& x) {
        for (const LmiProblem& q : lmis) {
            Matrix slack = q.b * x * q.b.adjoint() - q.a.matrix();
            if (inertia(as_hermitian(slack), cfg).minus != 0) return false;
        }
        return true;
    };
    auto accept = [&](const Matrix& x) { return as_hermitian(x); };

    // Distinguished solutions of each inequality.
    for (const LmiSolution& fam : families)
        if (is_common(fam.xhat().matrix())) return accept(fam.xhat().matrix());

    // Sum of positive-definite members, one per inequality: a psd shift of a
    // solution still solves its own inequality, and the other summands only
    // add psd mass.
    {
        Matrix sum = Matrix::zeros(n, n);
        bool ok = true;
        for (const LmiSolution& fam : families) {
            auto shifted = pd_shift(fam.xhat(), cfg);
            if (!shifted) { ok = false; break; }
            sum = sum + *shifted;
        }
        if (ok && is_common(sum)) return accept(sum);
    }

    // Random members of each family in rotation.
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const LmiSolution& fam = families[s % families.size()];
        Matrix u = random_matrix(rng, n, n);
        Matrix vv = random_matrix(rng, n, n);
        Matrix x = fam.realize(u, vv).matrix();
        if (is_common(x)) return accept(x);
    }

    // Grid scan over the unknown itself (1-dimensional case only).
    if (n == 1) {
        for (int x = -8; x <= 8; ++x) {
            Matrix m(1, 1, Backend::exact);
            m.set(0, 0, Scalar::exact(x));
            if (is_common(m)) return accept(m);
        }
    }
    return std::nullopt;
}

ConjectureOutcome conjecture35_search(const InstanceSpec& spec, int k, int n_instances) {
    if (k < 2) throw InputError("the simultaneous-solvability search needs k >= 2");
    ConjectureOutcome out;
    Rng top(spec.seed);
    const ToleranceConfig cfg;

    for (int inst = 0; inst < n_instances; ++inst) {
        Rng rng = top.fork(static_cast<std::uint64_t>(inst));
        std::vector<LmiProblem> lmis;
        bool all_feasible = true;
        for (int j = 0; j < k; ++j) {
            Matrix b = random_matrix(rng, spec.m2, spec.n, spec.grid_span);
            Matrix h = random_hermitian(rng, spec.n, spec.grid_span).matrix();
            Matrix g = random_matrix(rng, spec.m2, rng.uniform_int(1, spec.m2), spec.grid_span);
            Matrix a = b * h * b.adjoint() - g * g.adjoint();
            LmiProblem q{as_hermitian(a), b, Relation::geq};
            if (!lmi_feasible(q, cfg).feasible) {
                all_feasible = false;
                break;
            }
            lmis.push_back(q);
        }
        if (!all_feasible) continue; // cannot happen with the forced construction
        ++out.instances;

        bool found = find_common_solution(lmis, spec.samples, rng.next_u64(), cfg).has_value();
        if (found) ++out.common_found;

        if (k == 2) {
            // Closed-form pair criterion: with the second inequality
            // feasible, a common solution exists iff the first is feasible
            // on its own; both are feasible here, so the criterion says yes.
            bool criterion = lmi_feasible(lmis[0], cfg).feasible &&
                             lmi_feasible(lmis[1], cfg).feasible;
            if (criterion != found) ++out.criterion_disagreements;
        }
        if (!found) {
            nlohmann::json c;
            c["instance"] = inst;
            nlohmann::json arr = nlohmann::json::array();
            for (const LmiProblem& q : lmis)
                arr.push_back({{"a", matrix_to_json(q.a.matrix())},
                               {"b", matrix_to_json(q.b)}});
            c["lmis"] = arr;
            c["note"] = "no common solution found within budget; search is incomplete";
            out.candidates.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace ria
