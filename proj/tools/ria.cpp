// ria: exact rank/inertia analysis of Hermitian matrix functions under
// semidefinite constraints.  Every subcommand prints a JSON report on
// stdout.  Exit codes: 0 success, 1 well-posed negative result (infeasible,
// no bound, predicate false, candidate found), 2 input error, 3 internal
// verification failure (a checked identity failed; report carries the
// witness).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "ria/block_calculus.hpp"
#include "ria/json_io.hpp"
#include "ria/linear_equations.hpp"
#include "ria/oracle.hpp"

using namespace ria;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

struct CommonOpts {
    std::string backend; // "", "exact", "float"
    double tol = ToleranceConfig{}.rank_rel_tol;
    double hermitian_tol = ToleranceConfig{}.hermitian_tol;
};

ToleranceConfig to_cfg(const CommonOpts& o) {
    ToleranceConfig cfg;
    cfg.rank_rel_tol = o.tol;
    cfg.hermitian_tol = o.hermitian_tol;
    return cfg;
}

// The computation backend: an explicit flag wins, then RIA_DEFAULT_BACKEND,
// then the file's own tag.  Exact data lifts to float on demand; float data
// cannot be promoted to exact.
Matrix resolve_backend(Matrix m, const CommonOpts& o) {
    std::string want = o.backend;
    if (want.empty()) {
        if (const char* env = std::getenv("RIA_DEFAULT_BACKEND")) want = env;
    }
    if (want.empty()) return m;
    Backend b = backend_from_string(want);
    if (b == m.backend()) return m;
    if (b == Backend::floating) return m.lift();
    throw InputError("float data cannot be promoted to the exact backend");
}

Matrix load(const std::string& path, const CommonOpts& o) {
    return resolve_backend(matrix_from_file(path), o);
}

HermitianMatrix load_hermitian(const std::string& path, const CommonOpts& o) {
    Matrix m = load(path, o);
    return as_hermitian(m, m.backend() == Backend::exact ? 0.0 : o.hermitian_tol);
}

json inertia_json(const Inertia& i) {
    return {{"iplus", i.plus}, {"iminus", i.minus}, {"izero", i.zero}};
}

json certificate_json(const FeasibilityCertificate& c) {
    return {{"feasible", c.feasible},
            {"relation", to_string(c.rel)},
            {"projector_form", c.projector_form},
            {"inertia_form", c.inertia_form},
            {"core_inertia", inertia_json(c.core)},
            {"core_rank", c.core_rank},
            {"eba_rank", c.eba_rank},
            {"eb_rank", c.eb_rank},
            {"border_inertia", inertia_json(c.border)},
            {"row_rank", c.row_rank},
            {"b_rank", c.b_rank}};
}

json report_json(const ExtremalReport& r) {
    json props = json::object();
    for (const auto& [name, pred] : r.properties)
        props[name] = {{"closed_form", pred.closed_form},
                       {"from_report", pred.from_report},
                       {"agree", pred.agree()}};
    return {{"max_rank", r.max_rank},
            {"min_rank", r.min_rank},
            {"max_iplus", r.max_iplus},
            {"min_iplus", r.min_iplus},
            {"max_iminus", r.max_iminus},
            {"min_iminus", r.min_iminus},
            {"ingredients", r.ingredients},
            {"properties", props}};
}

int pick_value(const ExtremalReport& r, const std::string& objective, const std::string& sense) {
    if (objective == "rank") return sense == "max" ? r.max_rank : r.min_rank;
    if (objective == "iplus") return sense == "max" ? r.max_iplus : r.min_iplus;
    return sense == "max" ? r.max_iminus : r.min_iminus;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank/inertia analysis of A - BXB* under semidefinite constraints"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    CommonOpts common;
    app.add_option("--backend", common.backend, "computation backend (exact|float)")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tol", common.tol, "relative rank tolerance for the float backend");
    app.add_option("--hermitian-tol", common.hermitian_tol,
                   "asymmetry tolerance when certifying float matrices");

    std::string matrix_path, a_path, b_path, d_path, p_path;
    std::string a1_path, b1_path, a2_path, b2_path, c_path;
    std::string relation = "geq", sense_s = "max", objective, form = "bordered", eq_type;
    std::string out_path, which = "x1";
    int samples = 50, instances = 1, k = 3, m1 = 2, m2 = 1, n = 1, n1 = 0;
    int quad_k = -1, quad_sign = 1;
    std::uint64_t seed = 1;
    bool solution_space = false, rejection = false;

    auto* cmd_inertia = app.add_subcommand("inertia", "sign counts of a Hermitian matrix");
    cmd_inertia->add_option("--matrix", matrix_path)->required();

    auto* cmd_rank = app.add_subcommand("rank", "rank of a matrix");
    cmd_rank->add_option("--matrix", matrix_path)->required();

    auto* cmd_pinv = app.add_subcommand("pinv", "Moore-Penrose inverse");
    cmd_pinv->add_option("--matrix", matrix_path)->required();
    cmd_pinv->add_option("--out", out_path, "write the result to a file as well");

    auto* cmd_block = app.add_subcommand("block-inertia", "block-matrix inertia expansions");
    cmd_block->add_option("--form", form)
        ->check(CLI::IsMember({"bordered", "schur", "schur-complement", "projected", "pinv"}));
    cmd_block->add_option("--A", a_path)->required();
    cmd_block->add_option("--B", b_path)->required();
    cmd_block->add_option("--D", d_path);
    cmd_block->add_option("--P", p_path);

    auto* cmd_solve = app.add_subcommand("solve-eq", "parametric solutions of linear equations");
    cmd_solve->add_option("--type", eq_type)
        ->required()
        ->check(CLI::IsMember({"ax-b-hermitian", "ax-b-psd", "axa-hermitian", "axa-psd"}));
    cmd_solve->add_option("--A", a_path)->required();
    cmd_solve->add_option("--B", b_path)->required();
    cmd_solve->add_option("--samples", samples);
    cmd_solve->add_option("--seed", seed);

    auto* cmd_lmi = app.add_subcommand("lmi", "feasibility and solutions of B X B* rel A");
    cmd_lmi->require_subcommand(1);
    auto* lmi_feas = cmd_lmi->add_subcommand("feasible", "feasibility certificate");
    auto* lmi_solve = cmd_lmi->add_subcommand("solve", "distinguished solution and family");
    auto* lmi_sample = cmd_lmi->add_subcommand("sample", "sample the solution family");
    for (CLI::App* c : {lmi_feas, lmi_solve, lmi_sample}) {
        c->add_option("--A", a_path)->required();
        c->add_option("--B", b_path)->required();
        c->add_option("--relation", relation)
            ->check(CLI::IsMember({"geq", "gt", "leq", "lt"}));
    }
    lmi_sample->add_option("--samples", samples);
    lmi_sample->add_option("--seed", seed);

    auto* cmd_ext = app.add_subcommand("extremal", "extremal rank/inertia reports");
    cmd_ext->add_option("--A1", a1_path)->required();
    cmd_ext->add_option("--B1", b1_path)->required();
    cmd_ext->add_option("--A2", a2_path);
    cmd_ext->add_option("--B2", b2_path);
    cmd_ext->add_option("--relation", relation)->check(CLI::IsMember({"geq", "leq", "eq"}));
    cmd_ext->add_option("--objective", objective)
        ->check(CLI::IsMember({"rank", "iplus", "iminus"}));
    cmd_ext->add_option("--sense", sense_s)->check(CLI::IsMember({"max", "min"}));
    cmd_ext->add_option("--congruence-C", c_path,
                        "optimize A1 - B1XC - (B1XC)* over rectangular X instead");
    cmd_ext->add_option("--quadratic-k", quad_k,
                        "optimize A1 + sign * B1 X X* B1* over X with k columns");
    cmd_ext->add_option("--quadratic-sign", quad_sign)->check(CLI::IsMember({-1, 1}));
    cmd_ext->add_flag("--solution", solution_space,
                      "optimize the solution X itself over {X : B1 X B1* rel A1}");
    cmd_ext->add_option("--submatrix-n1", n1,
                        "split the unknown after n1 columns and optimize a block");
    cmd_ext->add_option("--which", which)->check(CLI::IsMember({"x1", "x3"}));

    auto* cmd_loewner = app.add_subcommand("loewner", "semidefinite-order extremal matrix");
    cmd_loewner->add_option("--A1", a1_path)->required();
    cmd_loewner->add_option("--B1", b1_path)->required();
    cmd_loewner->add_option("--A2", a2_path)->required();
    cmd_loewner->add_option("--B2", b2_path)->required();
    cmd_loewner->add_option("--relation", relation)->check(CLI::IsMember({"geq", "leq"}));
    cmd_loewner->add_option("--sense", sense_s)->check(CLI::IsMember({"max", "min"}));

    auto* cmd_verify = app.add_subcommand("verify", "randomized oracle verification run");
    cmd_verify->add_option("--m1", m1);
    cmd_verify->add_option("--m2", m2);
    cmd_verify->add_option("--n", n);
    cmd_verify->add_option("--n1", n1, "submatrix split for the block checks");
    cmd_verify->add_option("--relation", relation)->check(CLI::IsMember({"geq", "leq"}));
    cmd_verify->add_option("--seed", seed)->required();
    cmd_verify->add_option("--samples", samples);
    cmd_verify->add_option("--instances", instances);
    cmd_verify->add_flag("--rejection", rejection, "rejection-sample instead of forcing");
    cmd_verify->add_option("--out", out_path, "also write the verdicts to a file");

    auto* cmd_conj = app.add_subcommand("conjecture35",
                                        "search k feasible inequalities for common solutions");
    cmd_conj->add_option("--k", k)->check(CLI::PositiveNumber);
    cmd_conj->add_option("--instances", instances);
    cmd_conj->add_option("--seed", seed)->required();
    cmd_conj->add_option("--m", m2);
    cmd_conj->add_option("--n", n);
    cmd_conj->add_option("--samples", samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        ToleranceConfig cfg = to_cfg(common);

        if (cmd_inertia->parsed()) {
            Inertia i = inertia(load_hermitian(matrix_path, common), cfg);
            emit(inertia_json(i));
            return kExitOk;
        }

        if (cmd_rank->parsed()) {
            emit({{"rank", rank(load(matrix_path, common), cfg)}});
            return kExitOk;
        }

        if (cmd_pinv->parsed()) {
            Matrix g = pinv(load(matrix_path, common), cfg);
            if (!out_path.empty()) matrix_to_file(g, out_path);
            emit(matrix_to_json(g));
            return kExitOk;
        }

        if (cmd_block->parsed()) {
            HermitianMatrix a = load_hermitian(a_path, common);
            Matrix b = load(b_path, common);
            if (form == "bordered") {
                emit(inertia_json(bordered_inertia({a, b}, cfg)));
            } else if (form == "schur") {
                if (d_path.empty()) throw InputError("--D is required for the schur form");
                emit(inertia_json(schur_inertia(a, b, load_hermitian(d_path, common), cfg)));
            } else if (form == "schur-complement") {
                if (d_path.empty()) throw InputError("--D is required");
                emit(inertia_json(
                    schur_complement_inertia(a, b, load_hermitian(d_path, common), cfg)));
            } else if (form == "projected") {
                if (p_path.empty()) throw InputError("--P is required for the projected form");
                emit(inertia_json(projected_border_inertia(a, b, load(p_path, common), cfg)));
            } else {
                auto r = bordered_pinv({a, b}, cfg);
                if (!r) {
                    emit({{"applicable", false}});
                    return kExitNegative;
                }
                emit({{"applicable", true}, {"pinv", matrix_to_json(*r)}});
            }
            return kExitOk;
        }

        if (cmd_solve->parsed()) {
            Matrix a = load(a_path, common);
            Matrix b = load(b_path, common);
            ParametricAffineFamily fam = [&] {
                if (eq_type == "ax-b-hermitian") return solve_ax_b_hermitian(a, b, cfg);
                if (eq_type == "ax-b-psd") return solve_ax_b_psd(a, b, cfg);
                double tol = a.backend() == Backend::exact ? 0.0 : common.hermitian_tol;
                if (eq_type == "axa-hermitian")
                    return solve_axa_hermitian(a, as_hermitian(b, tol), cfg);
                return solve_axa_psd(a, as_hermitian(b, tol), cfg);
            }();
            json slots = json::array();
            for (const ParamSlot& s : fam.slots())
                slots.push_back({{"name", s.name},
                                 {"rows", s.rows},
                                 {"cols", s.cols},
                                 {"hermitian", s.hermitian}});
            json realizations = json::array();
            Rng rng(seed);
            bool exact = fam.base().backend() == Backend::exact;
            auto draw_param = [&](const ParamSlot& s) {
                if (exact)
                    return s.hermitian ? random_hermitian(rng, s.rows).matrix()
                                       : random_matrix(rng, s.rows, s.cols);
                Matrix r = random_float_matrix(rng, s.rows, s.cols);
                return s.hermitian ? (r + r.adjoint()).scaled(Scalar::floating({0.5, 0.0}))
                                   : r;
            };
            for (int t = 0; t < samples; ++t) {
                std::vector<Matrix> params;
                for (const ParamSlot& s : fam.slots()) params.push_back(draw_param(s));
                realizations.push_back(matrix_to_json(fam.realize(params)));
            }
            emit({{"consistent", true},
                  {"base", matrix_to_json(fam.base())},
                  {"kernel_projector", matrix_to_json(fam.projector())},
                  {"slots", slots},
                  {"samples", realizations}});
            return kExitOk;
        }

        if (cmd_lmi->parsed()) {
            LmiProblem prob{load_hermitian(a_path, common), load(b_path, common),
                            relation_from_string(relation)};
            if (lmi_feas->parsed()) {
                FeasibilityCertificate c = lmi_feasible(prob, cfg);
                emit(certificate_json(c));
                return c.feasible ? kExitOk : kExitNegative;
            }
            LmiSolution sol = lmi_general_solution(prob, cfg); // throws if infeasible
            if (lmi_solve->parsed()) {
                emit({{"certificate", certificate_json(lmi_feasible(prob, cfg))},
                      {"xhat", matrix_to_json(sol.xhat().matrix())},
                      {"kernel_projector", matrix_to_json(sol.kernel_projector())},
                      {"residual_core", matrix_to_json(sol.residual_core())}});
                return kExitOk;
            }
            json draws = json::array();
            Rng rng(seed);
            bool exact = prob.b.backend() == Backend::exact;
            int produced = 0;
            for (int t = 0; t < samples * 20 && produced < samples; ++t) {
                Matrix u = exact ? random_matrix(rng, prob.n(), prob.n())
                                 : random_float_matrix(rng, prob.n(), prob.n());
                Matrix v = exact ? random_matrix(rng, prob.n(), prob.n())
                                 : random_float_matrix(rng, prob.n(), prob.n());
                if (!sol.strict_param_ok(u)) continue;
                HermitianMatrix x = sol.realize(u, v);
                draws.push_back({{"u", matrix_to_json(u)},
                                 {"v", matrix_to_json(v)},
                                 {"x", matrix_to_json(x.matrix())}});
                ++produced;
            }
            emit({{"xhat", matrix_to_json(sol.xhat().matrix())}, {"samples", draws}});
            return kExitOk;
        }

        if (cmd_ext->parsed()) {
            HermitianMatrix a1 = load_hermitian(a1_path, common);
            Matrix b1 = load(b1_path, common);
            if (relation == "eq" && a2_path.empty() && n1 == 0)
                throw InputError("--relation eq needs a constraint (--A2/--B2) or a submatrix split");
            ExtremalReport rep;
            if (!c_path.empty()) {
                rep = congruence_extremal(a1, b1, load(c_path, common), cfg);
            } else if (quad_k >= 0) {
                rep = quadratic_extremal(a1, b1, quad_k, quad_sign, cfg);
            } else if (solution_space) {
                rep = solution_inertia_extremal({a1, b1, relation_from_string(relation)}, cfg);
            } else if (n1 > 0 && !a2_path.empty()) {
                // Here A1/B1 play the constraint's role: [B1 | B2] X [..]* rel A1.
                throw InputError("submatrix mode uses --A1 as the constraint; pass --B2");
            } else if (n1 > 0) {
                if (b2_path.empty())
                    throw InputError("submatrix mode needs --B2 for the trailing block");
                Matrix b2 = load(b2_path, common);
                SubmatrixSelector sel{n1, b2.cols(),
                                      which == "x1" ? SubmatrixSelector::Which::x1
                                                    : SubmatrixSelector::Which::x3};
                bool equality = relation == "eq";
                rep = submatrix_extremal(a1, b1, b2, sel,
                                         equality ? Relation::geq
                                                  : relation_from_string(relation),
                                         equality ? ConstraintKind::equality
                                                  : ConstraintKind::inequality,
                                         cfg);
            } else if (!a2_path.empty() || !b2_path.empty()) {
                if (a2_path.empty() || b2_path.empty())
                    throw InputError("constrained mode needs both --A2 and --B2");
                bool equality = relation == "eq";
                ConstrainedProblem p{a1, b1, load_hermitian(a2_path, common),
                                     load(b2_path, common),
                                     equality ? Relation::geq : relation_from_string(relation),
                                     equality ? ConstraintKind::equality
                                              : ConstraintKind::inequality};
                rep = p.kind == ConstraintKind::equality ? equality_constrained_extremal(p, cfg)
                                                         : inequality_constrained_extremal(p, cfg);
            } else {
                rep = unconstrained_extremal(a1, b1, cfg);
            }
            json out = report_json(rep);
            if (!objective.empty()) out["value"] = pick_value(rep, objective, sense_s);
            emit(out);
            return kExitOk;
        }

        if (cmd_loewner->parsed()) {
            ConstrainedProblem p{load_hermitian(a1_path, common), load(b1_path, common),
                                 load_hermitian(a2_path, common), load(b2_path, common),
                                 relation_from_string(relation), ConstraintKind::inequality};
            auto bound = loewner_extremal(p, sense_s == "max" ? Sense::max : Sense::min, cfg);
            if (!bound) {
                emit({{"exists", false}});
                return kExitNegative;
            }
            emit({{"exists", true},
                  {"x0", matrix_to_json(bound->x0.matrix())},
                  {"phi", matrix_to_json(bound->phi.matrix())},
                  {"phi_inertia", inertia_json(bound->phi_inertia)},
                  {"ingredients",
                   {{"m_inertia", inertia_json(bound->m_inertia)},
                    {"j_inertia", inertia_json(bound->j_inertia)}}}});
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            json verdicts = json::array();
            long violations = 0;
            for (int i = 0; i < instances; ++i) {
                InstanceSpec spec;
                spec.m1 = m1;
                spec.m2 = m2;
                spec.n = n;
                spec.n1 = n1;
                spec.rel = relation_from_string(relation);
                spec.seed = seed + static_cast<std::uint64_t>(i);
                spec.samples = samples;
                spec.forced_construction = !rejection;
                ConstrainedProblem p = generate_feasible_instance(spec);
                Verdict sv = sample_verify(p, samples, spec.seed ^ 0x9e3779b9ULL, std::nullopt,
                                           cfg, spec.n1);
                Verdict mv = metamorphic_suite(p, spec.seed ^ 0x51f15eedULL, cfg);
                violations += static_cast<long>(sv.violations.size() + mv.violations.size());
                verdicts.push_back({{"sample", sv.to_json()}, {"metamorphic", mv.to_json()}});
            }
            json out = {{"instances", instances}, {"violations", violations},
                        {"verdicts", verdicts}};
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << out.dump(2) << "\n";
            }
            emit(out);
            return violations == 0 ? kExitOk : kExitVerification;
        }

        if (cmd_conj->parsed()) {
            InstanceSpec spec;
            spec.m2 = m2;
            spec.n = n;
            spec.seed = seed;
            spec.samples = samples;
            ConjectureOutcome out = conjecture35_search(spec, k, instances);
            emit(out.to_json());
            if (out.criterion_disagreements > 0) return kExitVerification;
            return out.candidates.empty() ? kExitOk : kExitNegative;
        }

        throw InputError("no subcommand selected");
    } catch (const VerificationError& e) {
        emit({{"error", e.what()}, {"witness", e.witness()}, {"kind", "verification"}});
        return kExitVerification;
    } catch (const NegativeResult& e) {
        emit({{"error", e.what()}, {"kind", "negative"}});
        return kExitNegative;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
