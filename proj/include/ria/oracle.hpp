#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ria/extremal.hpp"
#include "ria/loewner.hpp"
#include "ria/rng.hpp"

namespace ria {

/// Deterministic description of a randomized verification run: identical
/// spec (including seed) reproduces identical instances and verdicts,
/// byte for byte.
struct InstanceSpec {
    int m1 = 2;
    int m2 = 1;
    int n = 1;
    int n1 = 1; // submatrix split when n >= 2
    Relation rel = Relation::geq;
    std::uint64_t seed = 1;
    int grid_span = 2;
    int samples = 500;
    bool forced_construction = true; // A2 = B2 H B2* -/+ G G*, feasible by design
    int max_rejections = 500;        // bound for the rejection-sampling path
};

struct Violation {
    std::string check;
    nlohmann::json witness;
};

struct Verdict {
    std::string instance_id;
    long checks_run = 0;
    std::vector<Violation> violations;
    /// Whether sampling attained each of the six extremes (data, asserted
    /// only where enumeration makes attainment certain).
    std::map<std::string, bool> attained;

    bool pass() const { return violations.empty(); }
    nlohmann::json to_json() const;
};

struct GenerationStats {
    int rejections = 0;
};

/// Exhaustive rank/inertia extremes of the pencil A - x W over a rational
/// line or half-line, for W of rank at most one.  Every minor of the pencil
/// is linear in x, so the piecewise-constant structure has rational
/// breakpoints, all of which are enumerated; this is the complete scan that
/// replaces sampling for one-dimensional unknowns.
struct PencilScan {
    int max_rank = 0, min_rank = 1 << 20;
    int max_iplus = 0, min_iplus = 1 << 20;
    int max_iminus = 0, min_iminus = 1 << 20;

    void absorb(const Inertia& i) {
        max_rank = std::max(max_rank, i.rank());
        min_rank = std::min(min_rank, i.rank());
        max_iplus = std::max(max_iplus, i.plus);
        min_iplus = std::min(min_iplus, i.plus);
        max_iminus = std::max(max_iminus, i.minus);
        min_iminus = std::min(min_iminus, i.minus);
    }
    std::array<int, 6> six() const {
        return {max_rank, min_rank, max_iplus, min_iplus, max_iminus, min_iminus};
    }
};

PencilScan scan_pencil(const HermitianMatrix& a, const Matrix& w,
                       const std::optional<mpq_class>& at_least = std::nullopt,
                       const std::optional<mpq_class>& at_most = std::nullopt);

/// Draws a constrained problem whose constraint is feasible: either by the
/// forced construction or by rejection sampling against the feasibility
/// certificate (GenerationExhausted after the configured bound).
ConstrainedProblem generate_feasible_instance(const InstanceSpec& spec,
                                              GenerationStats* stats = nullptr);

/// Samples the constraint's solution family and checks every closed form
/// this library computes for the instance: bound soundness for the
/// objective, the solution and its submatrices (split after split_n1
/// columns; 0 picks n/2), the distinguished-solution identities,
/// semidefinite extremal-matrix dominance, and (for n = 1) the exhaustive
/// piecewise scan equality.  report_override substitutes the objective's
/// six bounds, which is how fault injection is exercised.
Verdict sample_verify(const ConstrainedProblem& p, int n_samples, std::uint64_t seed,
                      const std::optional<std::array<int, 6>>& report_override = std::nullopt,
                      const ToleranceConfig& cfg = {}, int split_n1 = 0);

/// Negation swap between the two constraint directions, congruence and
/// unitary-diagonal invariance of every ingredient, and exact-vs-float
/// backend agreement on well-conditioned ingredients.
Verdict metamorphic_suite(const ConstrainedProblem& p, std::uint64_t seed,
                          const ToleranceConfig& cfg = {});

struct ConjectureOutcome {
    int instances = 0;
    int common_found = 0;
    int criterion_disagreements = 0; // k = 2 only: search vs closed form
    std::vector<nlohmann::json> candidates;
    nlohmann::json to_json() const;
};

/// Budgeted search for one Hermitian X with B_j X B_j* >= A_j for every j:
/// distinguished-solution probes, a positive-definite shift sum, family
/// sampling, then a grid scan.  Every inequality must be individually
/// feasible.  The returned witness is verified exactly; nullopt means the
/// search budget ran out, not that no solution exists.
std::optional<HermitianMatrix> find_common_solution(const std::vector<LmiProblem>& lmis,
                                                    int samples, std::uint64_t seed,
                                                    const ToleranceConfig& cfg = {});

/// Generates n_instances k-tuples of individually feasible inequalities and
/// runs find_common_solution on each.  A k-tuple with no common solution
/// found within budget is reported as a candidate counterexample (the
/// search is incomplete, so candidates are leads, not disproofs).  For
/// k = 2 the verdict is compared against the closed-form pair criterion.
ConjectureOutcome conjecture35_search(const InstanceSpec& spec, int k, int n_instances);

} // namespace ria
