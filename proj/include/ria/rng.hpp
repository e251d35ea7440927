#pragma once

#include <cstdint>

#include "ria/matrix.hpp"

namespace ria {

/// Deterministic, platform-independent generator (splitmix64).  The test
/// harness requires byte-identical streams for a given seed, so std::
/// distributions are avoided on purpose.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    /// Uniform in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);
    double normal();

    /// Derives an independent stream, e.g. one per sample index.
    Rng fork(std::uint64_t salt) const;

private:
    std::uint64_t state_;
};

/// Entry grid used by the exact sampling oracles: real and imaginary parts
/// drawn uniformly from {-span, ..., span}.
Scalar grid_scalar(Rng& rng, int span = 2);
Matrix random_matrix(Rng& rng, int rows, int cols, int span = 2);
HermitianMatrix random_hermitian(Rng& rng, int n, int span = 2);
/// Rejection-samples until the result is nonsingular.
Matrix random_nonsingular(Rng& rng, int n, int span = 2);
/// Diagonal with entries from {1, -1, i, -i}; unitary and exact.
Matrix random_unit_diagonal(Rng& rng, int n);

Matrix random_float_matrix(Rng& rng, int rows, int cols);

} // namespace ria
