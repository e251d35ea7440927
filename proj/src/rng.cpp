#include "ria/rng.hpp"

#include <cmath>

#include "ria/spectral.hpp"

namespace ria {

std::uint64_t Rng::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

double Rng::normal() {
    // Box-Muller on two uniform draws; deterministic given the stream.
    double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    double u2 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Rng Rng::fork(std::uint64_t salt) const {
    Rng copy = *this;
    std::uint64_t mixed = copy.next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    return Rng(mixed);
}

Scalar grid_scalar(Rng& rng, int span) {
    long re = rng.uniform_int(-span, span);
    long im = rng.uniform_int(-span, span);
    return Scalar::exact(re, im);
}

Matrix random_matrix(Rng& rng, int rows, int cols, int span) {
    Matrix m(rows, cols, Backend::exact);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, grid_scalar(rng, span));
    return m;
}

HermitianMatrix random_hermitian(Rng& rng, int n, int span) {
    Matrix m(n, n, Backend::exact);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, Scalar::exact(rng.uniform_int(-span, span)));
        for (int j = i + 1; j < n; ++j) {
            Scalar s = grid_scalar(rng, span);
            m.set(i, j, s);
            m.set(j, i, s.conj());
        }
    }
    return as_hermitian(m);
}

Matrix random_nonsingular(Rng& rng, int n, int span) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, span);
        if (rank(m) == n) return m;
    }
}

Matrix random_unit_diagonal(Rng& rng, int n) {
    Matrix m = Matrix::zeros(n, n, Backend::exact);
    for (int i = 0; i < n; ++i) {
        switch (rng.uniform_int(0, 3)) {
            case 0: m.set(i, i, Scalar::exact(1)); break;
            case 1: m.set(i, i, Scalar::exact(-1)); break;
            case 2: m.set(i, i, Scalar::exact(0, 1)); break;
            default: m.set(i, i, Scalar::exact(0, -1)); break;
        }
    }
    return m;
}

Matrix random_float_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols, Backend::floating);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, Scalar::floating({rng.normal(), rng.normal()}));
    return m;
}

} // namespace ria
