#pragma once

#include <cstdint>
#include <cstddef>

#include "hdc/orthogonal.hpp"
#include "hdc/point.hpp"

namespace hdc {

/// Reproducibility handle: identical (value, stream) pairs always produce
/// identical sample sequences. Parallel workers take disjoint streams.
struct Seed {
    std::uint64_t value = 0;
    std::uint64_t stream = 0;
};

/// Derive a disjoint substream, e.g. one per sample index or per worker.
Seed substream(Seed s, std::uint64_t k);

/// Small counter-seeded generator (splitmix64 core). Self-contained so that
/// sequences do not depend on the standard library's distribution
/// implementations.
class Rng {
public:
    explicit Rng(Seed s);

    std::uint64_t next_u64();

    /// Uniform on [0, 1).
    double next_double();

    double uniform(double lo, double hi);

    /// log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi);

    /// Standard normal via Box-Muller (pair cached).
    double normal();

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n);

private:
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// Uniformly distributed direction on S^{n-1}.
Point random_unit_vector(std::size_t n, Rng& rng);

/// Random point with uniform direction and radius uniform on
/// [min_radius, max_radius] ⊆ [0, 1]. Deterministic per seed.
Point random_point_in_ball(std::size_t n, Seed seed, double min_radius,
                           double max_radius);

/// Approximately Haar-distributed orthogonal matrix: Gram-Schmidt
/// orthonormalization of an i.i.d. standard-normal matrix; the residual-norm
/// diagonal factors are positive by construction.
OrthogonalMatrix random_orthogonal(std::size_t n, Seed seed);

/// Haar-like orthogonal matrix on the first n-1 coordinates with
/// Q e_n = e_n exactly; preserves the upper half-space.
OrthogonalMatrix random_orthogonal_fixing_last_axis(std::size_t n, Seed seed);

}  // namespace hdc
