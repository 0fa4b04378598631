#include "hdc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hdc {

namespace {

// murmur3 finalizer; full-period bijection on 64-bit words.
std::uint64_t fmix64(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return k;
}

constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

}  // namespace

Seed substream(Seed s, std::uint64_t k) {
    return Seed{s.value, fmix64(s.stream + golden * (k + 1))};
}

Rng::Rng(Seed s) : state_(fmix64(s.value ^ fmix64(s.stream + golden))) {}

std::uint64_t Rng::next_u64() {
    state_ += golden;
    return fmix64(state_);
}

double Rng::next_double() {
    // top 53 bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

double Rng::log_uniform(double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("log_uniform: need 0 < lo <= hi");
    return lo * std::exp(next_double() * std::log(hi / lo));
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    // Box-Muller; u1 in (0,1] so the log is finite.
    double u1 = 1.0 - next_double();
    double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    cached_normal_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
}

std::size_t Rng::index(std::size_t n) {
    return static_cast<std::size_t>(next_double() * static_cast<double>(n)) % n;
}

Point random_unit_vector(std::size_t n, Rng& rng) {
    while (true) {
        std::vector<double> c(n);
        double s = 0.0;
        for (auto& v : c) {
            v = rng.normal();
            s += v * v;
        }
        if (s < 1e-24) continue;  // degenerate draw, retry
        const double inv = 1.0 / std::sqrt(s);
        for (auto& v : c) v *= inv;
        return Point(std::move(c));
    }
}

Point random_point_in_ball(std::size_t n, Seed seed, double min_radius,
                           double max_radius) {
    if (n < 2) throw std::invalid_argument("random_point_in_ball: n must be >= 2");
    if (!(0.0 <= min_radius && min_radius < max_radius && max_radius <= 1.0))
        throw std::invalid_argument("random_point_in_ball: invalid radius interval");
    Rng rng(seed);
    const Point u = random_unit_vector(n, rng);
    return rng.uniform(min_radius, max_radius) * u;
}

OrthogonalMatrix random_orthogonal(std::size_t n, Seed seed) {
    if (n < 2) throw std::invalid_argument("random_orthogonal: n must be >= 2");
    Rng rng(seed);
    while (true) {
        // columns[j] = j-th column of a standard-normal matrix
        std::vector<std::vector<double>> col(n, std::vector<double>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) col[j][i] = rng.normal();

        // modified Gram-Schmidt with one reorthogonalization pass
        bool degenerate = false;
        for (std::size_t j = 0; j < n && !degenerate; ++j) {
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < j; ++k) {
                    double proj = 0.0;
                    for (std::size_t i = 0; i < n; ++i) proj += col[k][i] * col[j][i];
                    for (std::size_t i = 0; i < n; ++i) col[j][i] -= proj * col[k][i];
                }
            }
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += col[j][i] * col[j][i];
            if (s < 1e-16) {
                degenerate = true;
                break;
            }
            const double inv = 1.0 / std::sqrt(s);
            for (std::size_t i = 0; i < n; ++i) col[j][i] *= inv;
        }
        if (degenerate) continue;

        std::vector<std::vector<double>> rows(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = col[j][i];
        return OrthogonalMatrix(std::move(rows));
    }
}

OrthogonalMatrix random_orthogonal_fixing_last_axis(std::size_t n, Seed seed) {
    if (n < 3) return OrthogonalMatrix::identity(n);  // only ±1 in 1d block; keep +1
    const OrthogonalMatrix block = random_orthogonal(n - 1, seed);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) rows[i][j] = block.at(i, j);
    rows[n - 1][n - 1] = 1.0;
    return OrthogonalMatrix(std::move(rows));
}

}  // namespace hdc
