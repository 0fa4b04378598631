#pragma once

#include <cstddef>
#include <vector>

#include "hdc/point.hpp"

namespace hdc {

/// An n x n real orthogonal matrix. Construction verifies QᵀQ = I to within
/// 1e-12 (max entry deviation) and rejects anything worse.
class OrthogonalMatrix {
public:
    explicit OrthogonalMatrix(std::vector<std::vector<double>> rows);

    static OrthogonalMatrix identity(std::size_t n);

    /// Diagonal matrix of ±1 entries. Exact in floating point, which makes
    /// it the right conjugator for bit-level invariance tests.
    static OrthogonalMatrix sign_flip(const std::vector<bool>& flip);

    std::size_t dim() const { return n_; }

    double at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    Point apply(const Point& x) const;

    OrthogonalMatrix transpose() const;

    /// true iff Q e_n = e_n exactly, i.e. Q preserves the upper half-space.
    bool fixes_last_axis() const;

private:
    OrthogonalMatrix(std::size_t n, std::vector<double> flat)
        : n_(n), e_(std::move(flat)) {}

    void validate() const;

    std::size_t n_ = 0;
    std::vector<double> e_;  // row-major
};

}  // namespace hdc
