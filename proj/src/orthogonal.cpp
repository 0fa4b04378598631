#include "hdc/orthogonal.hpp"

#include <cmath>
#include <stdexcept>

namespace hdc {

OrthogonalMatrix::OrthogonalMatrix(std::vector<std::vector<double>> rows) {
    n_ = rows.size();
    if (n_ < 2) throw std::invalid_argument("OrthogonalMatrix: dimension must be >= 2");
    e_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_)
            throw std::invalid_argument("OrthogonalMatrix: ragged rows");
        for (std::size_t j = 0; j < n_; ++j) e_[i * n_ + j] = rows[i][j];
    }
    validate();
}

void OrthogonalMatrix::validate() const {
    // max |(QᵀQ - I)_{ij}| <= 1e-12; entries are O(1) so this is a relative
    // tolerance as well.
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n_; ++k) s += at(k, i) * at(k, j);
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - target) > 1e-12)
                throw std::invalid_argument("OrthogonalMatrix: QᵀQ != I beyond 1e-12");
        }
    }
}

OrthogonalMatrix OrthogonalMatrix::identity(std::size_t n) {
    if (n < 2) throw std::invalid_argument("OrthogonalMatrix: dimension must be >= 2");
    std::vector<double> flat(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = 1.0;
    return OrthogonalMatrix(n, std::move(flat));
}

OrthogonalMatrix OrthogonalMatrix::sign_flip(const std::vector<bool>& flip) {
    const std::size_t n = flip.size();
    if (n < 2) throw std::invalid_argument("OrthogonalMatrix: dimension must be >= 2");
    std::vector<double> flat(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = flip[i] ? -1.0 : 1.0;
    return OrthogonalMatrix(n, std::move(flat));
}

Point OrthogonalMatrix::apply(const Point& x) const {
    if (x.is_infinity()) return x;
    if (x.dim() != n_) throw std::domain_error("dimension mismatch between points");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return Point(std::move(y));
}

OrthogonalMatrix OrthogonalMatrix::transpose() const {
    std::vector<double> flat(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) flat[j * n_ + i] = at(i, j);
    return OrthogonalMatrix(n_, std::move(flat));
}

bool OrthogonalMatrix::fixes_last_axis() const {
    for (std::size_t i = 0; i < n_; ++i) {
        const double want = (i + 1 == n_) ? 1.0 : 0.0;
        if (at(i, n_ - 1) != want) return false;
    }
    return true;
}

}  // namespace hdc
