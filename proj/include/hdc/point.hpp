#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hdc {

/// A point of the extended space R^n ∪ {∞}, n >= 2.
///
/// Finite points carry coordinates; the point at infinity carries none and
/// rejects coordinate access. All computations in one call tree must use a
/// single dimension n.
class Point {
public:
    Point() = default;  // empty placeholder, invalid until assigned

    explicit Point(std::vector<double> coords) : c_(std::move(coords)) {
        if (c_.size() < 2)
            throw std::invalid_argument("Point: dimension must be >= 2");
    }

    Point(std::initializer_list<double> coords)
        : Point(std::vector<double>(coords)) {}

    static Point infinity() {
        Point p;
        p.inf_ = true;
        return p;
    }

    static Point zero(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

    /// Standard basis vector e_{axis} (0-based axis).
    static Point unit(std::size_t n, std::size_t axis) {
        std::vector<double> c(n, 0.0);
        c.at(axis) = 1.0;
        return Point(std::move(c));
    }

    bool is_infinity() const { return inf_; }
    bool is_finite() const { return !inf_; }

    std::size_t dim() const {
        require_finite();
        return c_.size();
    }

    double operator[](std::size_t i) const {
        require_finite();
        return c_[i];
    }

    double& operator[](std::size_t i) {
        require_finite();
        return c_[i];
    }

    const std::vector<double>& coords() const {
        require_finite();
        return c_;
    }

    /// Last coordinate x_n (the half-space height).
    double last() const {
        require_finite();
        return c_.back();
    }

private:
    void require_finite() const {
        if (inf_) throw std::domain_error("nonfinite point");
    }

    std::vector<double> c_;
    bool inf_ = false;
};

inline bool operator==(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    return a.coords() == b.coords();
}

inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }

namespace detail {
inline void check_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw std::domain_error("dimension mismatch between points");
}
}  // namespace detail

inline Point operator+(const Point& a, const Point& b) {
    detail::check_same_dim(a, b);
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Point(std::move(c));
}

inline Point operator-(const Point& a, const Point& b) {
    detail::check_same_dim(a, b);
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return Point(std::move(c));
}

inline Point operator*(double s, const Point& a) {
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a[i];
    return Point(std::move(c));
}

inline Point operator-(const Point& a) { return -1.0 * a; }

inline double dot(const Point& a, const Point& b) {
    detail::check_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const Point& a) { return dot(a, a); }

inline double norm(const Point& a) { return std::sqrt(norm_sq(a)); }

/// Euclidean distance |x - y|. Symmetric bit-for-bit: the summands
/// (x_i - y_i)^2 and (y_i - x_i)^2 are identical doubles.
inline double dist(const Point& x, const Point& y) {
    detail::check_same_dim(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// 1 - |x| without subtractive cancellation: (1 - |x|^2) / (1 + |x|).
/// For |x|^2 in [1/2, 1] the numerator 1 - |x|^2 is computed exactly.
inline double one_minus_norm(const Point& x) {
    const double s = norm_sq(x);
    return (1.0 - s) / (1.0 + std::sqrt(s));
}

/// x* = x / |x|^2 with 0* = ∞ and ∞* = 0.
inline Point star(const Point& x) {
    if (x.is_infinity()) {
        // ∞ carries no dimension; the overload below takes it explicitly
        throw std::domain_error("star of infinity requires explicit dimension");
    }
    const double s = norm_sq(x);
    if (s == 0.0) return Point::infinity();
    std::vector<double> c(x.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x[i] / s;
    return Point(std::move(c));
}

/// star with explicit ambient dimension so that ∞* = 0 is representable.
inline Point star(const Point& x, std::size_t n) {
    if (x.is_infinity()) return Point::zero(n);
    return star(x);
}

}  // namespace hdc
