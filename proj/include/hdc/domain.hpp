#pragma once

#include <cstddef>

#include "hdc/point.hpp"

namespace hdc {

enum class DomainKind { unit_ball, half_space, punctured_unit_ball };

/// Minimal surface a domain must offer to host the metric h_{D,c}. Only the
/// canonical domains below implement it today; further open sets plug in
/// here.
class BoundaryOracle {
public:
    virtual ~BoundaryOracle() = default;
    virtual std::size_t dim() const = 0;
    virtual bool contains(const Point& x) const = 0;
    virtual double boundary_distance(const Point& x) const = 0;
};

/// One of the canonical domains B^n, H^n, or B^n minus an interior point,
/// together with its boundary-distance rule d_D(x) = d(x, ∂D).
///
/// Membership is strict: boundary points are outside, since the metric
/// h_{D,c} divides by sqrt(d_D) and is undefined there.
class DomainSpec final : public BoundaryOracle {
public:
    static DomainSpec unit_ball(std::size_t n);
    static DomainSpec half_space(std::size_t n);
    static DomainSpec punctured_unit_ball(std::size_t n, Point puncture);

    DomainKind kind() const { return kind_; }
    std::size_t dim() const override { return n_; }

    /// Puncture point; only meaningful for punctured_unit_ball.
    const Point& puncture() const;

    /// Strict interior membership, decided exactly from coordinates.
    /// The point at infinity is outside every canonical domain.
    bool contains(const Point& x) const override;

    /// d(x, ∂D) > 0 for interior x; throws "point outside domain" otherwise.
    ///   unit ball:      1 - |x|      (computed as (1-|x|^2)/(1+|x|))
    ///   half-space:     x_n
    ///   punctured ball: min(|x - p|, 1 - |x|)
    double boundary_distance(const Point& x) const override;

private:
    DomainSpec(DomainKind k, std::size_t n) : kind_(k), n_(n) {}

    DomainKind kind_;
    std::size_t n_;
    Point puncture_;
};

}  // namespace hdc
