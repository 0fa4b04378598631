#pragma once

#include "hdc/domain.hpp"
#include "hdc/point.hpp"

namespace hdc {

/// Parameters of the metric h_{D,c}. Any c > 0 is accepted; the triangle
/// inequality is guaranteed only for c >= 2, which the flag below reports.
struct MetricParams {
    double c;

    explicit MetricParams(double c_value);

    bool metric_axioms_guaranteed() const { return c >= 2.0; }
};

/// h_{D,c}(x, y) = log(1 + c |x-y| / sqrt(d_D(x) d_D(y))).
///
/// Uses log1p so that the small-separation regime h ≈ c|x-y|/sqrt(d d') keeps
/// full relative accuracy. Bit-for-bit symmetric in (x, y). Throws
/// std::domain_error if either point is outside D and std::range_error if a
/// boundary distance falls below 1e-300.
double h_eval(const DomainSpec& D, MetricParams params, const Point& x,
              const Point& y);

/// 1 - |σ_a(x)| for the ball inversion σ_a, evaluated without the subtractive
/// cancellation of the naive route. Closed form:
///
///   1 - |σ_a(x)| = (1-|a|^2)(1-|x|^2) / ( |a||x-a*| (|a||x-a*| + |x-a|) )
///
/// which follows from |a|^2|b-a*|^2 - |b-a|^2 = (1-|a|^2)(1-|b|^2). Stays
/// strictly positive and finite for 1-|x| down to 1e-14, where the naive
/// evaluation can lose every digit. Requires 0 < |a| < 1 and x in the ball.
double one_minus_norm_of_ball_inversion(const Point& a, const Point& x);

}  // namespace hdc
