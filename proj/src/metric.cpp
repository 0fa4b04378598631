#include "hdc/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace hdc {

MetricParams::MetricParams(double c_value) : c(c_value) {
    if (!(c > 0.0)) throw std::invalid_argument("MetricParams: c must be > 0");
}

double h_eval(const DomainSpec& D, MetricParams params, const Point& x,
              const Point& y) {
    const double dx = D.boundary_distance(x);
    const double dy = D.boundary_distance(y);
    if (dx < 1e-300 || dy < 1e-300)
        throw std::range_error("h_eval: boundary distance below 1e-300");
    // sqrt(dx)*sqrt(dy) instead of sqrt(dx*dy): the product can underflow
    // while each factor is fine. Multiplication commutes bitwise, so the
    // value is symmetric in (x, y).
    const double t = params.c * dist(x, y) / (std::sqrt(dx) * std::sqrt(dy));
    return std::log1p(t);
}

double one_minus_norm_of_ball_inversion(const Point& a, const Point& x) {
    const double a_sq = norm_sq(a);
    if (a_sq == 0.0)
        throw std::domain_error("one_minus_norm_of_ball_inversion: a must be nonzero");
    if (!(a_sq < 1.0) || !(norm_sq(x) < 1.0))
        throw std::domain_error("one_minus_norm_of_ball_inversion: points must lie in the unit ball");
    const Point a_star = star(a);
    const double m = norm(a) * dist(x, a_star);  // |a||x - a*| >= 1 - |a||x| > 0
    const double num = (1.0 - a_sq) * (1.0 - norm_sq(x));
    return num / (m * (m + dist(x, a)));
}

}  // namespace hdc
