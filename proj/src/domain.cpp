#include "hdc/domain.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdc {

DomainSpec DomainSpec::unit_ball(std::size_t n) {
    if (n < 2) throw std::invalid_argument("DomainSpec: dimension must be >= 2");
    return DomainSpec(DomainKind::unit_ball, n);
}

DomainSpec DomainSpec::half_space(std::size_t n) {
    if (n < 2) throw std::invalid_argument("DomainSpec: dimension must be >= 2");
    return DomainSpec(DomainKind::half_space, n);
}

DomainSpec DomainSpec::punctured_unit_ball(std::size_t n, Point puncture) {
    if (n < 2) throw std::invalid_argument("DomainSpec: dimension must be >= 2");
    if (puncture.is_infinity() || puncture.dim() != n)
        throw std::invalid_argument("DomainSpec: puncture must be a finite point of dimension n");
    if (!(norm_sq(puncture) < 1.0))
        throw std::invalid_argument("DomainSpec: puncture must lie in the open unit ball");
    DomainSpec d(DomainKind::punctured_unit_ball, n);
    d.puncture_ = std::move(puncture);
    return d;
}

const Point& DomainSpec::puncture() const {
    if (kind_ != DomainKind::punctured_unit_ball)
        throw std::logic_error("DomainSpec: puncture only defined for punctured ball");
    return puncture_;
}

bool DomainSpec::contains(const Point& x) const {
    if (x.is_infinity()) return false;
    if (x.dim() != n_) return false;
    switch (kind_) {
        case DomainKind::unit_ball:
            return norm_sq(x) < 1.0;
        case DomainKind::half_space:
            return x.last() > 0.0;
        case DomainKind::punctured_unit_ball:
            return norm_sq(x) < 1.0 && x != puncture_;
    }
    return false;
}

double DomainSpec::boundary_distance(const Point& x) const {
    if (!contains(x)) throw std::domain_error("point outside domain");
    switch (kind_) {
        case DomainKind::unit_ball:
            return one_minus_norm(x);
        case DomainKind::half_space:
            return x.last();
        case DomainKind::punctured_unit_ball:
            return std::min(dist(x, puncture_), one_minus_norm(x));
    }
    throw std::logic_error("DomainSpec: unknown kind");
}

}  // namespace hdc
