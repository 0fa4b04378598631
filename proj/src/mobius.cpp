#include "hdc/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hdc {

namespace {

Point apply_inversion(const SphereInversion& inv, const Point& x) {
    if (x.is_infinity()) return inv.center;
    const std::size_t n = inv.center.dim();
    if (x.dim() != n) throw std::domain_error("dimension mismatch between points");

    // Scale by the largest offset coordinate so |x - center|^2 cannot
    // underflow before the pole guard fires.
    std::vector<double> d(n);
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = x[i] - inv.center[i];
        m = std::max(m, std::abs(d[i]));
    }
    if (m == 0.0) return Point::infinity();
    if (m < 1e-300)
        throw std::range_error("sphere inversion applied within 1e-300 of its center");

    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] /= m;
        s += d[i] * d[i];
    }
    const double scale = inv.radius_sq / (m * s);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = inv.center[i] + scale * d[i];
    return Point(std::move(y));
}

struct ApplyVisitor {
    const Point& x;

    Point operator()(const SphereInversion& inv) const { return apply_inversion(inv, x); }
    Point operator()(const Orthogonal& o) const { return o.matrix.apply(x); }
    Point operator()(const Translation& t) const {
        if (x.is_infinity()) return x;
        return x + t.offset;
    }
    Point operator()(const Scaling& s) const {
        if (x.is_infinity()) return x;
        return s.factor * x;
    }
};

PrimitiveMap invert_primitive(const PrimitiveMap& m) {
    if (const auto* inv = std::get_if<SphereInversion>(&m)) return *inv;  // involution
    if (const auto* o = std::get_if<Orthogonal>(&m)) return Orthogonal{o->matrix.transpose()};
    if (const auto* t = std::get_if<Translation>(&m)) return Translation{-t->offset};
    const auto& s = std::get<Scaling>(m);
    return Scaling{1.0 / s.factor};
}

}  // namespace

Point apply_primitive(const PrimitiveMap& m, const Point& x) {
    return std::visit(ApplyVisitor{x}, m);
}

Point MobiusMap::apply(const Point& x) const {
    Point p = x;
    for (const auto& m : chain_) p = apply_primitive(m, p);
    return p;
}

MobiusMap MobiusMap::inverse() const {
    std::vector<PrimitiveMap> rev;
    rev.reserve(chain_.size());
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it)
        rev.push_back(invert_primitive(*it));
    return MobiusMap(std::move(rev));
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
    std::vector<PrimitiveMap> chain = f.chain();
    chain.insert(chain.end(), g.chain().begin(), g.chain().end());
    return MobiusMap(std::move(chain));
}

MobiusMap sigma_a(const Point& a) {
    const double a_sq = norm_sq(a);
    if (a_sq == 0.0 || !(a_sq < 1.0))
        throw std::domain_error("sigma_a: a must lie in the open unit ball, a != 0");
    const double r_sq = 1.0 / a_sq - 1.0;
    return MobiusMap({SphereInversion{star(a), r_sq}});
}

MobiusMap ball_automorphism(const Point& a, const OrthogonalMatrix& A) {
    if (a.is_infinity() || !(norm_sq(a) < 1.0))
        throw std::domain_error("ball_automorphism: a must lie in the open unit ball");
    if (A.dim() != a.dim()) throw std::domain_error("dimension mismatch between points");
    if (norm_sq(a) == 0.0) return MobiusMap({Orthogonal{A}});
    return compose(sigma_a(a), MobiusMap({Orthogonal{A}}));
}

MobiusMap ball_automorphism(const Point& a) {
    if (a.is_infinity() || !(norm_sq(a) < 1.0))
        throw std::domain_error("ball_automorphism: a must lie in the open unit ball");
    if (norm_sq(a) == 0.0) return MobiusMap({Orthogonal{OrthogonalMatrix::identity(a.dim())}});
    return sigma_a(a);
}

MobiusMap ball_to_halfspace(std::size_t n) {
    if (n < 2) throw std::invalid_argument("ball_to_halfspace: n must be >= 2");
    return MobiusMap({SphereInversion{-1.0 * Point::unit(n, n - 1), 2.0}});
}

MobiusMap unit_sphere_inversion(std::size_t n) {
    if (n < 2) throw std::invalid_argument("unit_sphere_inversion: n must be >= 2");
    return MobiusMap({SphereInversion{Point::zero(n), 1.0}});
}

namespace {

void require_halfspace_similarity(const MobiusMap& similarity) {
    for (const auto& m : similarity.chain()) {
        if (std::holds_alternative<SphereInversion>(m))
            throw std::domain_error("halfspace_mobius: similarity may not contain inversions");
        if (const auto* t = std::get_if<Translation>(&m)) {
            if (t->offset.last() != 0.0)
                throw std::domain_error("halfspace_mobius: translation must keep the boundary plane");
        } else if (const auto* o = std::get_if<Orthogonal>(&m)) {
            if (!o->matrix.fixes_last_axis())
                throw std::domain_error("halfspace_mobius: orthogonal part must fix e_n");
        } else if (const auto* s = std::get_if<Scaling>(&m)) {
            if (!(s->factor > 0.0))
                throw std::domain_error("halfspace_mobius: scaling must be positive");
        }
    }
}

}  // namespace

MobiusMap halfspace_mobius(const Point& anchor, const MobiusMap& similarity) {
    require_halfspace_similarity(similarity);
    if (anchor.is_infinity()) return similarity;
    if (anchor.last() != 0.0)
        throw std::domain_error("halfspace_mobius: anchor must lie on the boundary plane or be infinity");
    const std::size_t n = anchor.dim();
    MobiusMap head({Translation{-anchor}, SphereInversion{Point::zero(n), 1.0}});
    return compose(head, similarity);
}

std::pair<double, double> inversion_distance_identity(const Point& center,
                                                      double radius_sq,
                                                      const Point& x,
                                                      const Point& y) {
    if (x == center || y == center)
        throw std::domain_error("inversion_distance_identity: point coincides with the center");
    const SphereInversion inv{center, radius_sq};
    const double lhs = dist(apply_inversion(inv, x), apply_inversion(inv, y));
    const double rhs = radius_sq * dist(x, y) / (dist(x, center) * dist(y, center));
    return {lhs, rhs};
}

}  // namespace hdc
