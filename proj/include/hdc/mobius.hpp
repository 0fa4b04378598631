#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "hdc/orthogonal.hpp"
#include "hdc/point.hpp"

namespace hdc {

/// Inversion in the sphere S^{n-1}(center, sqrt(radius_sq)):
///   x ↦ center + radius_sq (x - center) / |x - center|^2,
/// with center ↦ ∞ and ∞ ↦ center. Self-inverse.
struct SphereInversion {
    Point center;
    double radius_sq;
};

struct Orthogonal {
    OrthogonalMatrix matrix;
};

struct Translation {
    Point offset;
};

struct Scaling {
    double factor;  // > 0
};

using PrimitiveMap = std::variant<SphereInversion, Orthogonal, Translation, Scaling>;

/// A Möbius transformation stored as a chain of primitives applied
/// left-to-right. Chains are kept as-is (never flattened to a matrix
/// calculus) so pole behaviour stays explicit.
class MobiusMap {
public:
    MobiusMap() = default;  // identity
    explicit MobiusMap(std::vector<PrimitiveMap> chain) : chain_(std::move(chain)) {}

    /// Total on the extended space. Applying a sphere inversion exactly at
    /// its center gives ∞; within 1e-300 of the center throws
    /// std::range_error instead of overflowing.
    Point apply(const Point& x) const;

    /// Reversed chain with each primitive inverted; sphere inversions are
    /// their own inverses.
    MobiusMap inverse() const;

    const std::vector<PrimitiveMap>& chain() const { return chain_; }

private:
    std::vector<PrimitiveMap> chain_;
};

/// apply(compose(f, g), x) == apply(g, apply(f, x)).
MobiusMap compose(const MobiusMap& f, const MobiusMap& g);

Point apply_primitive(const PrimitiveMap& m, const Point& x);

/// σ_a: inversion in S^{n-1}(a*, r), r^2 = |a|^{-2} - 1, for 0 < |a| < 1.
/// Involutive self-map of the unit ball with σ_a(a) = 0 and σ_a(a*) = ∞.
MobiusMap sigma_a(const Point& a);

/// Unit-ball automorphism x ↦ A(σ_a(x)) sending a to 0; for a = 0 it is the
/// orthogonal map alone.
MobiusMap ball_automorphism(const Point& a, const OrthogonalMatrix& A);
MobiusMap ball_automorphism(const Point& a);

/// Inversion in S^{n-1}(-e_n, sqrt(2)): maps B^n onto H^n with σ(0) = e_n and
/// image height σ_n(x) = (1 - |x|^2) / |x + e_n|^2.
MobiusMap ball_to_halfspace(std::size_t n);

/// Inversion in the unit sphere S^{n-1}(0, 1); a self-map of H^n.
MobiusMap unit_sphere_inversion(std::size_t n);

/// Möbius self-map of H^n sending `anchor` (a boundary point or ∞) to ∞:
/// translation by -anchor, then unit-sphere inversion, then the given
/// similarity. For anchor = ∞ the result is the similarity alone. The
/// similarity chain may only contain H^n-preserving primitives: translations
/// with zero last coordinate, positive scalings, and orthogonal maps fixing
/// e_n.
MobiusMap halfspace_mobius(const Point& anchor, const MobiusMap& similarity);

/// Both sides of the inversion distance identity
///   |σ(x) - σ(y)| = radius_sq |x-y| / (|x - center||y - center|)
/// as (lhs, rhs) for an external check. Throws if x or y is the center.
std::pair<double, double> inversion_distance_identity(const Point& center,
                                                      double radius_sq,
                                                      const Point& x,
                                                      const Point& y);

}  // namespace hdc
