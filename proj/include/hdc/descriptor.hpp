#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hdc/domain.hpp"
#include "hdc/mobius.hpp"
#include "hdc/point.hpp"

namespace hdc {

/// Textual grammars used by the CLI. All parse failures throw
/// std::invalid_argument with a message naming the offending token.

/// "0.5,0" -> Point; "inf" -> the point at infinity.
Point parse_point(const std::string& text);

/// "ball:2" | "half:3" | "pball:2:0.3,0"
DomainSpec parse_domain(const std::string& text);

/// Primitive map descriptors joined by ';', applied left to right:
///   sigma:a1,...,an     ball inversion σ_a
///   b2h                 ball-to-half-space inversion
///   unitinv             inversion in the unit sphere
///   trans:v1,...,vn     translation
///   scale:λ             positive scaling
///   orth:seed           seeded random orthogonal map
///   horth:seed          seeded random orthogonal map fixing e_n
/// `n` fixes the dimension of the descriptors that do not carry coordinates.
MobiusMap parse_map(const std::string& text, std::size_t n);

std::vector<std::string> split(const std::string& text, char sep);

}  // namespace hdc
