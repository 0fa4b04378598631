#pragma once

#include <string>
#include <vector>

#include "hdc/lipschitz.hpp"

namespace hdc {

/// 17 significant digits — enough to round-trip any double.
std::string format_sig17(double v);

/// Shortest decimal that round-trips (std::to_chars).
std::string format_shortest(double v);

/// Coordinates as a JSON array, or the string "inf".
std::string point_to_json(const Point& p);

std::string report_to_json(const LipschitzReport& rep);

std::string ratio_sample_to_json(const RatioSample& s);

/// CSV with header `t,ratio`.
std::string scan_to_csv(const std::vector<std::pair<double, double>>& scan);

/// CSV with header `x...,y...,h_src,h_img,ratio` (one x/y column per
/// coordinate).
std::string samples_to_csv(const std::vector<RatioSample>& samples);

}  // namespace hdc
