#include "hdc/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hdc {

std::string format_sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

// JSON has no literal for non-finite values; quote them.
std::string json_number(double v) {
    if (!std::isfinite(v)) return "\"" + format_sig17(v) + "\"";
    return format_sig17(v);
}

}  // namespace

std::string format_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string point_to_json(const Point& p) {
    if (p.is_infinity()) return "\"inf\"";
    std::string out = "[";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) out += ",";
        out += format_sig17(p[i]);
    }
    out += "]";
    return out;
}

std::string report_to_json(const LipschitzReport& rep) {
    std::ostringstream os;
    os << "{";
    os << "\"sup_estimate\":" << json_number(rep.sup_estimate);
    os << ",\"inf_estimate\":" << json_number(rep.inf_estimate);
    os << ",\"argmax\":[" << point_to_json(rep.argmax_x) << "," << point_to_json(rep.argmax_y) << "]";
    os << ",\"argmin\":[" << point_to_json(rep.argmin_x) << "," << point_to_json(rep.argmin_y) << "]";
    os << ",\"theoretical_upper\":" << json_number(rep.theoretical_upper);
    os << ",\"theoretical_lower\":" << json_number(rep.theoretical_lower);
    os << ",\"n_samples\":" << rep.n_samples;
    os << ",\"n_refinement_steps\":" << rep.n_refinement_steps;
    os << ",\"verdict\":\"" << (rep.pass ? "pass" : "fail") << "\"";
    os << ",\"seed\":{\"value\":" << rep.seed.value << ",\"stream\":" << rep.seed.stream << "}";
    os << "}";
    return os.str();
}

std::string ratio_sample_to_json(const RatioSample& s) {
    std::ostringstream os;
    os << "{";
    os << "\"x\":" << point_to_json(s.x);
    os << ",\"y\":" << point_to_json(s.y);
    os << ",\"h_source\":" << format_sig17(s.h_source);
    os << ",\"h_image\":" << format_sig17(s.h_image);
    os << ",\"ratio\":" << format_sig17(s.ratio);
    os << "}";
    return os.str();
}

std::string scan_to_csv(const std::vector<std::pair<double, double>>& scan) {
    std::string out = "t,ratio\n";
    for (const auto& [t, r] : scan) {
        out += format_shortest(t);
        out += ",";
        out += format_shortest(r);
        out += "\n";
    }
    return out;
}

std::string samples_to_csv(const std::vector<RatioSample>& samples) {
    std::string out;
    if (samples.empty()) return "h_src,h_img,ratio\n";
    const std::size_t n = samples.front().x.dim();
    for (std::size_t i = 0; i < n; ++i) out += "x" + std::to_string(i + 1) + ",";
    for (std::size_t i = 0; i < n; ++i) out += "y" + std::to_string(i + 1) + ",";
    out += "h_src,h_img,ratio\n";
    for (const auto& s : samples) {
        for (std::size_t i = 0; i < n; ++i) out += format_shortest(s.x[i]) + ",";
        for (std::size_t i = 0; i < n; ++i) out += format_shortest(s.y[i]) + ",";
        out += format_shortest(s.h_source) + "," + format_shortest(s.h_image) + "," +
               format_shortest(s.ratio) + "\n";
    }
    return out;
}

}  // namespace hdc
