#include "hdc/descriptor.hpp"

#include <charconv>
#include <stdexcept>

#include "hdc/rng.hpp"

namespace hdc {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

namespace {

double parse_double(const std::string& tok) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("invalid number: '" + tok + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& tok) {
    std::uint64_t v = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("invalid integer: '" + tok + "'");
    return v;
}

std::vector<double> parse_coords(const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_double(tok));
    return out;
}

}  // namespace

Point parse_point(const std::string& text) {
    if (text == "inf") return Point::infinity();
    auto coords = parse_coords(text);
    if (coords.size() < 2)
        throw std::invalid_argument("point needs at least 2 coordinates: '" + text + "'");
    return Point(std::move(coords));
}

DomainSpec parse_domain(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.empty()) throw std::invalid_argument("empty domain descriptor");
    const std::string& kind = parts[0];
    if (kind == "ball" || kind == "half") {
        if (parts.size() != 2)
            throw std::invalid_argument("expected '" + kind + ":n': '" + text + "'");
        const auto n = static_cast<std::size_t>(parse_u64(parts[1]));
        if (n < 2) throw std::invalid_argument("domain dimension must be >= 2");
        return kind == "ball" ? DomainSpec::unit_ball(n) : DomainSpec::half_space(n);
    }
    if (kind == "pball") {
        if (parts.size() != 3)
            throw std::invalid_argument("expected 'pball:n:p1,...,pn': '" + text + "'");
        const auto n = static_cast<std::size_t>(parse_u64(parts[1]));
        Point p = parse_point(parts[2]);
        if (p.is_infinity() || p.dim() != n)
            throw std::invalid_argument("puncture dimension mismatch: '" + text + "'");
        return DomainSpec::punctured_unit_ball(n, std::move(p));
    }
    throw std::invalid_argument("unknown domain kind: '" + kind + "'");
}

MobiusMap parse_map(const std::string& text, std::size_t n) {
    MobiusMap map;
    for (const auto& item : split(text, ';')) {
        const auto parts = split(item, ':');
        const std::string& kind = parts[0];
        MobiusMap next;
        if (kind == "sigma") {
            if (parts.size() != 2)
                throw std::invalid_argument("expected 'sigma:a1,...,an': '" + item + "'");
            next = sigma_a(parse_point(parts[1]));
        } else if (kind == "b2h") {
            next = ball_to_halfspace(n);
        } else if (kind == "unitinv") {
            next = unit_sphere_inversion(n);
        } else if (kind == "trans") {
            if (parts.size() != 2)
                throw std::invalid_argument("expected 'trans:v1,...,vn': '" + item + "'");
            next = MobiusMap({Translation{parse_point(parts[1])}});
        } else if (kind == "scale") {
            if (parts.size() != 2)
                throw std::invalid_argument("expected 'scale:factor': '" + item + "'");
            const double factor = parse_double(parts[1]);
            if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be > 0");
            next = MobiusMap({Scaling{factor}});
        } else if (kind == "orth") {
            if (parts.size() != 2)
                throw std::invalid_argument("expected 'orth:seed': '" + item + "'");
            next = MobiusMap({Orthogonal{random_orthogonal(n, Seed{parse_u64(parts[1]), 0})}});
        } else if (kind == "horth") {
            if (parts.size() != 2)
                throw std::invalid_argument("expected 'horth:seed': '" + item + "'");
            next = MobiusMap(
                {Orthogonal{random_orthogonal_fixing_last_axis(n, Seed{parse_u64(parts[1]), 0})}});
        } else {
            throw std::invalid_argument("unknown map descriptor: '" + item + "'");
        }
        map = compose(map, next);
    }
    return map;
}

}  // namespace hdc
