#include "hdc/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

namespace hdc {

namespace {

constexpr double k_ratio_pass_margin = 1e-9;
// Floors below which evaluation noise would dominate the true variation of
// the distortion ratio (boundary distances lose relative accuracy like
// eps/d, separations like eps·|coords|/|x-y|).
constexpr double k_min_separation = 1e-7;
constexpr double k_min_boundary = 1e-7;
constexpr double k_radial_clamp = 1e-12;

// Half-space points carry O(1) coordinates at every separation scale, so the
// separation floor sits higher there; the sharp ball-side limits all live at
// small-norm pairs where no such cancellation exists.
double min_separation_for(const DomainSpec& src) {
    return src.kind() == DomainKind::half_space ? 1e-4 : k_min_separation;
}

bool lex_less(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) return b.is_infinity() && !a.is_infinity();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

bool pair_lex_less(const RatioSample& s, const RatioSample& t) {
    if (lex_less(s.x, t.x)) return true;
    if (lex_less(t.x, s.x)) return false;
    return lex_less(s.y, t.y);
}

/// Keeps the k most extreme samples under a total order (ratio first, then
/// lexicographic pair compare), so the result is independent of visit order.
class ExtremeTracker {
public:
    ExtremeTracker(bool maximize, std::size_t k) : maximize_(maximize), k_(k) {}

    void offer(const RatioSample& s) {
        auto pos = std::lower_bound(best_.begin(), best_.end(), s,
                                    [this](const RatioSample& u, const RatioSample& v) {
                                        return better(u, v);
                                    });
        best_.insert(pos, s);
        if (best_.size() > k_) best_.pop_back();
    }

    void merge(const ExtremeTracker& other) {
        for (const auto& s : other.best_) offer(s);
    }

    const std::vector<RatioSample>& best() const { return best_; }
    bool empty() const { return best_.empty(); }
    const RatioSample& top() const { return best_.front(); }

private:
    bool better(const RatioSample& u, const RatioSample& v) const {
        if (u.ratio != v.ratio) return maximize_ ? u.ratio > v.ratio : u.ratio < v.ratio;
        return pair_lex_less(u, v);
    }

    bool maximize_;
    std::size_t k_;
    std::vector<RatioSample> best_;  // sorted, best first
};

Point domain_center(const DomainSpec& d) {
    switch (d.kind()) {
        case DomainKind::unit_ball:
            return Point::zero(d.dim());
        case DomainKind::half_space:
            return Point::unit(d.dim(), d.dim() - 1);
        case DomainKind::punctured_unit_ball: {
            Point c = 0.5 * Point::unit(d.dim(), 0);
            if (c == d.puncture()) c = 0.5 * Point::unit(d.dim(), 1);
            return c;
        }
    }
    throw std::logic_error("domain_center: unknown kind");
}

/// Projection into the (numerically) strict interior, as used by the
/// refinement iterates: radial clamp to |x| <= 1 - 1e-12, height clamp to
/// x_n >= 1e-12, puncture clearance >= 1e-12.
Point clamp_interior(const DomainSpec& d, Point p) {
    const std::size_t n = d.dim();
    if (d.kind() == DomainKind::half_space) {
        if (p[n - 1] < k_radial_clamp) p[n - 1] = k_radial_clamp;
        return p;
    }
    const double r = norm(p);
    const double rmax = 1.0 - k_radial_clamp;
    if (r > rmax) p = (rmax / r) * p;
    if (d.kind() == DomainKind::punctured_unit_ball) {
        const Point& q = d.puncture();
        if (dist(p, q) < k_radial_clamp) {
            Point dir = Point::unit(n, 0);
            if (dist(p, q) > 0.0) dir = (1.0 / dist(p, q)) * (p - q);
            p = q + k_radial_clamp * dir;
        }
    }
    return p;
}

double boundary_distance_or_zero(const DomainSpec& d, const Point& p) {
    if (!d.contains(p)) return 0.0;
    return d.boundary_distance(p);
}

std::optional<RatioSample> try_ratio(const MobiusMap& f, const DomainSpec& src,
                                     const DomainSpec& dst, MetricParams params,
                                     const Point& x, const Point& y) {
    if (!src.contains(x) || !src.contains(y)) return std::nullopt;
    if (!(dist(x, y) > 0.0)) return std::nullopt;
    try {
        const Point fx = f.apply(x);
        const Point fy = f.apply(y);
        if (!dst.contains(fx) || !dst.contains(fy)) return std::nullopt;
        const double hs = h_eval(src, params, x, y);
        const double hi = h_eval(dst, params, fx, fy);
        if (!(hs > 0.0) || !std::isfinite(hs) || !std::isfinite(hi)) return std::nullopt;
        const double r = hi / hs;
        if (!std::isfinite(r) || !(r > 0.0)) return std::nullopt;
        return RatioSample{x, y, hs, hi, r};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Samples with a noise guard on top of try_ratio: minimum separation and
/// minimum boundary clearance on the source pair.
std::optional<RatioSample> guarded_ratio(const MobiusMap& f, const DomainSpec& src,
                                         const DomainSpec& dst, MetricParams params,
                                         const Point& x, const Point& y,
                                         double min_sep) {
    if (x.is_infinity() || y.is_infinity()) return std::nullopt;
    if (dist(x, y) < min_sep) return std::nullopt;
    if (boundary_distance_or_zero(src, x) < k_min_boundary) return std::nullopt;
    if (boundary_distance_or_zero(src, y) < k_min_boundary) return std::nullopt;
    return try_ratio(f, src, dst, params, x, y);
}

// ---------------------------------------------------------------------------
// Stratified pair sampling.
// ---------------------------------------------------------------------------

class PairSampler {
public:
    PairSampler(const DomainSpec& src, std::vector<Point> focus, Seed seed)
        : src_(src), focus_(std::move(focus)), seed_(seed) {
        focus_.insert(focus_.begin(), domain_center(src));
        for (auto& p : focus_) p = clamp_interior(src_, p);
    }

    /// Deterministic per index: all randomness comes from substream(seed, i).
    std::pair<Point, Point> draw(std::size_t index) const {
        Rng rng(substream(seed_, index));
        const std::size_t stratum = index % 8;
        const double sep_floor = min_separation_for(src_);
        const double sep_scales[3] = {1e-1, 1e-3, std::max(1e-6, sep_floor)};
        switch (stratum) {
            case 0:
                return {interior_point(rng, 1e-6, 1.0), interior_point(rng, 1e-6, 1.0)};
            case 1:  // both near the boundary
                return {interior_point(rng, 1e-6, 1e-1, true),
                        interior_point(rng, 1e-6, 1e-1, true)};
            case 2:
            case 3:
            case 4: {  // symmetric pair around a focus point
                const Point& p = focus_[(index / 8) % focus_.size()];
                const double d = sep_scales[stratum - 2];
                const Point u = random_unit_vector(src_.dim(), rng);
                return {clamp_interior(src_, p + d * u), clamp_interior(src_, p - d * u)};
            }
            case 5:  // mixed: one near boundary, one generic
                return {interior_point(rng, 1e-6, 1e-1, true), interior_point(rng, 1e-6, 1.0)};
            case 6: {  // small separation at a generic location
                const double d = sep_scales[(index / 8) % 3];
                const Point x = interior_point(rng, 1e-4, 1.0);
                const Point u = random_unit_vector(src_.dim(), rng);
                return {x, clamp_interior(src_, x + d * u)};
            }
            default: {  // far-apart pair hugging the boundary
                const double bd = rng.log_uniform(1e-6, 1e-1);
                return antipodal_boundary_pair(rng, bd);
            }
        }
    }

private:
    /// A point with boundary distance in [bd_lo, bd_hi); log-uniform when
    /// near_boundary is set, otherwise uniform in radius/height.
    Point interior_point(Rng& rng, double bd_lo, double bd_hi,
                         bool near_boundary = false) const {
        const std::size_t n = src_.dim();
        const double bd = near_boundary ? rng.log_uniform(bd_lo, bd_hi)
                                        : rng.uniform(bd_lo, bd_hi);
        if (src_.kind() == DomainKind::half_space) {
            std::vector<double> c(n);
            for (std::size_t i = 0; i + 1 < n; ++i) c[i] = rng.uniform(-2.0, 2.0);
            c[n - 1] = near_boundary ? bd : rng.log_uniform(1e-3, 3.0);
            return Point(std::move(c));
        }
        Point p = (1.0 - bd) * random_unit_vector(n, rng);
        return clamp_interior(src_, p);
    }

    std::pair<Point, Point> antipodal_boundary_pair(Rng& rng, double bd) const {
        const std::size_t n = src_.dim();
        if (src_.kind() == DomainKind::half_space) {
            Point x = interior_point(rng, bd, bd, true);
            Point y = x;
            y[0] = -x[0] + rng.uniform(0.5, 2.0);
            return {x, y};
        }
        const Point u = random_unit_vector(n, rng);
        const double r = 1.0 - bd;
        Point x = clamp_interior(src_, r * u);
        Point y = clamp_interior(src_, (-r) * u);
        return {x, y};
    }

    DomainSpec src_;
    std::vector<Point> focus_;
    Seed seed_;
};

}  // namespace

RatioSample ratio_sample(const MobiusMap& f, const DomainSpec& src,
                         const DomainSpec& dst, MetricParams params,
                         const Point& x, const Point& y) {
    if (x == y) throw std::domain_error("ratio_sample: x and y must differ");
    const double hs = h_eval(src, params, x, y);
    const Point fx = f.apply(x);
    const Point fy = f.apply(y);
    if (!dst.contains(fx) || !dst.contains(fy))
        throw std::domain_error("ratio_sample: image leaves the target domain");
    const double hi = h_eval(dst, params, fx, fy);
    return RatioSample{x, y, hs, hi, hi / hs};
}

namespace {

// ---------------------------------------------------------------------------
// Pattern-search refinement.
// ---------------------------------------------------------------------------

struct RefineResult {
    std::size_t iterations = 0;
};

/// Derivative-free compass search over the 2n coordinates of (x, y); the
/// ratio is nonsmooth where the punctured-ball min switches branches, so no
/// gradients. Candidates are projected into the domain and rejected when
/// they fall inside the noise floors. Steps shrink by halves until below
/// 1e-9 or the iteration budget runs out.
RefineResult refine_extremum(const MobiusMap& f, const DomainSpec& src,
                             const DomainSpec& dst, MetricParams params,
                             RatioSample start, bool maximize,
                             std::size_t max_iters, ExtremeTracker& sup_tracker,
                             ExtremeTracker& inf_tracker) {
    RefineResult res;
    const std::size_t n = src.dim();
    const double min_sep = min_separation_for(src);
    RatioSample cur = start;
    double step = 0.02;
    const double sign = maximize ? 1.0 : -1.0;

    while (res.iterations < max_iters && step >= 1e-9) {
        ++res.iterations;
        std::optional<RatioSample> best_move;
        for (std::size_t coord = 0; coord < 2 * n; ++coord) {
            for (const double dir : {1.0, -1.0}) {
                Point x = cur.x;
                Point y = cur.y;
                Point& target = (coord < n) ? x : y;
                target[coord % n] += dir * step;
                const Point xc = clamp_interior(src, x);
                const Point yc = clamp_interior(src, y);
                auto cand = guarded_ratio(f, src, dst, params, xc, yc, min_sep);
                if (!cand) continue;
                sup_tracker.offer(*cand);
                inf_tracker.offer(*cand);
                if (!best_move || sign * cand->ratio > sign * best_move->ratio)
                    best_move = cand;
            }
        }
        // only move on improvements above the noise floor
        const double improve_tol = 1e-13 * std::max(1.0, std::abs(cur.ratio));
        if (best_move && sign * (best_move->ratio - cur.ratio) > improve_tol) {
            cur = *best_move;
        } else {
            step *= 0.5;
        }
    }
    return res;
}

LipschitzReport finalize_report(const ExtremeTracker& sup_tracker,
                                const ExtremeTracker& inf_tracker,
                                const EstimateOptions& opt, std::size_t n_samples,
                                std::size_t refine_iters) {
    LipschitzReport rep;
    rep.theoretical_upper = opt.theoretical_upper;
    rep.theoretical_lower = opt.theoretical_lower;
    rep.n_samples = n_samples;
    rep.n_refinement_steps = refine_iters;
    rep.seed = opt.seed;
    if (!sup_tracker.empty()) {
        rep.sup_estimate = sup_tracker.top().ratio;
        rep.argmax_x = sup_tracker.top().x;
        rep.argmax_y = sup_tracker.top().y;
    }
    if (!inf_tracker.empty()) {
        rep.inf_estimate = inf_tracker.top().ratio;
        rep.argmin_x = inf_tracker.top().x;
        rep.argmin_y = inf_tracker.top().y;
    }
    rep.pass = rep.sup_estimate <= rep.theoretical_upper * (1.0 + k_ratio_pass_margin) &&
               rep.inf_estimate >= rep.theoretical_lower * (1.0 - k_ratio_pass_margin);
    return rep;
}

}  // namespace

LipschitzReport estimate_sup(const MobiusMap& f, const DomainSpec& src,
                             const DomainSpec& dst, MetricParams params,
                             const EstimateOptions& opt, EstimateDetails* details) {
    if (opt.budget == 0) throw std::invalid_argument("estimate_sup: budget must be >= 1");

    const PairSampler sampler(src, opt.focus, opt.seed);

    auto run_chunk = [&](std::size_t begin, std::size_t end, ExtremeTracker& sup_t,
                         ExtremeTracker& inf_t) {
        for (std::size_t i = begin; i < end; ++i) {
            // bounded retries; every retry draws from the same substream, so
            // the outcome is a pure function of (seed, i)
            Rng retry_rng(substream(opt.seed, i));
            std::optional<RatioSample> s;
            for (int attempt = 0; attempt < 64 && !s; ++attempt) {
                Point x, y;
                if (attempt == 0) {
                    std::tie(x, y) = sampler.draw(i);
                } else {
                    // fall back to a jittered pair around the domain center
                    const Point c = domain_center(src);
                    const Point u = random_unit_vector(src.dim(), retry_rng);
                    const double d = 0.05 + 0.2 * retry_rng.next_double();
                    x = clamp_interior(src, c + d * u);
                    y = clamp_interior(src, c - d * u);
                }
                s = guarded_ratio(f, src, dst, params, x, y, min_separation_for(src));
            }
            if (!s) throw std::domain_error("estimate_sup: could not draw a valid pair");
            sup_t.offer(*s);
            inf_t.offer(*s);
        }
    };

    ExtremeTracker sup_tracker(true, 8);
    ExtremeTracker inf_tracker(false, 8);

    const std::size_t workers = std::max<std::size_t>(1, opt.threads);
    if (workers == 1 || opt.budget < 2 * workers) {
        run_chunk(0, opt.budget, sup_tracker, inf_tracker);
    } else {
        // per-sample substreams make any chunking equivalent; merge in
        // worker order for a fully ordered reduction
        std::vector<ExtremeTracker> sup_parts(workers, ExtremeTracker(true, 8));
        std::vector<ExtremeTracker> inf_parts(workers, ExtremeTracker(false, 8));
        std::vector<std::thread> pool;
        const std::size_t chunk = (opt.budget + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t b = w * chunk;
            const std::size_t e = std::min(opt.budget, b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, w, b, e] { run_chunk(b, e, sup_parts[w], inf_parts[w]); });
        }
        for (auto& t : pool) t.join();
        for (std::size_t w = 0; w < workers; ++w) {
            sup_tracker.merge(sup_parts[w]);
            inf_tracker.merge(inf_parts[w]);
        }
    }

    // refinement from the best 8 starts on each side, fixed order
    std::size_t refine_iters = 0;
    const std::vector<RatioSample> sup_starts = sup_tracker.best();
    const std::vector<RatioSample> inf_starts = inf_tracker.best();
    for (const auto& s : sup_starts)
        refine_iters += refine_extremum(f, src, dst, params, s, true, opt.refine_steps,
                                        sup_tracker, inf_tracker)
                            .iterations;
    for (const auto& s : inf_starts)
        refine_iters += refine_extremum(f, src, dst, params, s, false, opt.refine_steps,
                                        sup_tracker, inf_tracker)
                            .iterations;

    if (details) {
        details->sup_extremes = sup_tracker.best();
        details->inf_extremes = inf_tracker.best();
    }
    return finalize_report(sup_tracker, inf_tracker, opt, opt.budget, refine_iters);
}

std::vector<std::pair<double, double>> sharpness_scan_b2b(
    const Point& a, MetricParams params, const std::vector<double>& t_values,
    bool inverse_direction) {
    const double an = norm(a);
    if (!(an > 0.0) || !(an < 1.0))
        throw std::domain_error("sharpness_scan_b2b: a must lie in the open unit ball, a != 0");
    const DomainSpec ball = DomainSpec::unit_ball(a.dim());
    const MobiusMap f = sigma_a(a);
    std::vector<std::pair<double, double>> out;
    out.reserve(t_values.size());
    for (const double t : t_values) {
        if (!(t > 0.0) || !(t < an))
            throw std::invalid_argument("sharpness_scan_b2b: t must lie in (0, |a|)");
        Point x = (t / an) * a;
        Point y = -x;
        if (inverse_direction) {
            x = f.apply(x);
            y = f.apply(y);
        }
        out.emplace_back(t, ratio_sample(f, ball, ball, params, x, y).ratio);
    }
    return out;
}

std::vector<std::pair<double, double>> sharpness_scan_b2h(
    std::size_t n, MetricParams params, const std::vector<double>& t_values) {
    const DomainSpec ball = DomainSpec::unit_ball(n);
    const DomainSpec half = DomainSpec::half_space(n);
    const MobiusMap f = ball_to_halfspace(n);
    std::vector<std::pair<double, double>> out;
    out.reserve(t_values.size());
    for (const double t : t_values) {
        if (!(t > 0.0) || !(t < 1.0))
            throw std::invalid_argument("sharpness_scan_b2h: t must lie in (0, 1)");
        const Point x = t * Point::unit(n, 0);
        out.emplace_back(t, ratio_sample(f, ball, half, params, x, -x).ratio);
    }
    return out;
}

double h2h_invariance_check(const MobiusMap& f, std::size_t n, MetricParams params,
                            std::size_t n_samples, Seed seed) {
    const DomainSpec half = DomainSpec::half_space(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        Rng rng(substream(seed, i));
        Point x, y;
        do {
            std::vector<double> cx(n), cy(n);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                cx[j] = rng.uniform(-1.5, 1.5);
                cy[j] = rng.uniform(-1.5, 1.5);
            }
            cx[n - 1] = rng.uniform(0.2, 2.0);
            cy[n - 1] = rng.uniform(0.2, 2.0);
            x = Point(std::move(cx));
            y = Point(std::move(cy));
        } while (dist(x, y) < 5e-2);  // keep cancellation noise out of the check
        const RatioSample s = ratio_sample(f, half, half, params, x, y);
        worst = std::max(worst, std::abs(s.ratio - 1.0));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Punctured-ball machinery.
// ---------------------------------------------------------------------------

double case1_bound(double a_norm) { return 2.0 / (2.0 - a_norm); }

double case23_bound(double a_norm) {
    return std::sqrt(2.0 * (1.0 + a_norm) / (2.0 - a_norm));
}

double case4_bound(double a_norm) { return 1.0 + a_norm; }

bool image_on_puncture_branch(const Point& a, const Point& image) {
    return dist(image, a) <= one_minus_norm(image);
}

namespace {

double case_bound(PuncturedCaseTag tag, double a_norm) {
    switch (tag) {
        case PuncturedCaseTag::case1:
            return case1_bound(a_norm);
        case PuncturedCaseTag::case2:
        case PuncturedCaseTag::case3:
            return case23_bound(a_norm);
        case PuncturedCaseTag::case4:
            return case4_bound(a_norm);
    }
    throw std::logic_error("case_bound: unknown tag");
}

PuncturedCase classify_from_images(const Point& a, const Point& x, const Point& y,
                                   const Point& fx, const Point& fy) {
    // caller guarantees |y| <= |x|
    const bool px = image_on_puncture_branch(a, fx);
    const bool py = image_on_puncture_branch(a, fy);
    PuncturedCaseTag tag;
    if (px && py)
        tag = PuncturedCaseTag::case1;
    else if (px)
        tag = PuncturedCaseTag::case2;
    else if (py)
        tag = PuncturedCaseTag::case3;
    else
        tag = PuncturedCaseTag::case4;

    RadiusSubcase sub;
    const double ry = norm(y);
    const double rx = norm(x);
    if (ry >= 0.5)
        sub = RadiusSubcase::both_far;
    else if (rx >= 0.5)
        sub = RadiusSubcase::mixed;
    else
        sub = RadiusSubcase::both_near;

    return PuncturedCase{tag, sub, case_bound(tag, norm(a))};
}

}  // namespace

PuncturedCase punctured_case_classify(const Point& a, const Point& x, const Point& y) {
    if (norm_sq(x) == 0.0 || norm_sq(y) == 0.0)
        throw std::domain_error("punctured_case_classify: x and y must avoid the origin");
    const double an_sq = norm_sq(a);
    if (an_sq == 0.0 || !(an_sq < 1.0))
        throw std::domain_error("punctured_case_classify: a must lie in the open unit ball, a != 0");
    Point xs = x, ys = y;
    if (norm_sq(xs) < norm_sq(ys)) std::swap(xs, ys);
    const MobiusMap f = sigma_a(a);
    return classify_from_images(a, xs, ys, f.apply(xs), f.apply(ys));
}

std::size_t punctured_cell_index(PuncturedCaseTag tag, RadiusSubcase sub) {
    return static_cast<std::size_t>(tag) * 3 + static_cast<std::size_t>(sub);
}

std::string punctured_cell_name(std::size_t cell) {
    static const char* case_names[4] = {"case1", "case2", "case3", "case4"};
    static const char* sub_names[3] = {"both_far", "mixed", "both_near"};
    return std::string(case_names[cell / 3]) + "/" + sub_names[cell % 3];
}

namespace {

/// Draw one point of the punctured-ball source domain with radius in
/// [r_lo, r_hi] whose σ_a-image lies on the requested branch; rejection with
/// a direction mixture (uniform plus cones around ±a/|a|) that reaches the
/// thin branch regions. Falls back to the last draw when attempts run out.
Point draw_branch_point(Rng& rng, const Point& a, const MobiusMap& f, double r_lo,
                        double r_hi, bool want_puncture, int attempts) {
    const std::size_t n = a.dim();
    const Point a_hat = (1.0 / norm(a)) * a;
    Point candidate = Point::zero(n);
    for (int k = 0; k < attempts; ++k) {
        const double r = rng.uniform(r_lo, r_hi);
        Point u;
        switch (rng.index(4)) {
            case 0:
                u = random_unit_vector(n, rng);
                break;
            case 1:
            case 2: {
                const double s = (rng.index(2) == 0) ? 1.0 : -1.0;
                Point g = random_unit_vector(n, rng);
                Point v = s * a_hat + 0.5 * g;
                u = (1.0 / norm(v)) * v;
                break;
            }
            default: {
                Point g = random_unit_vector(n, rng);
                Point v = -1.0 * a_hat + 0.15 * g;  // tight cone opposite a
                u = (1.0 / norm(v)) * v;
                break;
            }
        }
        candidate = r * u;
        const Point image = f.apply(candidate);
        if (image.is_finite() && image_on_puncture_branch(a, image) == want_puncture)
            return candidate;
    }
    return candidate;
}

}  // namespace

PuncturedCheckResult punctured_bound_check(const Point& a, MetricParams params,
                                           std::size_t n_samples, Seed seed,
                                           std::size_t dim) {
    const double an = norm(a);
    if (!(an > 0.0) || !(an < 1.0))
        throw std::domain_error("punctured_bound_check: a must lie in the open unit ball, a != 0");
    if (a.dim() != dim) throw std::domain_error("punctured_bound_check: dimension mismatch");

    const DomainSpec src = DomainSpec::punctured_unit_ball(dim, Point::zero(dim));
    const DomainSpec dst = DomainSpec::punctured_unit_ball(dim, a);
    const MobiusMap f = sigma_a(a);

    PuncturedCheckResult out;
    out.cell_max_ratio.fill(0.0);
    out.per_case_ok = true;

    ExtremeTracker sup_tracker(true, 1);
    ExtremeTracker inf_tracker(false, 1);

    const double r_min = 1e-6;
    const double r_max = 1.0 - 1e-6;
    const double sep_scales[3] = {1e-1, 1e-3, 1e-6};

    for (std::size_t i = 0; i < n_samples; ++i) {
        Rng rng(substream(seed, i));
        const std::size_t stratum = i % 16;

        std::optional<RatioSample> s;
        for (int attempt = 0; attempt < 64 && !s; ++attempt) {
            Point x, y;
            if (stratum < punctured_cell_count) {
                // aim at one case/subcase cell
                const auto tag = static_cast<PuncturedCaseTag>(stratum / 3);
                const auto sub = static_cast<RadiusSubcase>(stratum % 3);
                double rx_lo = r_min, rx_hi = r_max, ry_lo = r_min, ry_hi = r_max;
                switch (sub) {
                    case RadiusSubcase::both_far:
                        rx_lo = ry_lo = 0.5;
                        break;
                    case RadiusSubcase::mixed:
                        rx_lo = 0.5;
                        ry_hi = 0.5 - 1e-9;
                        break;
                    case RadiusSubcase::both_near:
                        rx_hi = ry_hi = 0.5 - 1e-9;
                        break;
                }
                const bool want_px = tag == PuncturedCaseTag::case1 || tag == PuncturedCaseTag::case2;
                const bool want_py = tag == PuncturedCaseTag::case1 || tag == PuncturedCaseTag::case3;
                // keep |y| <= |x| so the targeted branches survive the
                // classifier's swap
                if (rx_lo == ry_lo && rx_hi == ry_hi) {
                    const double r1 = rng.uniform(rx_lo, rx_hi);
                    const double r2 = rng.uniform(ry_lo, ry_hi);
                    rx_lo = rx_hi = std::max(r1, r2);
                    ry_lo = ry_hi = std::min(r1, r2);
                }
                x = draw_branch_point(rng, a, f, rx_lo, rx_hi, want_px, 80);
                y = draw_branch_point(rng, a, f, ry_lo, ry_hi, want_py, 80);
            } else if (stratum == 12) {
                x = rng.uniform(r_min, r_max) * random_unit_vector(dim, rng);
                y = rng.uniform(r_min, r_max) * random_unit_vector(dim, rng);
            } else if (stratum == 13) {  // hugging the sphere
                x = (1.0 - rng.log_uniform(1e-6, 1e-1)) * random_unit_vector(dim, rng);
                y = (1.0 - rng.log_uniform(1e-6, 1e-1)) * random_unit_vector(dim, rng);
            } else if (stratum == 14) {  // hugging the puncture
                x = rng.log_uniform(1e-6, 1e-2) * random_unit_vector(dim, rng);
                y = rng.log_uniform(1e-6, 1e-2) * random_unit_vector(dim, rng);
            } else {  // small separation
                const double d = sep_scales[(i / 16) % 3];
                x = rng.uniform(1e-2, r_max) * random_unit_vector(dim, rng);
                y = clamp_interior(src, x + d * random_unit_vector(dim, rng));
            }
            s = guarded_ratio(f, src, dst, params, x, y, k_min_separation);
        }
        if (!s) continue;

        Point xs = s->x, ys = s->y;
        Point fxs = f.apply(xs), fys = f.apply(ys);
        if (norm_sq(xs) < norm_sq(ys)) {
            std::swap(xs, ys);
            std::swap(fxs, fys);
        }
        const PuncturedCase pc = classify_from_images(a, xs, ys, fxs, fys);
        const std::size_t cell = punctured_cell_index(pc.tag, pc.subcase);
        out.tally[cell] += 1;
        out.cell_max_ratio[cell] = std::max(out.cell_max_ratio[cell], s->ratio);
        if (s->ratio > pc.bound + k_ratio_pass_margin) out.per_case_ok = false;
        sup_tracker.offer(*s);
        inf_tracker.offer(*s);
    }

    EstimateOptions opt;
    opt.seed = seed;
    opt.theoretical_upper = 1.0 + an;
    opt.theoretical_lower = 0.0;  // no lower Lipschitz bound is claimed
    out.report = finalize_report(sup_tracker, inf_tracker, opt, n_samples, 0);
    out.all_cells_hit = std::all_of(out.tally.begin(), out.tally.end(),
                                    [](std::size_t c) { return c > 0; });
    return out;
}

// ---------------------------------------------------------------------------
// Inequality / identity oracles.
// ---------------------------------------------------------------------------

namespace {

/// slack of lhs <= rhs, normalized so that large magnitudes do not turn
/// rounding noise into spurious violations
double normalized_slack(double lhs, double rhs) {
    return (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::size_t cycle_dim(std::size_t i) {
    static const std::size_t dims[3] = {2, 3, 5};
    return dims[i % 3];
}

}  // namespace

std::vector<LemmaCheck> lemma_oracles(std::size_t n_samples, Seed seed) {
    double id_gap = 0.0;          // ball identity, relative
    double ratio_lo_slack = 0.0;  // two-sided ratio bound, lower side
    double ratio_hi_slack = 0.0;
    double inv_lower_slack = 0.0;
    double shell_slack = 0.0;
    double bernoulli_slack = 0.0;
    bool first = true;

    for (std::size_t i = 0; i < n_samples; ++i) {
        Rng rng(substream(seed, i));
        const std::size_t n = cycle_dim(i);

        // radius caps keep (1-|a|^2)(1-|b|^2) large enough that the
        // subtractive left side of the identity retains 1e-12 accuracy
        const Point a = rng.uniform(1e-3, 0.97) * random_unit_vector(n, rng);
        const Point b = rng.uniform(0.0, 0.97) * random_unit_vector(n, rng);
        const Point a_star = star(a);
        const double na = norm(a);
        const double nb = norm(b);

        const double m = na * dist(b, a_star);
        const double lhs_id = m * m - norm_sq(b - a);
        const double rhs_id = (1.0 - na * na) * (1.0 - nb * nb);
        id_gap = std::max(id_gap, std::abs(lhs_id - rhs_id) / rhs_id);

        const double mid = dist(b, a) / m;
        const double lo = std::abs(nb - na) / (1.0 - na * nb);
        const double hi = (nb + na) / (1.0 + na * nb);
        const double s_lo = normalized_slack(lo, mid);
        const double s_hi = normalized_slack(mid, hi);

        // Lemma on |a||z - a*| vs 1 - |a||z|
        const Point z = rng.uniform(0.0, 1.0 - 1e-3) * random_unit_vector(n, rng);
        const double s_inv = normalized_slack(1.0 - na * norm(z), na * dist(z, a_star));

        // shell inequality, |z| in [1/2, 1)
        const Point zs = rng.uniform(0.5, 1.0 - 1e-3) * random_unit_vector(n, rng);
        const double nzs = norm(zs);
        const double s_shell = normalized_slack((1.0 - na / 2.0) * (1.0 - nzs),
                                                nzs * (1.0 - na * nzs));

        // Bernoulli; pin the r = 1 equality corner on the first sample
        const double r = first ? 1.0 : rng.uniform(1.0, 8.0);
        const double t = first ? 1.0 : rng.log_uniform(1e-8, 1e3);
        const double s_bern = normalized_slack(std::log1p(r * t), r * std::log1p(t));

        if (first) {
            ratio_lo_slack = s_lo;
            ratio_hi_slack = s_hi;
            inv_lower_slack = s_inv;
            shell_slack = s_shell;
            bernoulli_slack = s_bern;
            first = false;
        } else {
            ratio_lo_slack = std::min(ratio_lo_slack, s_lo);
            ratio_hi_slack = std::min(ratio_hi_slack, s_hi);
            inv_lower_slack = std::min(inv_lower_slack, s_inv);
            shell_slack = std::min(shell_slack, s_shell);
            bernoulli_slack = std::min(bernoulli_slack, s_bern);
        }
    }

    const double id_tol = 1e-11;
    const double slack_tol = -1e-12;
    std::vector<LemmaCheck> out;
    out.push_back({"ball_identity", id_gap, id_tol, id_gap <= id_tol});
    out.push_back({"ratio_bound_lower", ratio_lo_slack, slack_tol, ratio_lo_slack >= slack_tol});
    out.push_back({"ratio_bound_upper", ratio_hi_slack, slack_tol, ratio_hi_slack >= slack_tol});
    out.push_back({"inversion_lower", inv_lower_slack, slack_tol, inv_lower_slack >= slack_tol});
    out.push_back({"shell_inequality", shell_slack, slack_tol, shell_slack >= slack_tol});
    out.push_back({"bernoulli", bernoulli_slack, slack_tol, bernoulli_slack >= slack_tol});
    return out;
}

double inversion_identity_max_gap(std::size_t n_triples, std::size_t n, Seed seed) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_triples; ++i) {
        Rng rng(substream(seed, i));
        std::vector<double> qc(n);
        for (auto& v : qc) v = rng.uniform(-2.0, 2.0);
        const Point q(std::move(qc));
        const double r_sq = rng.uniform(0.25, 4.0);

        Point x, y;
        do {
            x = q + rng.uniform(0.1, 3.0) * random_unit_vector(n, rng);
            y = q + rng.uniform(0.1, 3.0) * random_unit_vector(n, rng);
        } while (dist(x, y) < 1e-3);

        const auto [lhs, rhs] = inversion_distance_identity(q, r_sq, x, y);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    return worst;
}

}  // namespace hdc
