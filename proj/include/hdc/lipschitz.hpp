#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "hdc/domain.hpp"
#include "hdc/metric.hpp"
#include "hdc/mobius.hpp"
#include "hdc/rng.hpp"

namespace hdc {

/// One distortion-ratio observation h_{D',c}(f(x), f(y)) / h_{D,c}(x, y).
struct RatioSample {
    Point x;
    Point y;
    double h_source;
    double h_image;
    double ratio;
};

RatioSample ratio_sample(const MobiusMap& f, const DomainSpec& src,
                         const DomainSpec& dst, MetricParams params,
                         const Point& x, const Point& y);

struct LipschitzReport {
    double sup_estimate = 0.0;
    double inf_estimate = std::numeric_limits<double>::infinity();
    Point argmax_x, argmax_y;
    Point argmin_x, argmin_y;
    double theoretical_upper = std::numeric_limits<double>::infinity();
    double theoretical_lower = 0.0;
    std::size_t n_samples = 0;
    std::size_t n_refinement_steps = 0;
    bool pass = false;  // sup <= upper(1+1e-9) and inf >= lower(1-1e-9)
    Seed seed;
};

struct EstimateOptions {
    std::size_t budget = 10000;
    std::size_t refine_steps = 160;
    Seed seed;
    double theoretical_upper = std::numeric_limits<double>::infinity();
    double theoretical_lower = 0.0;
    /// Distinguished interior points the sampler concentrates pairs around
    /// (e.g. the point a Möbius map sends to the center). The domain's own
    /// center is always included.
    std::vector<Point> focus;
    /// Worker count; results are bit-identical for any value because every
    /// sample derives from its own (seed, stream=index) substream and the
    /// reduction is ordered.
    std::size_t threads = 1;
};

/// The most extreme samples backing a report, best-first; useful as a CSV
/// dump next to the JSON report.
struct EstimateDetails {
    std::vector<RatioSample> sup_extremes;
    std::vector<RatioSample> inf_extremes;
};

/// Estimate the Lipschitz distortion range of f between (src, h) and
/// (dst, h): stratified sampling (near-boundary pairs, pairs around focus
/// points at separation scales 1e-1/1e-3/1e-6, mixed, uniform) followed by
/// coordinatewise pattern-search refinement from the best 8 maxima and
/// minima. Deterministic per (seed, budget).
LipschitzReport estimate_sup(const MobiusMap& f, const DomainSpec& src,
                             const DomainSpec& dst, MetricParams params,
                             const EstimateOptions& opt,
                             EstimateDetails* details = nullptr);

/// Distortion ratios of σ_a along the sharpness path x = t a/|a| = -y,
/// 0 < t < |a|. Forward ratios tend to 1 + |a| as t → 0⁺; with
/// inverse_direction the scan starts from (σ_a(x), σ_a(y)) and tends to
/// 1/(1 + |a|).
std::vector<std::pair<double, double>> sharpness_scan_b2b(
    const Point& a, MetricParams params, const std::vector<double>& t_values,
    bool inverse_direction = false);

/// Distortion ratios of the ball-to-half-space inversion along x = t e_1 = -y,
/// 0 < t < 1; tends to 2 as t → 0⁺ and to 1 as t → 1⁻.
std::vector<std::pair<double, double>> sharpness_scan_b2h(
    std::size_t n, MetricParams params, const std::vector<double>& t_values);

/// Max |ratio - 1| of an H^n self-map over sampled pairs. Pairs keep a
/// minimum separation so the check is not dominated by rounding noise.
double h2h_invariance_check(const MobiusMap& f, std::size_t n,
                            MetricParams params, std::size_t n_samples,
                            Seed seed);

// ---------------------------------------------------------------------------
// Punctured-ball analysis: σ_a as a map B^n∖{0} → B^n∖{a}.
// ---------------------------------------------------------------------------

enum class PuncturedCaseTag { case1, case2, case3, case4 };
enum class RadiusSubcase { both_far, mixed, both_near };

/// Which branch of each boundary-distance min is active at the image points
/// (case1: both puncture-side, case4: both sphere-side; 2/3 mixed) plus the
/// |x|,|y| vs 1/2 split of the source pair, and the proved per-case bound.
struct PuncturedCase {
    PuncturedCaseTag tag;
    RadiusSubcase subcase;
    double bound;
};

double case1_bound(double a_norm);   // 2 / (2 - |a|)
double case23_bound(double a_norm);  // sqrt(2 (1 + |a|) / (2 - |a|))
double case4_bound(double a_norm);   // 1 + |a|

/// Active branch of min(|image - a|, 1 - |image|): true when the puncture
/// term realizes the min. Exact ties go to the puncture branch.
bool image_on_puncture_branch(const Point& a, const Point& image);

/// Classify a sample pair. Swaps internally so |y| <= |x|; at an exact
/// branch tie the puncture branch wins (the bounds hold either way, so any
/// deterministic rule is sound). Throws if x or y is the origin.
PuncturedCase punctured_case_classify(const Point& a, const Point& x,
                                      const Point& y);

inline constexpr std::size_t punctured_cell_count = 12;

std::size_t punctured_cell_index(PuncturedCaseTag tag, RadiusSubcase sub);
std::string punctured_cell_name(std::size_t cell);

struct PuncturedCheckResult {
    LipschitzReport report;
    std::array<std::size_t, punctured_cell_count> tally{};
    std::array<double, punctured_cell_count> cell_max_ratio{};
    bool per_case_ok = false;   // every sample within its classified bound
    bool all_cells_hit = false; // all 12 cells populated
};

/// Sample pairs in B^n∖{0}, map through σ_a into B^n∖{a}, classify each pair
/// and check the per-case and global (1+|a|) bounds. The sampler stratifies
/// over the 12 case/subcase cells so that every cell is exercised at
/// n_samples >= 1e5.
PuncturedCheckResult punctured_bound_check(const Point& a, MetricParams params,
                                           std::size_t n_samples, Seed seed,
                                           std::size_t dim = 2);

// ---------------------------------------------------------------------------
// Inequality / identity oracles.
// ---------------------------------------------------------------------------

struct LemmaCheck {
    std::string name;
    /// Identity checks: worst relative gap (max). Inequality checks: worst
    /// normalized slack (min); slack is (larger side - smaller side) scaled
    /// by max(1, magnitudes).
    double worst;
    double tolerance;
    bool pass;
};

/// Randomized checks of the supporting facts behind the distortion bounds:
///   - the ball identity |a|^2|b-a*|^2 - |b-a|^2 = (1-|a|^2)(1-|b|^2)
///   - the two-sided bound on |b-a| / (|a||b-a*|)
///   - |a||z-a*| >= 1 - |a||z|
///   - |z|(1-|a||z|) >= (1-|a|/2)(1-|z|) for |z| >= 1/2
///   - r log(1+t) >= log(1+rt) for r >= 1, t > 0
/// Identity gaps are required <= 1e-11 relative; inequality slacks >= -1e-12.
std::vector<LemmaCheck> lemma_oracles(std::size_t n_samples, Seed seed);

/// Max relative gap of the inversion distance identity over random
/// (center, radius, x, y) configurations in dimension n.
double inversion_identity_max_gap(std::size_t n_triples, std::size_t n,
                                  Seed seed);

}  // namespace hdc
