#include "hdc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "hdc/descriptor.hpp"
#include "hdc/lipschitz.hpp"
#include "hdc/metric.hpp"
#include "hdc/report_io.hpp"

namespace hdc::cli {

namespace {

void write_artifact(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: '" + path + "'");
    file << text;
}

std::vector<double> parse_t_grid(const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split(text, ',')) {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("invalid t value: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

struct SelftestFailure {};

class SelftestRunner {
public:
    SelftestRunner(std::ostream& out, std::size_t budget, Seed seed)
        : out_(out), budget_(budget), seed_(seed) {}

    void check(const std::string& name, bool ok, const std::string& detail) {
        out_ << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) out_ << "  (" << detail << ")";
        out_ << "\n";
        if (!ok) failed_ = true;
    }

    bool failed() const { return failed_; }
    std::size_t budget() const { return budget_; }
    Seed seed(std::uint64_t k) const { return substream(seed_, k); }

private:
    std::ostream& out_;
    std::size_t budget_;
    Seed seed_;
    bool failed_ = false;
};

void run_selftest(SelftestRunner& st) {
    const MetricParams c2(2.0);

    // supporting inequalities and identities
    for (const auto& lc : lemma_oracles(st.budget(), st.seed(1)))
        st.check("lemma/" + lc.name, lc.pass, "worst=" + format_sig17(lc.worst));

    const double inv_gap = inversion_identity_max_gap(st.budget(), 3, st.seed(2));
    st.check("inversion_distance_identity", inv_gap <= 1e-10,
             "max_gap=" + format_sig17(inv_gap));

    // ball -> ball distortion, |a| = 0.5
    {
        const Point a{0.5, 0.0};
        EstimateOptions opt;
        opt.budget = st.budget();
        opt.seed = st.seed(3);
        opt.theoretical_upper = 1.5;
        opt.theoretical_lower = 1.0 / 1.5;
        opt.focus = {a};
        const DomainSpec ball = DomainSpec::unit_ball(2);
        const auto rep = estimate_sup(ball_automorphism(a), ball, ball, c2, opt);
        st.check("ball_to_ball/bounds",
                 rep.pass && rep.sup_estimate >= 1.45 && rep.inf_estimate <= 1.0 / 1.45,
                 "sup=" + format_sig17(rep.sup_estimate) +
                     " inf=" + format_sig17(rep.inf_estimate));

        const auto fwd = sharpness_scan_b2b(a, c2, {1e-6});
        const auto inv = sharpness_scan_b2b(a, c2, {1e-6}, true);
        st.check("ball_to_ball/sharpness",
                 std::abs(fwd.front().second - 1.5) <= 1e-4 &&
                     std::abs(inv.front().second - 1.0 / 1.5) <= 1e-4,
                 "fwd=" + format_sig17(fwd.front().second) +
                     " inv=" + format_sig17(inv.front().second));
    }

    // ball -> half-space distortion
    {
        EstimateOptions opt;
        opt.budget = st.budget();
        opt.seed = st.seed(4);
        opt.theoretical_upper = 2.0;
        opt.theoretical_lower = 1.0;
        const auto rep = estimate_sup(ball_to_halfspace(2), DomainSpec::unit_ball(2),
                                      DomainSpec::half_space(2), c2, opt);
        st.check("ball_to_half/bounds",
                 rep.pass && rep.sup_estimate >= 1.95 && rep.inf_estimate <= 1.05,
                 "sup=" + format_sig17(rep.sup_estimate) +
                     " inf=" + format_sig17(rep.inf_estimate));

        const auto scan = sharpness_scan_b2h(2, c2, {1e-6, 1.0 - 1e-8});
        st.check("ball_to_half/sharpness",
                 std::abs(scan[0].second - 2.0) <= 1e-4 && std::abs(scan[1].second - 1.0) <= 1e-2,
                 "near0=" + format_sig17(scan[0].second) +
                     " near1=" + format_sig17(scan[1].second));
    }

    // half-space invariance for a few composed maps
    {
        double worst = 0.0;
        for (std::uint64_t k = 0; k < 3; ++k) {
            Rng rng(st.seed(50 + k));
            const Point anchor{rng.uniform(-1.0, 1.0), 0.0};
            const MobiusMap sim({Scaling{rng.uniform(0.5, 2.0)},
                                 Translation{Point{rng.uniform(-1.0, 1.0), 0.0}}});
            const MobiusMap f = halfspace_mobius(anchor, sim);
            worst = std::max(worst, h2h_invariance_check(f, 2, c2, st.budget() / 10 + 100,
                                                         st.seed(60 + k)));
        }
        st.check("half_to_half/invariance", worst <= 1e-10, "max|ratio-1|=" + format_sig17(worst));
    }

    // punctured ball bound, |a| = 0.5
    {
        const Point a{0.5, 0.0};
        const auto res = punctured_bound_check(a, c2, st.budget(), st.seed(5));
        bool cells_ok = res.all_cells_hit || st.budget() < 100000;
        st.check("punctured/bounds",
                 res.per_case_ok && res.report.sup_estimate <= 1.5 + 1e-9 && cells_ok,
                 "sup=" + format_sig17(res.report.sup_estimate));
    }

    // metric axioms for c = 2 on the three domains
    {
        const DomainSpec doms[3] = {DomainSpec::unit_ball(2), DomainSpec::half_space(2),
                                    DomainSpec::punctured_unit_ball(2, Point::zero(2))};
        double worst = 0.0;
        for (int d = 0; d < 3; ++d) {
            for (std::size_t i = 0; i < st.budget(); ++i) {
                Rng rng(substream(st.seed(70 + d), i));
                auto draw = [&]() {
                    if (doms[d].kind() == DomainKind::half_space) {
                        return Point{rng.uniform(-2.0, 2.0), rng.log_uniform(1e-4, 2.0)};
                    }
                    Point p = rng.uniform(1e-4, 1.0 - 1e-4) *
                              random_unit_vector(2, rng);
                    return p;
                };
                const Point x = draw(), y = draw(), z = draw();
                if (x == y || y == z || x == z) continue;
                const double hxz = h_eval(doms[d], c2, x, z);
                const double hxy = h_eval(doms[d], c2, x, y);
                const double hyz = h_eval(doms[d], c2, y, z);
                const double max_term = std::max({hxz, hxy, hyz});
                worst = std::max(worst, hxz - hxy - hyz - 1e-12 * max_term);
            }
        }
        st.check("metric/triangle", worst <= 0.0, "worst_violation=" + format_sig17(worst));
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperbolic-type metric toolkit: h_{D,c} evaluation, Möbius maps, "
                 "and Lipschitz-constant verification"};
    app.require_subcommand(1);

    // eval ------------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "evaluate h_{D,c}(x, y)");
    std::string eval_domain, eval_x, eval_y;
    double eval_c = 2.0;
    eval_cmd->add_option("domain", eval_domain, "domain descriptor (ball:n | half:n | pball:n:p)")
        ->required();
    eval_cmd->add_option("--c", eval_c, "metric constant c > 0");
    eval_cmd->add_option("--x", eval_x, "first point")->required();
    eval_cmd->add_option("--y", eval_y, "second point")->required();

    // map -------------------------------------------------------------------
    auto* map_cmd = app.add_subcommand("map", "apply a Möbius map to a point");
    std::string map_f, map_x;
    std::size_t map_n = 0;
    map_cmd->add_option("--f", map_f, "map descriptor")->required();
    map_cmd->add_option("--x", map_x, "point (or 'inf')")->required();
    map_cmd->add_option("--n", map_n, "ambient dimension (default: from --x)");

    // ratio -----------------------------------------------------------------
    auto* ratio_cmd = app.add_subcommand("ratio", "distortion ratio at one pair");
    std::string ratio_f, ratio_src, ratio_dst, ratio_x, ratio_y;
    double ratio_c = 2.0;
    ratio_cmd->add_option("--f", ratio_f, "map descriptor")->required();
    ratio_cmd->add_option("--src", ratio_src, "source domain")->required();
    ratio_cmd->add_option("--dst", ratio_dst, "target domain")->required();
    ratio_cmd->add_option("--c", ratio_c, "metric constant c > 0");
    ratio_cmd->add_option("--x", ratio_x, "first point")->required();
    ratio_cmd->add_option("--y", ratio_y, "second point")->required();

    // estimate ----------------------------------------------------------------
    auto* est_cmd = app.add_subcommand("estimate", "estimate the Lipschitz distortion range");
    std::string est_f, est_src, est_dst, est_out;
    std::vector<std::string> est_focus;
    double est_c = 2.0;
    double est_upper = std::numeric_limits<double>::infinity();
    double est_lower = 0.0;
    std::size_t est_budget = 10000, est_refine = 160, est_threads = 1;
    std::uint64_t est_seed = 0, est_stream = 0;
    est_cmd->add_option("--f", est_f, "map descriptor")->required();
    est_cmd->add_option("--src", est_src, "source domain")->required();
    est_cmd->add_option("--dst", est_dst, "target domain")->required();
    est_cmd->add_option("--c", est_c, "metric constant c > 0");
    est_cmd->add_option("--budget", est_budget, "sample count (>= 1)");
    est_cmd->add_option("--refine", est_refine, "refinement iterations per start");
    est_cmd->add_option("--seed", est_seed, "seed value");
    est_cmd->add_option("--stream", est_stream, "seed stream");
    est_cmd->add_option("--upper", est_upper, "theoretical upper bound for the verdict");
    est_cmd->add_option("--lower", est_lower, "theoretical lower bound for the verdict");
    est_cmd->add_option("--focus", est_focus, "distinguished interior point(s)");
    est_cmd->add_option("--threads", est_threads, "worker count (results identical)");
    est_cmd->add_option("--out", est_out, "output path (default stdout)");
    std::string est_dump;
    est_cmd->add_option("--dump-extremes", est_dump,
                        "also write the extreme samples as CSV to this path");

    // sharpness ---------------------------------------------------------------
    auto* sharp_cmd = app.add_subcommand("sharpness", "scan a sharpness path, CSV t,ratio");
    std::string sharp_kind = "b2b", sharp_a, sharp_t, sharp_out;
    double sharp_c = 2.0;
    std::size_t sharp_n = 2;
    bool sharp_inverse = false;
    sharp_cmd->add_option("--kind", sharp_kind, "b2b | b2h")
        ->check(CLI::IsMember({"b2b", "b2h"}));
    sharp_cmd->add_option("--a", sharp_a, "inversion point for b2b");
    sharp_cmd->add_option("--n", sharp_n, "dimension for b2h");
    sharp_cmd->add_option("--c", sharp_c, "metric constant c > 0");
    sharp_cmd->add_option("--t", sharp_t, "comma-separated t grid (default geometric)");
    sharp_cmd->add_flag("--inverse", sharp_inverse, "scan from the image pair (b2b)");
    sharp_cmd->add_option("--out", sharp_out, "output path (default stdout)");

    // selftest ----------------------------------------------------------------
    auto* self_cmd = app.add_subcommand("selftest", "run every bound and lemma check");
    std::size_t self_budget = 10000;
    std::uint64_t self_seed = 42, self_stream = 0;
    self_cmd->add_option("--budget", self_budget, "samples per check");
    self_cmd->add_option("--seed", self_seed, "seed value");
    self_cmd->add_option("--stream", self_stream, "seed stream");

    // explore -------------------------------------------------------------
    auto* exp_cmd = app.add_subcommand(
        "explore", "search for triangle-inequality violations at a given c (exploratory)");
    std::string exp_domain = "ball:2";
    double exp_c = 1.0;
    std::size_t exp_budget = 100000;
    std::uint64_t exp_seed = 0;
    exp_cmd->add_option("--domain", exp_domain, "domain descriptor");
    exp_cmd->add_option("--c", exp_c, "metric constant c > 0");
    exp_cmd->add_option("--budget", exp_budget, "triple count");
    exp_cmd->add_option("--seed", exp_seed, "seed value");

    std::vector<const char*> argv;
    argv.push_back("hdc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*eval_cmd) {
            const DomainSpec d = parse_domain(eval_domain);
            const double h = h_eval(d, MetricParams(eval_c), parse_point(eval_x),
                                    parse_point(eval_y));
            out << format_sig17(h) << "\n";
            return 0;
        }

        if (*map_cmd) {
            const Point x = parse_point(map_x);
            const std::size_t n = map_n ? map_n : x.dim();
            const Point y = parse_map(map_f, n).apply(x);
            if (y.is_infinity()) {
                out << "inf\n";
            } else {
                for (std::size_t i = 0; i < y.dim(); ++i)
                    out << (i ? "," : "") << format_shortest(y[i]);
                out << "\n";
            }
            return 0;
        }

        if (*ratio_cmd) {
            const DomainSpec src = parse_domain(ratio_src);
            const DomainSpec dst = parse_domain(ratio_dst);
            const MobiusMap f = parse_map(ratio_f, src.dim());
            const RatioSample s = ratio_sample(f, src, dst, MetricParams(ratio_c),
                                               parse_point(ratio_x), parse_point(ratio_y));
            out << ratio_sample_to_json(s) << "\n";
            return 0;
        }

        if (*est_cmd) {
            const DomainSpec src = parse_domain(est_src);
            const DomainSpec dst = parse_domain(est_dst);
            const MobiusMap f = parse_map(est_f, src.dim());
            EstimateOptions opt;
            opt.budget = est_budget;
            opt.refine_steps = est_refine;
            opt.seed = Seed{est_seed, est_stream};
            opt.theoretical_upper = est_upper;
            opt.theoretical_lower = est_lower;
            opt.threads = est_threads;
            for (const auto& fp : est_focus) opt.focus.push_back(parse_point(fp));
            EstimateDetails details;
            const auto rep = estimate_sup(f, src, dst, MetricParams(est_c), opt,
                                          est_dump.empty() ? nullptr : &details);
            write_artifact(report_to_json(rep) + "\n", est_out, out);
            if (!est_dump.empty()) {
                std::vector<RatioSample> all = details.sup_extremes;
                all.insert(all.end(), details.inf_extremes.begin(),
                           details.inf_extremes.end());
                write_artifact(samples_to_csv(all), est_dump, out);
            }
            return 0;
        }

        if (*sharp_cmd) {
            const MetricParams params(sharp_c);
            std::vector<std::pair<double, double>> scan;
            if (sharp_kind == "b2b") {
                if (sharp_a.empty())
                    throw std::invalid_argument("sharpness --kind b2b requires --a");
                const Point a = parse_point(sharp_a);
                std::vector<double> ts;
                if (!sharp_t.empty()) {
                    ts = parse_t_grid(sharp_t);
                } else {
                    for (double t = 1e-1; t >= 1e-7; t /= 10.0)
                        if (t < norm(a)) ts.push_back(t);
                }
                scan = sharpness_scan_b2b(a, params, ts, sharp_inverse);
            } else {
                std::vector<double> ts;
                if (!sharp_t.empty()) {
                    ts = parse_t_grid(sharp_t);
                } else {
                    for (double t = 1e-1; t >= 1e-7; t /= 10.0) ts.push_back(t);
                    ts.push_back(1.0 - 1e-8);
                }
                scan = sharpness_scan_b2h(sharp_n, params, ts);
            }
            write_artifact(scan_to_csv(scan), sharp_out, out);
            return 0;
        }

        if (*self_cmd) {
            SelftestRunner st(out, self_budget, Seed{self_seed, self_stream});
            run_selftest(st);
            if (st.failed()) {
                out << "selftest: FAIL\n";
                return 1;
            }
            out << "selftest: PASS\n";
            return 0;
        }

        if (*exp_cmd) {
            const DomainSpec d = parse_domain(exp_domain);
            const MetricParams params(exp_c);
            double worst = std::numeric_limits<double>::infinity();
            Seed seed{exp_seed, 0};
            for (std::size_t i = 0; i < exp_budget; ++i) {
                Rng rng(substream(seed, i));
                auto draw = [&]() {
                    if (d.kind() == DomainKind::half_space) {
                        std::vector<double> c(d.dim());
                        for (std::size_t j = 0; j + 1 < d.dim(); ++j) c[j] = rng.uniform(-2.0, 2.0);
                        c[d.dim() - 1] = rng.log_uniform(1e-6, 2.0);
                        return Point(std::move(c));
                    }
                    return Point(rng.uniform(1e-6, 1.0 - 1e-6) *
                                 random_unit_vector(d.dim(), rng));
                };
                const Point x = draw(), y = draw(), z = draw();
                if (x == y || y == z || x == z || !d.contains(x) || !d.contains(y) ||
                    !d.contains(z))
                    continue;
                const double slack = h_eval(d, params, x, y) + h_eval(d, params, y, z) -
                                     h_eval(d, params, x, z);
                worst = std::min(worst, slack);
            }
            out << "worst triangle slack: " << format_sig17(worst) << "\n";
            out << (worst < 0 ? "violation found\n" : "no violation in this sample\n");
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace hdc::cli
