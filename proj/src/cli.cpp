#include "rmt/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "rmt/common.hpp"
#include "rmt/coulomb.hpp"
#include "rmt/determinants.hpp"
#include "rmt/eigenvectors.hpp"
#include "rmt/exact_density.hpp"
#include "rmt/resolvent.hpp"
#include "rmt/sampling.hpp"

namespace rmt {

namespace {

using nlohmann::json;

struct GridSpecArg {
    double lo = -2.0, hi = 2.0;
    int steps = 401;
};

GridSpecArg parse_grid(const std::string& s) {
    GridSpecArg g;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.steps) || c1 != ':' ||
        c2 != ':' || g.steps < 2 || g.lo >= g.hi)
        throw CLI::ValidationError("--grid", "expected lo:hi:steps");
    return g;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    require(os.good(), "cannot open " + path);
    os << content;
}

void emit(const json& summary, const std::string& format) {
    if (format == "json") {
        std::cout << summary.dump(2) << "\n";
    } else {
        std::cout << summary["command"].get<std::string>() << ": "
                  << (summary.value("pass", true) ? "ok" : "FAIL") << "\n";
    }
}

std::string samples_csv(const std::vector<double>& values, int per_draw) {
    std::ostringstream os;
    os << "draw,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i / static_cast<std::size_t>(per_draw)) << ','
           << format_double(values[i]) << '\n';
    return os.str();
}

std::string grid_csv(const GridFunction& f) {
    std::ostringstream os;
    write_csv(os, f);
    return os.str();
}

}  // namespace

OverlayStats emit_overlay(const GridFunction& histogram,
                          const GridFunction& curve, const std::string& path) {
    require(histogram.x_min() <= curve.x_max() &&
                curve.x_min() <= histogram.x_max(),
            "disjoint supports");
    GridFunction resampled = bin_average(
        histogram, [&](double x) { return curve(x); });
    OverlayStats stats;
    stats.sup_distance = sup_distance(histogram, resampled);
    // KS on the cumulative level
    double acc_h = 0.0, acc_c = 0.0;
    const auto& xs = histogram.xs();
    double total_h = trapezoid_integral(histogram);
    double total_c = std::max(1e-300, trapezoid_integral(resampled));
    for (std::size_t i = 1; i < xs.size(); ++i) {
        double w = xs[i] - xs[i - 1];
        acc_h += 0.5 * w * (histogram.ys()[i - 1] + histogram.ys()[i]) / total_h;
        acc_c += 0.5 * w * (resampled.ys()[i - 1] + resampled.ys()[i]) / total_c;
        stats.ks_distance = std::max(stats.ks_distance, std::abs(acc_h - acc_c));
    }
    std::ostringstream os;
    os << "x,hist,theory\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << format_double(xs[i]) << ',' << format_double(histogram.ys()[i])
           << ',' << format_double(resampled.ys()[i]) << '\n';
    write_file(path, os.str());
    json sidecar = {{"sup_distance", stats.sup_distance},
                    {"ks_distance", stats.ks_distance}};
    write_file(path + ".json", sidecar.dump(2));
    return stats;
}

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"numerical laboratory for classical random matrix ensembles"};
    app.require_subcommand(1);
    app.set_config("--config");

    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    int threads = 0;
    app.add_option("--seed", seed, "stream seed for stochastic commands")
        ->capture_default_str();
    app.add_option("--out", out, "output file");
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker threads (0 = hardware)");

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "draw ensemble eigenvalues");
    std::string ensemble = "goe";
    int n = 8, m = 0, beta = 1, count = 1, k_index = 0;
    sample->add_option("--ensemble", ensemble)
        ->check(CLI::IsMember({"goe", "gue", "gse", "wishart"}))
        ->required();
    sample->add_option("--n", n)->check(CLI::PositiveNumber)->required();
    sample->add_option("--m", m)->check(CLI::NonNegativeNumber);
    sample->add_option("--beta", beta)->check(CLI::IsMember({1, 2, 4}));
    sample->add_option("--count", count)->check(CLI::PositiveNumber);

    // ---- density ----
    auto* density = app.add_subcommand("density", "finite-N spectral density");
    std::string grid_arg = "-8:8:801";
    density->add_option("--ensemble", ensemble)
        ->check(CLI::IsMember({"goe", "gue", "gse"}))
        ->required();
    density->add_option("--n", n)->check(CLI::PositiveNumber)->required();
    density->add_option("--grid", grid_arg);

    // ---- law ----
    auto* law = app.add_subcommand("law", "asymptotic laws");
    std::string law_name;
    double c_ratio = 0.5;
    law->add_option("name", law_name, "semicircle, mp or surmise")
        ->check(CLI::IsMember({"semicircle", "mp", "surmise"}))
        ->required();
    law->add_option("--c", c_ratio, "Wishart ratio N/M");
    law->add_option("--grid", grid_arg);

    // ---- spacing ----
    auto* spacing = app.add_subcommand("spacing", "spacing statistics");
    std::string mode = "goe2";
    spacing->add_option("--mode", mode)->check(CLI::IsMember({"goe2", "iid"}));
    spacing->add_option("--n", n)->check(CLI::PositiveNumber);
    spacing->add_option("--count", count)->check(CLI::PositiveNumber);

    // ---- coulomb ----
    auto* coulomb = app.add_subcommand("coulomb", "log-gas Monte Carlo");
    std::string potential = "gaussian";
    long steps = 100000;
    double beta_real = 2.0;
    int bins = 60;
    coulomb->add_option("--potential", potential)
        ->check(CLI::IsMember({"gaussian", "wishart"}));
    coulomb->add_option("--c", c_ratio);
    coulomb->add_option("--n", n)->check(CLI::PositiveNumber);
    coulomb->add_option("--beta", beta_real)->check(CLI::PositiveNumber);
    coulomb->add_option("--steps", steps)->check(CLI::PositiveNumber);
    coulomb->add_option("--bins", bins)->check(CLI::PositiveNumber);

    // ---- tricomi ----
    auto* tricomi = app.add_subcommand("tricomi", "equilibrium density");
    tricomi->add_option("--potential", potential)
        ->check(CLI::IsMember({"gaussian", "wishart"}));
    tricomi->add_option("--c", c_ratio);

    // ---- free-add ----
    auto* freeadd = app.add_subcommand("free-add", "p GOE + (1-p) Wishart");
    double p_mix = 0.5;
    std::string mc_check;
    freeadd->add_option("--p", p_mix)->check(CLI::Range(0.0, 1.0));
    freeadd->add_option("--c", c_ratio);
    freeadd->add_option("--grid", grid_arg);
    freeadd->add_option("--mc-check", mc_check, "N,T Monte Carlo overlay");

    // ---- signprob ----
    auto* signprob = app.add_subcommand("signprob", "P(N_+ = k) for the GUE");
    bool exact = false;
    signprob->add_option("--n", n)->check(CLI::Range(1, 12))->required();
    signprob->add_option("--k", k_index)->check(CLI::NonNegativeNumber)->required();
    signprob->add_flag("--exact", exact, "print all digits");

    // ---- eigvec ----
    auto* eigvec = app.add_subcommand("eigvec", "eigenvector components");
    eigvec->add_option("--ensemble", ensemble)
        ->check(CLI::IsMember({"goe", "gue"}))
        ->required();
    eigvec->add_option("--n", n)->check(CLI::PositiveNumber)->required();
    eigvec->add_option("--count", count)->check(CLI::PositiveNumber);

    // ---- check ----
    auto* check = app.add_subcommand("check", "run the invariant suite");
    std::string which = "all";
    check->add_option("what", which, "all or a check name");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        json summary;
        summary["seed"] = seed;
        bool pass = true;

        if (sample->parsed()) {
            summary["command"] = "sample";
            std::vector<double> values;
            int per_draw = n;
            if (ensemble == "wishart") {
                require(m >= 1, "wishart needs --m");
                values = sample_wishart_cloud(n, m, beta, count, {seed}, threads);
            } else {
                int b = ensemble == "goe" ? 1 : (ensemble == "gue" ? 2 : 4);
                values = sample_eigenvalue_cloud(b, n, count, {seed}, threads);
            }
            summary["params"] = {{"ensemble", ensemble}, {"n", n}, {"m", m},
                                 {"beta", beta},         {"count", count}};
            summary["metrics"] = {{"values", values.size()}};
            if (!out.empty()) write_file(out, samples_csv(values, per_draw));
        } else if (density->parsed()) {
            summary["command"] = "density";
            GridSpecArg g = parse_grid(grid_arg);
            std::vector<double> xs = linspace(g.lo, g.hi, g.steps);
            std::vector<double> ys(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (ensemble == "goe") ys[i] = goe_density_finite(n, xs[i]);
                else if (ensemble == "gue") ys[i] = gue_density_finite(n, xs[i]);
                else ys[i] = gse_density_finite(n, xs[i]);
            }
            GridFunction f(xs, ys);
            summary["params"] = {{"ensemble", ensemble}, {"n", n}};
            summary["metrics"] = {{"mass", trapezoid_integral(f)}};
            if (!out.empty()) write_file(out, grid_csv(f));
        } else if (law->parsed()) {
            summary["command"] = "law";
            GridSpecArg g = parse_grid(grid_arg);
            if (law_name == "mp") {
                double lo = 0.0, hi = 0.0;
                marchenko_pastur_edges(c_ratio, lo, hi);
                if (!law->count("--grid")) {
                    g.lo = std::max(1e-6, lo - 0.5);
                    g.hi = hi + 0.5;
                }
            }
            if (law_name == "surmise" && !law->count("--grid")) {
                g.lo = 0.0;
                g.hi = 5.0;
            }
            std::vector<double> xs = linspace(g.lo, g.hi, g.steps);
            std::vector<double> ys(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (law_name == "semicircle") ys[i] = semicircle(xs[i]);
                else if (law_name == "mp") ys[i] = marchenko_pastur(xs[i], c_ratio);
                else ys[i] = wigner_surmise(std::max(0.0, xs[i]));
            }
            GridFunction f(xs, ys);
            summary["params"] = {{"law", law_name}, {"c", c_ratio}};
            summary["metrics"] = {{"mass", trapezoid_integral(f)}};
            if (!out.empty()) write_file(out, grid_csv(f));
        } else if (spacing->parsed()) {
            summary["command"] = "spacing";
            std::vector<double> values;
            if (mode == "goe2") {
                values = goe2_spacings(count, {seed});
            } else {
                ParentDistribution parent;  // uniform [0,1]
                values = iid_gap_samples(n, count, parent, {seed});
            }
            summary["params"] = {{"mode", mode}, {"n", n}, {"count", count}};
            summary["metrics"] = {{"values", values.size()}};
            if (!out.empty())
                write_file(out, samples_csv(values,
                                            mode == "goe2" ? 1 : n - 1));
        } else if (coulomb->parsed()) {
            summary["command"] = "coulomb";
            PotentialSpec pot = potential == "gaussian"
                                    ? PotentialSpec::gaussian()
                                    : PotentialSpec::wishart(c_ratio);
            MetropolisResult run =
                metropolis_run(pot, n, beta_real, steps, {seed});
            HistogramSpec hs = histogram_span(run.recorded, bins, 5.0);
            if (pot.positive_axis) hs.lo = std::max(hs.lo, 1e-9);
            GridFunction hist = build_histogram(run.recorded, hs);
            summary["params"] = {{"potential", potential},
                                 {"n", n},
                                 {"beta", beta_real},
                                 {"steps", steps}};
            summary["metrics"] = {
                {"acceptance", run.state.acceptance_rate()},
                {"recorded", run.recorded.size()}};
            if (!out.empty()) write_file(out, grid_csv(hist));
        } else if (tricomi->parsed()) {
            summary["command"] = "tricomi";
            GridFunction dens = [&] {
                if (potential == "gaussian") {
                    return tricomi_solve([](double t) { return t; },
                                         -std::numbers::sqrt2,
                                         std::numbers::sqrt2, 1.0);
                }
                PotentialSpec pot = PotentialSpec::wishart(c_ratio);
                double lo = 0.0, hi = 0.0;
                marchenko_pastur_edges(c_ratio, lo, hi);
                auto support = solve_soft_edge_support(
                    pot.vprime, std::max(0.5 * lo, 1e-3), 1.2 * hi);
                return tricomi_solve(pot.vprime, support.first, support.second,
                                     1.0);
            }();
            summary["params"] = {{"potential", potential}, {"c", c_ratio}};
            summary["metrics"] = {{"points", dens.size()}};
            if (!out.empty()) write_file(out, grid_csv(dens));
        } else if (freeadd->parsed()) {
            summary["command"] = "free-add";
            GridSpecArg g = parse_grid(grid_arg);
            std::vector<double> xs = linspace(g.lo, g.hi, g.steps);
            std::vector<double> ys(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                ys[i] = free_add_density(p_mix, c_ratio, xs[i]);
            GridFunction theory(xs, ys);
            summary["params"] = {{"p", p_mix}, {"c", c_ratio}};
            json metrics = {{"mass", trapezoid_integral(theory)}};
            if (!mc_check.empty()) {
                int mc_n = 0, mc_t = 0;
                char comma = 0;
                std::istringstream is(mc_check);
                if (!(is >> mc_n >> comma >> mc_t) || comma != ',' ||
                    mc_n < 2 || mc_t < 1)
                    throw CLI::ValidationError("--mc-check", "expected N,T");
                int mm = static_cast<int>(std::lround(mc_n / c_ratio));
                std::vector<double> cloud(static_cast<std::size_t>(mc_n) *
                                          static_cast<std::size_t>(mc_t));
                for (int t = 0; t < mc_t; ++t) {
                    GaussianDraw gd = sample_goe(mc_n, {seed}, 2 * t);
                    WishartDraw wd =
                        sample_wishart(mc_n, mm, 1, {seed}, 2 * t + 1);
                    Eigen::MatrixXd s =
                        p_mix / std::sqrt(static_cast<double>(mc_n)) *
                            std::get<Eigen::MatrixXd>(gd.matrix) +
                        (1.0 - p_mix) / mc_n *
                            std::get<Eigen::MatrixXd>(wd.matrix);
                    Eigen::VectorXd ev =
                        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                            s, Eigen::EigenvaluesOnly)
                            .eigenvalues();
                    for (int i = 0; i < mc_n; ++i)
                        cloud[static_cast<std::size_t>(t) * mc_n + i] = ev(i);
                }
                GridFunction hist =
                    build_histogram(cloud, histogram_span(cloud, 60, 5.0));
                OverlayStats st = emit_overlay(
                    hist, theory, out.empty() ? "free_add_overlay.csv" : out);
                metrics["sup_distance"] = st.sup_distance;
                metrics["ks_distance"] = st.ks_distance;
                pass = st.sup_distance <= 0.03;
            } else if (!out.empty()) {
                write_file(out, grid_csv(theory));
            }
            summary["metrics"] = metrics;
        } else if (signprob->parsed()) {
            summary["command"] = "signprob";
            require(k_index <= n, "--k must be <= --n");
            double prob = sign_count_prob(n, k_index);
            double norm_residual = std::abs(sign_count_gf(n, 1.0) - 1.0);
            summary["params"] = {{"n", n}, {"k", k_index}};
            summary["metrics"] = {{"probability", prob},
                                  {"normalization_residual", norm_residual}};
            std::cout.precision(exact ? 17 : 6);
            std::cout << "P(N+ = " << k_index << ") = " << prob
                      << "  (phi(1) residual " << norm_residual << ")\n";
        } else if (eigvec->parsed()) {
            summary["command"] = "eigvec";
            int b = ensemble == "goe" ? 1 : 2;
            std::vector<double> comps =
                sample_component_squares(b, n, count, {seed});
            summary["params"] = {{"ensemble", ensemble}, {"n", n},
                                 {"count", count}};
            summary["metrics"] = {{"values", comps.size()}};
            if (!out.empty()) write_file(out, samples_csv(comps, 1));
        } else if (check->parsed()) {
            summary["command"] = "check";
            std::vector<CheckResult> results = run_all_checks(seed);
            int failed = 0;
            for (const auto& r : results) {
                if (which != "all" && r.name != which) continue;
                std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
                failed += r.pass ? 0 : 1;
            }
            pass = failed == 0;
            summary["metrics"] = {{"checks", results.size()},
                                  {"failed", failed}};
        }

        summary["pass"] = pass;
        if (format == "json") emit(summary, format);
        return pass ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rmt
