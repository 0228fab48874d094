// Acceptance suite: every shipped claim checked end to end at its stated
// tolerance, one line per criterion. Exit code 0 only if all pass.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fracdyn/models.hpp"
#include "fracdyn/observables.hpp"
#include "fracdyn/scenario.hpp"
#include "fracdyn/trajectory.hpp"
#include "oracle/oracle.hpp"

using namespace fracdyn;
namespace fs = std::filesystem;

namespace {

constexpr double kAlphas[4] = {0.25, 0.5, 0.75, 1.0};
constexpr double kTMax = 20.0;
constexpr int kNPoints = 2000;
constexpr double kTol = 1e-12;

struct Suite {
    int passed = 0;
    int failed = 0;

    void report(int number, const std::string& name, bool pass,
                const std::string& detail) {
        std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", number,
                    name.c_str(), detail.c_str());
        std::fflush(stdout);
        pass ? ++passed : ++failed;
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct PresetRun {
    std::string name;
    Preset preset;
    std::map<double, Trajectory> by_alpha;
};

std::vector<PresetRun> propagate_all() {
    std::vector<PresetRun> runs;
    for (PresetName name : {PresetName::zeeman, PresetName::yang_lee_one_site,
                            PresetName::pt_waveguide}) {
        PresetRun run{to_string(name), make_preset(name), {}};
        const auto grid = uniform_grid(kTMax, kNPoints);
        for (double alpha : kAlphas)
            run.by_alpha.emplace(
                alpha, compute_trajectory(FractionalOrder{alpha},
                                          run.preset.omega(),
                                          run.preset.dyson_init, grid, kTol));
        runs.push_back(std::move(run));
    }
    return runs;
}

double metric_expectation(const Matrix2& theta, const StateVector& psi) {
    const auto tp = apply(theta, psi);
    return (std::conj(psi.c_up) * tp.c_up + std::conj(psi.c_down) * tp.c_down)
        .real();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main() {
    Suite suite;

    const auto t_start = std::chrono::steady_clock::now();
    const auto runs = propagate_all();
    const double propagate_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();

    // 1. Unitarity restoration: u is unitary to 1e-8 everywhere while the raw
    //    fractional propagator is genuinely non-unitary for every alpha < 1.
    {
        double worst_u = 0.0;
        double least_raw = 1e300;  // min over (preset, alpha<1) of max raw deviation
        for (const auto& run : runs) {
            for (const auto& [alpha, traj] : run.by_alpha) {
                double raw_max = 0.0;
                for (const auto& pt : traj.points) {
                    worst_u = std::max(
                        worst_u, (pt.u_general.adjoint() * pt.u_general -
                                  Matrix2::identity())
                                     .norm_inf());
                    const Matrix2 U = propagator_matrix(pt.prop);
                    raw_max = std::max(raw_max, (U.adjoint() * U -
                                                 Matrix2::identity())
                                                    .norm_inf());
                }
                if (alpha < 1.0) least_raw = std::min(least_raw, raw_max);
            }
        }
        const bool pass =
            worst_u <= 1e-8 && least_raw > 1e-2 && propagate_seconds < 60.0;
        suite.report(1, "unitarity restoration", pass,
                     "max||u'u-I||=" + fmt(worst_u) +
                         " (tol 1e-8); min over alpha<1 of max||U'U-I||=" +
                         fmt(least_raw) + " (>1e-2); propagation took " +
                         fmt(propagate_seconds) + " s (<60)");
    }

    // 2. Metric conservation under the raw evolution, four-state basket.
    {
        const double r = 1.0 / std::sqrt(2.0);
        const StateVector basket[4] = {
            {1.0, 0.0}, {0.0, 1.0}, {r, r}, {r, Complex{0.0, r}}};
        double worst = 0.0;
        for (const auto& run : runs) {
            for (const auto& [alpha, traj] : run.by_alpha) {
                const auto theta0 = metric(traj.points.front().dyson);
                double ref[4];
                for (int s = 0; s < 4; ++s)
                    ref[s] = metric_expectation(theta0, basket[s]);
                for (const auto& pt : traj.points) {
                    const auto theta = metric(pt.dyson);
                    const Matrix2 U = propagator_matrix(pt.prop);
                    for (int s = 0; s < 4; ++s) {
                        const double val =
                            metric_expectation(theta, apply(U, basket[s]));
                        worst = std::max(worst,
                                         std::abs(val - ref[s]) / std::abs(ref[s]));
                    }
                }
            }
        }
        suite.report(2, "metric conservation", worst <= 1e-8,
                     "max relative drift=" + fmt(worst) + " (tol 1e-8)");
    }

    // 3. Consistency identity.
    {
        double worst = 0.0;
        for (const auto& run : runs) {
            const auto& init = run.preset.dyson_init;
            for (const auto& [alpha, traj] : run.by_alpha) {
                for (const auto& pt : traj.points) {
                    const auto zx = zeta_xi(pt.prop, init);
                    const double rhs = init.Lambda0 * std::exp(pt.logdet.re_lnD);
                    const Complex lhs =
                        (zx.zeta_p * zx.xi_m - zx.zeta_m * zx.xi_p) *
                        std::polar(1.0, -pt.logdet.im_lnD);
                    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
                }
            }
        }
        suite.report(3, "consistency identity", worst <= 1e-8,
                     "max relative residual=" + fmt(worst) + " (tol 1e-8)");
    }

    // 4. alpha = 1 reduction: propagator equals the matrix exponential and the
    //    Zeeman spin-up state never leaves the pole.
    {
        double worst_exp = 0.0;
        for (const auto& run : runs) {
            const Matrix2 h = hamiltonian(run.preset.omega());
            const auto& traj = run.by_alpha.at(1.0);
            for (const auto& pt : traj.points)
                worst_exp = std::max(worst_exp,
                                     (propagator_matrix(pt.prop) -
                                      oracle::expm_2x2(h, pt.t))
                                         .norm_inf());
        }
        double worst_mag = 0.0;
        for (const auto& pt : runs[0].by_alpha.at(1.0).points) {  // zeeman
            const auto m =
                magnetization(evolve_state(pt.u_general, StateVector{1.0, 0.0}));
            worst_mag = std::max({worst_mag, std::abs(m.m1), std::abs(m.m2),
                                  std::abs(m.m3 - 1.0)});
        }
        const bool pass = worst_exp <= 1e-8 && worst_mag <= 1e-8;
        suite.report(4, "alpha=1 reduction", pass,
                     "max||U-expm||=" + fmt(worst_exp) +
                         " (tol 1e-8); spin-up magnetization deviation=" +
                         fmt(worst_mag) + " (tol 1e-8)");
    }

    // 5. Yang-Lee alpha = 1 population difference stays near -1.
    {
        double lo = 1.0, hi = -1.0, mean = 0.0;
        const auto& traj = runs[1].by_alpha.at(1.0);
        for (const auto& pt : traj.points) {
            const double p = population_difference(
                evolve_state(pt.u_general, StateVector{0.0, 1.0}));
            lo = std::min(lo, p);
            hi = std::max(hi, p);
            mean += p;
        }
        mean /= static_cast<double>(traj.points.size());
        const bool pass = lo >= -1.0 - 1e-9 && hi <= -0.5 && mean < -0.8;
        suite.report(5, "Yang-Lee alpha=1 population", pass,
                     "min=" + fmt(lo) + " (>=-1-1e-9), max=" + fmt(hi) +
                         " (<=-0.5), mean=" + fmt(mean) + " (<-0.8)");
    }

    // 6. Waveguide start: both guides carry intensity 1/2; mode basis puts all
    //    power in the symmetric mode.
    {
        const auto& psi0 = runs[2].preset.initial_state;
        const auto& p0 = runs[2].by_alpha.at(0.5).points.front();
        const auto guide =
            guide_intensities(evolve_state(p0.u_general, psi0));
        const auto mode = waveguide_intensities(psi0);
        const bool pass = std::abs(guide.i_plus - 0.5) <= 1e-12 &&
                          std::abs(guide.i_minus - 0.5) <= 1e-12 &&
                          std::abs(mode.i_plus - 1.0) <= 1e-12 &&
                          std::abs(mode.i_minus) <= 1e-12;
        suite.report(6, "waveguide t=0 symmetry", pass,
                     "guide intensities (" + fmt(guide.i_plus) + ", " +
                         fmt(guide.i_minus) + ") (tol 1e-12 about 1/2); mode (" +
                         fmt(mode.i_plus) + ", " + fmt(mode.i_minus) + ")");
    }

    // 7. Mittag-Leffler accuracy: 200-point lattice against the naive
    //    quad-precision oracle within summed bounds, and E_1 = exp on |z|<=30.
    {
        int checked = 0, ok = 0;
        double worst_excess = 0.0;
        const double lattice_alphas[5] = {0.25, 0.4375, 0.625, 0.8125, 1.0};
        for (double alpha : lattice_alphas) {
            // radii within the certified envelope, |z| <= 20
            const double radius = std::min(20.0, std::pow(27.0, alpha));
            for (int i = 0; i < 8; ++i) {
                const double r = radius * (i + 1) / 8.0;
                for (int j = 0; j < 5; ++j) {
                    const double th = 0.4 + 2.0 * 3.14159265358979323846 * j / 5.0;
                    const std::complex<double> z = std::polar(r, th);
                    const auto got = ml(FractionalOrder{alpha}, z, 1e-11);
                    const auto ref = oracle::ml_reference(alpha, z);
                    const double gap = std::abs(got.value - ref.value);
                    const double budget = got.error_bound + ref.error_bound;
                    ++checked;
                    if (gap <= budget) ++ok;
                    worst_excess = std::max(worst_excess, gap - budget);
                }
            }
        }
        double worst_exp = 0.0;
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const double r = 30.0 * (i + 1) / 10.0;
                const double th = 2.0 * 3.14159265358979323846 * j / 10.0;
                const std::complex<double> z = std::polar(r, th);
                const auto got = ml(FractionalOrder{1.0}, z, 1e-12);
                const auto ref = std::exp(z);
                worst_exp = std::max(worst_exp, std::abs(got.value - ref) /
                                                    std::max(1.0, std::abs(ref)));
            }
        }
        const bool pass = checked == 200 && ok == checked && worst_exp <= 1e-10;
        suite.report(7, "Mittag-Leffler accuracy", pass,
                     std::to_string(ok) + "/" + std::to_string(checked) +
                         " lattice points within summed bounds; max E_1 vs exp "
                         "deviation=" +
                         fmt(worst_exp) + " (tol 1e-10)");
    }

    // 8. Determinism: byte-identical output across repeated runs.
    {
        std::istringstream in(
            "preset = zeeman\nomega_L = 2\nalphas = 1.0, 0.75, 0.5, 0.25\n"
            "t_max = 10\nn_points = 1000\n"
            "outputs = dyson_params, magnetization\n");
        const Scenario sc = parse_scenario(in, "<acceptance>");
        const fs::path base =
            fs::temp_directory_path() /
            ("fracdyn_acceptance_" + std::to_string(::getpid()));
        const fs::path dir1 = base / "run1", dir2 = base / "run2";
        const auto written1 = run_scenario(sc, dir1.string());
        const auto written2 = run_scenario(sc, dir2.string());
        bool identical = written1 == written2 && !written1.empty();
        for (std::size_t i = 0; identical && i < written1.size(); ++i)
            identical = slurp(dir1 / written1[i]) == slurp(dir2 / written2[i]);
        std::error_code ec;
        fs::remove_all(base, ec);
        suite.report(8, "determinism", identical,
                     std::to_string(written1.size()) +
                         " files byte-identical across two runs");
    }

    // 9. Positivity across every shipped scenario.
    {
        double min_Lambda = 1e300, min_eig = 1e300;
        int scenarios = 0, points = 0;
        std::vector<fs::path> files;
        const fs::path dir{FRACDYN_SCENARIO_DIR};
        if (fs::is_directory(dir))
            for (const auto& entry : fs::directory_iterator(dir))
                if (entry.path().extension() == ".scn") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            const auto sc = parse_scenario_file(file.string());
            const auto grid = uniform_grid(sc.t_max, sc.n_points);
            ++scenarios;
            for (double alpha : sc.alphas) {
                const auto traj =
                    compute_trajectory(FractionalOrder{alpha}, sc.preset.omega(),
                                       sc.preset.dyson_init, grid, sc.tol);
                for (const auto& pt : traj.points) {
                    ++points;
                    min_Lambda = std::min(min_Lambda, pt.dyson.Lambda);
                    min_eig = std::min(
                        min_eig, hermitian_eigenvalues(metric(pt.dyson)).first);
                }
            }
        }
        const bool pass = scenarios >= 5 && min_Lambda > 0.0 && min_eig > 0.0;
        suite.report(9, "positivity on shipped scenarios", pass,
                     std::to_string(scenarios) + " scenarios, " +
                         std::to_string(points) + " grid points; min Lambda=" +
                         fmt(min_Lambda) + ", min metric eigenvalue=" +
                         fmt(min_eig) + " (both > 0)");
    }

    std::printf("%d/%d criteria passed\n", suite.passed,
                suite.passed + suite.failed);
    return suite.failed == 0 ? 0 : 1;
}
