#include "fracdyn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "fracdyn/observables.hpp"
#include "fracdyn/trajectory.hpp"
#include "fracdyn/version.hpp"

namespace fracdyn {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) parts.push_back(trim(item));
    return parts;
}

double parse_number(const std::string& value, const std::string& key) {
    char* end = nullptr;
    const std::string v = trim(value);
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x))
        throw ConfigError("bad numeric value '" + value + "' for key '" + key + "'");
    return x;
}

// 17 significant digits: round-trip exact for doubles, golden-file friendly.
std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

PresetName preset_from_string(const std::string& s) {
    if (s == "zeeman") return PresetName::zeeman;
    if (s == "yang_lee_one_site") return PresetName::yang_lee_one_site;
    if (s == "pt_waveguide") return PresetName::pt_waveguide;
    throw ConfigError("unknown preset '" + s +
                      "' (expected zeeman, yang_lee_one_site or pt_waveguide)");
}

std::optional<OutputKind> output_from_string(const std::string& s) {
    if (s == "dyson_params") return OutputKind::dyson_params;
    if (s == "magnetization") return OutputKind::magnetization;
    if (s == "population") return OutputKind::population;
    if (s == "intensities") return OutputKind::intensities;
    if (s == "invariant_report") return OutputKind::invariant_report;
    return std::nullopt;
}

StateVector state_from_string(const std::string& value, PresetName name) {
    if (value == "preset_default") return make_preset(name).initial_state;
    if (value == "spin_up") return {1.0, 0.0};
    if (value == "spin_down") return {0.0, 1.0};
    if (value == "sym") {
        const double r = 1.0 / std::sqrt(2.0);
        return {r, r};
    }
    const auto parts = split(value, ',');
    if (parts.size() == 4) {
        return {Complex{parse_number(parts[0], "initial_state"),
                        parse_number(parts[1], "initial_state")},
                Complex{parse_number(parts[2], "initial_state"),
                        parse_number(parts[3], "initial_state")}};
    }
    throw ConfigError("bad initial_state '" + value +
                      "' (expected preset_default, spin_up, spin_down, sym or "
                      "re,im,re,im)");
}

} // namespace

const char* to_string(OutputKind kind) {
    switch (kind) {
        case OutputKind::dyson_params: return "dyson_params";
        case OutputKind::magnetization: return "magnetization";
        case OutputKind::population: return "population";
        case OutputKind::intensities: return "intensities";
        case OutputKind::invariant_report: return "invariant_report";
    }
    return "?";
}

std::string Scenario::summary() const {
    std::ostringstream os;
    os << "preset=" << to_string(preset.name);
    for (const auto& [key, value] : preset.parameters)
        os << " " << key << "=" << fmt(value);
    os << " alphas=";
    for (std::size_t i = 0; i < alphas.size(); ++i)
        os << (i ? "," : "") << fmt(alphas[i]);
    os << " t_max=" << fmt(t_max) << " n_points=" << n_points
       << " tol=" << fmt(tol);
    return os.str();
}

Scenario parse_scenario(std::istream& in, const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw ConfigError(origin + ": duplicate key '" + key + "'");
    }

    auto take = [&kv](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    const auto preset_str = take("preset");
    if (!preset_str) throw ConfigError(origin + ": missing required key 'preset'");
    const PresetName name = preset_from_string(*preset_str);

    std::map<std::string, double> params;
    for (const char* key : {"omega_L", "xi", "varsigma", "epsilon"})
        if (auto v = take(key)) params[key] = parse_number(*v, key);

    Preset preset = [&] {
        try {
            return make_preset(name, params);
        } catch (const DomainError& e) {
            throw ConfigError(origin + ": " + e.what());
        }
    }();

    double kappa0 = 0.0;
    if (auto v = take("kappa0")) kappa0 = parse_number(*v, "kappa0");

    Scenario sc{preset, {1.0, 0.75, 0.5, 0.25}, 10.0, 1000, 1e-12, {}};
    sc.preset.dyson_init = DysonInit{kappa0, sc.preset.dyson_init.lambda0,
                                     sc.preset.dyson_init.Lambda0};

    if (auto v = take("lambda0_abs")) {
        const double a = parse_number(*v, "lambda0_abs");
        double phase = 0.0;
        if (auto p = take("lambda0_phase")) phase = parse_number(*p, "lambda0_phase");
        sc.preset.dyson_init = DysonInit{sc.preset.dyson_init.kappa0,
                                         std::polar(a, phase),
                                         sc.preset.dyson_init.Lambda0};
    } else if (auto p = take("lambda0_phase")) {
        const double phase = parse_number(*p, "lambda0_phase");
        sc.preset.dyson_init =
            DysonInit{sc.preset.dyson_init.kappa0,
                      std::polar(std::abs(sc.preset.dyson_init.lambda0), phase),
                      sc.preset.dyson_init.Lambda0};
    }
    if (auto v = take("Lambda0")) {
        const double L0 = parse_number(*v, "Lambda0");
        if (!(L0 > 0.0)) throw ConfigError(origin + ": Lambda0 must be > 0");
        sc.preset.dyson_init = DysonInit{sc.preset.dyson_init.kappa0,
                                         sc.preset.dyson_init.lambda0, L0};
    }
    if (auto v = take("initial_state")) {
        sc.preset.initial_state = state_from_string(*v, name);
        if (norm_squared(sc.preset.initial_state) == 0.0)
            throw ConfigError(origin + ": initial_state must be nonzero");
    }

    if (auto v = take("alphas")) {
        sc.alphas.clear();
        for (const auto& part : split(*v, ',')) {
            const double a = parse_number(part, "alphas");
            if (!(a > 0.0) || !(a <= 1.0))
                throw ConfigError(origin + ": alpha " + part +
                                  " outside (0, 1]");
            sc.alphas.push_back(a);
        }
        if (sc.alphas.empty())
            throw ConfigError(origin + ": alphas must be non-empty");
    }
    if (auto v = take("t_max")) {
        sc.t_max = parse_number(*v, "t_max");
        if (!(sc.t_max > 0.0)) throw ConfigError(origin + ": t_max must be > 0");
    }
    if (auto v = take("n_points")) {
        const double n = parse_number(*v, "n_points");
        if (n != std::floor(n) || n < 2.0 || n > 1e8)
            throw ConfigError(origin + ": n_points must be an integer >= 2");
        sc.n_points = static_cast<int>(n);
    }
    if (auto v = take("tol")) {
        sc.tol = parse_number(*v, "tol");
        if (!(sc.tol > 0.0)) throw ConfigError(origin + ": tol must be > 0");
    }
    if (auto v = take("outputs")) {
        std::set<std::string> seen;
        for (const auto& part : split(*v, ',')) {
            const auto kind = output_from_string(part);
            if (!kind)
                throw ConfigError(origin + ": unknown output '" + part + "'");
            if (seen.insert(part).second) sc.outputs.push_back(*kind);
        }
    }
    if (sc.outputs.empty()) sc.outputs.push_back(OutputKind::dyson_params);

    if (!kv.empty())
        throw ConfigError(origin + ": unknown key '" + kv.begin()->first + "'");
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    return parse_scenario(in, path);
}

namespace {

void write_header(std::ostream& out, const Scenario& sc, double alpha,
                  const char* columns) {
    out << "# " << kToolName << " " << kVersion << "\n";
    out << "# scenario: " << sc.summary() << "\n";
    const auto& init = sc.preset.dyson_init;
    out << "# dyson_init: kappa0=" << fmt(init.kappa0)
        << " lambda0=" << fmt(init.lambda0.real()) << (init.lambda0.imag() < 0 ? "" : "+")
        << fmt(init.lambda0.imag()) << "i Lambda0=" << fmt(init.Lambda0) << "\n";
    const auto& psi = sc.preset.initial_state;
    out << "# initial_state: (" << fmt(psi.c_up.real()) << "," << fmt(psi.c_up.imag())
        << ") (" << fmt(psi.c_down.real()) << "," << fmt(psi.c_down.imag()) << ")\n";
    out << "# alpha = " << fmt(alpha) << "\n";
    out << columns << "\n";
}

std::string output_file_name(OutputKind kind, double alpha) {
    return std::string(to_string(kind)) + "_alpha_" + fmt(alpha) + ".csv";
}

std::vector<AuditRow> audit_alpha(const Scenario& sc, double alpha);

void write_output(std::ostream& out, const Scenario& sc, double alpha,
                  OutputKind kind, const Trajectory& traj) {
    switch (kind) {
        case OutputKind::dyson_params: {
            write_header(out, sc, alpha,
                         "t,kappa,re_lambda,im_lambda,abs_lambda,Lambda");
            for (const auto& pt : traj.points)
                out << fmt(pt.t) << ',' << fmt(pt.dyson.kappa) << ','
                    << fmt(pt.dyson.lambda.real()) << ','
                    << fmt(pt.dyson.lambda.imag()) << ','
                    << fmt(std::abs(pt.dyson.lambda)) << ','
                    << fmt(pt.dyson.Lambda) << "\n";
            break;
        }
        case OutputKind::magnetization: {
            write_header(out, sc, alpha, "t,M1,M2,M3");
            for (const auto& pt : traj.points) {
                const auto m = magnetization(
                    evolve_state(pt.u_general, sc.preset.initial_state));
                out << fmt(pt.t) << ',' << fmt(m.m1) << ',' << fmt(m.m2) << ','
                    << fmt(m.m3) << "\n";
            }
            break;
        }
        case OutputKind::population: {
            write_header(out, sc, alpha, "t,pop_diff");
            for (const auto& pt : traj.points)
                out << fmt(pt.t) << ','
                    << fmt(population_difference(
                           evolve_state(pt.u_general, sc.preset.initial_state)))
                    << "\n";
            break;
        }
        case OutputKind::intensities: {
            write_header(out, sc, alpha, "x3,I_plus,I_minus");
            for (const auto& pt : traj.points) {
                const auto g = guide_intensities(
                    evolve_state(pt.u_general, sc.preset.initial_state));
                out << fmt(pt.t) << ',' << fmt(g.i_plus) << ',' << fmt(g.i_minus)
                    << "\n";
            }
            break;
        }
        case OutputKind::invariant_report: {
            write_header(out, sc, alpha,
                         "invariant,alpha,max_violation,tolerance,status");
            Scenario one = sc;
            one.alphas = {alpha};
            for (const auto& row : audit_alpha(one, alpha))
                out << row.invariant << ',' << fmt(row.alpha) << ','
                    << fmt(row.max_violation) << ',' << fmt(row.tolerance) << ','
                    << (row.pass ? "pass" : "fail") << "\n";
            break;
        }
    }
}

} // namespace

std::vector<std::string> run_scenario(const Scenario& scenario,
                                      const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + out_dir + "'");

    const auto grid = uniform_grid(scenario.t_max, scenario.n_points);
    std::vector<std::string> written;
    for (double alpha : scenario.alphas) {
        const auto traj =
            compute_trajectory(FractionalOrder{alpha}, scenario.preset.omega(),
                               scenario.preset.dyson_init, grid, scenario.tol);
        for (OutputKind kind : scenario.outputs) {
            const std::string name = output_file_name(kind, alpha);
            std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
            if (!out)
                throw ConfigError("cannot open output file '" + name + "'");
            write_output(out, scenario, alpha, kind, traj);
            written.push_back(name);
        }
    }
    return written;
}

namespace {

std::vector<AuditRow> audit_alpha(const Scenario& sc, double alpha) {
    const auto grid = uniform_grid(sc.t_max, sc.n_points);
    const auto omega = sc.preset.omega();
    const auto& init = sc.preset.dyson_init;
    const auto traj =
        compute_trajectory(FractionalOrder{alpha}, omega, init, grid, sc.tol);

    const double r = 1.0 / std::sqrt(2.0);
    const StateVector basket[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {r, r}, {r, Complex{0.0, r}}};

    double unitarity = 0.0, metric_cons = 0.0, cdt = 0.0;
    double min_Lambda = init.Lambda0, min_eig = 1e300;
    double coeff_norm = 0.0, reduced_general = 0.0, det_consistency = 0.0;
    double logdet_roundtrip = 0.0, bloch = 0.0, intensity_sum = 0.0;

    // Reference metric values at t = 0 for the basket.
    double ref[4];
    {
        const auto theta0 = metric(traj.points.front().dyson);
        for (int s = 0; s < 4; ++s) {
            const auto tp = apply(theta0, basket[s]);
            ref[s] = (std::conj(basket[s].c_up) * tp.c_up +
                      std::conj(basket[s].c_down) * tp.c_down)
                         .real();
        }
    }

    const double psi0_norm = norm_squared(sc.preset.initial_state);

    for (const auto& pt : traj.points) {
        const Matrix2 u = pt.u_general;
        unitarity = std::max(unitarity,
                             (u.adjoint() * u - Matrix2::identity()).norm_inf());

        const auto theta = metric(pt.dyson);
        const Matrix2 U = propagator_matrix(pt.prop);
        for (int s = 0; s < 4; ++s) {
            const auto psi = apply(U, basket[s]);
            const auto tp = apply(theta, psi);
            const double val = (std::conj(psi.c_up) * tp.c_up +
                                std::conj(psi.c_down) * tp.c_down)
                                   .real();
            metric_cons =
                std::max(metric_cons, std::abs(val - ref[s]) / std::abs(ref[s]));
        }

        const auto zx = zeta_xi(pt.prop, init);
        const double rhs = init.Lambda0 * std::exp(pt.logdet.re_lnD);
        const Complex lhs = (zx.zeta_p * zx.xi_m - zx.zeta_m * zx.xi_p) *
                            std::polar(1.0, -pt.logdet.im_lnD);
        cdt = std::max(cdt, std::abs(lhs - rhs) / rhs);

        min_Lambda = std::min(min_Lambda, pt.dyson.Lambda);
        min_eig = std::min(min_eig, hermitian_eigenvalues(theta).first);

        coeff_norm = std::max(coeff_norm, std::abs(std::norm(pt.u.varpi) +
                                                   std::norm(pt.u.tau) - 1.0));
        reduced_general =
            std::max(reduced_general, (unitary_matrix(pt.u) - u).max_abs());

        const Complex d1 = pt.prop.Wp * pt.prop.Wm - pt.prop.Tp * pt.prop.Tm;
        const Complex d2 = pt.prop.C * pt.prop.C -
                           minus_one_pow(-alpha) * pt.prop.S * pt.prop.S;
        det_consistency = std::max(det_consistency, std::abs(d1 - d2));

        logdet_roundtrip = std::max(
            logdet_roundtrip,
            std::abs(std::polar(std::exp(pt.logdet.re_lnD), pt.logdet.im_lnD) - d1));

        const Complex prod = pt.u.varpi * pt.u.tau;
        const double m1 = -2.0 * prod.real(), m2 = 2.0 * prod.imag();
        const double m3 = std::norm(pt.u.varpi) - std::norm(pt.u.tau);
        bloch = std::max(bloch, std::abs(m1 * m1 + m2 * m2 + m3 * m3 - 1.0));

        const auto g =
            guide_intensities(evolve_state(u, sc.preset.initial_state));
        intensity_sum =
            std::max(intensity_sum, std::abs(g.i_plus + g.i_minus - psi0_norm));
    }

    auto row = [alpha](const char* name, double violation, double tol) {
        return AuditRow{name, alpha, violation, tol, violation <= tol};
    };
    std::vector<AuditRow> rows;
    rows.push_back(row("unitarity", unitarity, 1e-8));
    rows.push_back(row("metric_conservation", metric_cons, 1e-8));
    rows.push_back(row("consistency_identity", cdt, 1e-8));
    rows.push_back({"Lambda_positivity", alpha, std::max(0.0, -min_Lambda),
                    0.0, min_Lambda > 0.0});
    rows.push_back({"metric_positivity", alpha, std::max(0.0, -min_eig), 0.0,
                    min_eig > 0.0});
    rows.push_back(row("coefficient_norm", coeff_norm, 1e-9));
    rows.push_back(row("reduced_general_agreement", reduced_general, 1e-9));
    rows.push_back(row("determinant_consistency", det_consistency, 1e-9));
    rows.push_back(row("logdet_roundtrip", logdet_roundtrip, 1e-8));
    rows.push_back(row("bloch_norm", bloch, 1e-9));
    rows.push_back(row("intensity_sum", intensity_sum, 1e-9));
    return rows;
}

} // namespace

std::vector<AuditRow> audit_scenario(const Scenario& scenario) {
    std::vector<AuditRow> rows;
    for (double alpha : scenario.alphas) {
        auto part = audit_alpha(scenario, alpha);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

void write_audit_report(const std::vector<AuditRow>& rows, std::ostream& out) {
    out << "invariant,alpha,max_violation,tolerance,status\n";
    for (const auto& row : rows)
        out << row.invariant << ',' << fmt(row.alpha) << ','
            << fmt(row.max_violation) << ',' << fmt(row.tolerance) << ','
            << (row.pass ? "pass" : "fail") << "\n";
}

} // namespace fracdyn
