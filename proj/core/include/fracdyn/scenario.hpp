#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracdyn/models.hpp"

namespace fracdyn {

enum class OutputKind {
    dyson_params,
    magnetization,
    population,
    intensities,
    invariant_report,
};

const char* to_string(OutputKind kind);

/// A run description: which model, which fractional orders, grid, tolerance
/// and requested outputs. Parsed from a flat key/value text file.
struct Scenario {
    Preset preset;
    std::vector<double> alphas;
    double t_max = 10.0;
    int n_points = 1000;
    double tol = 1e-12;
    std::vector<OutputKind> outputs;

    /// Canonical one-line echo used in output headers (deterministic).
    std::string summary() const;
};

Scenario parse_scenario(std::istream& in, const std::string& origin);
Scenario parse_scenario_file(const std::string& path);

/// Run every (alpha, output) combination, one delimited text file each, into
/// out_dir (created if needed). Returns the written file names in order.
/// Deterministic: identical scenario + tol give byte-identical files.
std::vector<std::string> run_scenario(const Scenario& scenario,
                                      const std::string& out_dir);

/// One audited invariant for one alpha.
struct AuditRow {
    std::string invariant;
    double alpha;
    double max_violation;
    double tolerance;
    bool pass;
};

/// Evaluate the invariant suite (unitarity, metric conservation, consistency
/// identity, positivity, coefficient norms, route agreements) on every alpha
/// of the scenario.
std::vector<AuditRow> audit_scenario(const Scenario& scenario);

void write_audit_report(const std::vector<AuditRow>& rows, std::ostream& out);

} // namespace fracdyn
