#pragma once

#include "tfkac/core.hpp"
#include "tfkac/fdm.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tfkac {

enum class Scheme { fdm, fem };

enum class Metric {
    st_hinf_prime, // sum_n tau ||E^n||_{h,inf}
    st_h1,         // sqrt(sum_n tau |E^n|_{h,1}^2), nodal error
    final_hinf,    // ||E^N||_{h,inf}
    final_h1,      // |E^N|_{h,1}
    fem_st_h1,     // sqrt(sum_n tau |u - u_h|_1^2), element-integrated error
    refine_h1      // |u_{h/2}^N - u_h^N|_1 against the half-mesh run
};

std::string metric_name(Metric m);

struct ParamPoint {
    double gamma = 0.5;
    double lambda = 0.0;
    Complex p{0.0, 0.0};
};

struct LadderLevel {
    int m_count = 0;
    int n_count = 0;
};

struct StudyConfig {
    Scheme scheme = Scheme::fdm;
    Variant variant = Variant::zero_ic;
    int example = 1;
    double t_final = 1.0;
    double k_gamma = 1.0;
    std::vector<ParamPoint> points;
    std::vector<LadderLevel> ladder;
    std::vector<Metric> metrics;
    // example 2 only: fdm compares against this reference run; fem compares
    // against the run at (2M, refine_time_factor * N)
    int reference_m = 1 << 12;
    int reference_n = 1 << 12;
    int refine_time_factor = 2;
    int quad_order = 4;        // fem element quadrature
    int source_quad_order = 32; // jacobi order for quadrature-backed sources
    int jobs = 1;
    std::string label;
};

struct CellResult {
    LadderLevel level;
    std::map<Metric, double> errors;
    double seconds = 0.0;
};

struct ParamColumn {
    ParamPoint point;
    std::vector<CellResult> cells;
    /// rate[metric][i] = log2(err_i / err_{i+1}) between adjacent levels
    std::map<Metric, std::vector<double>> rates;
};

struct ConvergenceReport {
    StudyConfig config;
    std::string version;
    std::vector<ParamColumn> columns;
};

/// Runs every (parameter, level) cell of the study, computing errors against
/// the exact solution (examples 1 and 3) or against a fine-grid reference /
/// half-mesh run (example 2), and the observed convergence rates.
ConvergenceReport run_study(const StudyConfig& cfg);

enum class ReportFormat { csv, markdown, json };

void emit_report(const ConvergenceReport& report, ReportFormat format, std::ostream& os);

/// Re-ingest a JSON report (emit_report round trip).
ConvergenceReport report_from_json(std::istream& is);

/// Study configurations reproducing the shipped reference tables (1..9).
StudyConfig preset_study(int table);

/// Solver-backed Laplace-transform evaluator for the example-3 problem at a
/// fixed observation point: every call marches a fresh finite-difference
/// solve at the given dual parameter p.
std::function<Complex(Complex)> make_example3_evaluator(double gamma, double lambda,
                                                        double k_gamma, int m_count,
                                                        int n_count, double t_final,
                                                        double x0);

} // namespace tfkac
