// Command-line front end: coefficient dumps, single solves, convergence
// studies, Laplace inversion, and the oracle verification suite.

#include "tfkac/coeffs.hpp"
#include "tfkac/fem.hpp"
#include "tfkac/golden.hpp"
#include "tfkac/laplace.hpp"
#include "tfkac/manufactured.hpp"
#include "tfkac/norms.hpp"
#include "tfkac/oracle.hpp"
#include "tfkac/parallel.hpp"
#include "tfkac/study.hpp"
#include "tfkac/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <thread>

namespace {

using namespace tfkac;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open " + path);
    return out;
}

struct ModelFlags {
    double gamma = 0.5;
    double lambda = 3.0;
    double k_gamma = 1.0;
    double p_re = 5.0;
    double p_im = 0.0;
    int example = 1;
    std::string variant = "zero-ic";

    void attach(CLI::App* cmd) {
        cmd->add_option("--gamma", gamma, "fractional order in (0,1)");
        cmd->add_option("--lambda", lambda, "tempering parameter >= 0");
        cmd->add_option("--kgamma", k_gamma, "diffusion coefficient > 0");
        cmd->add_option("--p-re", p_re, "Re(p)");
        cmd->add_option("--p-im", p_im, "Im(p)");
        cmd->add_option("--example", example, "example problem (1, 2 or 3)")
            ->check(CLI::Range(1, 3));
        cmd->add_option("--variant", variant, "time scheme: zero-ic or general-ic")
            ->check(CLI::IsMember({"zero-ic", "general-ic"}));
    }

    ModelParams params() const {
        ModelParams p;
        p.gamma = gamma;
        p.lambda = lambda;
        p.k_gamma = k_gamma;
        p.p = Complex(p_re, p_im);
        p.potential = [](double x) { return x; };
        return p;
    }

    Variant variant_enum() const {
        return variant == "zero-ic" ? Variant::zero_ic : Variant::general_ic;
    }
};

ManufacturedProblem pick_problem(const ModelFlags& mf, const ModelParams& params,
                                 int source_quad) {
    switch (mf.example) {
        case 1:
            return mf.variant_enum() == Variant::zero_ic ? example1_lifted(params)
                                                         : example1(params);
        case 2:
            return example2(params, gauss_jacobi(params.gamma, source_quad));
        default:
            return example3(params);
    }
}

int cmd_coeffs(double gamma, double lambda, double tau, int n, const std::string& out_path) {
    const CoefficientTable table = CoefficientTable::build(gamma, lambda, tau, n);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    *os << "k,g_plain,g_tempered,d,q_partial\n";
    os->precision(16);
    for (int k = 0; k <= n; ++k)
        *os << k << "," << table.g_plain[k] << "," << table.g_tempered[k] << ","
            << table.d[k] << "," << table.q_partial[k] << "\n";
    return 0;
}

int cmd_solve(const ModelFlags& mf, int m_count, int n_count, double t_final,
              bool use_fem, int quad_order, const std::string& out_base) {
    ModelParams params = mf.params();
    const SpaceGrid sgrid = build_space_grid(0.0, 1.0, m_count);
    const TimeGrid tgrid = build_time_grid(t_final, n_count);
    params = validate_model(params, sgrid);
    const ManufacturedProblem problem = pick_problem(mf, params, 32);
    const Variant variant = mf.variant_enum();
    const ComplexVector ic = variant == Variant::general_ic
                                 ? problem.initial_on(sgrid)
                                 : ComplexVector(sgrid.interior_count(), Complex(0.0));

    SolutionHistory solution =
        use_fem ? march_fem(params, sgrid, tgrid, problem.source, ic, variant,
                            FemOptions{quad_order, FemIcProjection::interpolant})
                : march_fdm(params, sgrid, tgrid, problem.source, ic, variant);

    const LevelNorms final_norms = level_norms(solution.back(), sgrid);
    const SpaceTimeNorms st = spacetime_norms(solution);

    std::ofstream csv_file;
    std::ostream* csv = &std::cout;
    if (!out_base.empty()) {
        csv_file = open_out(out_base + ".csv");
        csv = &csv_file;
    }
    *csv << "x,re,im";
    const bool reconstructable = problem.lifted && problem.lift_term;
    if (reconstructable) *csv << ",re_reconstructed,im_reconstructed";
    *csv << "\n";
    csv->precision(16);
    for (int m = 1; m < sgrid.m_count(); ++m) {
        const Complex w = solution.back()[m - 1];
        *csv << sgrid.node(m) << "," << w.real() << "," << w.imag();
        if (reconstructable) {
            const Complex g = problem.reconstruct(w, sgrid.node(m), t_final);
            *csv << "," << g.real() << "," << g.imag();
        }
        *csv << "\n";
    }

    nlohmann::ordered_json manifest;
    manifest["version"] = kVersion;
    manifest["scheme"] = use_fem ? "fem" : "fdm";
    manifest["example"] = mf.example;
    manifest["variant"] = mf.variant;
    manifest["gamma"] = mf.gamma;
    manifest["lambda"] = mf.lambda;
    manifest["k_gamma"] = mf.k_gamma;
    manifest["p_re"] = mf.p_re;
    manifest["p_im"] = mf.p_im;
    manifest["M"] = m_count;
    manifest["N"] = n_count;
    manifest["T"] = t_final;
    if (use_fem) manifest["quad_order"] = quad_order;
    manifest["final_norms"] = {{"l2_h", final_norms.l2_h},
                               {"h1_semi", final_norms.h1_semi},
                               {"max_h", final_norms.max_h}};
    manifest["spacetime_norms"] = {{"st_0h1", st.st_0h1},
                                   {"st_0prime_hinf", st.st_0prime_hinf}};
    if (problem.exact) {
        double max_err = 0.0;
        for (int m = 1; m < sgrid.m_count(); ++m)
            max_err = std::max(max_err, std::abs(problem.exact(sgrid.node(m), t_final)
                                                 - solution.back()[m - 1]));
        manifest["final_max_error_vs_exact"] = max_err;
    }
    if (out_base.empty()) {
        std::cerr << manifest.dump(2) << "\n";
    } else {
        open_out(out_base + ".json") << manifest.dump(2) << "\n";
    }
    return 0;
}

// tolerance bands for --check, per preset table
struct CheckSpec {
    const golden::Block* first;
    const golden::Block* second;
    double rel_tol;
};

CheckSpec check_spec(int table) {
    using namespace golden;
    switch (table) {
        case 1: return {&kTable1Hinf, &kTable1H1, 0.05};
        case 2: return {&kTable2Hinf, &kTable2H1, 0.10};
        case 3: return {&kTable3Hinf, &kTable3H1, 0.05};
        case 4: return {&kTable4Hinf, &kTable4H1, 0.10};
        case 5: return {&kTable5TauH, nullptr, 0.15};
        case 6: return {&kTable6TauH, nullptr, 0.15};
        case 7: return {&kTable7Hinf, &kTable7H1, 0.20};
        case 8: return {&kTable8Hinf, &kTable8H1, 0.20};
        case 9: return {&kTable9TauH, nullptr, 0.15};
        default: throw BadConfig("check needs a preset table 1..9");
    }
}

int check_report(const ConvergenceReport& report, int table) {
    const CheckSpec spec = check_spec(table);
    bool ok = true;
    const auto compare = [&](const golden::Block& expected, Metric metric) {
        for (size_t pi = 0; pi < report.columns.size(); ++pi)
            for (size_t li = 0; li < report.columns[pi].cells.size(); ++li) {
                const double got = report.columns[pi].cells[li].errors.at(metric);
                const double want = expected[li][pi];
                const double rel = std::abs(got - want) / want;
                const bool pass = rel <= spec.rel_tol;
                ok = ok && pass;
                std::printf("%s  %-14s col=%zu level=%zu  got %.4e  expected %.4e  rel %.3f\n",
                            pass ? "PASS" : "FAIL", metric_name(metric).c_str(), pi, li,
                            got, want, rel);
            }
    };
    compare(*spec.first, report.config.metrics[0]);
    if (spec.second && report.config.metrics.size() > 1)
        compare(*spec.second, report.config.metrics[1]);
    return ok ? 0 : 2;
}

int cmd_convergence(int table, bool tau_h2, bool check, bool ci, int jobs,
                    const std::string& format, const std::string& out_path) {
    StudyConfig cfg = preset_study(table);
    cfg.jobs = jobs;
    if (tau_h2) {
        if (table == 5 || table == 6)
            cfg.ladder = {{1 << 4, 1 << 8}, {1 << 5, 1 << 10}, {1 << 6, 1 << 12}};
        else if (table == 9) {
            cfg.ladder = {{1 << 4, 128}, {1 << 5, 512}, {1 << 6, 2048}};
            cfg.refine_time_factor = 4;
        } else
            throw BadConfig("--tau-h2 applies to tables 5, 6 and 9");
        cfg.label += "-tau-h2";
    }
    if (ci && cfg.example == 2 && cfg.scheme == Scheme::fdm) {
        cfg.reference_m = 1 << 10;
        cfg.reference_n = 1 << 10;
        cfg.label += "-ci";
    }
    const ConvergenceReport report = run_study(cfg);

    const ReportFormat rf = format == "csv"      ? ReportFormat::csv
                            : format == "json"   ? ReportFormat::json
                                                 : ReportFormat::markdown;
    if (out_path.empty()) {
        emit_report(report, rf, std::cout);
    } else {
        auto out = open_out(out_path);
        emit_report(report, rf, out);
    }
    if (check) {
        if (tau_h2) {
            const golden::Block& blk = table == 5   ? golden::kTable5TauH2
                                       : table == 6 ? golden::kTable6TauH2
                                                    : golden::kTable9TauH2;
            CheckSpec spec{&blk, nullptr, check_spec(table).rel_tol};
            bool ok = true;
            for (size_t pi = 0; pi < report.columns.size(); ++pi)
                for (size_t li = 0; li < report.columns[pi].cells.size(); ++li) {
                    const double got =
                        report.columns[pi].cells[li].errors.at(report.config.metrics[0]);
                    const double want = (*spec.first)[li][pi];
                    const double rel = std::abs(got - want) / want;
                    const bool pass = rel <= spec.rel_tol;
                    ok = ok && pass;
                    std::printf("%s  col=%zu level=%zu  got %.4e  expected %.4e  rel %.3f\n",
                                pass ? "PASS" : "FAIL", pi, li, got, want, rel);
                }
            return ok ? 0 : 2;
        }
        return check_report(report, table);
    }
    return 0;
}

std::vector<double> parse_a_grid(const std::string& text) {
    std::vector<double> out;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        // range form lo:hi:count
        const auto second = text.find(':', colon + 1);
        if (second == std::string::npos) throw BadConfig("range form is lo:hi:count");
        const double lo = std::stod(text.substr(0, colon));
        const double hi = std::stod(text.substr(colon + 1, second - colon - 1));
        const int count = std::stoi(text.substr(second + 1));
        if (count < 1) throw BadConfig("range count must be >= 1");
        for (int i = 0; i < count; ++i)
            out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    if (out.empty()) throw BadConfig("empty A grid");
    return out;
}

int cmd_invert(const ModelFlags& mf, const std::string& a_grid_text, double a_tilde, int k1,
               int k2, double x0, double t, int m_count, int n_count, int jobs,
               const std::string& out_path) {
    if (mf.example != 3)
        throw BadConfig("solver-backed inversion is wired to example 3");
    const std::vector<double> a_grid = parse_a_grid(a_grid_text);
    auto evaluator = make_example3_evaluator(mf.gamma, mf.lambda, mf.k_gamma, m_count,
                                             n_count, t, x0);

    // fan the (A, j) transform evaluations out across worker threads, then
    // invert from the cached values
    const int per_a = k1 + k2 + 1;
    std::vector<Complex> cache(a_grid.size() * static_cast<size_t>(per_a));
    parallel_for(static_cast<int>(cache.size()), jobs, [&](int idx) {
        const int ai = idx / per_a;
        const int j = idx % per_a;
        const Complex pj(a_tilde / (2.0 * a_grid[ai]),
                         j * std::numbers::pi / a_grid[ai]);
        cache[idx] = evaluator(pj);
    });

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    *os << "A,pdf_numeric,pdf_analytic,abs_error\n";
    os->precision(12);
    for (size_t ai = 0; ai < a_grid.size(); ++ai) {
        const double A = a_grid[ai];
        int calls = 0;
        InversionConfig cfg;
        cfg.a_tilde = a_tilde;
        cfg.k1 = k1;
        cfg.k2 = k2;
        cfg.evaluator = [&](Complex) -> Complex {
            return cache[ai * static_cast<size_t>(per_a) + calls++];
        };
        const double pdf = euler_invert(A, cfg);
        const double analytic =
            t * t * std::exp(-mf.lambda * t - 2.0 * A) * (x0 - x0 * x0 * x0);
        *os << A << "," << pdf << "," << analytic << "," << std::abs(pdf - analytic)
            << "\n";
    }
    return 0;
}

// oracle-equivalence suite behind `verify`
int cmd_verify() {
    int failures = 0;
    const auto report = [&](const char* name, bool pass, double worst) {
        std::printf("%s  %-34s worst %.3e\n", pass ? "PASS" : "FAIL", name, worst);
        if (!pass) ++failures;
    };
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    {
        // history sum vs dense compensated convolution
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const double gamma = 0.1 + 0.8 * unit(rng);
            const double lambda = 4.0 * unit(rng);
            const int m_count = 2 + static_cast<int>(unit(rng) * 30);
            const int n_count = 1 + static_cast<int>(unit(rng) * 63);
            const double t_final = 0.25 + unit(rng);
            ModelParams params;
            params.gamma = gamma;
            params.lambda = lambda;
            params.p = Complex(5.0 * unit(rng), 10.0 * (unit(rng) - 0.5));
            const SpaceGrid grid = build_space_grid(0.0, 1.0, m_count);
            const TimeGrid tgrid = build_time_grid(t_final, n_count);
            const CoefficientTable table =
                CoefficientTable::build(gamma, lambda, tgrid.tau(), n_count);
            const HistoryWeights weights(params, grid, tgrid.tau(), n_count);
            SolutionHistory hist(grid, tgrid);
            for (int n = 0; n <= n_count; ++n) {
                ComplexVector level(grid.interior_count());
                for (auto& v : level) v = Complex(unit(rng) - 0.5, unit(rng) - 0.5);
                if (n == 0)
                    hist.set_initial(std::move(level));
                else
                    hist.push(std::move(level));
            }
            const auto fast = substantial_history_sum(table, weights, hist, n_count);
            const auto slow = oracle::dense_history_oracle(table, weights, hist, n_count);
            double scale = 0.0, diff = 0.0;
            for (size_t i = 0; i < fast.size(); ++i) {
                scale = std::max(scale, std::abs(slow[i]));
                diff = std::max(diff, std::abs(fast[i] - slow[i]));
            }
            worst = std::max(worst, diff / std::max(scale, 1e-30));
        }
        report("history sum vs dense oracle", worst <= 1e-13, worst);
    }
    {
        // tridiagonal solve vs dense elimination
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(unit(rng) * 126);
            std::vector<double> sub(n - 1), diag(n), super(n - 1);
            for (int i = 0; i < n - 1; ++i) {
                sub[i] = unit(rng) - 0.5;
                super[i] = unit(rng) - 0.5;
            }
            for (int i = 0; i < n; ++i) diag[i] = 2.0 + unit(rng);
            TridiagonalOperator op(sub, diag, super);
            ComplexVector rhs(n);
            for (auto& v : rhs) v = Complex(unit(rng) - 0.5, unit(rng) - 0.5);
            std::vector<ComplexVector> dense(n, ComplexVector(n, Complex(0.0)));
            for (int i = 0; i < n; ++i) {
                dense[i][i] = diag[i];
                if (i > 0) dense[i][i - 1] = sub[i - 1];
                if (i + 1 < n) dense[i][i + 1] = super[i];
            }
            const auto fast = tridiag_solve(op, rhs);
            const auto slow = oracle::dense_solve_oracle(dense, rhs);
            double scale = 0.0, diff = 0.0;
            for (int i = 0; i < n; ++i) {
                scale = std::max(scale, std::abs(slow[i]));
                diff = std::max(diff, std::abs(fast[i] - slow[i]));
            }
            worst = std::max(worst, diff / std::max(scale, 1e-30));
        }
        report("tridiagonal solve vs dense oracle", worst <= 1e-12, worst);
    }
    {
        // fractional integral quadrature vs adaptive oracle
        double worst = 0.0;
        for (double gamma : {0.3, 0.5, 0.8}) {
            const QuadratureRule rule = gauss_jacobi(gamma, 32);
            for (double lambda : {0.0, 3.0, 5.0}) {
                auto f = [&](double s) { return Complex(std::exp(lambda * s)); };
                const Complex fast = rl_integral(gamma, f, 0.5, rule);
                const Complex slow = oracle::adaptive_rl_oracle(gamma, f, 0.5, 1e-13);
                worst = std::max(worst, std::abs(fast - slow) / std::abs(slow));
            }
        }
        report("fractional integral vs adaptive", worst <= 1e-12, worst);
    }
    {
        // quadrature polynomial exactness through moment recursion
        double worst = 0.0;
        for (double gamma : {0.3, 0.5, 0.8}) {
            const int order = 8;
            const QuadratureRule rule = gauss_jacobi(gamma, order);
            // analytic moments of (1-x)^{-gamma} x^k via the recurrence
            // m_k = (2^{1-gamma} ... ) -- evaluated by the adaptive oracle on
            // the substituted smooth integrand instead
            for (int k = 0; k <= 2 * order - 1; ++k) {
                double quad = 0.0;
                for (int q = 0; q < rule.order; ++q)
                    quad += rule.weights[q] * std::pow(rule.nodes[q], k);
                auto mom = [&](double xi) { return Complex(std::pow(2.0 * xi - 1.0, k)); };
                // int_{-1}^{1} (1-x)^{-g} x^k dx through the substitution
                // x = 1 - 2u handled by the adaptive fractional-integral oracle
                const Complex ref = std::pow(2.0, 1.0 - gamma) * std::tgamma(1.0 - gamma)
                                    * oracle::adaptive_rl_oracle(gamma, mom, 1.0, 1e-13);
                worst = std::max(worst, std::abs(quad - ref.real())
                                            / std::max(1.0, std::abs(ref.real())));
            }
        }
        report("gauss-jacobi polynomial exactness", worst <= 1e-12, worst);
    }
    {
        // discrete norm inequalities
        double worst_gap = 0.0;
        bool pass = true;
        for (int m_exp : {2, 4, 6, 8}) {
            const SpaceGrid grid = build_space_grid(0.0, 1.0, 1 << m_exp);
            for (int trial = 0; trial < 1000; ++trial) {
                ComplexVector v(grid.interior_count());
                for (auto& c : v) c = Complex(unit(rng) - 0.5, unit(rng) - 0.5);
                const LevelNorms ln = level_norms(v, grid);
                const double bound_l2 = (grid.b() - grid.a()) / std::sqrt(6.0) * ln.h1_semi;
                const double bound_inf = (grid.b() - grid.a()) / std::sqrt(2.0) * ln.h1_semi;
                pass = pass && ln.l2_h <= bound_l2 * (1.0 + 1e-12)
                       && ln.max_h <= bound_inf * (1.0 + 1e-12);
                worst_gap = std::max(worst_gap, ln.l2_h / bound_l2);
            }
        }
        report("discrete norm inequalities", pass, worst_gap);
    }
    std::printf("%s\n", failures == 0 ? "verify: all checks passed"
                                      : "verify: FAILURES detected");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tempered fractional Feynman-Kac solvers"};
    app.set_config("--config", "", "read options from a key=value config file");
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--jobs", jobs, "worker threads for independent runs")
        ->capture_default_str();

    // coeffs
    auto* sc_coeffs = app.add_subcommand("coeffs", "dump coefficient tables as CSV");
    double c_gamma = 0.5, c_lambda = 3.0, c_tau = 1.0 / 128.0;
    int c_n = 128;
    std::string c_out;
    sc_coeffs->add_option("--gamma", c_gamma, "fractional order");
    sc_coeffs->add_option("--lambda", c_lambda, "tempering parameter");
    sc_coeffs->add_option("--tau", c_tau, "time step");
    sc_coeffs->add_option("--n", c_n, "highest index");
    sc_coeffs->add_option("--out", c_out, "output file (default stdout)");

    // solve-fdm / solve-fem
    ModelFlags mf_fdm, mf_fem;
    int s_m = 1 << 8, s_n = 1 << 8, fem_quad = 4;
    double s_t = 1.0;
    std::string s_out;
    auto* sc_fdm = app.add_subcommand("solve-fdm", "finite-difference solve");
    mf_fdm.attach(sc_fdm);
    sc_fdm->add_option("--M", s_m, "space cells");
    sc_fdm->add_option("--N", s_n, "time steps");
    sc_fdm->add_option("--T", s_t, "time horizon");
    sc_fdm->add_option("--out", s_out, "output base path (.csv/.json)");

    int f_m = 1 << 5, f_n = 1 << 5;
    double f_t = 1.0;
    std::string f_out;
    auto* sc_fem = app.add_subcommand("solve-fem", "P1 finite-element solve");
    mf_fem.attach(sc_fem);
    sc_fem->add_option("--M", f_m, "space cells");
    sc_fem->add_option("--N", f_n, "time steps");
    sc_fem->add_option("--T", f_t, "time horizon");
    sc_fem->add_option("--quad-order", fem_quad, "element quadrature points");
    sc_fem->add_option("--out", f_out, "output base path (.csv/.json)");

    // convergence
    auto* sc_conv = app.add_subcommand("convergence", "run a refinement study");
    int table = 1;
    bool tau_h2 = false, do_check = false, ci_mode = false;
    std::string conv_format = "markdown", conv_out;
    sc_conv->add_option("--preset", table, "reference table preset (1..9)")
        ->check(CLI::Range(1, 9));
    sc_conv->add_flag("--tau-h2", tau_h2, "use the tau=h^2 ladder (tables 5, 6, 9)");
    sc_conv->add_flag("--check", do_check,
                      "compare against golden values; exit 2 on tolerance failure");
    sc_conv->add_flag("--ci", ci_mode, "reduced reference resolution for example 2");
    sc_conv->add_option("--format", conv_format, "csv, markdown or json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    sc_conv->add_option("--out", conv_out, "output file (default stdout)");

    // invert
    ModelFlags mf_inv;
    mf_inv.example = 3;
    mf_inv.lambda = 0.0;
    auto* sc_inv = app.add_subcommand("invert", "numerical inverse Laplace transform");
    mf_inv.attach(sc_inv);
    std::string a_grid = "0.05:2:40", inv_out;
    double a_tilde = 18.4, inv_x0 = 0.5, inv_t = 0.5;
    int k1 = 25, k2 = 15, inv_m = 1 << 10, inv_n = 1 << 9;
    sc_inv->add_option("--A-grid", a_grid, "comma list or lo:hi:count range");
    sc_inv->add_option("--a-tilde", a_tilde, "contour parameter");
    sc_inv->add_option("--k1", k1, "base partial-sum index");
    sc_inv->add_option("--k2", k2, "Euler averaging depth");
    sc_inv->add_option("--x0", inv_x0, "observation point");
    sc_inv->add_option("--t", inv_t, "observation time (also the horizon)");
    sc_inv->add_option("--M", inv_m, "space cells for the solver runs");
    sc_inv->add_option("--N", inv_n, "time steps for the solver runs");
    sc_inv->add_option("--out", inv_out, "output file (default stdout)");

    // verify
    app.add_subcommand("verify", "run the oracle-equivalence suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_coeffs->parsed()) return cmd_coeffs(c_gamma, c_lambda, c_tau, c_n, c_out);
        if (sc_fdm->parsed())
            return cmd_solve(mf_fdm, s_m, s_n, s_t, false, fem_quad, s_out);
        if (sc_fem->parsed())
            return cmd_solve(mf_fem, f_m, f_n, f_t, true, fem_quad, f_out);
        if (sc_conv->parsed())
            return cmd_convergence(table, tau_h2, do_check, ci_mode, jobs, conv_format,
                                   conv_out);
        if (sc_inv->parsed())
            return cmd_invert(mf_inv, a_grid, a_tilde, k1, k2, inv_x0, inv_t, inv_m,
                              inv_n, jobs, inv_out);
        if (app.get_subcommand("verify")->parsed()) return cmd_verify();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
