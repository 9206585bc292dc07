#include "tfkac/study.hpp"

#include "tfkac/fem.hpp"
#include "tfkac/manufactured.hpp"
#include "tfkac/norms.hpp"
#include "tfkac/parallel.hpp"
#include "tfkac/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace tfkac {

namespace {

using Clock = std::chrono::steady_clock;

ModelParams make_params(const StudyConfig& cfg, const ParamPoint& pt) {
    ModelParams params;
    params.gamma = pt.gamma;
    params.lambda = pt.lambda;
    params.k_gamma = cfg.k_gamma;
    params.p = pt.p;
    params.potential = [](double x) { return x; };
    params.a = 0.0;
    params.b = 1.0;
    return params;
}

ManufacturedProblem make_problem(const StudyConfig& cfg, const ModelParams& params) {
    switch (cfg.example) {
        case 1:
            return cfg.variant == Variant::zero_ic ? example1_lifted(params)
                                                   : example1(params);
        case 2:
            return example2(params, gauss_jacobi(params.gamma, cfg.source_quad_order));
        case 3:
            return example3(params);
        default:
            throw BadConfig("example must be 1, 2 or 3");
    }
}

SolutionHistory run_march(const StudyConfig& cfg, const ModelParams& params,
                          const ManufacturedProblem& problem, int m_count, int n_count) {
    const SpaceGrid sgrid = build_space_grid(params.a, params.b, m_count);
    const TimeGrid tgrid = build_time_grid(cfg.t_final, n_count);
    const ComplexVector ic = cfg.variant == Variant::general_ic
                                 ? problem.initial_on(sgrid)
                                 : ComplexVector(sgrid.interior_count(), Complex(0.0));
    if (cfg.scheme == Scheme::fdm)
        return march_fdm(params, sgrid, tgrid, problem.source, ic, cfg.variant);
    FemOptions options;
    options.quad_order = cfg.quad_order;
    return march_fem(params, sgrid, tgrid, problem.source, ic, cfg.variant, options);
}

SolutionHistory error_history(const SolutionHistory& solution,
                              const std::function<Complex(double, double)>& exact) {
    const SpaceGrid& grid = solution.space_grid();
    const TimeGrid& tgrid = solution.time_grid();
    SolutionHistory err(grid, tgrid);
    for (int n = 0; n < solution.level_count(); ++n) {
        const double t = tgrid.level(n);
        ComplexVector diff(grid.interior_count());
        for (int m = 1; m < grid.m_count(); ++m)
            diff[m - 1] = exact(grid.node(m), t) - solution.at(n)[m - 1];
        if (n == 0)
            err.set_initial(std::move(diff));
        else
            err.push(std::move(diff));
    }
    return err;
}

struct CellContext {
    const StudyConfig& cfg;
    const ModelParams& params;
    const ManufacturedProblem& problem;
    const SolutionHistory* reference; // example 2 fdm only
};

CellResult run_cell(const CellContext& ctx, const LadderLevel& level) {
    const auto start = Clock::now();
    CellResult out;
    out.level = level;
    const StudyConfig& cfg = ctx.cfg;

    const SolutionHistory solution =
        run_march(cfg, ctx.params, ctx.problem, level.m_count, level.n_count);
    const SpaceGrid& grid = solution.space_grid();

    for (Metric metric : cfg.metrics) {
        double value = 0.0;
        switch (metric) {
            case Metric::st_hinf_prime:
            case Metric::st_h1: {
                if (!ctx.problem.exact) throw BadConfig("metric needs an exact solution");
                const SpaceTimeNorms st =
                    spacetime_norms(error_history(solution, ctx.problem.exact));
                value = metric == Metric::st_h1 ? st.st_0h1 : st.st_0prime_hinf;
                break;
            }
            case Metric::final_hinf:
            case Metric::final_h1: {
                ComplexVector diff;
                if (ctx.reference) {
                    const int stride = ctx.reference->space_grid().m_count() / grid.m_count();
                    if (stride * grid.m_count() != ctx.reference->space_grid().m_count())
                        throw GridMismatch("reference grid must nest the cell grid");
                    diff.resize(grid.interior_count());
                    const ComplexVector& ref = ctx.reference->back();
                    for (int i = 0; i < grid.interior_count(); ++i)
                        diff[i] = ref[static_cast<size_t>(stride) * (i + 1) - 1]
                                  - solution.back()[i];
                } else {
                    if (!ctx.problem.exact)
                        throw BadConfig("metric needs an exact solution or reference");
                    diff = error_history(solution, ctx.problem.exact).back();
                }
                const LevelNorms ln = level_norms(diff, grid);
                value = metric == Metric::final_hinf ? ln.max_h : ln.h1_semi;
                break;
            }
            case Metric::fem_st_h1: {
                if (!ctx.problem.exact_dx)
                    throw BadConfig("metric needs the exact solution gradient");
                value = fem_true_h1_error(solution, ctx.problem.exact_dx,
                                          gauss_legendre(cfg.quad_order));
                break;
            }
            case Metric::refine_h1: {
                const SolutionHistory fine =
                    run_march(cfg, ctx.params, ctx.problem, 2 * level.m_count,
                              cfg.refine_time_factor * level.n_count);
                value = refinement_error(solution.back(), grid, fine.back(),
                                         fine.space_grid());
                break;
            }
        }
        out.errors[metric] = value;
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

} // namespace

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::st_hinf_prime: return "st_hinf_prime";
        case Metric::st_h1: return "st_h1";
        case Metric::final_hinf: return "final_hinf";
        case Metric::final_h1: return "final_h1";
        case Metric::fem_st_h1: return "fem_st_h1";
        case Metric::refine_h1: return "refine_h1";
    }
    return "unknown";
}

ConvergenceReport run_study(const StudyConfig& cfg) {
    if (cfg.points.empty()) throw BadConfig("study needs at least one parameter point");
    if (cfg.metrics.empty()) throw BadConfig("study needs at least one metric");
    if (cfg.ladder.size() < 2)
        throw BadConfig("refinement ladder needs at least two levels to form rates");
    for (size_t i = 1; i < cfg.ladder.size(); ++i) {
        const auto& prev = cfg.ladder[i - 1];
        const auto& cur = cfg.ladder[i];
        if (cur.m_count < prev.m_count || cur.n_count < prev.n_count
            || (cur.m_count == prev.m_count && cur.n_count == prev.n_count))
            throw BadConfig("refinement ladder must be strictly refining");
    }

    const bool wants_reference =
        cfg.example == 2 && cfg.scheme == Scheme::fdm
        && std::find_if(cfg.metrics.begin(), cfg.metrics.end(), [](Metric m) {
               return m == Metric::final_hinf || m == Metric::final_h1;
           }) != cfg.metrics.end();

    ConvergenceReport report;
    report.config = cfg;
    report.version = kVersion;
    report.columns.resize(cfg.points.size());

    std::vector<ModelParams> params(cfg.points.size());
    std::vector<ManufacturedProblem> problems(cfg.points.size());
    for (size_t i = 0; i < cfg.points.size(); ++i) {
        params[i] = make_params(cfg, cfg.points[i]);
        problems[i] = make_problem(cfg, params[i]);
    }

    std::vector<SolutionHistory> references;
    if (wants_reference) {
        references.reserve(cfg.points.size());
        for (size_t i = 0; i < cfg.points.size(); ++i)
            references.emplace_back(SolutionHistory(
                build_space_grid(0.0, 1.0, 2), build_time_grid(cfg.t_final, 1)));
        parallel_for(static_cast<int>(cfg.points.size()), cfg.jobs, [&](int i) {
            references[i] = run_march(cfg, params[i], problems[i], cfg.reference_m,
                                      cfg.reference_n);
        });
    }

    const int level_count = static_cast<int>(cfg.ladder.size());
    const int cell_count = static_cast<int>(cfg.points.size()) * level_count;
    for (size_t i = 0; i < cfg.points.size(); ++i) {
        report.columns[i].point = cfg.points[i];
        report.columns[i].cells.resize(level_count);
    }
    parallel_for(cell_count, cfg.jobs, [&](int idx) {
        const int pi = idx / level_count;
        const int li = idx % level_count;
        CellContext ctx{cfg, params[pi], problems[pi],
                        wants_reference ? &references[pi] : nullptr};
        report.columns[pi].cells[li] = run_cell(ctx, cfg.ladder[li]);
    });

    for (auto& column : report.columns)
        for (Metric metric : cfg.metrics) {
            auto& rates = column.rates[metric];
            for (int li = 0; li + 1 < level_count; ++li) {
                const double coarse = column.cells[li].errors.at(metric);
                const double fine = column.cells[li + 1].errors.at(metric);
                rates.push_back(coarse > 0.0 && fine > 0.0 ? std::log2(coarse / fine)
                                                           : std::nan(""));
            }
        }
    return report;
}

namespace {

nlohmann::ordered_json config_json(const StudyConfig& cfg) {
    nlohmann::ordered_json j;
    j["label"] = cfg.label;
    j["scheme"] = cfg.scheme == Scheme::fdm ? "fdm" : "fem";
    j["variant"] = cfg.variant == Variant::zero_ic ? "zero-ic" : "general-ic";
    j["example"] = cfg.example;
    j["t_final"] = cfg.t_final;
    j["k_gamma"] = cfg.k_gamma;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& pt : cfg.points)
        j["points"].push_back({{"gamma", pt.gamma},
                               {"lambda", pt.lambda},
                               {"p_re", pt.p.real()},
                               {"p_im", pt.p.imag()}});
    j["ladder"] = nlohmann::ordered_json::array();
    for (const auto& lv : cfg.ladder)
        j["ladder"].push_back({{"M", lv.m_count}, {"N", lv.n_count}});
    j["metrics"] = nlohmann::ordered_json::array();
    for (Metric m : cfg.metrics) j["metrics"].push_back(metric_name(m));
    j["reference_m"] = cfg.reference_m;
    j["reference_n"] = cfg.reference_n;
    j["refine_time_factor"] = cfg.refine_time_factor;
    j["quad_order"] = cfg.quad_order;
    j["source_quad_order"] = cfg.source_quad_order;
    return j;
}

std::string point_label(const ParamPoint& pt) {
    std::ostringstream os;
    os << "gamma=" << pt.gamma << ", lambda=" << pt.lambda << ", p=" << pt.p.real();
    if (pt.p.imag() != 0.0) os << (pt.p.imag() > 0 ? "+" : "") << pt.p.imag() << "i";
    return os.str();
}

void emit_csv(const ConvergenceReport& report, std::ostream& os) {
    os << "gamma,lambda,p_re,p_im,M,N";
    for (Metric m : report.config.metrics)
        os << "," << metric_name(m) << "," << metric_name(m) << "_rate";
    os << ",seconds\n";
    os.precision(10);
    for (const auto& column : report.columns)
        for (size_t li = 0; li < column.cells.size(); ++li) {
            const auto& cell = column.cells[li];
            os << column.point.gamma << "," << column.point.lambda << ","
               << column.point.p.real() << "," << column.point.p.imag() << ","
               << cell.level.m_count << "," << cell.level.n_count;
            for (Metric m : report.config.metrics) {
                os << "," << cell.errors.at(m) << ",";
                if (li > 0)
                    os << column.rates.at(m)[li - 1];
            }
            os << "," << cell.seconds << "\n";
        }
}

void emit_markdown(const ConvergenceReport& report, std::ostream& os) {
    os << "# " << (report.config.label.empty() ? "convergence study" : report.config.label)
       << "\n\nversion: " << report.version << "\n";
    for (Metric metric : report.config.metrics) {
        os << "\n## " << metric_name(metric) << "\n\n|  M | N |";
        for (const auto& column : report.columns)
            os << " " << point_label(column.point) << " Err | Rate |";
        os << "\n|---|---|";
        for (size_t i = 0; i < report.columns.size(); ++i) os << "---|---|";
        os << "\n";
        const size_t levels = report.columns.front().cells.size();
        char buf[32];
        for (size_t li = 0; li < levels; ++li) {
            const auto& lv = report.columns.front().cells[li].level;
            os << "| " << lv.m_count << " | " << lv.n_count << " |";
            for (const auto& column : report.columns) {
                std::snprintf(buf, sizeof buf, "%.4e", column.cells[li].errors.at(metric));
                os << " " << buf << " |";
                if (li == 0)
                    os << " --- |";
                else {
                    std::snprintf(buf, sizeof buf, "%.4f", column.rates.at(metric)[li - 1]);
                    os << " " << buf << " |";
                }
            }
            os << "\n";
        }
    }
}

void emit_json(const ConvergenceReport& report, std::ostream& os) {
    nlohmann::ordered_json j;
    j["version"] = report.version;
    j["config"] = config_json(report.config);
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& column : report.columns) {
        nlohmann::ordered_json c;
        c["point"] = {{"gamma", column.point.gamma},
                      {"lambda", column.point.lambda},
                      {"p_re", column.point.p.real()},
                      {"p_im", column.point.p.imag()}};
        c["cells"] = nlohmann::ordered_json::array();
        for (const auto& cell : column.cells) {
            nlohmann::ordered_json e;
            e["M"] = cell.level.m_count;
            e["N"] = cell.level.n_count;
            for (Metric m : report.config.metrics)
                e["errors"][metric_name(m)] = cell.errors.at(m);
            e["seconds"] = cell.seconds;
            c["cells"].push_back(e);
        }
        for (Metric m : report.config.metrics)
            c["rates"][metric_name(m)] = column.rates.at(m);
        j["columns"].push_back(c);
    }
    os << j.dump(2) << "\n";
}

} // namespace

void emit_report(const ConvergenceReport& report, ReportFormat format, std::ostream& os) {
    switch (format) {
        case ReportFormat::csv: emit_csv(report, os); break;
        case ReportFormat::markdown: emit_markdown(report, os); break;
        case ReportFormat::json: emit_json(report, os); break;
    }
    if (!os) throw IoFailure("failed to write report");
}

ConvergenceReport report_from_json(std::istream& is) {
    nlohmann::ordered_json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw IoFailure(std::string("cannot parse report JSON: ") + e.what());
    }
    ConvergenceReport report;
    report.version = j.at("version").get<std::string>();
    const auto& jc = j.at("config");
    StudyConfig& cfg = report.config;
    cfg.label = jc.at("label").get<std::string>();
    cfg.scheme = jc.at("scheme") == "fdm" ? Scheme::fdm : Scheme::fem;
    cfg.variant = jc.at("variant") == "zero-ic" ? Variant::zero_ic : Variant::general_ic;
    cfg.example = jc.at("example").get<int>();
    cfg.t_final = jc.at("t_final").get<double>();
    cfg.k_gamma = jc.at("k_gamma").get<double>();
    for (const auto& p : jc.at("points"))
        cfg.points.push_back({p.at("gamma").get<double>(), p.at("lambda").get<double>(),
                              Complex(p.at("p_re").get<double>(), p.at("p_im").get<double>())});
    for (const auto& lv : jc.at("ladder"))
        cfg.ladder.push_back({lv.at("M").get<int>(), lv.at("N").get<int>()});
    const auto metric_from_name = [](const std::string& name) {
        for (Metric m : {Metric::st_hinf_prime, Metric::st_h1, Metric::final_hinf,
                         Metric::final_h1, Metric::fem_st_h1, Metric::refine_h1})
            if (metric_name(m) == name) return m;
        throw BadConfig("unknown metric " + name);
    };
    for (const auto& m : jc.at("metrics"))
        cfg.metrics.push_back(metric_from_name(m.get<std::string>()));
    cfg.reference_m = jc.at("reference_m").get<int>();
    cfg.reference_n = jc.at("reference_n").get<int>();
    cfg.refine_time_factor = jc.at("refine_time_factor").get<int>();
    cfg.quad_order = jc.at("quad_order").get<int>();
    cfg.source_quad_order = jc.at("source_quad_order").get<int>();
    for (const auto& col : j.at("columns")) {
        ParamColumn column;
        column.point = {col.at("point").at("gamma").get<double>(),
                        col.at("point").at("lambda").get<double>(),
                        Complex(col.at("point").at("p_re").get<double>(),
                                col.at("point").at("p_im").get<double>())};
        for (const auto& cell : col.at("cells")) {
            CellResult cr;
            cr.level = {cell.at("M").get<int>(), cell.at("N").get<int>()};
            for (Metric m : cfg.metrics)
                cr.errors[m] = cell.at("errors").at(metric_name(m)).get<double>();
            cr.seconds = cell.at("seconds").get<double>();
            column.cells.push_back(std::move(cr));
        }
        for (Metric m : cfg.metrics)
            column.rates[m] = col.at("rates").at(metric_name(m)).get<std::vector<double>>();
        report.columns.push_back(std::move(column));
    }
    return report;
}

StudyConfig preset_study(int table) {
    StudyConfig cfg;
    auto ex1_points = std::vector<ParamPoint>{{0.3, 3.0, Complex(1.0, 1.0)},
                                              {0.5, 3.0, Complex(5.0, 0.0)},
                                              {0.8, 3.0, Complex(0.0, 10.0)}};
    auto ex2_points = std::vector<ParamPoint>{{0.3, 0.0, Complex(0.0, 5.0)},
                                              {0.5, 3.0, Complex(0.0, 5.0)},
                                              {0.8, 5.0, Complex(0.0, 5.0)}};
    switch (table) {
        case 1:
        case 2:
            cfg.scheme = Scheme::fdm;
            cfg.variant = table == 1 ? Variant::zero_ic : Variant::general_ic;
            cfg.example = 1;
            cfg.t_final = 1.0;
            cfg.points = ex1_points;
            cfg.ladder = {{1 << 11, 1 << 7}, {1 << 11, 1 << 8}, {1 << 11, 1 << 9}};
            cfg.metrics = {Metric::st_hinf_prime, Metric::st_h1};
            break;
        case 3:
        case 4:
            cfg.scheme = Scheme::fdm;
            cfg.variant = table == 3 ? Variant::zero_ic : Variant::general_ic;
            cfg.example = 1;
            cfg.t_final = 1.0;
            cfg.points = ex1_points;
            cfg.ladder = {{1 << 4, 1 << 8}, {1 << 5, 1 << 10}, {1 << 6, 1 << 12}};
            cfg.metrics = {Metric::st_hinf_prime, Metric::st_h1};
            break;
        case 5:
        case 6:
            cfg.scheme = Scheme::fem;
            cfg.variant = table == 5 ? Variant::zero_ic : Variant::general_ic;
            cfg.example = 1;
            cfg.t_final = 1.0;
            cfg.points = ex1_points;
            cfg.ladder = {{1 << 4, 1 << 4}, {1 << 5, 1 << 5}, {1 << 6, 1 << 6}};
            cfg.metrics = {Metric::fem_st_h1};
            break;
        case 7:
            cfg.scheme = Scheme::fdm;
            cfg.variant = Variant::zero_ic;
            cfg.example = 2;
            cfg.t_final = 0.5;
            cfg.points = ex2_points;
            cfg.ladder = {{1 << 11, 1 << 6}, {1 << 11, 1 << 7}, {1 << 11, 1 << 8}};
            cfg.metrics = {Metric::final_hinf, Metric::final_h1};
            break;
        case 8:
            cfg.scheme = Scheme::fdm;
            cfg.variant = Variant::zero_ic;
            cfg.example = 2;
            cfg.t_final = 0.5;
            cfg.points = ex2_points;
            cfg.ladder = {{1 << 4, 128}, {1 << 5, 512}, {1 << 6, 2048}};
            cfg.metrics = {Metric::final_hinf, Metric::final_h1};
            break;
        case 9:
            cfg.scheme = Scheme::fem;
            cfg.variant = Variant::zero_ic;
            cfg.example = 2;
            cfg.t_final = 0.5;
            cfg.points = ex2_points;
            cfg.ladder = {{1 << 4, 8}, {1 << 5, 16}, {1 << 6, 32}};
            cfg.metrics = {Metric::refine_h1};
            cfg.refine_time_factor = 2;
            break;
        default:
            throw BadConfig("preset tables are 1..9");
    }
    cfg.label = "table" + std::to_string(table);
    return cfg;
}

std::function<Complex(Complex)> make_example3_evaluator(double gamma, double lambda,
                                                        double k_gamma, int m_count,
                                                        int n_count, double t_final,
                                                        double x0) {
    const SpaceGrid grid = build_space_grid(0.0, 1.0, m_count);
    const int idx = static_cast<int>(std::lround(x0 / grid.h()));
    if (idx < 1 || idx >= m_count || std::abs(grid.node(idx) - x0) > 1e-12)
        throw GridMismatch("observation point must coincide with an interior node");
    return [=](Complex p) -> Complex {
        ModelParams params;
        params.gamma = gamma;
        params.lambda = lambda;
        params.k_gamma = k_gamma;
        params.p = p;
        const SpaceGrid sgrid = build_space_grid(0.0, 1.0, m_count);
        const TimeGrid tgrid = build_time_grid(t_final, n_count);
        const ManufacturedProblem problem = example3(params);
        const SolutionHistory sol =
            march_fdm(params, sgrid, tgrid, problem.source,
                      ComplexVector(sgrid.interior_count(), Complex(0.0)),
                      Variant::zero_ic);
        return sol.back()[idx - 1];
    };
}

} // namespace tfkac
