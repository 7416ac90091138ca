#include "abreu/cli.hpp"

#include "abreu/abreu_core.hpp"
#include "abreu/barriers.hpp"
#include "abreu/errors.hpp"
#include "abreu/estimates.hpp"
#include "abreu/expr.hpp"
#include "abreu/io.hpp"
#include "abreu/legendre.hpp"
#include "abreu/solver.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace fs = std::filesystem;

namespace abreu {

namespace {

constexpr const char* kModule = "cli_reporting";

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::Config, kModule, msg); }

std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        double v = std::strtod(item.c_str(), &end);
        if (item.empty() || *end != '\0' || !std::isfinite(v)) config_error("bad number '" + item + "' in list '" + s + "'");
        out.push_back(v);
    }
    if (out.empty()) config_error("empty list");
    return out;
}

nlohmann::json num(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

// Everything needed to reproduce a run; echoed into manifest.json.
struct RunConfig {
    std::string command;
    nlohmann::json domain;
    double h = 0.0;
    std::string K = "const:1";
    std::string phi = "expr:0.5*(x1^2+x2^2)";
    std::optional<double> t;
    std::string psi;
    double theta = 0.0;
    std::vector<double> t_schedule, theta_schedule;
    double inner_tol = std::numeric_limits<double>::quiet_NaN();
    double outer_tol = std::numeric_limits<double>::quiet_NaN();

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["command"] = command;
        j["domain"] = domain;
        j["h"] = h;
        j["K"] = K;
        j["phi"] = phi;
        if (t) j["t"] = *t;
        if (!psi.empty()) j["psi"] = psi;
        j["theta"] = theta;
        if (!t_schedule.empty()) j["t_schedule"] = t_schedule;
        if (!theta_schedule.empty()) j["theta_schedule"] = theta_schedule;
        j["inner_tol"] = num(inner_tol);
        j["outer_tol"] = num(outer_tol);
        return j;
    }

    static RunConfig from_json(const nlohmann::json& j)
    {
        RunConfig c;
        try {
            c.command = j.at("command").get<std::string>();
            c.domain = j.at("domain");
            c.h = j.at("h").get<double>();
            c.K = j.at("K").get<std::string>();
            c.phi = j.at("phi").get<std::string>();
            if (j.contains("t")) c.t = j["t"].get<double>();
            if (j.contains("psi")) c.psi = j["psi"].get<std::string>();
            c.theta = j.value("theta", 0.0);
            if (j.contains("t_schedule")) c.t_schedule = j["t_schedule"].get<std::vector<double>>();
            if (j.contains("theta_schedule")) c.theta_schedule = j["theta_schedule"].get<std::vector<double>>();
            if (j.contains("inner_tol") && j["inner_tol"].is_number()) c.inner_tol = j["inner_tol"].get<double>();
            if (j.contains("outer_tol") && j["outer_tol"].is_number()) c.outer_tol = j["outer_tol"].get<double>();
        } catch (const nlohmann::json::exception& e) {
            config_error(std::string("malformed run configuration: ") + e.what());
        }
        return c;
    }
};

// Validated inputs built from a RunConfig.
struct Setup {
    GridPtr grid;
    GridFunction K;
    ScalarFn phi;
    ScalarFn psi;
    SolverOptions opt;
};

Setup build_setup(const RunConfig& c)
{
    Setup s;
    ConvexDomain D = ConvexDomain::from_json(c.domain);
    s.grid = build_grid(D, c.h);
    s.K = GridFunction::sample(s.grid, parse_field_spec(c.K));
    for (std::size_t k = 0; k < s.K.size(); ++k)
        if (!std::isfinite(s.K[k])) config_error("K is not finite on the grid");
    s.phi = parse_field_spec(c.phi);
    if (c.t && !c.psi.empty()) config_error("give either --t or --psi, not both");
    if (c.t) {
        if (!(*c.t > 0)) config_error("t must be positive");
        double t = *c.t;
        s.psi = [t](const Point&) { return t; };
    } else if (!c.psi.empty()) {
        s.psi = parse_field_spec(c.psi);
    }
    for (const auto& q : s.grid->boundary_samples()) {
        if (!std::isfinite(s.phi(q))) config_error("phi is not finite on the boundary");
        if (s.psi && !(s.psi(q) > 0)) config_error("boundary data for w must be positive");
    }
    if (c.theta < 0 || c.theta > 1) config_error("theta must lie in [0, 1]");
    s.opt = default_options(s.grid->dim());
    if (std::isfinite(c.inner_tol)) s.opt.inner_tol = c.inner_tol;
    if (std::isfinite(c.outer_tol)) s.opt.outer_tol = c.outer_tol;
    if (!(s.opt.inner_tol > 0) || !(s.opt.outer_tol > 0)) config_error("tolerances must be positive");
    return s;
}

nlohmann::json manifest(const RunConfig& c, const std::vector<std::string>& outputs)
{
    nlohmann::json m;
    m["tool"] = "abreu";
    m["version"] = kToolVersion;
    m["config"] = c.to_json();
    m["outputs"] = outputs;
    return m;
}

nlohmann::json state_residuals(const SolverState& S, const GridFunction& K)
{
    SystemResidual R = abreu_system_residual(S.u, S.w, K, S.theta);
    nlohmann::json j;
    j["theta"] = S.theta;
    j["sup_linear"] = R.sup_linear;
    j["l2_linear"] = R.l2_linear;
    j["sup_constitutive"] = R.sup_constitutive;
    j["l2_constitutive"] = R.l2_constitutive;
    j["sweeps"] = S.sweeps;
    j["newton_iterations"] = S.newton_iterations;
    j["history"] = S.residual_history;
    GridFunction Sp = abreu_primal(S.u);
    double dev = 0.0;
    for (std::size_t k = 0; k < Sp.size(); ++k)
        if (Sp.defined(k)) dev = std::max(dev, std::abs(Sp[k] - K[k]));
    j["sup_primal_curvature_error"] = dev;
    return j;
}

void write_state(const fs::path& out, const SolverState& S)
{
    write_field(out / "fields", "u", S.u);
    write_field(out / "fields", "w", S.w);
}

int do_solve(const RunConfig& c, const fs::path& out, std::ostream& os)
{
    Setup s = build_setup(c);
    if (!s.psi) config_error("solve needs --t or --psi");
    BVPProblem prob{s.grid, s.K, s.phi, s.psi, c.theta};
    SolverState S = solve_bvp(prob, s.opt);
    write_state(out, S);
    write_json(out / "residuals.json", state_residuals(S, s.K));
    write_json(out / "manifest.json", manifest(c, {"fields/u.csv", "fields/u.json", "fields/w.csv", "fields/w.json", "residuals.json"}));
    os << "converged in " << S.sweeps << " sweeps, linear residual " << S.sup_linear << ", constitutive residual "
       << S.sup_constitutive << "\n";
    return kExitOk;
}

int do_continuate(const RunConfig& c, const fs::path& out, std::ostream& os)
{
    Setup s = build_setup(c);
    nlohmann::json trace;
    const SolverState* last = nullptr;
    TTrace tt;
    ThetaTrace th;
    if (!c.t_schedule.empty()) {
        tt = t_continuation(s.grid, s.K, s.phi, c.t_schedule, s.opt);
        nlohmann::json e = nlohmann::json::array();
        for (const auto& x : tt.entries)
            e.push_back({{"t", x.t}, {"osc", x.osc}, {"grad_near_boundary", x.grad_near_boundary}, {"gradient_bound", x.gradient_bound},
                         {"det_min", x.det_min}, {"det_max", x.det_max}, {"w_boundary", x.w_boundary}, {"w_max", x.w_max},
                         {"interior_change", num(x.interior_change)}, {"sweeps", x.sweeps}, {"sup_linear", x.sup_linear},
                         {"sup_constitutive", x.sup_constitutive}});
        trace["kind"] = "t";
        trace["entries"] = e;
        trace["interior_convergence_observed"] = tt.interior_convergence_observed;
        if (!tt.interior_convergence_observed) os << "warning: interior convergence not observed\n";
        last = &tt.states.back();
    } else if (!c.theta_schedule.empty()) {
        if (!s.psi) config_error("theta continuation needs --t or --psi");
        BVPProblem prob{s.grid, s.K, s.phi, s.psi, 0.0};
        th = theta_continuation(prob, c.theta_schedule, s.opt);
        nlohmann::json e = nlohmann::json::array();
        for (const auto& x : th.entries)
            e.push_back({{"theta", x.theta}, {"sweeps", x.sweeps}, {"w_min", x.w_min}, {"w_max", x.w_max}, {"psi_min", x.psi_min},
                         {"upper_bound", x.upper_bound}, {"upper_ok", x.upper_ok}, {"lower_ok", x.lower_ok},
                         {"sup_linear", x.sup_linear}, {"sup_constitutive", x.sup_constitutive}});
        trace["kind"] = "theta";
        trace["entries"] = e;
        last = &th.states.back();
    } else {
        config_error("continuate needs --t-schedule or --theta-schedule");
    }
    write_state(out, *last);
    write_json(out / "trace.json", trace);
    write_json(out / "residuals.json", state_residuals(*last, s.K));
    write_json(out / "manifest.json",
               manifest(c, {"fields/u.csv", "fields/u.json", "fields/w.csv", "fields/w.json", "trace.json", "residuals.json"}));
    os << "continuation finished with " << trace["entries"].size() << " entries\n";
    return kExitOk;
}

struct LoadedRun {
    RunConfig config;
    Setup setup;
    GridFunction u;
    nlohmann::json trace;
};

LoadedRun load_run(const fs::path& dir)
{
    LoadedRun r;
    nlohmann::json m = read_json(dir / "manifest.json");
    if (!m.contains("config")) config_error("manifest has no config");
    r.config = RunConfig::from_json(m["config"]);
    r.setup = build_setup(r.config);
    r.u = GridFunction(r.setup.grid, read_field_values(dir / "fields" / "u.csv", r.setup.grid->size()), r.setup.phi);
    if (fs::exists(dir / "trace.json")) r.trace = read_json(dir / "trace.json");
    return r;
}

std::size_t min_node(const GridFunction& u)
{
    std::size_t p = 0;
    for (std::size_t k = 1; k < u.size(); ++k)
        if (u[k] < u[p]) p = k;
    return p;
}

const std::map<std::string, std::string>& check_aliases()
{
    static const std::map<std::string, std::string> m{
        {"2.1", "det-lower"}, {"2.2", "det-upper-section"}, {"2.3", "weighted-det"}, {"2.3a", "weighted-det-2d"},
        {"2.7", "boundary-det"}, {"3.5", "cone-gradient"}, {"d4", "osc-bound"}};
    return m;
}

struct VerifyParams {
    double C = std::numeric_limits<double>::quiet_NaN();
    double b = std::numeric_limits<double>::infinity();
    double d = 1.0;
    double alpha = 0.1;
    double r = std::numeric_limits<double>::quiet_NaN();
};

EstimateReport run_check(const std::string& name, const LoadedRun& run, const VerifyParams& vp)
{
    const GridFunction& u = run.u;
    auto normalized = [&](double& C) {
        std::size_t p = min_node(u);
        GridFunction v = normalize_at(u, p);
        if (!std::isfinite(C)) {
            double m = std::numeric_limits<double>::infinity();
            for (const auto& q : u.grid().boundary_samples()) m = std::min(m, v.trace_at(q));
            C = 0.5 * m;
        }
        return std::make_pair(v, p);
    };
    if (name == "det-lower") return check_det_lower(u, run.setup.K);
    if (name == "det-upper-section") {
        double C = vp.C;
        auto [v, p] = normalized(C);
        return check_det_upper_section(v, p, C, vp.b);
    }
    if (name == "weighted-det") {
        double C = vp.C;
        auto [v, p] = normalized(C);
        return weighted_det_functional(v, p, C, vp.d);
    }
    if (name == "weighted-det-2d") {
        double r = std::isfinite(vp.r) ? vp.r : 0.5 * u.grid().domain().signed_distance(Point::Zero());
        return weighted_det_2d(u, r, vp.d);
    }
    if (name == "boundary-det") return boundary_det_lower(u, vp.alpha);
    if (name == "cone-gradient") {
        double t = run.config.t ? *run.config.t : (run.config.t_schedule.empty() ? 0.0 : run.config.t_schedule.back());
        if (!(t > 0)) {
            EstimateReport R;
            R.check = name;
            R.hypotheses = "unmet: boundary value of w is not a constant t";
            return R;
        }
        return cone_gradient_bound(u, t);
    }
    if (name == "osc-bound") {
        TTrace T;
        if (run.trace.is_object() && run.trace.value("kind", "") == "t")
            for (const auto& e : run.trace["entries"]) {
                TEntry x;
                x.t = e["t"].get<double>();
                x.osc = e["osc"].get<double>();
                T.entries.push_back(x);
            }
        return uniform_osc_bound(T);
    }
    config_error("unknown check '" + name + "'");
}

void print_reports(std::ostream& os, const std::vector<EstimateReport>& reps)
{
    os << std::left << std::setw(22) << "check" << std::setw(16) << "verdict" << std::setw(16) << "observed" << "bound\n";
    for (const auto& r : reps) {
        os << std::left << std::setw(22) << r.check << std::setw(16) << verdict_name(r.verdict) << std::setw(16)
           << std::setprecision(6) << r.observed << r.bound;
        if (r.hypotheses != "satisfied") os << "  (" << r.hypotheses << ")";
        os << "\n";
    }
}

int do_verify(const fs::path& dir, const std::string& checks, const VerifyParams& vp, std::ostream& os)
{
    std::vector<std::string> names;
    std::stringstream ss(checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto it = check_aliases().find(item);
        names.push_back(it == check_aliases().end() ? item : it->second);
    }
    static const std::vector<std::string> known{"det-lower", "det-upper-section", "weighted-det", "weighted-det-2d",
                                                "boundary-det", "cone-gradient", "osc-bound"};
    for (const auto& n : names)
        if (std::find(known.begin(), known.end(), n) == known.end()) config_error("unknown check '" + n + "'");
    LoadedRun run = load_run(dir);
    std::vector<EstimateReport> reps;
    for (const auto& n : names) reps.push_back(run_check(n, run, vp));
    nlohmann::json j = nlohmann::json::array();
    bool fail = false;
    for (const auto& r : reps) {
        j.push_back(r.to_json());
        fail = fail || r.verdict == Verdict::Fail;
    }
    write_json(dir / "estimates.json", {{"checks", j}});
    print_reports(os, reps);
    return fail ? kExitVerification : kExitOk;
}

int do_legendre(const fs::path& dir, double dual_h, int refine, std::ostream& os)
{
    LoadedRun run = load_run(dir);
    LegendreOptions o;
    o.dual_h = dual_h;
    o.refine = refine;
    LegendrePair P = legendre_transform(run.u, o);
    write_dual_field(dir / "fields", "f", P, P.f);
    std::size_t valid = std::count(P.valid.begin(), P.valid.end(), 1);
    // Young's inequality u(xi) + f(x) >= <x, xi> at the recorded maximizers.
    double slack = std::numeric_limits<double>::infinity();
    SampleSet S = primal_samples(run.u);
    for (std::size_t l = 0; l < P.dual.size(); l += std::max<std::size_t>(1, P.dual.size() / 200))
        for (std::size_t s = 0; s < S.pts.size(); ++s)
            slack = std::min(slack, S.vals[s] + P.f[l] - P.dual.node(l).dot(S.pts[s] - P.base));
    write_json(dir / "legendre.json", {{"dual_h", dual_h}, {"refine", refine}, {"nodes", P.dual.size()}, {"valid", valid},
                                       {"young_min_slack", slack}});
    os << "dual nodes " << P.dual.size() << ", valid " << valid << "\n";
    return kExitOk;
}

int do_metric(const fs::path& dir, double dual_h, int refine, std::ostream& os)
{
    LoadedRun run = load_run(dir);
    LegendreOptions o;
    o.dual_h = dual_h;
    o.refine = refine;
    LegendrePair P = legendre_transform(run.u, o);
    KahlerMetric M = kahler_metric(P);
    double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin, emin = cmin;
    for (std::size_t l = 0; l < P.dual.size(); ++l) {
        if (M.curvature.defined[l]) {
            cmin = std::min(cmin, M.curvature.values[l]);
            cmax = std::max(cmax, M.curvature.values[l]);
        }
        if (std::isfinite(M.min_eigenvalue[l])) emin = std::min(emin, M.min_eigenvalue[l]);
    }
    write_dual_field(dir / "fields", "dual_curvature", P, M.curvature.values);
    write_json(dir / "metric.json", {{"dual_h", dual_h}, {"refine", refine}, {"curvature_nodes", M.curvature.defined_count()},
                                     {"curvature_min", num(cmin)}, {"curvature_max", num(cmax)}, {"metric_min_eigenvalue", num(emin)},
                                     {"growth", M.growth}, {"growth_monotone_fraction", M.growth_monotone_fraction}});
    os << "curvature defined at " << M.curvature.defined_count() << " dual nodes, range [" << cmin << ", " << cmax << "]\n";
    return kExitOk;
}

int do_selftest(std::ostream& os)
{
    std::vector<std::pair<std::string, bool>> rows;
    rows.emplace_back("d1 constant", std::abs(d1_constant(2.0, 2.0, 1) - 1.0 / 32.0) < 1e-15);
    rows.emplace_back("principal minors", std::abs(principal_minor_direct({1.0, 1.0}, 0.1) - 0.15) < 1e-12 &&
                                              std::abs(principal_minor_closed_form({1.0, 1.0}, 0.1) - 0.15) < 1e-12);
    rows.emplace_back("square barrier", std::abs(polytope_barrier_value(ConvexDomain::unit_square(), Point(0.5, 0.5), 0.1) +
                                                 std::pow(1.0 / 16.0, 0.1)) < 1e-12);
    bool solve_ok = false;
    try {
        GridPtr g = build_grid(ConvexDomain::interval(-1, 1), 0.01);
        const double t = 0.1, a = std::sqrt(1 + t);
        auto exact = [a](const Point& p) {
            double x = p.x();
            return ((a + x) * std::log(a + x) + (a - x) * std::log(a - x)) / (2 * a);
        };
        BVPProblem prob{g, GridFunction::constant(g, 2.0), exact, [t](const Point&) { return t; }, 0.0};
        SolverState S = solve_bvp(prob, default_options(1));
        double err = 0.0;
        for (std::size_t k = 0; k < g->size(); ++k) err = std::max(err, std::abs(S.u[k] - exact(g->position(k))));
        solve_ok = err < 1e-3;
    } catch (const Error&) {
    }
    rows.emplace_back("1-D solve", solve_ok);
    bool all = true;
    for (const auto& [name, ok] : rows) {
        os << (ok ? "PASS " : "FAIL ") << name << "\n";
        all = all && ok;
    }
    return all ? kExitOk : kExitVerification;
}

int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Config:
    case ErrorKind::InvalidArgument:
    case ErrorKind::OutOfRange: return kExitConfig;
    default: return kExitSolver;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Abreu equation solver and estimate verifier", "abreu"};
    app.set_help_flag("--help", "print help");
    app.set_version_flag("--version", std::string("abreu ") + kToolVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::string domain_path, out_dir = "run", from_manifest, t_sched, theta_sched;
    std::optional<double> t;
    auto add_problem = [&](CLI::App* s) {
        s->add_option("--domain", domain_path, "domain JSON file");
        s->add_option("--h", cfg.h, "grid spacing");
        s->add_option("--K", cfg.K, "K as const:<c> or expr:<expression>");
        s->add_option("--phi", cfg.phi, "boundary data for u");
        s->add_option("--t", t, "constant boundary value of w");
        s->add_option("--psi", cfg.psi, "boundary data for w");
        s->add_option("--theta", cfg.theta, "perturbation parameter in [0, 1]");
        s->add_option("--tol-inner", cfg.inner_tol, "Newton tolerance");
        s->add_option("--tol-outer", cfg.outer_tol, "outer tolerance");
        s->add_option("--out", out_dir, "output directory");
        s->add_option("--from-manifest", from_manifest, "rerun the configuration stored in a manifest");
    };
    CLI::App* solve = app.add_subcommand("solve", "solve one boundary value problem");
    add_problem(solve);
    CLI::App* cont = app.add_subcommand("continuate", "solve along a t or theta schedule");
    add_problem(cont);
    cont->add_option("--t-schedule", t_sched, "comma separated decreasing t values");
    cont->add_option("--theta-schedule", theta_sched, "comma separated decreasing theta values");

    std::string run_dir, checks;
    VerifyParams vp;
    CLI::App* verify = app.add_subcommand("verify", "check estimates on a stored run");
    verify->add_option("--run", run_dir, "run directory")->required();
    verify->add_option("--checks,--lemmas", checks,
                       "det-lower, det-upper-section, weighted-det, weighted-det-2d, boundary-det, cone-gradient, osc-bound")
        ->required();
    verify->add_option("--C", vp.C, "section height");
    verify->add_option("--b", vp.b, "gradient bound hypothesis");
    verify->add_option("--d", vp.d, "shift in the weighted functionals");
    verify->add_option("--alpha", vp.alpha, "boundary exponent");
    verify->add_option("--r", vp.r, "disk radius");

    double dual_h = 0.05;
    int refine = 0, metric_refine = 2;
    CLI::App* leg = app.add_subcommand("legendre", "discrete Legendre transform of a stored run");
    leg->add_option("--run", run_dir, "run directory")->required();
    leg->add_option("--dual-h", dual_h, "dual lattice spacing");
    leg->add_option("--refine", refine, "interpolation half width for polishing maximizers (0 = off)");
    CLI::App* met = app.add_subcommand("metric", "metric and curvature on the dual side");
    met->add_option("--run", run_dir, "run directory")->required();
    met->add_option("--dual-h", dual_h, "dual lattice spacing");
    met->add_option("--refine", metric_refine, "interpolation half width (0 = off)")->capture_default_str();
    CLI::App* self = app.add_subcommand("selftest", "quick internal consistency checks");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "abreu " << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        auto finish_config = [&](const std::string& command) {
            if (!from_manifest.empty()) {
                nlohmann::json m = read_json(from_manifest);
                if (!m.contains("config")) config_error("manifest has no config");
                cfg = RunConfig::from_json(m["config"]);
                if (cfg.command != command) config_error("manifest was written by '" + cfg.command + "'");
                return;
            }
            cfg.command = command;
            if (domain_path.empty()) config_error("--domain is required");
            cfg.domain = ConvexDomain::from_file(domain_path).to_json();
            if (!(cfg.h > 0)) config_error("--h must be positive");
            cfg.t = t;
            if (!t_sched.empty()) cfg.t_schedule = parse_list(t_sched);
            if (!theta_sched.empty()) cfg.theta_schedule = parse_list(theta_sched);
        };
        if (*solve) {
            finish_config("solve");
            build_setup(cfg);
            return do_solve(cfg, out_dir, out);
        }
        if (*cont) {
            finish_config("continuate");
            build_setup(cfg);
            return do_continuate(cfg, out_dir, out);
        }
        if (*verify) return do_verify(run_dir, checks, vp, out);
        if (*leg) return do_legendre(run_dir, dual_h, refine, out);
        if (*met) return do_metric(run_dir, dual_h, metric_refine, out);
        if (*self) return do_selftest(out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitConfig;
}

}  // namespace abreu
