// Command-line front end: evaluation, forward/inverse transforms, and the
// verification suites, with CSV/JSON input and output.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sector_rkhs/bergman.hpp"
#include "sector_rkhs/csv.hpp"
#include "sector_rkhs/diagnostics.hpp"
#include "sector_rkhs/heat_kernel.hpp"
#include "sector_rkhs/inversion.hpp"
#include "sector_rkhs/pde_oracle.hpp"
#include "sector_rkhs/specfun.hpp"
#include "sector_rkhs/transform.hpp"
#include "sector_rkhs/verify.hpp"

namespace rk = sector_rkhs;
namespace sf = rk::specfun;
namespace tr = rk::transform;
namespace bg = rk::bergman;
namespace iv = rk::inversion;
using rk::cplx;
using json = nlohmann::ordered_json;

namespace {

// exit-code contract
constexpr int kOk = 0;
constexpr int kMalformed = 2;
constexpr int kDomain = 3;
constexpr int kTolerance = 4;
constexpr int kNoConvergence = 5;

struct ExitWith {
    int code;
    std::string message;
};

std::string out_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

tr::BoundarySignal signal_from_csv(const std::string& path) {
    auto data = rk::io::read_signal_csv(path);
    const double t_end = data.tau.back();
    return tr::BoundarySignal::from_samples(t_end, data.tau, data.g,
                                            tr::BoundarySignal::Smoothness::c1);
}

tr::BoundarySignal builtin_signal(const std::string& name, double t) {
    if (name == "one") return tr::BoundarySignal::constant(t, 1.0);
    if (name == "linear") return tr::BoundarySignal::monomial(t, 1);
    if (name == "quadratic") return tr::BoundarySignal::monomial(t, 2);
    throw ExitWith{kMalformed, "unknown builtin signal '" + name + "'"};
}

// --mesh r_min,R,delta,order
rk::inversion::SectorMesh mesh_from_spec(const rk::AlphaParam& a,
                                         const std::string& spec) {
    if (spec.empty()) return bg::inner_product_mesh(a);
    std::vector<double> vals;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            vals.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ExitWith{kMalformed, "bad --mesh field '" + tok + "'"};
        }
    }
    if (vals.size() != 4)
        throw ExitWith{kMalformed, "--mesh expects r_min,R,delta,order"};
    rk::inversion::MeshParams p;
    p.r_min = vals[0];
    p.r_max = vals[1];
    p.delta = vals[2];
    p.order = static_cast<int>(vals[3]);
    return rk::inversion::build_sector_mesh(a, p);
}

// --points syntax: comma-separated tokens, each `re`, `re:im`,
// `lin:a:b:n` or `log:a:b:n` (real grids)
std::vector<cplx> parse_points(const std::string& spec) {
    std::vector<cplx> pts;
    std::stringstream ss(spec);
    std::string tok;
    auto parse_num = [](const std::string& s) {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw ExitWith{kMalformed, "bad number '" + s + "'"};
        return v;
    };
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::vector<std::string> parts;
        std::stringstream ts(tok);
        std::string p;
        while (std::getline(ts, p, ':')) parts.push_back(p);
        try {
            if (parts.size() == 1) {
                pts.emplace_back(parse_num(parts[0]), 0.0);
            } else if (parts.size() == 2) {
                pts.emplace_back(parse_num(parts[0]), parse_num(parts[1]));
            } else if (parts.size() == 4 && (parts[0] == "lin" || parts[0] == "log")) {
                const double a = parse_num(parts[1]), b = parse_num(parts[2]);
                const int n = static_cast<int>(parse_num(parts[3]));
                if (n < 1 || (parts[0] == "log" && (a <= 0 || b <= 0)))
                    throw ExitWith{kMalformed, "bad grid spec '" + tok + "'"};
                for (int i = 0; i < n; ++i) {
                    const double f = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
                    pts.emplace_back(parts[0] == "lin"
                                         ? a + (b - a) * f
                                         : a * std::pow(b / a, f),
                                     0.0);
                }
            } else {
                throw ExitWith{kMalformed, "bad point token '" + tok + "'"};
            }
        } catch (const std::invalid_argument&) {
            throw ExitWith{kMalformed, "bad point token '" + tok + "'"};
        }
    }
    if (pts.empty()) throw ExitWith{kMalformed, "--points produced no points"};
    return pts;
}

int report_exit(const rk::io::DiagnosticsReport& rep) {
    for (const auto& c : rep.checks)
        std::printf("[%s] %s  value=%.6g target=%.6g tol=%.3g\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.target,
                    c.tolerance);
    for (const auto& w : rep.warnings) std::printf("warning: %s\n", w.c_str());
    return rep.all_pass() ? kOk : kTolerance;
}

void write_report(const rk::io::DiagnosticsReport& rep, const std::string& dir,
                  const std::string& name) {
    rk::io::write_file_atomic(out_path(dir, name), rep.to_json().dump(2) + "\n");
}

// ---------------------------------------------------------------------------

int cmd_specfun_eval(const std::string& fn, const std::vector<double>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw ExitWith{kMalformed, fn + " needs " + std::to_string(n) + " args"};
    };
    json j;
    j["fn"] = fn;
    j["args"] = args;
    if (fn == "gamma") {
        need(1);
        j["value"] = sf::gamma_fn(args[0]);
    } else if (fn == "log-gamma") {
        need(1);
        j["value"] = sf::log_gamma(args[0]);
    } else if (fn == "beta") {
        need(2);
        j["value"] = sf::beta_fn(args[0], args[1]);
    } else if (fn == "reg-upper-gamma") {
        need(2);
        j["value"] = sf::reg_upper_gamma(args[0], args[1]);
    } else if (fn == "erfc-alpha") {
        need(2);
        j["value"] = sf::erfc_alpha(args[0], args[1]);
    } else if (fn == "erfc-ode-residual") {
        need(3);
        j["value"] = sf::erfc_alpha_ode_residual(args[0], args[1], args[2]);
    } else if (fn == "bessel-k") {
        need(2);
        j["value"] = sf::bessel_k(args[0], args[1]);
    } else if (fn == "bessel-k-rep") {
        need(2);
        auto r = sf::bessel_k_rep_checked(args[0], args[1]);
        j["value"] = r.value;
        j["err_est"] = r.err_est;
        j["converged"] = r.converged;
    } else if (fn == "cpow") {
        need(3);
        const cplx v = sf::cpow_principal(cplx(args[0], args[1]), args[2]);
        j["value_re"] = v.real();
        j["value_im"] = v.imag();
    } else {
        throw ExitWith{kMalformed, "unknown function '" + fn + "'"};
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_kernel_eval(double alpha, double t, const std::string& points) {
    rk::AlphaParam a(alpha);
    json rows = json::array();
    for (cplx z : parse_points(points)) {
        json r;
        r["z_re"] = z.real();
        r["z_im"] = z.imag();
        const cplx k = rk::kernel_k(a, z, t);
        r["K_re"] = k.real();
        r["K_im"] = k.imag();
        if (z.imag() == 0.0 && z.real() > 0.0)
            r["W"] = rk::profile_w(a, z.real(), t);
        else
            r["bound_margin"] = rk::kernel_bound_margin(a, rk::SectorPoint(a, z), t);
        rows.push_back(r);
    }
    json j;
    j["alpha"] = alpha;
    j["t"] = t;
    j["values"] = rows;
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_forward(const std::string& gpath, double alpha, double t,
                const std::string& points, const std::string& op,
                const std::string& outdir, const std::string& format, double tol) {
    rk::AlphaParam a(alpha);
    auto data = rk::io::read_signal_csv(gpath);
    auto g = tr::BoundarySignal::from_samples(data.tau.back(), data.tau, data.g,
                                              tr::BoundarySignal::Smoothness::c1);
    if (t <= 0.0) t = g.t_end();
    auto pts = parse_points(points);
    tr::QuadratureControl qc;
    if (tol > 0) qc.rel_tol = tol;

    // interpolation uncertainty, reported separately from quadrature error:
    // spread between the monotone cubic and the piecewise-linear reading of
    // the same samples, probed at the interval midpoints
    double interp_spread = 0.0, max_gap = 0.0;
    for (std::size_t i = 0; i + 1 < data.tau.size(); ++i) {
        const double mid = 0.5 * (data.tau[i] + data.tau[i + 1]);
        const cplx linear = 0.5 * (data.g[i] + data.g[i + 1]);
        interp_spread = std::max(interp_spread, std::abs(g(mid) - linear));
        max_gap = std::max(max_gap, data.tau[i + 1] - data.tau[i]);
    }

    tr::QuadratureControl qc_check = qc;
    qc_check.rel_tol = 0.1 * qc.rel_tol;

    std::string csv = "x_or_z_re,z_im,u_re,u_im\n";
    json rows = json::array();
    bool tol_met = true;
    for (cplx z : pts) {
        const cplx u = (op == "T") ? tr::forward_t(a, t, g, z, qc)
                                   : tr::forward_l(a, t, g, z, qc);
        // a-posteriori estimate against a tighter-tolerance evaluation
        const cplx u2 = (op == "T") ? tr::forward_t(a, t, g, z, qc_check)
                                    : tr::forward_l(a, t, g, z, qc_check);
        const double est = std::abs(u - u2);
        if (est > qc.rel_tol * std::max(std::abs(u2), 1e-300) + 1e-15) tol_met = false;
        csv += rk::io::format_double(z.real()) + "," + rk::io::format_double(z.imag()) +
               "," + rk::io::format_double(u.real()) + "," +
               rk::io::format_double(u.imag()) + "\n";
        json r;
        r["z_re"] = z.real();
        r["z_im"] = z.imag();
        r["u_re"] = u.real();
        r["u_im"] = u.imag();
        r["err_est"] = est;
        rows.push_back(r);
    }
    json side;
    side["command"] = "forward";
    side["alpha"] = alpha;
    side["t"] = t;
    side["operator"] = op;
    side["quad_rel_tol"] = qc.rel_tol;
    side["input"] = gpath;
    side["interpolation"] = {{"max_sample_gap", max_gap},
                             {"cubic_vs_linear_spread", interp_spread}};
    side["values"] = rows;
    side["tolerance_met"] = tol_met;
    if (format == "csv" || format == "both")
        rk::io::write_file_atomic(out_path(outdir, "forward.csv"), csv);
    if (format == "json" || format == "both")
        rk::io::write_file_atomic(out_path(outdir, "forward.json"), side.dump(2) + "\n");
    std::printf("forward: %zu points written to %s\n", pts.size(), outdir.c_str());
    if (!tol_met) {
        std::fprintf(stderr, "forward: quadrature tolerance not met\n");
        return kTolerance;
    }
    return kOk;
}

int cmd_inverse(const std::string& from_g, const std::string& builtin_F, double w_re,
                double w_im, double alpha, double t, std::vector<int> Ns,
                int tau_points, double tau_max_frac, const std::string& outdir) {
    rk::AlphaParam a(alpha);
    if (Ns.empty()) Ns = {4, 8, 16};
    if (tau_points < 2) throw ExitWith{kMalformed, "--tau-points must be >= 2"};
    if (tau_max_frac < 0.0 || tau_max_frac > 1.0)
        throw ExitWith{kMalformed, "--tau-max must lie in (0, 1]"};

    std::optional<tr::BoundarySignal> g;
    std::optional<bg::GSpaceElement> F;
    std::string target_desc;
    if (!from_g.empty()) {
        g = signal_from_csv(from_g);
        if (t <= 0.0) t = g->t_end();
        F = bg::GSpaceElement::from_signal(a, t, *g);
        target_desc = "roundtrip against input samples";
    } else {
        if (t <= 0.0) t = 1.0;
        if (builtin_F == "L-const") {
            g = tr::BoundarySignal::constant(t, 1.0);
            F = bg::GSpaceElement::from_signal(a, t, *g);
            target_desc = "g = 1";
        } else if (builtin_F == "L-linear") {
            g = tr::BoundarySignal::monomial(t, 1);
            F = bg::GSpaceElement::from_signal(a, t, *g);
            target_desc = "g = tau";
        } else if (builtin_F == "kernel-section") {
            const cplx w(w_re, w_im);
            F = bg::GSpaceElement::kernel_section(a, t, w);
            target_desc = "preimage conj(K(w, t - tau))";
        } else {
            throw ExitWith{kMalformed, "unknown builtin F '" + builtin_F + "'"};
        }
    }

    std::vector<double> grid;
    if (tau_max_frac > 0.0) {
        // explicit grid up to tau_max_frac * t; reconstruction refuses points
        // at or too close to t (the limit is L2, not pointwise)
        for (int k = 1; k <= tau_points; ++k)
            grid.push_back(t * tau_max_frac * k / tau_points);
    } else {
        grid = iv::interior_tau_grid(t, tau_points);
    }
    iv::InverseOptions opt;
    opt.tau_max_hint = grid.back();
    const cplx wsec(w_re, w_im);

    json table = json::array();
    std::string csv = "tau,ghat_re,ghat_im,target_re,target_im\n";
    std::vector<double> errs;
    for (int N : Ns) {
        iv::InverseOperator op(a, t, *F, N, opt);
        double err2 = 0.0, nrm2 = 0.0;
        std::vector<cplx> rec(grid.size()), tgt(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            rec[i] = op.reconstruct(grid[i]);
            if (g)
                tgt[i] = (*g)(grid[i]);
            else
                tgt[i] = std::conj(rk::kernel_k(a, wsec, t - grid[i]));
        }
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double w0 = std::pow(grid[i] / t, alpha);
            const double w1 = std::pow(grid[i + 1] / t, alpha);
            err2 += 0.5 * (std::norm(rec[i] - tgt[i]) * w0 +
                           std::norm(rec[i + 1] - tgt[i + 1]) * w1) *
                    (grid[i + 1] - grid[i]) / t;
            nrm2 += 0.5 * (std::norm(tgt[i]) * w0 + std::norm(tgt[i + 1]) * w1) *
                    (grid[i + 1] - grid[i]) / t;
        }
        const double rel = std::sqrt(err2 / std::max(nrm2, 1e-300));
        errs.push_back(rel);
        json row;
        row["N"] = N;
        row["nodes"] = op.mesh().size();
        row["weighted_l2_rel_err"] = rel;
        table.push_back(row);
        if (N == Ns.back()) {
            for (std::size_t i = 0; i < grid.size(); ++i)
                csv += rk::io::format_double(grid[i]) + "," +
                       rk::io::format_double(rec[i].real()) + "," +
                       rk::io::format_double(rec[i].imag()) + "," +
                       rk::io::format_double(tgt[i].real()) + "," +
                       rk::io::format_double(tgt[i].imag()) + "\n";
        }
    }
    json j;
    j["command"] = "inverse";
    j["alpha"] = alpha;
    j["t"] = t;
    j["target"] = target_desc;
    j["error_table"] = table;
    rk::io::write_file_atomic(out_path(outdir, "reconstruction.csv"), csv);
    rk::io::write_file_atomic(out_path(outdir, "inverse.json"), j.dump(2) + "\n");
    std::printf("inverse: error table over N = ");
    for (double e : errs) std::printf("%.4g ", e);
    std::printf("\n");
    for (std::size_t i = 0; i + 1 < errs.size(); ++i)
        if (errs[i + 1] >= errs[i]) {
            std::fprintf(stderr, "inverse: error table not decreasing in N\n");
            return kNoConvergence;
        }
    return kOk;
}

int cmd_isometry(double alpha, double t, const std::string& gname, double tol,
                 const std::string& mesh_spec) {
    rk::AlphaParam a(alpha);
    auto g = builtin_signal(gname, t);
    auto mesh = mesh_from_spec(a, mesh_spec);
    auto F = bg::GSpaceElement::from_signal(a, t, g);
    const double inner = bg::gspace_inner(a, t, F, F, mesh).real();
    const double target = g.weighted_norm_sq(alpha);
    rk::io::DiagnosticsReport rep;
    rep.command = "isometry-check";
    rep.params["alpha"] = alpha;
    rep.params["t"] = t;
    rep.params["g"] = gname;
    rep.params["mesh_nodes"] = mesh.size();
    rep.add(rk::io::CheckRecord::relative("isometry.image_norm_vs_data_norm", inner,
                                          target, tol));
    return report_exit(rep);
}

int cmd_reproduce(double alpha, double t, int npoints, std::uint64_t seed, double tol,
                  const std::string& mesh_spec) {
    rk::AlphaParam a(alpha);
    auto mesh = mesh_from_spec(a, mesh_spec);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    rk::io::DiagnosticsReport rep;
    rep.command = "reproduce-check";
    rep.params["alpha"] = alpha;
    rep.params["t"] = t;
    rep.params["seed"] = seed;
    auto F = bg::GSpaceElement::from_signal(a, t, tr::BoundarySignal::monomial(t, 1));
    auto fc = bg::cache_scaled(F, mesh);
    for (int i = 0; i < npoints; ++i) {
        const cplx w = std::polar(std::pow(2.0, 1.2 * ur(rng)),
                                  0.6 * a.half_angle() * ur(rng));
        auto Kw = bg::GSpaceElement::kernel_section(a, t, w);
        const cplx lhs = bg::gspace_inner_cached(a, fc, Kw, mesh);
        const cplx rhs = F.eval(w);
        rep.add(rk::io::CheckRecord::upper_bound(
            "reproduce.w=(" + rk::io::format_double(w.real()) + "," +
                rk::io::format_double(w.imag()) + ")",
            std::abs(lhs - rhs) / std::abs(rhs), tol));
    }
    return report_exit(rep);
}

int cmd_laplace(double alpha, double x, double s, double tol, bool grid) {
    rk::AlphaParam a(alpha);
    if (!grid) return report_exit(tr::laplace_check(a, x, s, tol));
    rk::io::DiagnosticsReport rep;
    rep.command = "laplace-check --grid";
    for (double xx : {0.5, 1.0, 2.0})
        for (double ss : {0.5, 1.0, 2.0}) {
            auto r = tr::laplace_check(a, xx, ss, tol);
            auto c = r.checks.at(0);
            c.name = "laplace.x=" + rk::io::format_double(xx) +
                     ".s=" + rk::io::format_double(ss);
            rep.add(c);
        }
    return report_exit(rep);
}

int cmd_pde_compare(double alpha, double T, const std::string& gname, int nodes,
                    double eps, double tol, const std::string& outdir) {
    rk::AlphaParam a(alpha);
    auto g = builtin_signal(gname, T);
    const double xmax = rk::pde::choose_x_max(a, T);
    auto grid = rk::pde::FDGrid::graded(eps, xmax, nodes, T, nodes);
    std::vector<std::string> warnings;
    auto fd = rk::pde::solve_fd(a, T, g, grid, &warnings);
    auto rep = rk::pde::compare_fields(
        fd, [&](double x) { return tr::forward_t(a, T, g, x).real(); },
        {0.05, 0.5 * xmax}, tol);
    rep.params["alpha"] = alpha;
    rep.params["T"] = T;
    rep.params["g"] = gname;
    for (auto& w : warnings) rep.warn(w);
    // field at final time as CSV (x, t, u)
    std::string csv = "x,t,u\n";
    for (std::size_t i = 0; i < fd.x.size(); ++i)
        csv += rk::io::format_double(fd.x[i]) + "," + rk::io::format_double(T) + "," +
               rk::io::format_double(fd.u.back()[i]) + "\n";
    rk::io::write_file_atomic(out_path(outdir, "pde_field.csv"), csv);
    write_report(rep, outdir, "pde_compare.json");
    return report_exit(rep);
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double t,
               const std::string& outdir) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = rk::verify::suite_names();
    } else {
        const auto known = rk::verify::suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw ExitWith{kMalformed, "invalid suite name '" + suite + "'"};
        names = {suite};
    }
    rk::verify::SuiteConfig cfg;
    cfg.seed = seed;
    if (t > 0.0) cfg.t = t;
    bool all_ok = true;
    for (const auto& name : names) {
        auto rep = rk::verify::run_suite(name, cfg);
        write_report(rep, outdir, "verify_" + name + ".json");
        int pass = 0;
        for (const auto& c : rep.checks) pass += c.pass ? 1 : 0;
        std::printf("suite %-10s %s  (%d/%zu checks, %.1f s)\n", name.c_str(),
                    rep.all_pass() ? "PASS" : "FAIL", pass, rep.checks.size(),
                    rep.wall_ms / 1000.0);
        for (const auto& c : rep.checks)
            if (!c.pass)
                std::printf("  FAIL %s value=%.6g target=%.6g tol=%.3g\n",
                            c.name.c_str(), c.value, c.target, c.tolerance);
        all_ok = all_ok && rep.all_pass();
    }
    return all_ok ? kOk : kTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degenerate parabolic half-line transform, sector RKHS machinery "
                 "and quadrature inverse"};
    app.require_subcommand(1);

    double alpha = 1.0, t = 0.0, tol = 0.0, x = 1.0, s = 1.0, T = 1.0;
    double w_re = 1.0, w_im = 0.1, eps = 1e-3;
    std::string fn, points = "1", gpath, op = "L", outdir = "out", format = "both";
    std::string builtin_F, gname = "one", suite = "all", mesh_spec;
    std::vector<double> args;
    std::vector<int> Ns;
    int tau_points = 21, npoints = 5, nodes = 400;
    double tau_max_frac = 0.0;
    std::uint64_t seed = 20250808;
    bool grid_flag = false;

    auto* sp = app.add_subcommand("specfun-eval", "evaluate a special function");
    sp->add_option("--fn", fn, "function name")->required();
    sp->add_option("--args", args, "numeric arguments")->required()->delimiter(',');

    auto* ke = app.add_subcommand("kernel-eval", "evaluate the kernel and profile");
    ke->add_option("--alpha", alpha)->required();
    ke->add_option("--t", t)->required();
    ke->add_option("--points", points, "re[:im] tokens or lin:/log: grids");

    auto* fw = app.add_subcommand("forward", "apply the forward transform to CSV data");
    fw->add_option("--g", gpath, "CSV file tau,g_re[,g_im]")->required();
    fw->add_option("--alpha", alpha)->required();
    fw->add_option("--t", t, "transform time (default: last sample)");
    fw->add_option("--points", points)->required();
    fw->add_option("--op", op, "T or L");
    fw->add_option("--tol", tol, "quadrature relative tolerance");
    fw->add_option("--out", outdir);
    fw->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "both"}));

    auto* inv = app.add_subcommand("inverse", "reconstruct boundary data from F");
    inv->add_option("--from-g", gpath, "CSV data (roundtrip mode)");
    inv->add_option("--builtin-F", builtin_F, "L-const | L-linear | kernel-section");
    inv->add_option("--w", w_re, "kernel-section w (real part)");
    inv->add_option("--w-im", w_im, "kernel-section w (imag part)");
    inv->add_option("--alpha", alpha)->required();
    inv->add_option("--t", t);
    inv->add_option("--N", Ns, "exhaustion indices")->delimiter(',');
    inv->add_option("--tau-points", tau_points);
    inv->add_option("--tau-max", tau_max_frac,
                    "extend the tau grid to this fraction of t (default interior)");
    inv->add_option("--out", outdir);

    auto* iso = app.add_subcommand("isometry-check", "image norm vs data norm");
    iso->add_option("--alpha", alpha)->required();
    iso->add_option("--t", t)->required();
    iso->add_option("--g", gname, "one | linear | quadratic");
    iso->add_option("--tol", tol);
    iso->add_option("--mesh", mesh_spec, "r_min,R,delta,order");

    auto* rp = app.add_subcommand("reproduce-check", "reproducing property");
    rp->add_option("--alpha", alpha)->required();
    rp->add_option("--t", t)->required();
    rp->add_option("--points", npoints);
    rp->add_option("--seed", seed);
    rp->add_option("--tol", tol);
    rp->add_option("--mesh", mesh_spec, "r_min,R,delta,order");

    auto* lp = app.add_subcommand("laplace-check", "Laplace-Bessel identity");
    lp->add_option("--alpha", alpha)->required();
    lp->add_option("--x", x);
    lp->add_option("--s", s);
    lp->add_option("--tol", tol);
    lp->add_flag("--grid", grid_flag, "run the 3x3 (x,s) grid");

    auto* pc = app.add_subcommand("pde-compare", "analytic route vs Crank-Nicolson");
    pc->add_option("--alpha", alpha)->required();
    pc->add_option("--T", T)->required();
    pc->add_option("--g", gname, "one | linear | quadratic");
    pc->add_option("--nodes", nodes);
    pc->add_option("--eps", eps);
    pc->add_option("--tol", tol);
    pc->add_option("--out", outdir);

    auto* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("--suite", suite,
                   "specfun|kernel|transform|rkhs|inverse|pde|all");
    vf->add_option("--seed", seed);
    vf->add_option("--t", t, "fixed transform time for the suites (default 1)");
    vf->add_option("--out", outdir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) return cmd_specfun_eval(fn, args);
        if (ke->parsed()) return cmd_kernel_eval(alpha, t, points);
        if (fw->parsed())
            return cmd_forward(gpath, alpha, t, points, op, outdir, format, tol);
        if (inv->parsed()) {
            if (gpath.empty() == builtin_F.empty())
                throw ExitWith{kMalformed,
                               "inverse needs exactly one of --from-g / --builtin-F"};
            return cmd_inverse(gpath, builtin_F, w_re, w_im, alpha, t, Ns, tau_points,
                               tau_max_frac, outdir);
        }
        if (iso->parsed())
            return cmd_isometry(alpha, t, gname, tol > 0 ? tol : 1e-3, mesh_spec);
        if (rp->parsed())
            return cmd_reproduce(alpha, t, npoints, seed, tol > 0 ? tol : 1e-3,
                                 mesh_spec);
        if (lp->parsed()) return cmd_laplace(alpha, x, s, tol > 0 ? tol : 1e-6, grid_flag);
        if (pc->parsed())
            return cmd_pde_compare(alpha, T, gname, nodes, eps, tol > 0 ? tol : 1e-2,
                                   outdir);
        if (vf->parsed()) return cmd_verify(suite, seed, t, outdir);
    } catch (const ExitWith& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const rk::io::CsvError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kMalformed;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return kDomain;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "failure: %s\n", e.what());
        return kTolerance;
    }
    return kOk;
}
