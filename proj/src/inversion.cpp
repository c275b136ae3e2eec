#include "sector_rkhs/inversion.hpp"

#include <cmath>
#include <stdexcept>

#include "sector_rkhs/parallel.hpp"
#include "sector_rkhs/quadrature.hpp"
#include "sector_rkhs/specfun.hpp"

namespace sector_rkhs::inversion {

namespace {

double beta_of_tau(const AlphaParam& a, double t, double tau) {
    return 0.25 * a.alpha() * a.alpha() * tau / (t * (t - tau));
}

}  // namespace

InverseOperator::InverseOperator(const AlphaParam& a, double t,
                                 const bergman::GSpaceElement& F, int N,
                                 const InverseOptions& opt)
    : a_(a), t_(t), opt_(opt), mesh_() {
    a.require_sector("InverseOperator");
    if (!(t > 0.0)) throw std::domain_error("InverseOperator: requires t > 0");
    const double tau_max =
        (opt.tau_max_hint > 0.0) ? opt.tau_max_hint : t * (1.0 - opt.refuse_fraction);
    const double tau_min = std::min(t / 64.0, 0.5 * tau_max);
    MeshParams mp;
    mp.r_min = opt.r_min.value_or(std::pow(N, -opt.shape_power));
    mp.r_max = static_cast<double>(N);
    mp.delta = opt.delta.value_or(std::pow(N, -opt.shape_power));
    mp.order = opt.order;
    mp.beta_min = beta_of_tau(a, t, tau_min);
    mp.beta_max = beta_of_tau(a, t, std::min(tau_max, t * (1.0 - 1e-6)));
    mp.split_threshold = opt.split_threshold;
    mp.max_nodes = opt.max_nodes;
    if (N < 2)
        throw std::invalid_argument("InverseOperator: N >= 2 required");
    mesh_ = build_sector_mesh(a, mp);
    mesh_.exhaustion_index = N;

    amp_.resize(mesh_.size());
    util::parallel_for(mesh_.size(), [&](std::size_t i) {
        const cplx z = mesh_.z[i];
        amp_[i] = mesh_.weight[i] * std::conj(z) * F.eval_scaled(z) *
                  bergman::measure_density_alg(a_, z);
    });
}

cplx InverseOperator::reconstruct(double tau) const {
    if (!(tau > 0.0) || !(tau < t_))
        throw std::domain_error("InverseOperator: tau must lie in (0, t)");
    if (tau > t_ * (1.0 - opt_.refuse_fraction))
        throw std::domain_error(
            "InverseOperator: tau too close to t (limit holds in L2, not pointwise)");
    const double al = a_.alpha();
    const double c = beta_of_tau(a_, t_, tau);  // (a^2/4) tau / (t (t-tau))
    std::vector<cplx> terms(mesh_.size());
    util::parallel_for(mesh_.size(), [&](std::size_t i) {
        const cplx ex = -c * std::conj(mesh_.zeta[i]);
        terms[i] = (ex.real() < -745.0) ? cplx(0.0, 0.0) : amp_[i] * std::exp(ex);
    });
    const cplx sum = quad::pairwise_sum(terms);
    const double lpref = al * std::log(0.5 * al) - specfun::log_gamma(0.5 * al) -
                         a_.time_power() * std::log(t_ - tau);
    return std::exp(lpref) * sum;
}

cplx invert(const AlphaParam& a, double t, const bergman::GSpaceElement& F,
            double tau, int N, const InverseOptions& opt) {
    InverseOptions o = opt;
    if (o.tau_max_hint <= 0.0) o.tau_max_hint = tau;
    return InverseOperator(a, t, F, N, o).reconstruct(tau);
}

std::vector<double> interior_tau_grid(double t, int n) {
    std::vector<double> g;
    g.reserve(n);
    for (int k = 1; k <= n; ++k) g.push_back(t * k / (n + 1.0));
    return g;
}

io::DiagnosticsReport roundtrip_error(const AlphaParam& a, double t,
                                      const transform::BoundarySignal& g,
                                      const std::vector<int>& Ns,
                                      const std::vector<double>& tau_grid,
                                      const InverseOptions& opt) {
    if (tau_grid.size() < 2)
        throw std::invalid_argument("roundtrip_error: need at least 2 tau points");
    for (double tau : tau_grid)
        if (!(tau > 0.0) || !(tau < t))
            throw std::domain_error("roundtrip_error: tau grid must avoid {0, t}");

    io::DiagnosticsReport rep;
    rep.command = "roundtrip-error";
    rep.params["alpha"] = a.alpha();
    rep.params["t"] = t;
    rep.params["delta_rule"] =
        opt.delta ? nlohmann::ordered_json(*opt.delta) : nlohmann::ordered_json("1/N");

    // weighted-L2 norm on the grid by trapezoid with weight tau^alpha/t^alpha
    auto grid_norm = [&](const std::vector<cplx>& diff) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < tau_grid.size(); ++i) {
            const double w0 = std::pow(tau_grid[i] / t, a.alpha());
            const double w1 = std::pow(tau_grid[i + 1] / t, a.alpha());
            const double f0 = std::norm(diff[i]) * w0;
            const double f1 = std::norm(diff[i + 1]) * w1;
            acc += 0.5 * (f0 + f1) * (tau_grid[i + 1] - tau_grid[i]) / t;
        }
        return std::sqrt(acc);
    };

    std::vector<cplx> gvals(tau_grid.size());
    for (std::size_t i = 0; i < tau_grid.size(); ++i) gvals[i] = g(tau_grid[i]);
    const double gnorm = grid_norm(gvals);

    bergman::GSpaceElement F = bergman::GSpaceElement::from_signal(a, t, g);
    InverseOptions o = opt;
    o.tau_max_hint = tau_grid.back();

    io::Table tab;
    tab.name = "roundtrip_error";
    tab.columns = {"N", "nodes", "abs_err", "rel_err"};
    std::vector<double> errs;
    for (int N : Ns) {
        InverseOperator op(a, t, F, N, o);
        std::vector<cplx> diff(tau_grid.size());
        for (std::size_t i = 0; i < tau_grid.size(); ++i)
            diff[i] = op.reconstruct(tau_grid[i]) - gvals[i];
        const double abs_err = grid_norm(diff);
        const double rel = (gnorm > 0.0) ? abs_err / gnorm : abs_err;
        errs.push_back(rel);
        tab.rows.push_back({static_cast<double>(N),
                            static_cast<double>(op.mesh().size()), abs_err, rel});
        if (op.mesh().budget_exhausted)
            rep.warn("roundtrip_error: node budget exhausted at N=" + std::to_string(N));
    }
    rep.tables.push_back(tab);

    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < errs.size(); ++i)
        decreasing = decreasing && errs[i + 1] < errs[i];
    rep.add(io::CheckRecord::boolean("roundtrip.error_decreasing_in_N", decreasing));
    if (!errs.empty())
        rep.add(io::CheckRecord::upper_bound("roundtrip.final_rel_err", errs.back(),
                                             1e-2));
    return rep;
}

}  // namespace sector_rkhs::inversion
