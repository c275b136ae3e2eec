#include "sector_rkhs/pde_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sector_rkhs::pde {

FDGrid FDGrid::graded(double eps, double x_max, int m_nodes, double T, int nt) {
    if (!(eps > 0.0) || !(x_max > eps))
        throw std::invalid_argument("FDGrid: need 0 < eps < x_max");
    if (m_nodes < 8 || nt < 4) throw std::invalid_argument("FDGrid: grid too small");
    FDGrid g;
    g.x.resize(m_nodes + 1);
    const double q = std::log(x_max / eps);
    for (int i = 0; i <= m_nodes; ++i)
        g.x[i] = eps * std::exp(q * static_cast<double>(i) / m_nodes);
    g.x.back() = x_max;
    g.dt = T / nt;
    g.steps = nt;
    return g;
}

double SolutionField::at(double xq, double tq) const {
    const int nmax = static_cast<int>(u.size()) - 1;
    double tn = tq / dt;
    int n = std::clamp(static_cast<int>(std::floor(tn)), 0, nmax - 1);
    const double ft = std::clamp(tn - n, 0.0, 1.0);
    auto il = std::upper_bound(x.begin(), x.end(), xq);
    int i = std::clamp(static_cast<int>(il - x.begin()) - 1, 0,
                       static_cast<int>(x.size()) - 2);
    const double fx = std::clamp((xq - x[i]) / (x[i + 1] - x[i]), 0.0, 1.0);
    const double a = u[n][i] * (1 - fx) + u[n][i + 1] * fx;
    const double b = u[n + 1][i] * (1 - fx) + u[n + 1][i + 1] * fx;
    return a * (1 - ft) + b * ft;
}

namespace {

// Second derivative weights on a nonuniform 3-point stencil.
struct Stencil {
    double wl, wc, wr;
};

Stencil d2_weights(double hl, double hr) {
    return {2.0 / (hl * (hl + hr)), -2.0 / (hl * hr), 2.0 / (hr * (hl + hr))};
}

}  // namespace

SolutionField solve_fd(const AlphaParam& a, double T, const BoundarySignal& g,
                       const FDGrid& grid, std::vector<std::string>* warnings) {
    if (!(T > 0.0) || T > g.t_end() * (1.0 + 1e-12))
        throw std::domain_error("solve_fd: T outside signal domain");
    const int M = static_cast<int>(grid.x.size()) - 1;
    const int NT = grid.steps;
    const double dt = grid.dt;

    std::vector<double> c(M + 1);
    for (int i = 0; i <= M; ++i) c[i] = std::pow(grid.x[i], a.diffusion_exponent());
    if (a.alpha() < 1.0) {
        const double h0 = grid.x[1] - grid.x[0];
        if (c[0] * dt / (h0 * h0) > 1e8 && warnings)
            warnings->push_back(
                "solve_fd: singular coefficient at the left boundary dominates the "
                "stencil; shrink eps or dt");
    }

    std::vector<Stencil> st(M + 1);
    for (int i = 1; i < M; ++i)
        st[i] = d2_weights(grid.x[i] - grid.x[i - 1], grid.x[i + 1] - grid.x[i]);

    SolutionField out;
    out.x = grid.x;
    out.dt = dt;
    out.u.assign(NT + 1, std::vector<double>(M + 1, 0.0));
    out.u[0][0] = g(0.0).real();

    // running bound check (maximum-principle surrogate)
    double gmin = 0.0, gmax = 0.0;
    {
        for (int n = 0; n <= NT; ++n) {
            const double gv = g(n * dt).real();
            gmin = std::min(gmin, gv);
            gmax = std::max(gmax, gv);
        }
    }

    std::vector<double> lower(M + 1), diag(M + 1), upper(M + 1), rhs(M + 1),
        cp(M + 1), dp(M + 1);
    std::vector<double> ucur = out.u[0];

    bool bound_violated = false;
    auto step = [&](double t_new, double theta, double dt_loc) {
        // (I - theta dt c D2) u_new = (I + (1-theta) dt c D2) u_old + BCs
        for (int i = 1; i < M; ++i) {
            const Stencil& s = st[i];
            const double k = c[i] * dt_loc;
            lower[i] = -theta * k * s.wl;
            diag[i] = 1.0 - theta * k * s.wc;
            upper[i] = -theta * k * s.wr;
            const double expl = (1.0 - theta) * k *
                                (s.wl * ucur[i - 1] + s.wc * ucur[i] + s.wr * ucur[i + 1]);
            rhs[i] = ucur[i] + expl;
        }
        const double gl = g(t_new).real();
        rhs[1] -= lower[1] * gl;
        // right boundary value is 0
        // Thomas sweep over i = 1..M-1
        cp[1] = upper[1] / diag[1];
        dp[1] = rhs[1] / diag[1];
        for (int i = 2; i < M; ++i) {
            const double m = diag[i] - lower[i] * cp[i - 1];
            cp[i] = upper[i] / m;
            dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / m;
        }
        std::vector<double> unew(M + 1, 0.0);
        unew[0] = gl;
        unew[M] = 0.0;
        unew[M - 1] = dp[M - 1];
        for (int i = M - 2; i >= 1; --i) unew[i] = dp[i] - cp[i] * unew[i + 1];
        ucur = std::move(unew);
    };

    const double scale = std::max(1.0, gmax - gmin);
    for (int n = 0; n < NT; ++n) {
        const double t1 = (n + 1) * dt;
        if (n < 2) {
            // implicit-Euler half steps (Rannacher start)
            step(t1 - 0.5 * dt, 1.0, 0.5 * dt);
            step(t1, 1.0, 0.5 * dt);
        } else {
            step(t1, 0.5, dt);
        }
        out.u[n + 1] = ucur;
        for (double v : ucur)
            if (v < gmin - 1e-6 * scale || v > gmax + 1e-6 * scale) bound_violated = true;
    }
    if (bound_violated && warnings)
        warnings->push_back(
            "solve_fd: bound-preservation check failed (growth beyond data range)");
    return out;
}

io::DiagnosticsReport compare_fields(const SolutionField& fd,
                                     const std::function<double(double)>& analytic_at_T,
                                     const Region& region, double rel_tol) {
    io::DiagnosticsReport rep;
    rep.command = "pde-compare";
    rep.params["x_lo"] = region.x_lo;
    rep.params["x_hi"] = region.x_hi;

    const auto& un = fd.u.back();
    double max_diff = 0.0, max_ref = 0.0, l2 = 0.0, l2ref = 0.0;
    io::Table tab;
    tab.name = "final_time_comparison";
    tab.columns = {"x", "fd", "analytic"};
    int count = 0;
    for (std::size_t i = 0; i < fd.x.size(); ++i) {
        const double x = fd.x[i];
        if (x < region.x_lo || x > region.x_hi) continue;
        const double ref = analytic_at_T(x);
        const double diff = std::abs(un[i] - ref);
        max_diff = std::max(max_diff, diff);
        max_ref = std::max(max_ref, std::abs(ref));
        l2 += diff * diff;
        l2ref += ref * ref;
        if (count % 16 == 0) tab.rows.push_back({x, un[i], ref});
        ++count;
    }
    if (count == 0) throw std::invalid_argument("compare_fields: empty region");
    const double linf_rel = max_diff / std::max(max_ref, 1e-300);
    const double l2_rel = std::sqrt(l2 / std::max(l2ref, 1e-300));
    rep.tables.push_back(std::move(tab));
    rep.params["points"] = count;
    rep.add(io::CheckRecord::upper_bound("pde.linf_rel", linf_rel, rel_tol));
    rep.add(io::CheckRecord::upper_bound("pde.l2_rel", l2_rel, rel_tol));
    return rep;
}

double choose_x_max(const AlphaParam& a, double T, double tail_tol) {
    double x = 1.0;
    for (int i = 0; i < 60 && profile_w(a, x, T) >= tail_tol; ++i) x *= 2.0;
    return x;
}

}  // namespace sector_rkhs::pde
