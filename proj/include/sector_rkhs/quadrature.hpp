#ifndef SECTOR_RKHS_QUADRATURE_HPP
#define SECTOR_RKHS_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

namespace sector_rkhs::quad {

using cplx = std::complex<double>;

/// Outcome of a 1-D quadrature: value, error estimate and convergence flag.
template <typename T>
struct Result {
    T value{};
    double err_est = 0.0;
    long evals = 0;
    bool converged = false;
};

namespace detail {
template <typename T> inline double abs_of(const T& v) { return std::abs(v); }
}  // namespace detail

/// Gauss-Legendre rule on [-1,1]; nodes/weights computed by Newton iteration
/// on the Legendre recurrence and cached per order.
struct GaussLegendre {
    std::vector<double> x;  // nodes, ascending
    std::vector<double> w;  // weights, all positive
};
const GaussLegendre& gauss_legendre(int order);

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod 7/15 on a finite interval.
// ---------------------------------------------------------------------------

namespace detail {

// 15-point Kronrod abscissae (positive half) with Kronrod and embedded
// 7-point Gauss weights.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kGK15WK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename F, typename T>
void gk15_panel(F& f, double a, double b, T& kron, double& err, long& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T gauss{};
    kron = T{};
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kGK15Nodes[i];
        T fv;
        if (i == 7) {
            fv = f(c);
            evals += 1;
        } else {
            fv = f(c - dx) + f(c + dx);
            evals += 2;
        }
        kron += kGK15WK[i] * fv;
        if (i % 2 == 1) gauss += kGK15WG[i / 2] * fv;
        else if (i == 7) gauss += kGK15WG[3] * fv;
    }
    kron *= h;
    gauss *= h;
    err = detail::abs_of<T>(kron - gauss);
    // standard Kronrod error sharpening
    err = std::pow(200.0 * err, 1.5);
    const double scale = detail::abs_of<T>(kron);
    if (scale > 0 && err > scale) err = scale;
}

}  // namespace detail

/// Adaptive GK7/15 on [a,b]. Splits the worst panel until the summed error
/// estimate meets max(rel_tol*|I|, abs_tol) or the panel budget runs out.
template <typename F>
auto integrate(F&& f, double a, double b, double rel_tol = 1e-10,
               double abs_tol = 0.0, int max_panels = 2000)
    -> Result<std::invoke_result_t<F&, double>> {
    using T = std::invoke_result_t<F&, double>;
    struct Panel {
        double a, b, err;
        T val;
    };
    Result<T> out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::vector<Panel> panels;
    {
        Panel p{a, b, 0.0, T{}};
        detail::gk15_panel(f, a, b, p.val, p.err, out.evals);
        panels.push_back(p);
    }
    for (;;) {
        T total{};
        double err_sum = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].val;
            err_sum += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        const double goal =
            std::max(abs_tol, rel_tol * detail::abs_of<T>(total));
        if (err_sum <= goal || static_cast<int>(panels.size()) >= max_panels) {
            out.value = total;
            out.err_est = err_sum;
            out.converged = err_sum <= std::max(goal, 1e-300);
            return out;
        }
        Panel hi = panels[worst];
        const double m = 0.5 * (hi.a + hi.b);
        Panel left{hi.a, m, 0.0, T{}}, right{m, hi.b, 0.0, T{}};
        detail::gk15_panel(f, left.a, left.b, left.val, left.err, out.evals);
        detail::gk15_panel(f, right.a, right.b, right.val, right.err,
                           out.evals);
        panels[worst] = left;
        panels.push_back(right);
    }
}

// ---------------------------------------------------------------------------
// tanh-sinh (double exponential) on a finite interval.
// ---------------------------------------------------------------------------

/// Callback form used by the tanh-sinh rules: f(x, dist_a, dist_b) where the
/// distances to the endpoints are supplied exactly, so integrands with
/// endpoint singularities can be evaluated without cancellation.
template <typename F>
auto tanh_sinh_offsets(F&& f, double a, double b, double tol = 1e-12,
                       int max_level = 12)
    -> Result<std::invoke_result_t<F&, double, double, double>> {
    using T = std::invoke_result_t<F&, double, double, double>;
    Result<T> out;
    const double half = 0.5 * (b - a);
    if (half == 0.0) {
        out.converged = true;
        return out;
    }
    const double pi_half = 1.5707963267948966;
    // level 0: h=1, nodes k*h; each refinement halves h and adds odd nodes
    auto node_term = [&](double u, T& acc) -> bool {
        const double w = pi_half * std::sinh(u);
        const double ch = std::cosh(w);
        const double weight = pi_half * std::cosh(u) / (ch * ch);
        // 1 - tanh(w) = 2 e^{-2w} / (1 + e^{-2w}), stable near the endpoint
        const double em = std::exp(-2.0 * std::abs(w));
        const double dist = half * 2.0 * em / (1.0 + em);  // to nearest end
        if (dist <= 0.0 || weight < 1e-320) return false;
        double x, da, db;
        if (u >= 0) {
            x = b - dist;
            da = (b - a) - dist;
            db = dist;
        } else {
            x = a + dist;
            da = dist;
            db = (b - a) - dist;
        }
        acc += weight * f(x, da, db);
        ++out.evals;
        return true;
    };
    double h = 1.0;
    T sum{};
    node_term(0.0, sum);
    for (int k = 1; k <= 7; ++k) {
        T term{};
        bool okp = node_term(k * h, term);
        bool okm = node_term(-k * h, term);
        sum += term;
        if (!okp && !okm) break;
    }
    T prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        T add{};
        const int kmax = static_cast<int>(std::ceil(7.0 / h));
        for (int k = 1; k <= kmax; k += 2) {
            T term{};
            bool okp = node_term(k * h, term);
            bool okm = node_term(-k * h, term);
            add += term;
            if (!okp && !okm && k > 3) break;
        }
        sum += add;
        T cur = sum * h;
        const double diff = detail::abs_of<T>(cur - prev);
        const double scale = detail::abs_of<T>(cur);
        out.value = cur * half;
        out.err_est = diff * half;
        if (level >= 3 && diff <= tol * std::max(scale, 1e-300)) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    out.converged = out.err_est <=
                    10 * tol * std::max(detail::abs_of<T>(out.value), 1e-300);
    return out;
}

/// tanh-sinh taking a plain f(x) integrand.
template <typename F>
auto tanh_sinh(F&& f, double a, double b, double tol = 1e-12,
               int max_level = 12)
    -> Result<std::invoke_result_t<F&, double>> {
    auto g = [&f](double x, double, double) { return f(x); };
    return tanh_sinh_offsets(g, a, b, tol, max_level);
}

/// Semi-infinite integral of an eventually-decaying integrand: geometric
/// panels [a, a+1], [a+1, a+3], ... integrated adaptively until two
/// consecutive panels are negligible against the accumulated value.
template <typename F>
auto integrate_decay(F&& f, double a, double rel_tol = 1e-10,
                     int max_doublings = 60)
    -> Result<std::invoke_result_t<F&, double>> {
    using T = std::invoke_result_t<F&, double>;
    Result<T> out;
    double lo = a, width = 1.0;
    int quiet = 0;
    for (int k = 0; k < max_doublings; ++k) {
        auto part = integrate(f, lo, lo + width, rel_tol * 0.1, 0.0, 400);
        out.value += part.value;
        out.err_est += part.err_est;
        out.evals += part.evals;
        const double scale = detail::abs_of<T>(out.value);
        if (detail::abs_of<T>(part.value) <= rel_tol * 0.05 * scale + 1e-300)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 2) {
            out.converged = true;
            return out;
        }
        lo += width;
        width *= 2.0;
    }
    return out;
}

/// Deterministic pairwise summation (fixed reduction order).
template <typename T>
T pairwise_sum(std::span<const T> v) {
    if (v.size() <= 8) {
        T s{};
        for (const T& x : v) s += x;
        return s;
    }
    const std::size_t h = v.size() / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

}  // namespace sector_rkhs::quad

#endif  // SECTOR_RKHS_QUADRATURE_HPP
