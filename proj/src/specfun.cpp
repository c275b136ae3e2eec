#include "sector_rkhs/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sector_rkhs/quadrature.hpp"

namespace sector_rkhs::specfun {

namespace {

// Lanczos g=7, n=9 coefficients (Godfrey/Pugh set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

double lanczos_series(double x) {
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (x + i);
    return s;
}

constexpr double kSqrtTwoPi = 2.5066282746310002;

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
    if (x > 171.61) throw std::overflow_error("gamma_fn: overflow, use log_gamma");
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_series(z);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_series(z));
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_fn: requires a,b > 0");
    // log form keeps large arguments representable
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

namespace {

// Regularized lower incomplete gamma by power series; valid x < s+1.
double reg_lower_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + s * std::log(x) - log_gamma(s));
}

// Regularized upper incomplete gamma by modified Lentz continued fraction;
// valid x >= s+1.
double reg_upper_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return h * std::exp(-x + s * std::log(x) - log_gamma(s));
}

}  // namespace

double reg_upper_gamma(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("reg_upper_gamma: requires s > 0");
    if (x < 0.0) throw std::domain_error("reg_upper_gamma: requires x >= 0");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - reg_lower_series(s, x);
    return reg_upper_cf(s, x);
}

double erfc_alpha(double alpha, double lambda) {
    if (!(alpha > 0.0)) throw std::domain_error("erfc_alpha: requires alpha > 0");
    if (lambda < 0.0) throw std::domain_error("erfc_alpha: requires lambda >= 0");
    return reg_upper_gamma(0.5 * alpha, lambda * lambda);
}

double erfc_alpha_ode_residual(double alpha, double lambda, double h) {
    if (!(lambda > 0.0) || !(h > 0.0) || !(lambda - h > 0.0))
        throw std::domain_error("erfc_alpha_ode_residual: requires 0 < h < lambda");
    const double yp = erfc_alpha(alpha, lambda + h);
    const double y0 = erfc_alpha(alpha, lambda);
    const double ym = erfc_alpha(alpha, lambda - h);
    const double d2 = (yp - 2.0 * y0 + ym) / (h * h);
    const double d1 = (yp - ym) / (2.0 * h);
    return d2 + (2.0 * lambda - (alpha - 1.0) / lambda) * d1;
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    if (nu < 0.0) throw std::domain_error("bessel_k: requires nu >= 0");
    // f(u) = exp(-x cosh u) cosh(nu u) is even, smooth and decays doubly
    // exponentially; the trapezoidal rule converges geometrically in 1/h.
    auto f = [&](double u) -> double {
        // cosh(nu u) can overflow on its own for large u; combine in logs
        const double a = nu * u;
        const double lc = (std::abs(a) > 30.0) ? std::abs(a) - M_LN2
                                               : std::log(std::cosh(a));
        const double le = -x * std::cosh(u) + lc;
        return (le < -745.0) ? 0.0 : std::exp(le);
    };
    double h = 0.5;
    auto trapezoid = [&](double step) -> double {
        double sum = 0.5 * f(0.0);
        for (int k = 1; k < 20000; ++k) {
            const double term = f(k * step);
            sum += term;
            if (term < sum * 1e-18 && x * std::cosh(k * step) > 40.0) break;
        }
        return sum * step;
    };
    double prev = trapezoid(h);
    for (int level = 0; level < 7; ++level) {
        h *= 0.5;
        const double cur = trapezoid(h);
        if (std::abs(cur - prev) <= 1e-14 * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

BesselKRepResult bessel_k_rep_checked(double nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k_rep: requires x > 0");
    if (nu < -0.5) throw std::domain_error("bessel_k_rep: requires nu >= -1/2");
    BesselKRepResult out;
    const double p = nu + 0.5;
    auto f = [&](double t) { return std::cos(x * t) * std::pow(1.0 + t * t, -p); };

    // Integrate up to the first zero of cos(xt), then over half-periods;
    // partial sums form an (eventually) alternating sequence accelerated by
    // iterated Aitken extrapolation.
    const auto& gl = quad::gauss_legendre(16);
    // chunked so the algebraic prefactor (scale ~ max(1,a)) stays resolved
    // even when the half-period is long (small x)
    auto segment = [&](double a, double b) -> double {
        const int chunks =
            std::max(1, static_cast<int>(std::ceil((b - a) / std::max(1.0, 0.25 * a))));
        double total = 0.0;
        for (int k = 0; k < chunks; ++k) {
            const double a1 = a + (b - a) * k / chunks;
            const double b1 = a + (b - a) * (k + 1) / chunks;
            const double c = 0.5 * (a1 + b1), hw = 0.5 * (b1 - a1);
            double s = 0.0;
            for (std::size_t i = 0; i < gl.x.size(); ++i)
                s += gl.w[i] * f(c + hw * gl.x[i]);
            total += s * hw;
        }
        return total;
    };

    // iterated Aitken delta^2 over the tail of a partial-sum sequence
    auto aitken = [](std::vector<double> s) -> double {
        while (s.size() >= 3) {
            std::vector<double> nxt;
            for (std::size_t i = 0; i + 2 < s.size(); ++i) {
                const double d1 = s[i + 1] - s[i];
                const double d2 = s[i + 2] - s[i + 1];
                const double den = d2 - d1;
                nxt.push_back(den != 0.0 ? s[i + 2] - d2 * d2 / den : s[i + 2]);
            }
            s = std::move(nxt);
        }
        return s.front();
    };

    const double half_period = M_PI / x;
    const double t0 = 0.5 * half_period;  // first zero of cos(xt)
    std::vector<double> partial;
    double acc = segment(0.0, t0);
    partial.push_back(acc);
    double prev_extrap = std::numeric_limits<double>::quiet_NaN();
    const int max_seg = 800;
    for (int k = 0; k < max_seg; ++k) {
        const double a = t0 + k * half_period;
        acc += segment(a, a + half_period);
        partial.push_back(acc);
        if (partial.size() < 14) continue;
        const double extrap =
            aitken(std::vector<double>(partial.end() - 14, partial.end()));
        const double raw_tail = std::abs(partial.back() - partial[partial.size() - 2]);
        if (std::isfinite(prev_extrap)) {
            const double drift = std::abs(extrap - prev_extrap);
            if (drift <= 1e-12 * std::abs(extrap) || raw_tail <= 1e-15 * std::abs(extrap)) {
                out.value = extrap;
                out.err_est = drift;
                out.converged = true;
                break;
            }
            out.value = extrap;
            out.err_est = drift;
        }
        prev_extrap = extrap;
    }
    if (!out.converged && !partial.empty()) {
        if (out.value == 0.0) out.value = partial.back();
        out.converged = out.err_est <= 1e-9 * std::abs(out.value);
    }
    const double pref = std::exp(nu * M_LN2 + log_gamma(nu + 0.5) -
                                 0.5 * std::log(M_PI) - nu * std::log(x));
    out.value *= pref;
    out.err_est *= pref;
    return out;
}

double bessel_k_rep(double nu, double x) {
    auto r = bessel_k_rep_checked(nu, x);
    if (!r.converged)
        throw std::runtime_error("bessel_k_rep: oscillatory tail failed to converge");
    return r.value;
}

cplx cpow_principal(cplx z, double p) {
    if (z == cplx(0.0, 0.0)) throw std::domain_error("cpow_principal: z = 0");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw std::domain_error("cpow_principal: z on the branch cut (-inf, 0]");
    return std::exp(p * std::log(z));
}

}  // namespace sector_rkhs::specfun
