#include "sector_rkhs/boundary_signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sector_rkhs/quadrature.hpp"

namespace sector_rkhs::transform {

namespace {

// Fritsch-Carlson monotone cubic slopes for one real channel.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), delta(n - 1), d(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        d[0] = d[1] = delta[0];
        return d;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // one-sided endpoint slopes, limited to preserve monotonicity
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) s = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) s = 3.0 * d0;
        return s;
    };
    d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

struct PchipChannel {
    std::vector<double> x, y, d;
    double value(double t) const {
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        std::size_t i = (it == x.begin()) ? 0 : (it - x.begin()) - 1;
        if (i >= x.size() - 1) i = x.size() - 2;
        const double h = x[i + 1] - x[i], s = (t - x[i]) / h;
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        const double h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s);
        const double h11 = s * s * (s - 1);
        return h00 * y[i] + h10 * h * d[i] + h01 * y[i + 1] + h11 * h * d[i + 1];
    }
    double deriv(double t) const {
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        std::size_t i = (it == x.begin()) ? 0 : (it - x.begin()) - 1;
        if (i >= x.size() - 1) i = x.size() - 2;
        const double h = x[i + 1] - x[i], s = (t - x[i]) / h;
        const double g00 = 6 * s * (s - 1) / h;
        const double g10 = (3 * s - 1) * (s - 1);
        const double g01 = -g00;
        const double g11 = s * (3 * s - 2);
        return g00 * y[i] + g10 * d[i] + g01 * y[i + 1] + g11 * d[i + 1];
    }
};

}  // namespace

BoundarySignal BoundarySignal::from_function(
    double t_end, std::function<cplx(double)> g, Smoothness s,
    std::function<cplx(cplx)> analytic,
    std::vector<std::function<cplx(double)>> derivatives) {
    if (!(t_end > 0.0)) throw std::invalid_argument("BoundarySignal: t_end must be > 0");
    if (!g) throw std::invalid_argument("BoundarySignal: null evaluator");
    BoundarySignal b;
    b.t_end_ = t_end;
    b.smoothness_ = s;
    b.eval_ = std::move(g);
    b.analytic_ = std::move(analytic);
    b.derivatives_ = std::move(derivatives);
    return b;
}

BoundarySignal BoundarySignal::from_samples(double t_end, std::vector<double> taus,
                                            std::vector<cplx> values, Smoothness s) {
    if (!(t_end > 0.0)) throw std::invalid_argument("BoundarySignal: t_end must be > 0");
    if (taus.size() != values.size() || taus.size() < 2)
        throw std::invalid_argument("BoundarySignal: need >= 2 samples with matching sizes");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (taus[i] < 0.0 || taus[i] > t_end * (1.0 + 1e-12))
            throw std::invalid_argument("BoundarySignal: sample abscissa outside [0, t_end]");
        if (i > 0 && !(taus[i] > taus[i - 1]))
            throw std::invalid_argument("BoundarySignal: sample abscissae must be increasing");
    }
    auto re = std::make_shared<PchipChannel>();
    auto im = std::make_shared<PchipChannel>();
    re->x = taus;
    im->x = taus;
    re->y.reserve(values.size());
    im->y.reserve(values.size());
    for (cplx v : values) {
        re->y.push_back(v.real());
        im->y.push_back(v.imag());
    }
    re->d = pchip_slopes(re->x, re->y);
    im->d = pchip_slopes(im->x, im->y);

    BoundarySignal b;
    b.t_end_ = t_end;
    b.smoothness_ = (s == Smoothness::smooth || s == Smoothness::c2) ? Smoothness::c1 : s;
    b.sampled_ = true;
    b.eval_ = [re, im](double t) { return cplx(re->value(t), im->value(t)); };
    b.interp_deriv_ = [re, im](double t) { return cplx(re->deriv(t), im->deriv(t)); };
    return b;
}

BoundarySignal BoundarySignal::constant(double t_end, cplx c) {
    std::vector<std::function<cplx(double)>> derivs;
    derivs.push_back([](double) { return cplx(0.0, 0.0); });
    derivs.push_back([](double) { return cplx(0.0, 0.0); });
    return from_function(
        t_end, [c](double) { return c; }, Smoothness::smooth,
        [c](cplx) { return c; }, std::move(derivs));
}

BoundarySignal BoundarySignal::monomial(double t_end, int k, cplx c) {
    if (k < 0) throw std::invalid_argument("BoundarySignal::monomial: k >= 0");
    std::vector<std::function<cplx(double)>> derivs;
    derivs.push_back([k, c](double t) {
        return k == 0 ? cplx(0.0) : c * static_cast<double>(k) * std::pow(t, k - 1);
    });
    derivs.push_back([k, c](double t) {
        return k <= 1 ? cplx(0.0)
                      : c * static_cast<double>(k * (k - 1)) * std::pow(t, k - 2);
    });
    auto ipow = [k, c](cplx t) {
        cplx v = c;
        for (int i = 0; i < k; ++i) v *= t;
        return v;
    };
    return from_function(
        t_end, [k, c](double t) { return c * std::pow(t, k); }, Smoothness::smooth,
        ipow, std::move(derivs));
}

cplx BoundarySignal::operator()(double tau) const {
    double t = tau;
    if (t < 0.0) t = 0.0;
    if (t > t_end_) t = t_end_;
    return eval_(t);
}

cplx BoundarySignal::derivative(double tau, int m) const {
    if (m < 1 || m > 2)
        throw std::invalid_argument("BoundarySignal::derivative: m must be 1 or 2");
    const int need = m;
    const int have = (smoothness_ == Smoothness::smooth) ? 99
                     : (smoothness_ == Smoothness::c2)   ? 2
                     : (smoothness_ == Smoothness::c1)   ? 1
                                                         : 0;
    if (have < need)
        throw std::invalid_argument("BoundarySignal::derivative: signal not tagged C^m");
    if (sampled_) {
        if (m > 1)
            throw std::invalid_argument(
                "BoundarySignal::derivative: sampled interpolant is C^1 only");
        return interp_deriv_(tau);
    }
    if (static_cast<std::size_t>(m) <= derivatives_.size() && derivatives_[m - 1])
        return derivatives_[m - 1](tau);
    throw std::invalid_argument(
        "BoundarySignal::derivative: no derivative evaluator attached");
}

cplx BoundarySignal::analytic_at(cplx tau) const {
    if (!analytic_)
        throw std::invalid_argument("BoundarySignal: no analytic continuation attached");
    return analytic_(tau);
}

double BoundarySignal::weighted_norm_sq(double alpha) const {
    auto f = [&](double tau) {
        const cplx v = (*this)(tau);
        return std::norm(v) * std::pow(tau, alpha);
    };
    auto r = quad::integrate(f, 0.0, t_end_, 1e-12);
    return r.value / std::pow(t_end_, alpha);
}

}  // namespace sector_rkhs::transform
