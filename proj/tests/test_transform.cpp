#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "sector_rkhs/specfun.hpp"
#include "sector_rkhs/transform.hpp"

using namespace sector_rkhs;
using transform::BoundarySignal;

TEST_CASE("boundary signal: sampled interpolation and norms") {
    std::vector<double> taus;
    std::vector<cplx> vals;
    for (int i = 0; i <= 20; ++i) {
        taus.push_back(i / 20.0);
        vals.push_back(cplx(taus.back() * taus.back(), 0.5 * taus.back()));
    }
    auto s = BoundarySignal::from_samples(1.0, taus, vals,
                                          BoundarySignal::Smoothness::c1);
    CHECK(s(0.5).real() == doctest::Approx(0.25).epsilon(1e-3));
    CHECK(s(0.5).imag() == doctest::Approx(0.25).epsilon(1e-12));  // linear channel exact
    CHECK(s.derivative(0.5, 1).imag() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK_THROWS_AS(s.derivative(0.5, 2), std::invalid_argument);  // C^1 only
    // monotone data stays monotone under the interpolant
    std::vector<double> xt{0.0, 0.2, 0.5, 0.6, 1.0};
    std::vector<cplx> xv{cplx(0.0), cplx(0.1), cplx(0.9), cplx(0.95), cplx(1.0)};
    auto mono = BoundarySignal::from_samples(1.0, xt, xv,
                                             BoundarySignal::Smoothness::continuous);
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double v = mono(i / 100.0).real();
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
    CHECK_THROWS_AS(BoundarySignal::from_samples(1.0, {0.0, 0.0}, {cplx(0), cplx(1)},
                                                 BoundarySignal::Smoothness::continuous),
                    std::invalid_argument);
    // weighted norm of tau^k is 1/(alpha + 2k + 1) at t = 1
    auto g = BoundarySignal::monomial(1.0, 1);
    CHECK(g.weighted_norm_sq(1.5) == doctest::Approx(1.0 / 4.5).epsilon(1e-10));
}

TEST_CASE("forward transform anchors") {
    AlphaParam a1(1.0);
    auto one = BoundarySignal::constant(1.0, 1.0);
    // T g for g = 1 is the profile W; at alpha=1 the classical erfc(1/2)
    CHECK(transform::forward_t(a1, 1.0, one, 1.0).real() ==
          doctest::Approx(0.47950012218695346).epsilon(1e-8));
    for (double x : {0.3, 2.0})
        CHECK(transform::forward_t(a1, 0.7, one, x).real() ==
              doctest::Approx(profile_w(a1, x, 0.7)).epsilon(1e-8));
    // zero data
    auto zero = BoundarySignal::constant(1.0, 0.0);
    CHECK(std::abs(transform::forward_t(a1, 1.0, zero, 1.0)) == 0.0);
    // frozen alpha=2 anchor, derived from 2/e - 3 E1(1); cross-checked here
    // against the test oracle on the direct integrand
    AlphaParam a2(2.0);
    const double direct = oracle::integrate(
        [](double tau) {
            const double s = 1.0 - tau;
            return s < 1e-8 ? 0.0 : std::exp(-1.0 / s) / (s * s) * tau * tau;
        },
        0.0, 1.0, 1e-14);
    CHECK(direct == doctest::Approx(0.077607079156323822).epsilon(1e-10));
    CHECK(transform::forward_l(a2, 1.0, one, 1.0).real() ==
          doctest::Approx(0.077607079156323822).epsilon(1e-8));
}

TEST_CASE("forward transform: complex route consistency and errors") {
    AlphaParam a(1.5);
    auto g = BoundarySignal::monomial(1.0, 1);
    const cplx z(0.9, 0.35);
    const cplx via_l = transform::forward_l(a, 1.0, g, z);
    // scaled evaluator times the envelope reproduces the direct value
    const cplx zeta = specfun::cpow_principal(z, a.two_over_alpha());
    const cplx via_scaled = transform::forward_l_scaled(a, 1.0, g, z) *
                            std::exp(-a.alpha() * a.alpha() * zeta / 4.0);
    CHECK(std::abs(via_l - via_scaled) / std::abs(via_l) < 1e-7);
    CHECK_THROWS_AS(transform::forward_t(a, 1.0, g, -1.0), std::domain_error);
    CHECK_THROWS_AS(transform::forward_t(a, 2.0, g, 1.0), std::domain_error);  // t > t_end
    CHECK_THROWS_AS(
        transform::forward_t(a, 1.0, g, std::polar(1.0, 1.01 * a.half_angle())),
        std::domain_error);
    CHECK_THROWS_AS(transform::forward_t(AlphaParam(2.6), 1.0, g, cplx(1.0, 0.2)),
                    std::domain_error);
}

TEST_CASE("scaled transform: sampled fallback agrees with the analytic route") {
    AlphaParam a(1.5);
    std::vector<double> taus;
    std::vector<cplx> vals;
    for (int i = 0; i <= 400; ++i) {
        taus.push_back(i / 400.0);
        vals.push_back(cplx(taus.back(), 0.0));
    }
    auto sampled = BoundarySignal::from_samples(1.0, taus, vals,
                                                BoundarySignal::Smoothness::c1);
    auto analytic = BoundarySignal::monomial(1.0, 1);
    for (const cplx z : {cplx(1.0, 0.3), cplx(6.0, 1.5)}) {
        const cplx s1 = transform::forward_l_scaled(a, 1.0, sampled, z);
        const cplx s2 = transform::forward_l_scaled(a, 1.0, analytic, z);
        CHECK(std::abs(s1 - s2) / std::abs(s2) < 1e-5);
        CHECK(std::isfinite(s1.real()));
    }
}

TEST_CASE("scaled transform stays finite far out in the sector") {
    AlphaParam a(1.0);
    auto g = BoundarySignal::constant(1.0, 1.0);
    // |z| = 32: the plain value underflows towards 0 but the scaled one is
    // an O(1/|z|) quantity
    const cplx z = std::polar(32.0, 0.2);
    const cplx s = transform::forward_l_scaled(a, 1.0, g, z);
    CHECK(std::isfinite(s.real()));
    CHECK(std::isfinite(s.imag()));
    CHECK(std::abs(s) > 0.0);
    CHECK(std::abs(s) < 1.0);
}

TEST_CASE("forward_l boundary trace: x -> 0 recovers g(t)") {
    AlphaParam a(1.5);
    auto g = BoundarySignal::monomial(1.0, 1);  // g(t) = t
    const double t = 0.8;
    // values at x = 1e-2, 1e-3, 1e-4, Aitken-extrapolated to x = 0
    std::vector<double> seq;
    for (double x : {1e-2, 1e-3, 1e-4})
        seq.push_back(transform::forward_l(a, t, g, x).real());
    const double d1 = seq[1] - seq[0], d2 = seq[2] - seq[1];
    const double ext = (d2 - d1) != 0.0 ? seq[2] - d2 * d2 / (d2 - d1) : seq[2];
    CHECK(ext == doctest::Approx(t).epsilon(1e-3));
}

TEST_CASE("iterated trace checks") {
    AlphaParam a(1.5);
    auto lin = BoundarySignal::monomial(1.0, 1);
    auto r0 = transform::iterated_trace_check(a, {0.5}, lin, 0, 1e-3);
    CHECK(r0.all_pass());
    auto r1 = transform::iterated_trace_check(a, {0.5}, lin, 1, 1e-3);
    CHECK(r1.all_pass());
    auto con = BoundarySignal::constant(1.0, 2.0);
    auto r2 = transform::iterated_trace_check(a, {0.8}, con, 1, 1e-3);
    CHECK(r2.all_pass());
    // sampled signals without a C^m tag refuse derivative-based checks
    auto samp = BoundarySignal::from_samples(1.0, {0.0, 0.5, 1.0},
                                             {cplx(0), cplx(1), cplx(0)},
                                             BoundarySignal::Smoothness::l2_only);
    CHECK_THROWS_AS(transform::iterated_trace_check(a, {0.5}, samp, 1),
                    std::invalid_argument);
}

TEST_CASE("Laplace identity check") {
    AlphaParam a1(1.0);
    // alpha = 1: V(x,s) = e^{-sqrt(s) x} via the half-order closed form
    for (double x : {0.5, 1.5})
        for (double s : {0.7, 2.0})
            CHECK(transform::laplace_v(a1, x, s) ==
                  doctest::Approx(std::exp(-std::sqrt(s) * x)).epsilon(1e-10));
    auto rep = transform::laplace_check(a1, 1.0, 1.0, 1e-6);
    CHECK(rep.all_pass());
    auto rep2 = transform::laplace_check(AlphaParam(1.5), 2.0, 0.5, 1e-6);
    CHECK(rep2.all_pass());
    CHECK_THROWS_AS(transform::laplace_check(a1, -1.0, 1.0), std::domain_error);
}
