#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sector_rkhs/quadrature.hpp"

using namespace sector_rkhs::quad;

TEST_CASE("adaptive Gauss-Kronrod") {
    auto r1 = integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    auto r2 = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-13));
    auto r3 = integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, 1e-12);
    CHECK(r3.value == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-11));
    // complex-valued integrand
    auto r4 = integrate([](double x) { return std::polar(1.0, x); }, 0.0, 1.0);
    CHECK(std::abs(r4.value - std::complex<double>(std::sin(1.0), 1.0 - std::cos(1.0))) <
          1e-13);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    auto r = tanh_sinh_offsets(
        [](double, double da, double) { return 1.0 / std::sqrt(da); }, 0.0, 1.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-11));
    auto r2 = tanh_sinh(
        [](double x) { return x < 1e-8 ? 0.0 : std::exp(-1.0 / x) / (x * x); }, 0.0,
        1.0, 1e-12);
    CHECK(r2.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("semi-infinite decay integral") {
    auto r = integrate_decay([](double x) { return std::exp(-x); }, 0.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    auto r2 = integrate_decay([](double x) { return std::exp(-x * x); }, 0.5, 1e-12);
    CHECK(r2.value == doctest::Approx(0.5 * std::sqrt(M_PI) * std::erfc(0.5)).epsilon(1e-11));
}

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
    for (int n : {4, 9, 16, 32}) {
        const auto& gl = gauss_legendre(n);
        // degree 2n-1 monomial over [-1,1]
        const int d = 2 * n - 1;
        double sum = 0.0;
        for (std::size_t i = 0; i < gl.x.size(); ++i)
            sum += gl.w[i] * (std::pow(gl.x[i], d) + std::pow(gl.x[i], d - 1));
        const double exact = 0.0 + 2.0 / d;  // odd term vanishes
        CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
        double wsum = 0.0;
        for (double w : gl.w) {
            CHECK(w > 0.0);
            wsum += w;
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("pairwise summation matches naive order-independent sum") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    std::vector<double> v(1000);
    long double naive = 0.0;
    for (auto& x : v) {
        x = ur(rng);
        naive += x;
    }
    CHECK(pairwise_sum(v) == doctest::Approx(static_cast<double>(naive)).epsilon(1e-13));
}
