#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lvlab/errors.hpp"
#include "lvlab/fourier.hpp"
#include "lvlab/smooth_weight.hpp"
#include "lvlab/util.hpp"

#include <cmath>

using namespace lvlab;

TEST_CASE("weight is exactly 1 on the plateau and exactly 0 off support") {
    CHECK(eval_weight(1.5) == 1.0);
    CHECK(eval_weight(0.9) == 0.0);
    CHECK(eval_weight(2.3) == 0.0);
    for (int i = 0; i < 100; ++i) {
        double u = 1.2 + 0.6 * double(i) / 99.0;
        CHECK(eval_weight(u) == 1.0);
    }
    for (int i = 0; i < 100; ++i) {
        double below = 1.0 - 0.01 * double(i);
        double above = 2.0 + 0.01 * (double(i) + 1.0);
        CHECK(eval_weight(below) == 0.0);
        CHECK(eval_weight(above) == 0.0);
    }
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        double w = eval_weight(rng.uniform(0.0, 3.0));
        CHECK(w >= 0.0);
        CHECK(w <= 1.0);
    }
}

TEST_CASE("central finite differences of orders 1..4 stay bounded") {
    // smoothness proxy on a 1e4-point grid; envelopes measured once, loose
    const int n = 10000;
    const double h = 1.2 / double(n);
    const double envelope[5] = {0, 30.0, 2.5e3, 6.0e5, 2.0e8};
    double worst[5] = {0, 0, 0, 0, 0};
    for (int i = 2; i < n - 2; ++i) {
        double u = 0.95 + h * double(i);
        double f2 = eval_weight(u + 2 * h), f1 = eval_weight(u + h), f0 = eval_weight(u);
        double g1 = eval_weight(u - h), g2 = eval_weight(u - 2 * h);
        double d1 = (f1 - g1) / (2 * h);
        double d2 = (f1 - 2 * f0 + g1) / (h * h);
        double d3 = (f2 - 2 * f1 + 2 * g1 - g2) / (2 * h * h * h);
        double d4 = (f2 - 4 * f1 + 6 * f0 - 4 * g1 + g2) / (h * h * h * h);
        worst[1] = std::max(worst[1], std::fabs(d1));
        worst[2] = std::max(worst[2], std::fabs(d2));
        worst[3] = std::max(worst[3], std::fabs(d3));
        worst[4] = std::max(worst[4], std::fabs(d4));
    }
    for (int j = 1; j <= 4; ++j) {
        CHECK(std::isfinite(worst[j]));
        CHECK(worst[j] < envelope[j]);
    }
}

TEST_CASE("weight norms") {
    // int w over [1,2]: plateau 0.6 plus two smoothstep shoulders of 0.1 each
    CHECK(SmoothWeight::l1() == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(SmoothWeight::l2sq() > 0.6);
    CHECK(SmoothWeight::l2sq() < 0.8);
    CHECK(SmoothWeight::l2_pow6() ==
          doctest::Approx(std::pow(SmoothWeight::l2sq(), 3.0)).epsilon(1e-14));
}

TEST_CASE("eval_h") {
    CHECK(eval_h(0.0, 1.5) == cdouble(1.0, 0.0));
    CHECK(eval_h(123.0, 0.5) == cdouble(0.0, 0.0));
    CHECK(std::abs(eval_h(10.0, 1.5)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("fourier_h at the origin is the L2 mass of w") {
    cdouble v = fourier_h(0.0, 0.0);
    CHECK(std::fabs(v.imag()) < 1e-12);
    CHECK(v.real() >= 0.6); // plateau alone contributes 3/5
    CHECK(v.real() <= 1.0);
    CHECK(v.real() == doctest::Approx(SmoothWeight::l2sq()).epsilon(1e-9));
}

TEST_CASE("fourier_h conjugate symmetry on a random sweep") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        double t = rng.uniform(-50.0, 50.0);
        double xi = rng.uniform(-30.0, 30.0);
        cdouble a = fourier_h(-t, xi);
        cdouble b = std::conj(fourier_h(t, -xi));
        CHECK(std::abs(a - b) <= 1e-9);
    }
}

TEST_CASE("fourier_h trivially bounded by the L2 mass") {
    Rng rng(23);
    double cap = SmoothWeight::l2sq() + 1e-9;
    for (int i = 0; i < 60; ++i) {
        double t = rng.uniform(-200.0, 200.0);
        double xi = rng.uniform(-100.0, 100.0);
        CHECK(std::abs(fourier_h(t, xi)) <= cap);
    }
}

TEST_CASE("fourier_h decays: |hhat_0(200)| below 1e-6 against a dense oracle") {
    auto detail = fourier_h_detail(0.0, 200.0);
    CHECK(std::abs(detail.value) <= 1e-6);
    // oracle: same integral at double panel density
    cdouble oracle = fourier_h_fixed(0.0, 200.0, 2 * detail.panels);
    CHECK(std::abs(detail.value - oracle) <= 1e-9);
}

TEST_CASE("poisson consistency: lattice deviation equals the hhat tail") {
    // sum_n w(n/N)^2 - N ||w||^2 = N * sum_{m != 0} hhat_0(mN)
    const std::int64_t N = 64;
    Kahan lattice;
    for (std::int64_t n = N; n <= 2 * N; ++n) lattice.add(sq(eval_weight(double(n) / double(N))));
    double dev = lattice.value() - double(N) * SmoothWeight::l2sq();
    Kahan tail;
    for (int m = 1; m <= 4; ++m) tail.add(2.0 * fourier_h(0.0, double(m * N)).real());
    CHECK(dev == doctest::Approx(double(N) * tail.value()).epsilon(1e-6));
}

TEST_CASE("decay_ratio monitor") {
    CHECK(decay_ratio(0.5, 100.0, 2) > 0.0);
    CHECK(std::isfinite(decay_ratio(0.5, 100.0, 2)));
    CHECK(decay_ratio(1000.0, 0.5, 2) <= 1e3);
    CHECK_THROWS_AS(decay_ratio(0.0, 0.0, 1), DivisionDomain);
}

TEST_CASE("nonstationary decay envelope for fixed t") {
    // |hhat_t(xi)| xi^2 / (1+|t|)^2 bounded by a sweep-calibrated constant
    double t = 3.0;
    double worst = 0.0;
    for (double xi : {40.0, 100.0, 400.0, 1000.0, 10000.0}) {
        double v = std::abs(fourier_h(t, xi)) * xi * xi / sq(1.0 + std::fabs(t));
        worst = std::max(worst, v);
    }
    CHECK(worst < 1.0); // measured ~1e-2 at xi=40, decreasing beyond
}

TEST_CASE("fourier_h domain envelope and refinement budget") {
    CHECK_THROWS_AS(fourier_h(2e6, 0.0), DomainError);
    CHECK_THROWS_AS(fourier_h(0.0, -2e6), DomainError);
    // |t|+2pi|xi| near the envelope seeds more panels than the budget allows
    CHECK_THROWS_AS(fourier_h(9.9e5, 9.9e5), AccuracyNotReached);
}
