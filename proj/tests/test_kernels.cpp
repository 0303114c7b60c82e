#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lvlab/kernels.hpp"
#include "lvlab/util.hpp"

#include <cmath>
#include <vector>

using namespace lvlab;

namespace {

struct Arrays {
    std::vector<double> x, y, c;
};

Arrays random_arrays(std::uint64_t seed, std::size_t n, double xscale) {
    Rng rng(seed);
    Arrays a;
    for (std::size_t i = 0; i < n; ++i) {
        a.x.push_back(rng.uniform(0.0, xscale));
        a.y.push_back(rng.uniform(0.0, 2.0));
        a.c.push_back(rng.uniform(-1.0, 1.0));
    }
    return a;
}

double sum_abs(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += std::fabs(x);
    return s;
}

} // namespace

TEST_CASE("phase_sum scalar matches long-hand evaluation") {
    auto a = random_arrays(11, 37, 10.0);
    double t = 3.25;
    cdouble ref(0, 0);
    for (std::size_t i = 0; i < a.x.size(); ++i)
        ref += a.c[i] * cdouble(std::cos(t * a.x[i]), std::sin(t * a.x[i]));
    cdouble got = kernels::phase_sum_scalar(a.x.data(), a.c.data(), a.x.size(), t);
    CHECK(std::abs(got - ref) < 1e-12 * sum_abs(a.c) + 1e-14);
}

TEST_CASE("blend_phase_sum scalar matches long-hand evaluation") {
    auto a = random_arrays(12, 41, 2.0);
    double p = 7.5, q = -100.25;
    cdouble ref(0, 0);
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        double ph = p * a.x[i] + q * a.y[i];
        ref += a.c[i] * cdouble(std::cos(ph), std::sin(ph));
    }
    cdouble got = kernels::blend_phase_sum_scalar(a.x.data(), a.y.data(), a.c.data(), a.x.size(),
                                                  p, q);
    CHECK(std::abs(got - ref) < 1e-12 * sum_abs(a.c) + 1e-14);
}

#if defined(LVLAB_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with scalar reference") {
    if (!kernels::cpu_has_avx2()) {
        MESSAGE("AVX2 not available; skipping");
        return;
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto a = random_arrays(seed, 16 + std::size_t(seed) * 7, 12.0);
        // t values spanning small to large phases, incl. reduction-heavy range
        for (double t : {0.0, 1.0, -3.75, 147.0, 5000.0, -99731.5}) {
            cdouble s = kernels::phase_sum_scalar(a.x.data(), a.c.data(), a.x.size(), t);
            cdouble v = kernels::phase_sum_avx2(a.x.data(), a.c.data(), a.x.size(), t);
            CHECK(std::abs(s - v) <= 1e-12 * sum_abs(a.c) + 1e-13);
        }
        cdouble s = kernels::blend_phase_sum_scalar(a.x.data(), a.y.data(), a.c.data(),
                                                    a.x.size(), 321.5, -4000.25);
        cdouble v = kernels::blend_phase_sum_avx2(a.x.data(), a.y.data(), a.c.data(), a.x.size(),
                                                  321.5, -4000.25);
        CHECK(std::abs(s - v) <= 1e-12 * sum_abs(a.c) + 1e-13);
    }
}

TEST_CASE("avx2 rotate_accumulate agrees with scalar") {
    if (!kernels::cpu_has_avx2()) return;
    Rng rng(55);
    std::size_t n = 103;
    std::vector<double> cr(n), ci(n), sr(n), si(n);
    for (std::size_t i = 0; i < n; ++i) {
        cr[i] = rng.uniform(-1, 1);
        ci[i] = rng.uniform(-1, 1);
        double ph = rng.uniform(-3.14, 3.14);
        sr[i] = std::cos(ph);
        si[i] = std::sin(ph);
    }
    auto cr2 = cr, ci2 = ci;
    for (int step = 0; step < 50; ++step) {
        cdouble a = kernels::rotate_accumulate_scalar(cr.data(), ci.data(), sr.data(), si.data(),
                                                      n);
        cdouble b = kernels::rotate_accumulate_avx2(cr2.data(), ci2.data(), sr.data(), si.data(),
                                                    n);
        CHECK(std::abs(a - b) < 1e-11);
    }
}

TEST_CASE("avx2 falls back to scalar for phases beyond the reduction range") {
    if (!kernels::cpu_has_avx2()) return;
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0}, c = {1.0, 1.0, 1.0, 1.0};
    double t = 1e9; // t*x beyond 1e7
    cdouble s = kernels::phase_sum_scalar(x.data(), c.data(), x.size(), t);
    cdouble v = kernels::phase_sum_avx2(x.data(), c.data(), x.size(), t);
    CHECK(std::abs(s - v) == 0.0);
}
#endif

TEST_CASE("dispatch honors set_isa") {
    auto a = random_arrays(77, 29, 5.0);
    auto prev = kernels::active_isa();
    kernels::set_isa(kernels::Isa::Scalar);
    cdouble s = kernels::phase_sum(a.x.data(), a.c.data(), a.x.size(), 2.5);
    cdouble ref = kernels::phase_sum_scalar(a.x.data(), a.c.data(), a.x.size(), 2.5);
    CHECK(s == ref);
    kernels::set_isa(prev);
}

TEST_CASE("rotate_accumulate stepping tracks direct evaluation") {
    std::vector<double> logs = {0.1, 0.5, 1.2, 2.3, 3.1};
    std::size_t n = logs.size();
    std::vector<double> cr(n, 1.0), ci(n, 0.0), sr(n), si(n);
    double dt = 0.25;
    for (std::size_t i = 0; i < n; ++i) {
        sr[i] = std::cos(dt * logs[i]);
        si[i] = std::sin(dt * logs[i]);
    }
    std::vector<double> ones(n, 1.0);
    cdouble last;
    for (int k = 1; k <= 40; ++k)
        last = kernels::rotate_accumulate_scalar(cr.data(), ci.data(), sr.data(), si.data(), n);
    cdouble direct = kernels::phase_sum_scalar(logs.data(), ones.data(), n, 40 * dt);
    CHECK(std::abs(last - direct) < 1e-12);
}
