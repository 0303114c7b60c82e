#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lvlab/dirichlet.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/quadrature.hpp"
#include "lvlab/smooth_weight.hpp"

#include <cmath>
#include <sstream>

using namespace lvlab;

namespace {

DirichletPolynomial ones_poly(std::int64_t N) {
    DirichletPolynomial D(N, 1.0);
    for (std::int64_t n = N + 1; n <= 2 * N; ++n) D.set_coeff(n, {1.0, 0.0});
    return D;
}

} // namespace

TEST_CASE("eval_raw on constant coefficients") {
    auto D = ones_poly(100);
    CHECK(D.eval_raw(0.0).real() == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(std::abs(DirichletPolynomial(50, 1.0).eval_raw(3.7)) == 0.0);

    // N=4, b=1, t=1: four-term hand sum
    auto D4 = ones_poly(4);
    cdouble ref(0, 0);
    for (int n = 5; n <= 8; ++n) ref += std::polar(1.0, std::log(double(n)));
    CHECK(std::abs(D4.eval_raw(1.0) - ref) < 1e-13);
}

TEST_CASE("eval_smoothed tracks N * l1(w) and the plateau restriction") {
    const std::int64_t N = 1 << 10;
    auto D = ones_poly(N);
    double got = D.eval_smoothed(0.0).real();
    CHECK(got == doctest::Approx(double(N) * SmoothWeight::l1()).epsilon(0.01));

    // coefficients supported where w = 1: smoothed equals raw restricted there
    DirichletPolynomial P(N, 1.0);
    std::int64_t lo = std::int64_t(std::ceil(1.21 * double(N)));
    std::int64_t hi = std::int64_t(std::floor(1.79 * double(N)));
    for (std::int64_t n = lo; n <= hi; ++n) P.set_coeff(n, {0.5, 0.25});
    for (double t : {0.0, 1.5, 12.25}) {
        cdouble a = P.eval_smoothed(t);
        cdouble b = P.eval_raw(t);
        CHECK(std::abs(a - b) < 1e-10 * double(N));
    }
    CHECK(std::abs(DirichletPolynomial(N, 1.0).eval_smoothed(2.0)) == 0.0);
}

TEST_CASE("coefficient bound is enforced and indices are checked") {
    DirichletPolynomial D(16, 1.0);
    CHECK_THROWS_AS(D.set_coeff(20, {1.5, 0.0}), DomainError);
    CHECK_THROWS_AS(D.set_coeff(16, {0.5, 0.0}), DomainError); // n = N excluded
    CHECK_THROWS_AS(D.set_coeff(33, {0.5, 0.0}), DomainError); // n > 2N
    D.set_coeff(17, {0.6, -0.8}); // modulus exactly 1
}

TEST_CASE("extract_large_values greedy smallest-first") {
    std::vector<std::pair<double, double>> vals = {{0.0, 5.0}, {0.5, 9.0}, {1.0, 5.0}};
    auto W = extract_large_values(vals, 4.0, 1.0);
    REQUIRE(W.size() == 2);
    CHECK(W.points[0] == 0.0);
    CHECK(W.points[1] == 1.0); // greedy drops 0.5

    auto none = extract_large_values(vals, 10.0, 1.0);
    CHECK(none.size() == 0);

    std::vector<std::pair<double, double>> spread = {{0.0, 5.0}, {2.0, 5.0}, {4.0, 5.0}};
    CHECK(extract_large_values(spread, 4.0, 1.0).size() == 3);

    // separation respected, global maximum's greedy representative kept
    Rng rng(9);
    std::vector<std::pair<double, double>> rand_vals;
    for (int i = 0; i < 400; ++i) rand_vals.emplace_back(0.25 * i, rng.uniform(0.0, 10.0));
    auto sel = extract_large_values(rand_vals, 5.0, 1.0);
    for (std::size_t i = 1; i < sel.size(); ++i)
        CHECK(sel.points[i] - sel.points[i - 1] >= 1.0);
}

TEST_CASE("additive energy: pinned examples") {
    PointSet one{{3.0}, 0.0, 10.0, 1.0};
    CHECK(additive_energy(one) == 1);
    PointSet two{{0.0, 1.0}, 0.0, 2.0, 1.0};
    CHECK(additive_energy(two) == 14); // enumeration of all 16 quadruples
    CHECK(energy_bruteforce(two) == 14);
    PointSet three{{0.0, 10.0, 20.0}, 0.0, 25.0, 10.0};
    CHECK(additive_energy(three) == 19); // pair-sum multiplicities 1,2,3,2,1
    CHECK(energy_bruteforce(three) == 19);
    PointSet empty{{}, 0.0, 1.0, 1.0};
    CHECK(energy_bruteforce(empty) == 0);
}

TEST_CASE("additive energy equals brute force on random separated sets") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto W = random_separated_set(seed, 5 + seed % 26, 0.0, 200.0, 2.0);
        CHECK(additive_energy(W) == energy_bruteforce(W));
    }
}

TEST_CASE("energy bounds: diagonal floor and separated ceiling") {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
        auto W = random_separated_set(seed, 20, 0.0, 300.0, 1.0);
        auto E = additive_energy(W);
        auto m = std::uint64_t(W.size());
        CHECK(E >= m * m);
        CHECK(E <= 3 * m * m * m);
    }
}

TEST_CASE("energy_bruteforce size limit") {
    auto W = random_separated_set(1, 61, 0.0, 500.0, 1.0);
    CHECK_THROWS_AS(energy_bruteforce(W), SizeLimit);
}

TEST_CASE("R function basics") {
    auto W = random_separated_set(12, 9, 0.0, 100.0, 2.0);
    RFunction R(W);
    CHECK(R(1.0).real() == doctest::Approx(9.0).epsilon(1e-13));
    CHECK(std::fabs(R(1.0).imag()) < 1e-12);
    CHECK_THROWS_AS(R(0.0), DomainError);

    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        double v = rng.uniform(0.1, 3.0);
        CHECK(std::fabs(R.abs(v) - R.abs(1.0 / v)) <= 1e-9);
    }

    PointSet zero{{0.0}, 0.0, 1.0, 1.0};
    RFunction R0(zero);
    for (double v : {0.3, 1.0, 2.5}) CHECK(R0.abs(v) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("R_smoothed") {
    PointSet empty{{}, 0.0, 1.0, 1.0};
    SmoothingSpec spec{2.0};
    CHECK(R_smoothed(RFunction(empty), 1.0, spec, 64.0) == 0.0);

    PointSet zero{{0.0}, 0.0, 1.0, 1.0};
    double v = R_smoothed(RFunction(zero), 1.0, spec, 64.0);
    // |R| = 1, so R~^2 <= sup psi2 * int psi1 = 3
    CHECK(v > 0.0);
    CHECK(v <= std::sqrt(3.0) + 1e-9);

    // dense trapezoid oracle at resolution 1/(64 NM)
    auto W = random_separated_set(4, 8, 0.0, 40.0, 2.0);
    RFunction R(W);
    double NM = 1024.0 * 2.0;
    double got = R_smoothed(R, 1.0, SmoothingSpec{2.0}, 1024.0);
    double lo = std::max(0.5, 1.0 - 2.0 / NM), hi = std::min(4.0, 1.0 + 2.0 / NM);
    std::size_t steps = 64 * 128;
    double h = (hi - lo) / double(steps);
    Kahan acc;
    for (std::size_t i = 0; i <= steps; ++i) {
        double up = lo + h * double(i);
        double w = (i == 0 || i == steps) ? 0.5 : 1.0;
        acc.add(w * NM * psi1_tilde(NM * (1.0 - up)) * psi2_tilde(up) * std::norm(R(up)));
    }
    double oracle = std::sqrt(std::max(0.0, h * acc.value()));
    CHECK(got == doctest::Approx(oracle).epsilon(0.02));
}

TEST_CASE("moments of R over [1/2, 2]") {
    PointSet zero{{0.0}, 0.0, 1.0, 1.0};
    CHECK(moment_L2(zero) == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(moment_L4(zero) == doctest::Approx(1.5).epsilon(1e-9));

    // monitors stay in a sane band on a small ensemble
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto W = random_separated_set(seed, 10, 0.0, 120.0, 2.0);
        double m2 = moment_L2(W);
        double m4 = moment_L4(W);
        double E = double(additive_energy(W));
        CHECK(m2 / double(W.size()) > 0.2);
        CHECK(m2 / double(W.size()) < 5.0);
        CHECK(m4 / E > 0.02);
        CHECK(m4 / E < 5.0);
    }
}

TEST_CASE("local constancy monitors") {
    PointSet zero{{0.0}, 0.0, 1.0, 1.0};
    double c = 1.0;
    CHECK(local_constancy_check(zero, 1.3, c) == doctest::Approx(1.0 / (2.0 * c)).epsilon(1e-6));

    DirichletPolynomial D(32, 1.0);
    D.set_coeff(40, {1.0, 0.0});
    CHECK(local_constancy_check(D, 7.7, c) == doctest::Approx(1.0 / (2.0 * c)).epsilon(1e-6));

    auto W = random_separated_set(6, 12, 0.0, 100.0, 2.0);
    for (double v : {0.8, 1.0, 1.33, 1.9}) {
        double ratio = local_constancy_check(W, v, c);
        CHECK(ratio <= 3.0 / (2.0 * c));
    }
}

TEST_CASE("extremal construction: witnesses carry large raw values") {
    auto built = extremal_construction(1 << 12, 0.6, 0.1);
    CHECK(built.J == 2);
    CHECK(built.poly.coefficient_bound() == 1.0);
    for (double tj : built.witnesses.points)
        CHECK(std::abs(built.poly.eval_raw(tj)) >= 0.3 * built.H);

    CHECK_THROWS_AS(extremal_construction(1 << 10, 0.6, 0.1), DegenerateRange); // J = 1

    auto big = extremal_construction(1 << 10, 0.6, 0.2);
    auto samples = scan_abs(big.poly, 1024.0, 2048.0, 0.25, EvalKind::Raw);
    auto locs = extract_large_values(samples, 0.3 * big.H, 1.0);
    CHECK(double(locs.size()) >= 0.01 * std::pow(1024.0, 0.8));
}

TEST_CASE("scan_abs matches pointwise evaluation") {
    auto built = extremal_construction(1 << 10, 0.6, 0.2);
    auto samples = scan_abs(built.poly, 1024.0, 1060.0, 0.25, EvalKind::Raw);
    for (std::size_t i = 0; i < samples.size(); i += 17) {
        double direct = std::abs(built.poly.eval_raw(samples[i].first));
        CHECK(samples[i].second == doctest::Approx(direct).epsilon(1e-8));
    }
    auto sm = scan_abs(built.poly, 1024.0, 1030.0, 0.25, EvalKind::Smoothed);
    for (std::size_t i = 0; i < sm.size(); i += 7) {
        double direct = std::abs(built.poly.eval_smoothed(sm[i].first));
        CHECK(sm[i].second == doctest::Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("serialization round trips") {
    auto W = random_separated_set(21, 14, 3.0, 90.0, 2.0);
    std::stringstream ss;
    W.write(ss);
    auto W2 = PointSet::read(ss);
    CHECK(W2.points == W.points);
    CHECK(W2.t0 == W.t0);
    CHECK(W2.length == W.length);
    CHECK(W2.separation == W.separation);

    DirichletPolynomial D(8, 2.0);
    Rng rng(2);
    for (int n = 9; n <= 16; ++n) D.set_coeff(n, {rng.uniform(-1, 1), rng.uniform(-1, 1)});
    std::stringstream ds;
    D.write(ds);
    auto D2 = DirichletPolynomial::read(ds);
    CHECK(D2.length() == 8);
    for (int n = 9; n <= 16; ++n) CHECK(D2.coeff(n) == D.coeff(n));
}

TEST_CASE("random separated set respects its own contract") {
    auto W = random_separated_set(99, 30, 5.0, 400.0, 3.0);
    W.validate();
    CHECK(W.size() == 30);
    CHECK_THROWS_AS(random_separated_set(1, 100, 0.0, 10.0, 1.0), DomainError);
}
