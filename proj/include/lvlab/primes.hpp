#pragma once

#include "lvlab/util.hpp"
#include "lvlab/zeta.hpp"

#include <cstdint>
#include <vector>

namespace lvlab {

// Dense tables up to X: Mobius mu, von Mangoldt Lambda (log p at prime
// powers), prime flags, all indexable by n.
struct SieveTables {
    std::uint64_t limit = 0;
    std::vector<signed char> mu;  // mu[n]
    std::vector<double> lambda;   // Lambda[n]
    std::vector<std::uint8_t> is_prime;

    double psi(std::uint64_t x) const;        // sum_{n<=x} Lambda(n)
    std::uint64_t pi(std::uint64_t x) const;  // #primes <= x
};

SieveTables sieve(std::uint64_t X, std::uint64_t memory_budget = 2000000000ULL);

// Windowed sums over (x, x+y], segmented (no dense table needed).
double psi_window(std::uint64_t x, std::uint64_t y);
std::uint64_t pi_window(std::uint64_t x, std::uint64_t y);

// y - sum over zeros rho = 1/2 +- i gamma of ((x+y)^rho - x^rho)/rho,
// conjugate pairs combined so the result is exactly real.
double explicit_window(double x, double y, const ZeroList& zeros);

// Zero-detector coefficients b_n = (sum_{d|n, d<=2 T^{1/100}} mu(d)) e^{-n/sqrt T}
struct DetectorCoeffs {
    std::int64_t N = 0;
    double divisor_threshold = 0.0;
    std::vector<double> b; // index k corresponds to n = N+1+k
};
DetectorCoeffs detector_coeffs(double T, std::int64_t N);

struct ScanRow {
    double x, y;
    double count;  // measured
    double target; // main term
    double tolerance;
    bool pass;
};

// pi(x+y) - pi(x) against y/log x with the paper-style tolerance
// y exp(-(log x)^{1/4}).
ScanRow corollary1_scan(double x, double y);

// Fraction of sampled x in [X, 2X] with |psi_window(x,y) - y| > y/4.
struct AlmostAllResult {
    double fraction_bad;
    std::uint64_t samples;
    double y;
};
AlmostAllResult almost_all_scan(std::uint64_t X, double y, std::uint64_t samples,
                                std::uint64_t seed);

} // namespace lvlab
