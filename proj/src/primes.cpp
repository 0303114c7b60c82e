#include "lvlab/primes.hpp"
#include "lvlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lvlab {

namespace {

std::vector<std::uint32_t> primes_upto(std::uint32_t lim) {
    std::vector<bool> comp(lim + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= lim; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = std::uint64_t(p) * p; q <= lim; q += p) comp[q] = true;
    }
    return out;
}

// Window sieve over (x, x+y]: prime flags and Lambda values.
struct Window {
    std::uint64_t lo; // first n in window = x+1
    std::vector<double> lambda;
    std::vector<std::uint8_t> prime;
};

Window sieve_window(std::uint64_t x, std::uint64_t y) {
    if (y == 0) return {x + 1, {}, {}};
    std::uint64_t hi = x + y;
    auto root = std::uint32_t(std::sqrt(double(hi))) + 2;
    auto primes = primes_upto(root);
    Window wnd;
    wnd.lo = x + 1;
    wnd.lambda.assign(std::size_t(y), 0.0);
    wnd.prime.assign(std::size_t(y), 1);
    for (std::uint32_t p : primes) {
        // mark composites; a prime p inside the window stays unmarked
        std::uint64_t start = std::max<std::uint64_t>(std::uint64_t(p) * p,
                                                      (wnd.lo + p - 1) / p * std::uint64_t(p));
        for (std::uint64_t q = start; q <= hi; q += p)
            if (q >= wnd.lo) wnd.prime[std::size_t(q - wnd.lo)] = 0;
        // prime powers in the window carry Lambda = log p
        double lp = std::log(double(p));
        std::uint64_t pk = p;
        while (pk <= hi / p) {
            pk *= p;
            if (pk >= wnd.lo && pk <= hi) wnd.lambda[std::size_t(pk - wnd.lo)] = lp;
        }
        if (p >= wnd.lo && p <= hi) wnd.lambda[std::size_t(p - wnd.lo)] = lp;
    }
    for (std::uint64_t n = wnd.lo; n <= hi; ++n) {
        std::size_t i = std::size_t(n - wnd.lo);
        if (n <= 1) {
            wnd.prime[i] = 0;
            continue;
        }
        if (n <= root) {
            // small n: primality decided by the base list
            bool isp = std::binary_search(primes.begin(), primes.end(), std::uint32_t(n));
            wnd.prime[i] = isp ? 1 : 0;
            if (isp) wnd.lambda[i] = std::log(double(n));
        } else if (wnd.prime[i]) {
            wnd.lambda[i] = std::log(double(n));
        }
    }
    return wnd;
}

} // namespace

SieveTables sieve(std::uint64_t X, std::uint64_t memory_budget) {
    if (X < 1) throw DomainError("sieve: X >= 1 required");
    if (X * 10 > memory_budget) throw BudgetExceeded("sieve: tables over memory budget");
    SieveTables t;
    t.limit = X;
    t.mu.assign(X + 1, 1);
    t.lambda.assign(X + 1, 0.0);
    t.is_prime.assign(X + 1, 1);
    if (X >= 1) {
        t.is_prime[0] = 0;
        t.mu[0] = 0;
    }
    t.is_prime[1] = 0;
    for (std::uint64_t p = 2; p <= X; ++p) {
        if (!t.is_prime[p]) continue;
        double lp = std::log(double(p));
        for (std::uint64_t q = 2 * p; q <= X; q += p) t.is_prime[q] = 0;
        for (std::uint64_t q = p; q <= X; q += p) t.mu[q] = -t.mu[q];
        std::uint64_t p2 = p * p;
        if (p2 <= X)
            for (std::uint64_t q = p2; q <= X; q += p2) t.mu[q] = 0;
        for (std::uint64_t pk = p; pk <= X; pk *= p) {
            t.lambda[pk] = lp;
            if (pk > X / p) break;
        }
    }
    return t;
}

double SieveTables::psi(std::uint64_t x) const {
    if (x > limit) throw DomainError("SieveTables::psi: x beyond table");
    Kahan s;
    for (std::uint64_t n = 2; n <= x; ++n) s.add(lambda[n]);
    return s.value();
}

std::uint64_t SieveTables::pi(std::uint64_t x) const {
    if (x > limit) throw DomainError("SieveTables::pi: x beyond table");
    std::uint64_t c = 0;
    for (std::uint64_t n = 2; n <= x; ++n) c += is_prime[n];
    return c;
}

double psi_window(std::uint64_t x, std::uint64_t y) {
    auto wnd = sieve_window(x, y);
    Kahan s;
    for (double v : wnd.lambda) s.add(v);
    return s.value();
}

std::uint64_t pi_window(std::uint64_t x, std::uint64_t y) {
    auto wnd = sieve_window(x, y);
    std::uint64_t c = 0;
    for (auto f : wnd.prime) c += f;
    return c;
}

double explicit_window(double x, double y, const ZeroList& zeros) {
    Kahan sum;
    double lx = std::log(x), lxy = std::log(x + y);
    double sx = std::sqrt(x), sxy = std::sqrt(x + y);
    for (double g : zeros.ordinates) {
        // 2 Re[((x+y)^rho - x^rho)/rho], rho = 1/2 + i gamma
        cdouble rho(0.5, g);
        cdouble top = sxy * cdouble(std::cos(g * lxy), std::sin(g * lxy)) -
                      sx * cdouble(std::cos(g * lx), std::sin(g * lx));
        sum.add(2.0 * (top / rho).real());
    }
    return y - sum.value();
}

DetectorCoeffs detector_coeffs(double T, std::int64_t N) {
    if (N > 10000000) throw BudgetExceeded("detector_coeffs: N > 1e7");
    DetectorCoeffs out;
    out.N = N;
    out.divisor_threshold = 2.0 * std::pow(T, 0.01);
    auto dmax = std::uint64_t(std::floor(out.divisor_threshold));
    auto tables = sieve(std::max<std::uint64_t>(dmax, 1));
    std::vector<double> acc(std::size_t(N), 0.0);
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        if (tables.mu[d] == 0) continue;
        double m = double(tables.mu[d]);
        // multiples of d in (N, 2N]
        std::uint64_t first = (std::uint64_t(N) / d + 1) * d;
        for (std::uint64_t n = first; n <= std::uint64_t(2 * N); n += d)
            acc[std::size_t(n - N - 1)] += m;
    }
    double rt = std::sqrt(T);
    out.b.resize(std::size_t(N));
    for (std::int64_t k = 0; k < N; ++k)
        out.b[std::size_t(k)] = acc[std::size_t(k)] * std::exp(-double(N + 1 + k) / rt);
    return out;
}

ScanRow corollary1_scan(double x, double y) {
    if (y < 0.0) throw DomainError("corollary1_scan: y < 0");
    ScanRow row;
    row.x = x;
    row.y = y;
    if (y == 0.0) {
        row.count = 0.0;
        row.target = 0.0;
        row.tolerance = 0.0;
        row.pass = true;
        return row;
    }
    row.count = double(pi_window(std::uint64_t(x), std::uint64_t(y)));
    row.target = y / std::log(x);
    row.tolerance = y * std::exp(-std::pow(std::log(x), 0.25));
    row.pass = std::fabs(row.count - row.target) <= row.tolerance;
    return row;
}

AlmostAllResult almost_all_scan(std::uint64_t X, double y, std::uint64_t samples,
                                std::uint64_t seed) {
    if (samples == 0) throw DomainError("almost_all_scan: samples must be positive");
    if (X > 100000000ULL) throw BudgetExceeded("almost_all_scan: X > 1e8");
    Rng rng(seed);
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t x = X + rng.below(X);
        double v = psi_window(x, std::uint64_t(y));
        if (std::fabs(v - y) > 0.25 * y) ++bad;
    }
    return {double(bad) / double(samples), samples, y};
}

} // namespace lvlab
