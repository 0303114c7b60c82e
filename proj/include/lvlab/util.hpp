#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace lvlab {

using cdouble = std::complex<double>;

// Kahan-compensated accumulator. Results are independent of how the caller
// chunks a fixed-order stream of addends past ~1 ulp.
class Kahan {
  public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanC {
  public:
    void add(cdouble z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cdouble value() const { return {re_.value(), im_.value()}; }

  private:
    Kahan re_, im_;
};

// splitmix64: the seed expander used everywhere a stream of raw 64-bit words
// is needed. Implementation-defined std distributions are avoided so outputs
// are byte-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo,hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  private:
    std::uint64_t state_;
};

inline double sq(double x) { return x * x; }

} // namespace lvlab
