#pragma once

#include "lvlab/util.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lvlab {

// Finite delta-separated set W in [t0, t0+length].
struct PointSet {
    std::vector<double> points; // sorted ascending
    double t0 = 0.0;
    double length = 0.0;
    double separation = 1.0;

    std::size_t size() const { return points.size(); }
    void validate() const; // throws DomainError on invariant violation

    void write(std::ostream& os) const;
    static PointSet read(std::istream& is);
};

// Uniform rejection sampling of `count` points with pairwise separation
// >= delta in [t0, t0+length]; deterministic in the seed.
PointSet random_separated_set(std::uint64_t seed, std::size_t count, double t0, double length,
                              double delta);

// Coefficients b_n on (N, 2N], |b_n| <= coefficient_bound.
class DirichletPolynomial {
  public:
    DirichletPolynomial(std::int64_t N, double coefficient_bound);

    std::int64_t length() const { return N_; }
    double coefficient_bound() const { return bound_; }

    cdouble coeff(std::int64_t n) const;
    void set_coeff(std::int64_t n, cdouble b); // throws DomainError if |b| > bound

    // D(t) = sum_{N<n<=2N} b_n n^{it}
    cdouble eval_raw(double t) const;
    // D_N(t) = sum_n w(n/N) b_n n^{it}
    cdouble eval_smoothed(double t) const;

    const std::vector<double>& log_n() const { return logn_; }

    void write(std::ostream& os) const;
    static DirichletPolynomial read(std::istream& is);

  private:
    std::int64_t N_;
    double bound_;
    std::vector<double> bre_, bim_;
    std::vector<double> logn_;
    mutable std::vector<double> wre_, wim_; // smoothed coefficients, built lazily
    bool has_imag_ = false;

    void ensure_smoothed() const;
    std::size_t idx(std::int64_t n) const;
};

// Greedy smallest-first extraction of a delta-separated subset of the points
// with value >= threshold. `values` must be sorted by t.
PointSet extract_large_values(const std::vector<std::pair<double, double>>& values,
                              double threshold, double delta);

// |D(.)| sampled on a grid of the given spacing over [t_lo, t_hi], via
// incremental phase rotation with periodic re-sync.
enum class EvalKind { Raw, Smoothed };
std::vector<std::pair<double, double>> scan_abs(const DirichletPolynomial& D, double t_lo,
                                                double t_hi, double spacing = 0.25,
                                                EvalKind kind = EvalKind::Raw);

// Ordered quadruples with |w1+w2-w3-w4| <= slack (closed inequality).
std::uint64_t additive_energy(const PointSet& W, double slack = 1.0);
std::uint64_t energy_bruteforce(const PointSet& W, double slack = 1.0); // |W| <= 60

// R(v) = sum_{t in W} |v|^{it}
class RFunction {
  public:
    explicit RFunction(const PointSet& W);
    cdouble operator()(double v) const; // throws DomainError at v = 0
    double abs(double v) const;
    std::size_t set_size() const { return pts_.size(); }

  private:
    std::vector<double> pts_, ones_;
};

// Smoothing data for the R-tilde construction; kernels are the fixed
// smoothstep family psi1 (support |x|<=2) and psi2 (support [1/2,4]).
struct SmoothingSpec {
    double M = 1.0; // dyadic scale >= 1
};

// R~(u) = ( int N*M psi1(N*M (u-u')) psi2(u') |R(u')|^2 du' )^{1/2}
double R_smoothed(const RFunction& R, double u, const SmoothingSpec& spec, double N);

// int_{1/2}^{2} |R(v)|^p dv for p = 2, 4 at resolution <= 1/(8T).
double moment_L2(const PointSet& W);
double moment_L4(const PointSet& W);

// Monitors for local near-constancy: |R(v)| / (T int_{|v'-v|<=c/T} |R|) and
// |D(t)| / int_{|u-t|<=c} |D|.
double local_constancy_check(const PointSet& W, double v, double c = 1.0);
double local_constancy_check(const DirichletPolynomial& D, double t, double c = 1.0);

// The lower-bound construction: J = floor(eps N^{1-sigma}) witness points
// spaced eps^{-1} N^{1-sigma} starting at T0 (default N), one coefficient
// block of width ~N^sigma per witness.
struct ExtremalConstruction {
    DirichletPolynomial poly;
    PointSet witnesses;
    double H; // block height scale N^sigma
    int J;
};
ExtremalConstruction extremal_construction(std::int64_t N, double sigma, double eps,
                                           std::optional<double> T0 = std::nullopt);

} // namespace lvlab
