#pragma once

#include "lvlab/util.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lvlab {

// Nonnegative density sampled on a uniform grid over [1/4, 4] with spacing
// 1/(8T); carrier of the J(f) functional.
class DensityProfile {
  public:
    static constexpr double kLo = 0.25;
    static constexpr double kHi = 4.0;

    explicit DensityProfile(double T);

    double T() const { return T_; }
    double spacing() const { return h_; }
    std::size_t size() const { return f_.size(); }
    double grid(std::size_t i) const { return kLo + h_ * double(i); }
    double sample(std::size_t i) const { return f_[i]; }
    void set_sample(std::size_t i, double v);

    // linear interpolation, zero outside the grid
    double interp(double x) const;

    // f += unit_bump(T (u - center))
    void add_cell(double center);

    double l1() const;
    double l2sq() const;
    double sup() const;

    void write(std::ostream& os, const std::string& provenance = "") const;
    static DensityProfile read(std::istream& is);

  private:
    double T_, h_;
    std::vector<double> f_;
    mutable bool dirty_ = true;
    mutable double l1_ = 0.0, l2sq_ = 0.0, sup_ = 0.0;
    void refresh() const;
};

// sum over |m1| in (M1,2M1], m2 in (M2,2M2], |m3| <= c3*M3 of f((m1 u + m3)/m2)
double j_inner(const DensityProfile& f, double u, int M1, int M2, int M3, double c3 = 2.0);

struct JValueDetail {
    double value = 0.0;
    int M1 = 0, M2 = 0, M3 = 0; // attaining dyadic triple
};

// sup over dyadic M1,M2,M3 <= M of the grid-trapezoid integral of j_inner^2
double j_value(const DensityProfile& f, int M, JValueDetail* detail = nullptr, double c3 = 2.0);

// M^6 ||f||_1^2 + M^4 ||f||_2^2
double propsumaff_bound(const DensityProfile& f, double M);

// f~(u) = T int psi(T(u-u')) f(u') du' with the unit smoothstep bump
DensityProfile smooth_f(const DensityProfile& f);

DensityProfile fixture_random_intervals(double T, int count, std::uint64_t seed);
DensityProfile fixture_farey(int B, double T);

// number of distinct rationals r/s in [1/2,2] with r,s in (B,2B]
std::size_t farey_cell_count(int B);

} // namespace lvlab
