#pragma once

#include "lvlab/util.hpp"

#include <iosfwd>
#include <vector>

namespace lvlab {

// log Gamma(z) for Re(z) > 0: Stirling series after shifting to |z| >= 12.
cdouble log_gamma(cdouble z);

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi
double riemann_siegel_theta(double t);

// zeta(1/2 + it) by Euler-Maclaurin with tail below 1e-12 for 0 < t <= 1e4.
cdouble zeta_half_line(double t);

struct HardyZ {
    double value;
    double imag_residual; // |Im(e^{i theta} zeta)|, a construction check
};
HardyZ hardy_Z_detail(double t);
double hardy_Z(double t);

struct ZeroList {
    std::vector<double> ordinates; // strictly increasing positive gammas
    std::vector<double> residuals; // |Z(gamma)| after bisection
    double height_limit = 0.0;

    std::size_t size() const { return ordinates.size(); }
    void write(std::ostream& os) const; // one "gamma residual" row per zero
    static ZeroList read(std::istream& is);
};

// Scan step 0.05 with bisection refinement to 1e-12; throws
// MissedZeroSuspected if the count strays more than 2 from the
// Riemann-von Mangoldt main term.
ZeroList find_zeros(double height, double scan_step = 0.05);

// (T/2pi) log(T/(2 pi e)) + 7/8
double zero_count_main_term(double T);

} // namespace lvlab
