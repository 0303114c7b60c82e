#pragma once

#include "lvlab/util.hpp"

#include <cstddef>

namespace lvlab {

// hat{h}_t(xi) = \int_1^2 w(u)^2 u^{it} e(-xi u) du, with e(x)=exp(2 pi i x).
// Composite 16-point Gauss-Legendre, panel width seeded at a quarter of the
// shortest phase wavelength, then doubled until two consecutive refinements
// agree to 1e-9 relative (1e-13 absolute floor).

struct FourierEval {
    cdouble value;
    std::size_t panels;
};

inline constexpr double kFourierRelTol = 1e-9;
inline constexpr double kFourierAbsFloor = 1e-13;
inline constexpr std::size_t kFourierMaxPanels = 1000000;
inline constexpr double kFourierEnvelope = 1e6; // |t|, |xi| validity envelope

// h_t(u) = w(u)^2 u^{it}
cdouble eval_h(double t, double u);

FourierEval fourier_h_detail(double t, double xi);
cdouble fourier_h(double t, double xi);

// Fixed panel count, no refinement (test oracles).
cdouble fourier_h_fixed(double t, double xi, std::size_t panels);

// |hat{h}_t(xi)| divided by min((1+|t|)^j / |xi|^j, (1+|xi|)^j / |t|^j);
// a monitor for Lemma-style nonstationary-phase decay, not an assertion.
double decay_ratio(double t, double xi, int j);

} // namespace lvlab
