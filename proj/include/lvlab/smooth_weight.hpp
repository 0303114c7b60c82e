#pragma once

#include <cmath>

namespace lvlab {

// C-infinity smoothstep s(x) = g(x)/(g(x)+g(1-x)) with g(x)=exp(-1/x) for
// x>0. Exactly 0 for x<=0 and exactly 1 for x>=1.
inline double smoothstep(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ga = std::exp(-1.0 / x);
    double gb = std::exp(-1.0 / (1.0 - x));
    return ga / (ga + gb);
}

// The fixed weight w: supported on [1,2], identically 1 on [6/5, 9/5],
// smoothstep transitions of width 1/5 on either side.
struct SmoothWeight {
    static constexpr double kLeftEdge = 1.0;
    static constexpr double kPlateauLo = 1.2;
    static constexpr double kPlateauHi = 1.8;
    static constexpr double kRightEdge = 2.0;

    static double eval(double u) {
        if (u <= kLeftEdge || u >= kRightEdge) return 0.0;
        if (u >= kPlateauLo && u <= kPlateauHi) return 1.0;
        if (u < kPlateauLo) return smoothstep((u - kLeftEdge) / (kPlateauLo - kLeftEdge));
        return smoothstep((kRightEdge - u) / (kRightEdge - kPlateauHi));
    }

    // cached \int w, \int w^2 and (\int w^2)^3  (i.e. ||w||_L2^2 and ||w||_L2^6)
    static double l1();
    static double l2sq();
    static double l2_pow6();
};

inline double eval_weight(double u) { return SmoothWeight::eval(u); }

// Unit-height even bump: 1 on |x|<=1/2, smoothstep falloff, 0 for |x|>=1.
inline double unit_bump(double x) {
    double a = std::fabs(x);
    if (a >= 1.0) return 0.0;
    if (a <= 0.5) return 1.0;
    return smoothstep((1.0 - a) / 0.5);
}

// Inner smoothing kernel: supported on |x| <= 2 with psi1(0)=1.
inline double psi1_tilde(double x) { return unit_bump(0.5 * x); }

// Outer smoothing kernel: supported on [1/2, 4] with psi2(1)=1.
inline double psi2_tilde(double x) {
    if (x <= 0.5 || x >= 4.0) return 0.0;
    if (x < 0.75) return smoothstep((x - 0.5) / 0.25);
    if (x <= 3.0) return 1.0;
    return smoothstep(4.0 - x);
}

double unit_bump_mass();   // \int unit_bump
double unit_bump_l2sq();   // \int unit_bump^2

} // namespace lvlab
