#pragma once

#include "lvlab/errors.hpp"
#include "lvlab/util.hpp"

#include <cstddef>

namespace lvlab {

// 16-point Gauss-Legendre rule on [-1,1].
inline constexpr int kGlOrder = 16;
inline constexpr double kGlNode[kGlOrder] = {
    -0.9894009349916499325961542, -0.9445750230732325760779884, -0.8656312023878317438804679,
    -0.7554044083550030338951012, -0.6178762444026437484466718, -0.4580167776572273863424194,
    -0.2816035507792589132304605, -0.0950125098376374401853193, 0.0950125098376374401853193,
    0.2816035507792589132304605,  0.4580167776572273863424194,  0.6178762444026437484466718,
    0.7554044083550030338951012,  0.8656312023878317438804679,  0.9445750230732325760779884,
    0.9894009349916499325961542};
inline constexpr double kGlWeight[kGlOrder] = {
    0.0271524594117540948517806, 0.0622535239386478928628438, 0.0951585116824927848099251,
    0.1246289712555338720524763, 0.1495959888165767320815017, 0.1691565193950025381893121,
    0.1826034150449235888667637, 0.1894506104550684962853967, 0.1894506104550684962853967,
    0.1826034150449235888667637, 0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251, 0.0622535239386478928628438,
    0.0271524594117540948517806};

template <class F>
double gl_panels(F&& f, double a, double b, std::size_t panels) {
    Kahan acc;
    double h = (b - a) / double(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        double lo = a + h * double(p);
        double mid = lo + 0.5 * h;
        for (int i = 0; i < kGlOrder; ++i)
            acc.add(0.5 * h * kGlWeight[i] * f(mid + 0.5 * h * kGlNode[i]));
    }
    return acc.value();
}

// Panel-doubling refinement for smooth real integrands.
template <class F>
double integrate_refined(F&& f, double a, double b, double rel_tol = 1e-12,
                         double abs_floor = 1e-14, std::size_t start_panels = 8,
                         std::size_t max_panels = std::size_t(1) << 22) {
    std::size_t panels = start_panels;
    double v = gl_panels(f, a, b, panels);
    while (true) {
        if (2 * panels > max_panels)
            throw AccuracyNotReached("integrate_refined: panel budget exhausted");
        double v2 = gl_panels(f, a, b, 2 * panels);
        double err = v2 > v ? v2 - v : v - v2;
        if (err <= rel_tol * (v2 < 0 ? -v2 : v2) + abs_floor) return v2;
        v = v2;
        panels *= 2;
    }
}

} // namespace lvlab
