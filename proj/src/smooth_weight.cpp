#include "lvlab/smooth_weight.hpp"
#include "lvlab/quadrature.hpp"

namespace lvlab {

namespace {

double compute_l1() {
    return integrate_refined([](double u) { return SmoothWeight::eval(u); }, 1.0, 2.0);
}

double compute_l2sq() {
    return integrate_refined([](double u) { return sq(SmoothWeight::eval(u)); }, 1.0, 2.0);
}

} // namespace

double SmoothWeight::l1() {
    static const double v = compute_l1();
    return v;
}

double SmoothWeight::l2sq() {
    static const double v = compute_l2sq();
    return v;
}

double SmoothWeight::l2_pow6() {
    static const double v = l2sq() * l2sq() * l2sq();
    return v;
}

double unit_bump_mass() {
    static const double v = integrate_refined([](double x) { return unit_bump(x); }, -1.0, 1.0);
    return v;
}

double unit_bump_l2sq() {
    static const double v =
        integrate_refined([](double x) { return sq(unit_bump(x)); }, -1.0, 1.0);
    return v;
}

} // namespace lvlab
