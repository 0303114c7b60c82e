#include "lvlab/kernels.hpp"
#include "lvlab/util.hpp"

#include <cmath>

namespace lvlab::kernels {

std::complex<double> phase_sum_scalar(const double* x, const double* coef, std::size_t n,
                                      double t) {
    Kahan re, im;
    for (std::size_t k = 0; k < n; ++k) {
        double ph = t * x[k];
        re.add(coef[k] * std::cos(ph));
        im.add(coef[k] * std::sin(ph));
    }
    return {re.value(), im.value()};
}

std::complex<double> blend_phase_sum_scalar(const double* x, const double* y, const double* coef,
                                            std::size_t n, double a, double b) {
    Kahan re, im;
    for (std::size_t k = 0; k < n; ++k) {
        double ph = a * x[k] + b * y[k];
        re.add(coef[k] * std::cos(ph));
        im.add(coef[k] * std::sin(ph));
    }
    return {re.value(), im.value()};
}

std::complex<double> rotate_accumulate_scalar(double* cur_re, double* cur_im,
                                              const double* step_re, const double* step_im,
                                              std::size_t n) {
    Kahan re, im;
    for (std::size_t k = 0; k < n; ++k) {
        double nr = cur_re[k] * step_re[k] - cur_im[k] * step_im[k];
        double ni = cur_re[k] * step_im[k] + cur_im[k] * step_re[k];
        cur_re[k] = nr;
        cur_im[k] = ni;
        re.add(nr);
        im.add(ni);
    }
    return {re.value(), im.value()};
}

} // namespace lvlab::kernels
