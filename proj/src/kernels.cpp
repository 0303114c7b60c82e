#include "lvlab/kernels.hpp"
#include "lvlab/errors.hpp"

#include <cstdlib>
#include <cstring>

namespace lvlab::kernels {

bool cpu_has_avx2() {
#if defined(LVLAB_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Isa pick_default() {
    if (const char* env = std::getenv("LVLAB_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Isa::Avx2;
    }
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

Isa g_isa = pick_default();

} // namespace

Isa active_isa() { return g_isa; }

void set_isa(Isa isa) {
    if (isa == Isa::Avx2 && !cpu_has_avx2())
        throw DomainError("set_isa: AVX2 not available on this CPU/build");
    g_isa = isa;
}

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::complex<double> phase_sum(const double* x, const double* coef, std::size_t n, double t) {
#if defined(LVLAB_HAVE_AVX2)
    if (g_isa == Isa::Avx2) return phase_sum_avx2(x, coef, n, t);
#endif
    return phase_sum_scalar(x, coef, n, t);
}

std::complex<double> blend_phase_sum(const double* x, const double* y, const double* coef,
                                     std::size_t n, double a, double b) {
#if defined(LVLAB_HAVE_AVX2)
    if (g_isa == Isa::Avx2) return blend_phase_sum_avx2(x, y, coef, n, a, b);
#endif
    return blend_phase_sum_scalar(x, y, coef, n, a, b);
}

std::complex<double> rotate_accumulate(double* cur_re, double* cur_im, const double* step_re,
                                       const double* step_im, std::size_t n) {
#if defined(LVLAB_HAVE_AVX2)
    if (g_isa == Isa::Avx2) return rotate_accumulate_avx2(cur_re, cur_im, step_re, step_im, n);
#endif
    return rotate_accumulate_scalar(cur_re, cur_im, step_re, step_im, n);
}

} // namespace lvlab::kernels
