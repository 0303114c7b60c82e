#if defined(LVLAB_HAVE_AVX2)

#include "lvlab/kernels.hpp"
#include "lvlab/util.hpp"

#include <cmath>
#include <immintrin.h>

// 4-lane sincos with Cody-Waite pi/2 reduction and the classic Cephes
// minimax polynomials on [-pi/4, pi/4]. Valid for |x| <= 1e7 (quotient below
// 2^23 keeps q*pio2_1 exact); larger arguments take the scalar fallback.

namespace lvlab::kernels {

namespace {

constexpr double kTwoOverPi = 6.36619772367581382433e-01;
constexpr double kPio2_1 = 1.57079632673412561417e+00;  // first 33 bits of pi/2
constexpr double kPio2_1t = 6.07710050650619224932e-11; // pi/2 - pio2_1

constexpr double kSinC[6] = {1.58962301576546568060e-10, -2.50507477628578072866e-8,
                             2.75573136213857245213e-6,  -1.98412698295895385996e-4,
                             8.33333333332211858878e-3,  -1.66666666666666307295e-1};
constexpr double kCosC[6] = {-1.13585365213876817300e-11, 2.08757008419747316778e-9,
                             -2.75573141792967388112e-7,  2.48015872888517179954e-5,
                             -1.38888888888730564116e-3,  4.16666666666665929218e-2};

inline void sincos4(__m256d x, __m256d& s, __m256d& c) {
    const __m256d two_over_pi = _mm256_set1_pd(kTwoOverPi);
    __m256d q = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(q, _mm256_set1_pd(kPio2_1), x);
    r = _mm256_fnmadd_pd(q, _mm256_set1_pd(kPio2_1t), r);

    __m256d r2 = _mm256_mul_pd(r, r);

    __m256d sp = _mm256_set1_pd(kSinC[0]);
    for (int i = 1; i < 6; ++i) sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(kSinC[i]));
    sp = _mm256_fmadd_pd(_mm256_mul_pd(sp, r2), r, r); // r + r^3 P(r^2)

    __m256d cp = _mm256_set1_pd(kCosC[0]);
    for (int i = 1; i < 6; ++i) cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(kCosC[i]));
    cp = _mm256_mul_pd(cp, _mm256_mul_pd(r2, r2));
    cp = _mm256_fnmadd_pd(r2, _mm256_set1_pd(0.5), _mm256_add_pd(cp, _mm256_set1_pd(1.0)));

    __m128i qi = _mm256_cvtpd_epi32(q);
    __m128i swap32 = _mm_cmpeq_epi32(_mm_and_si128(qi, _mm_set1_epi32(1)), _mm_set1_epi32(1));
    __m128i ssign32 = _mm_cmpeq_epi32(_mm_and_si128(qi, _mm_set1_epi32(2)), _mm_set1_epi32(2));
    __m128i csign32 = _mm_cmpeq_epi32(
        _mm_and_si128(_mm_add_epi32(qi, _mm_set1_epi32(1)), _mm_set1_epi32(2)),
        _mm_set1_epi32(2));
    __m256d swapm = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(swap32));
    __m256d ssignm = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(ssign32));
    __m256d csignm = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(csign32));
    const __m256d signbit = _mm256_set1_pd(-0.0);

    s = _mm256_blendv_pd(sp, cp, swapm);
    c = _mm256_blendv_pd(cp, sp, swapm);
    s = _mm256_xor_pd(s, _mm256_and_pd(ssignm, signbit));
    c = _mm256_xor_pd(c, _mm256_and_pd(csignm, signbit));
}

struct VKahan {
    __m256d sum = _mm256_setzero_pd();
    __m256d comp = _mm256_setzero_pd();
    inline void add(__m256d x) {
        __m256d y = _mm256_sub_pd(x, comp);
        __m256d t = _mm256_add_pd(sum, y);
        comp = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
        sum = t;
    }
    double merge() const {
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, sum);
        Kahan k;
        for (double v : lanes) k.add(v);
        return k.value();
    }
};

constexpr double kMaxPhase = 1e7;

} // namespace

std::complex<double> phase_sum_avx2(const double* x, const double* coef, std::size_t n,
                                    double t) {
    VKahan re, im;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d ph = _mm256_mul_pd(_mm256_set1_pd(t), _mm256_loadu_pd(x + k));
        // phases beyond the reduction range: punt the whole call to scalar
        __m256d big = _mm256_cmp_pd(_mm256_andnot_pd(_mm256_set1_pd(-0.0), ph),
                                    _mm256_set1_pd(kMaxPhase), _CMP_GT_OQ);
        if (_mm256_movemask_pd(big)) return phase_sum_scalar(x, coef, n, t);
        __m256d s, c;
        sincos4(ph, s, c);
        __m256d w = _mm256_loadu_pd(coef + k);
        re.add(_mm256_mul_pd(w, c));
        im.add(_mm256_mul_pd(w, s));
    }
    Kahan rre, rim;
    rre.add(re.merge());
    rim.add(im.merge());
    for (; k < n; ++k) {
        double ph = t * x[k];
        rre.add(coef[k] * std::cos(ph));
        rim.add(coef[k] * std::sin(ph));
    }
    return {rre.value(), rim.value()};
}

std::complex<double> blend_phase_sum_avx2(const double* x, const double* y, const double* coef,
                                          std::size_t n, double a, double b) {
    VKahan re, im;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d ph = _mm256_fmadd_pd(_mm256_set1_pd(a), _mm256_loadu_pd(x + k),
                                     _mm256_mul_pd(_mm256_set1_pd(b), _mm256_loadu_pd(y + k)));
        __m256d big = _mm256_cmp_pd(_mm256_andnot_pd(_mm256_set1_pd(-0.0), ph),
                                    _mm256_set1_pd(kMaxPhase), _CMP_GT_OQ);
        if (_mm256_movemask_pd(big)) return blend_phase_sum_scalar(x, y, coef, n, a, b);
        __m256d s, c;
        sincos4(ph, s, c);
        __m256d w = _mm256_loadu_pd(coef + k);
        re.add(_mm256_mul_pd(w, c));
        im.add(_mm256_mul_pd(w, s));
    }
    Kahan rre, rim;
    rre.add(re.merge());
    rim.add(im.merge());
    for (; k < n; ++k) {
        double ph = a * x[k] + b * y[k];
        rre.add(coef[k] * std::cos(ph));
        rim.add(coef[k] * std::sin(ph));
    }
    return {rre.value(), rim.value()};
}

std::complex<double> rotate_accumulate_avx2(double* cur_re, double* cur_im,
                                            const double* step_re, const double* step_im,
                                            std::size_t n) {
    VKahan re, im;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d cr = _mm256_loadu_pd(cur_re + k);
        __m256d ci = _mm256_loadu_pd(cur_im + k);
        __m256d sr = _mm256_loadu_pd(step_re + k);
        __m256d si = _mm256_loadu_pd(step_im + k);
        __m256d nr = _mm256_fmsub_pd(cr, sr, _mm256_mul_pd(ci, si));
        __m256d ni = _mm256_fmadd_pd(cr, si, _mm256_mul_pd(ci, sr));
        _mm256_storeu_pd(cur_re + k, nr);
        _mm256_storeu_pd(cur_im + k, ni);
        re.add(nr);
        im.add(ni);
    }
    Kahan rre, rim;
    rre.add(re.merge());
    rim.add(im.merge());
    for (; k < n; ++k) {
        double nr = cur_re[k] * step_re[k] - cur_im[k] * step_im[k];
        double ni = cur_re[k] * step_im[k] + cur_im[k] * step_re[k];
        cur_re[k] = nr;
        cur_im[k] = ni;
        rre.add(nr);
        rim.add(ni);
    }
    return {rre.value(), rim.value()};
}

} // namespace lvlab::kernels

#endif // LVLAB_HAVE_AVX2
