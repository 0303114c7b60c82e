#include "lvlab/zeta.hpp"
#include "lvlab/errors.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace lvlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_2, B_4, ..., B_20 for the Stirling series
constexpr double kBern[10] = {1.0 / 6,    -1.0 / 30,       1.0 / 42,  -1.0 / 30,      5.0 / 66,
                              -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798,
                              -174611.0 / 330};

// B_{2k}/(2k)! for k = 1..15 (Euler-Maclaurin correction coefficients)
const double* em_coeffs() {
    static double c[16];
    static bool init = false;
    if (!init) {
        const double b[16] = {0,
                              1.0 / 6,
                              -1.0 / 30,
                              1.0 / 42,
                              -1.0 / 30,
                              5.0 / 66,
                              -691.0 / 2730,
                              7.0 / 6,
                              -3617.0 / 510,
                              43867.0 / 798,
                              -174611.0 / 330,
                              854513.0 / 138,
                              -236364091.0 / 2730,
                              8553103.0 / 6,
                              -23749461029.0 / 870,
                              8615841276005.0 / 14322};
        double fact = 1.0;
        for (int k = 1; k <= 15; ++k) {
            fact *= double(2 * k - 1) * double(2 * k);
            c[k] = b[k] / fact;
        }
        init = true;
    }
    return c;
}

} // namespace

cdouble log_gamma(cdouble z) {
    if (z.real() <= 0.0) throw DomainError("log_gamma: Re(z) must be positive");
    cdouble shift(0.0, 0.0);
    while (std::abs(z) < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    cdouble inv = 1.0 / z;
    cdouble inv2 = inv * inv;
    cdouble series(0.0, 0.0);
    cdouble p = inv;
    for (int k = 1; k <= 10; ++k) {
        series += kBern[k - 1] / (double(2 * k) * double(2 * k - 1)) * p;
        p *= inv2;
    }
    cdouble out = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
    return out - shift;
}

double riemann_siegel_theta(double t) {
    cdouble lg = log_gamma(cdouble(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * std::log(kPi);
}

cdouble zeta_half_line(double t) {
    cdouble s(0.5, t);
    auto M = std::int64_t(std::max(64.0, std::ceil(0.6 * std::fabs(t))));
    KahanC head;
    for (std::int64_t n = 1; n < M; ++n) {
        double ln = std::log(double(n));
        double amp = 1.0 / std::sqrt(double(n));
        head.add(cdouble(amp * std::cos(t * ln), -amp * std::sin(t * ln)));
    }
    double lM = std::log(double(M));
    cdouble Ms = cdouble(std::cos(t * lM), -std::sin(t * lM)) / std::sqrt(double(M)); // M^{-s}
    cdouble out = head.value();
    out += Ms * double(M) / (s - 1.0); // M^{1-s}/(s-1)
    out += 0.5 * Ms;
    // sum_k B_{2k}/(2k)! (s)_{2k-1} M^{1-s-2k}
    const double* c = em_coeffs();
    cdouble factor = s * Ms / double(M); // (s) * M^{-s-1}
    cdouble corr(0.0, 0.0);
    for (int k = 1; k <= 15; ++k) {
        corr += c[k] * factor;
        factor *= (s + double(2 * k - 1)) * (s + double(2 * k)) / (double(M) * double(M));
    }
    return out + corr;
}

HardyZ hardy_Z_detail(double t) {
    if (!(t > 0.0 && t <= 10000.0)) throw DomainError("hardy_Z: t outside (0, 1e4]");
    double th = riemann_siegel_theta(t);
    cdouble rot(std::cos(th), std::sin(th));
    cdouble z = rot * zeta_half_line(t);
    return {z.real(), std::fabs(z.imag())};
}

double hardy_Z(double t) { return hardy_Z_detail(t).value; }

void ZeroList::write(std::ostream& os) const {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "height=%.17g count=%zu\n", height_limit, ordinates.size());
    os << buf;
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12f %.3e\n", ordinates[i], residuals[i]);
        os << buf;
    }
}

ZeroList ZeroList::read(std::istream& is) {
    ZeroList zl;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    std::size_t count = 0;
    if (std::sscanf(line.c_str(), "height=%lg count=%zu", &zl.height_limit, &count) != 2)
        throw DomainError("ZeroList::read: bad header");
    while (std::getline(is, line)) {
        double g, r;
        if (std::sscanf(line.c_str(), "%lg %lg", &g, &r) != 2) continue;
        zl.ordinates.push_back(g);
        zl.residuals.push_back(r);
    }
    return zl;
}

double zero_count_main_term(double T) {
    return T / (2.0 * kPi) * std::log(T / (2.0 * kPi * std::exp(1.0))) + 7.0 / 8.0;
}

ZeroList find_zeros(double height, double scan_step) {
    if (!(height > 0.0 && height <= 10000.0)) throw DomainError("find_zeros: height");
    ZeroList zl;
    zl.height_limit = height;
    double t_prev = 1.0;
    double z_prev = hardy_Z(t_prev);
    for (double t = t_prev + scan_step; t_prev < height; t += scan_step) {
        double tc = std::min(t, height);
        double z = hardy_Z(tc);
        if ((z_prev < 0.0) != (z < 0.0)) {
            double a = t_prev, b = tc, za = z_prev;
            while (b - a > 1e-12) {
                double m = 0.5 * (a + b);
                double zm = hardy_Z(m);
                if ((za < 0.0) != (zm < 0.0))
                    b = m;
                else {
                    a = m;
                    za = zm;
                }
            }
            double root = 0.5 * (a + b);
            zl.ordinates.push_back(root);
            zl.residuals.push_back(std::fabs(hardy_Z(root)));
        }
        t_prev = tc;
        z_prev = z;
        if (tc >= height) break;
    }
    double expect = zero_count_main_term(height);
    if (std::fabs(double(zl.ordinates.size()) - expect) > 2.0)
        throw MissedZeroSuspected("find_zeros: count " + std::to_string(zl.ordinates.size()) +
                                  " vs main term " + std::to_string(expect));
    return zl;
}

} // namespace lvlab
