#include "lvlab/poisson.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/fourier.hpp"
#include "lvlab/kernels.hpp"
#include "lvlab/quadrature.hpp"
#include "lvlab/smooth_weight.hpp"
#include "lvlab/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace lvlab {

std::size_t HhatCache::KeyHash::operator()(const Key& k) const {
    std::uint64_t a = std::bit_cast<std::uint64_t>(k.dt);
    std::uint64_t b = std::bit_cast<std::uint64_t>(k.xi);
    std::uint64_t h = a * 0x9e3779b97f4a7c15ULL ^ (b + 0x7f4a7c159e3779b9ULL + (a << 6));
    return std::size_t(h ^ (h >> 29));
}

cdouble HhatCache::get(double dt, double xi) {
    Key k{dt, xi};
    auto it = map_.find(k);
    if (it != map_.end()) {
        ++hits_;
        return it->second;
    }
    cdouble v = fourier_h(dt, xi);
    ++evals_;
    map_.emplace(k, v);
    // conjugate symmetry: hhat_{-t}(-xi) = conj(hhat_t(xi))
    map_.emplace(Key{-dt, -xi}, std::conj(v));
    return v;
}

ImComputer::ImComputer(const PointSet& W, std::int64_t N) : pts_(W.points), N_(N) {
    if (pts_.size() > 256) throw BudgetExceeded("compute_I_m: |W| > 256");
}

const std::vector<cdouble>& ImComputer::matrix_for(int m) {
    auto it = mats_.find(m);
    if (it != mats_.end()) return it->second;
    std::size_t n = pts_.size();
    std::vector<cdouble> A(n * n);
    double xi = double(m) * double(N_);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) A[j * n + k] = cache_.get(pts_[j] - pts_[k], xi);
    return mats_.emplace(m, std::move(A)).first->second;
}

cdouble ImComputer::I_m(int m1, int m2, int m3) {
    const auto& A1 = matrix_for(m1);
    const auto& A2 = matrix_for(m2);
    const auto& A3 = matrix_for(m3);
    std::size_t n = pts_.size();
    KahanC tr;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cdouble a = A1[i * n + j];
            KahanC inner;
            for (std::size_t k = 0; k < n; ++k) inner.add(A2[j * n + k] * A3[k * n + i]);
            tr.add(a * inner.value());
        }
    double N3 = double(N_) * double(N_) * double(N_);
    return N3 * tr.value();
}

TraceReport s_split(const PointSet& W, std::int64_t N, double eps, std::uint64_t work_budget) {
    TraceReport rep;
    rep.N = N;
    rep.set_size = W.size();
    double T = std::max(W.length, 1.0);
    int Mstar = int(std::ceil(std::pow(T, 1.0 + eps) / double(N)));
    rep.truncation_radius = Mstar;

    double nw = double(W.size());
    double N3 = double(N) * double(N) * double(N);
    rep.main_term_asymptotic = N3 * nw * SmoothWeight::l2_pow6();

    if (W.size() == 0) return rep;

    std::uint64_t box = std::uint64_t(2 * Mstar + 1);
    std::uint64_t work = box * box * box * std::uint64_t(W.size()) * W.size() * W.size();
    if (work > work_budget) throw BudgetExceeded("s_split: truncation box over work budget");

    // route A
    auto G = build_gram(W, N, work_budget);
    rep.trace3_exact = trace_gram_cubed(G).value;

    // route B: I_m summed in lexicographic m order, classed by zero pattern
    ImComputer im(W, N);
    KahanC acc[4];
    for (int m1 = -Mstar; m1 <= Mstar; ++m1)
        for (int m2 = -Mstar; m2 <= Mstar; ++m2)
            for (int m3 = -Mstar; m3 <= Mstar; ++m3)
                acc[int(classify_triple(m1, m2, m3))].add(im.I_m(m1, m2, m3));
    rep.S0 = acc[0].value();
    rep.S1 = acc[1].value();
    rep.S2 = acc[2].value();
    rep.S3 = acc[3].value();
    rep.main_term = rep.S0.real();

    // sampled tail estimate on the first skipped shell |m|_inf = M*+1
    int s = Mstar + 1;
    double shell_max = 0.0;
    const int probes[7][3] = {{s, s, s},  {s, -s, s}, {s, 0, 0}, {0, s, 0},
                              {0, 0, -s}, {s, s, 0},  {0, -s, s}};
    for (auto& p : probes) shell_max = std::max(shell_max, std::abs(im.I_m(p[0], p[1], p[2])));
    double shell_count = std::pow(2.0 * s + 1.0, 3.0) - std::pow(2.0 * s - 1.0, 3.0);
    rep.tail_bound = 2.0 * shell_count * shell_max;

    cdouble recon = rep.S0 + rep.S1 + rep.S2 + rep.S3;
    rep.residual = std::abs(rep.trace3_exact - recon.real());
    rep.imag_residual = std::fabs(recon.imag());
    rep.residual_asymptotic =
        std::abs(rep.trace3_exact -
                 (rep.main_term_asymptotic + (rep.S1 + rep.S2 + rep.S3).real()));
    rep.diag_gap = std::abs(rep.S0 - cdouble(rep.main_term_asymptotic, 0.0));
    rep.hhat_evaluations = im.hhat_evaluations();
    return rep;
}

double key_cancel_rhs(const PointSet& W, std::int64_t N, int m1, int m2, int m3, double c) {
    if (m1 == 0 || m2 == 0 || m3 == 0)
        throw DomainError("key_cancel_rhs: all m_i must be nonzero");
    RFunction R(W);
    double T = std::max(W.length, 1.0);
    double halfwidth = c / (double(N) * std::fabs(double(m2)));

    // strip: |v2 - center(v1)| <= halfwidth with center = -(m1 v1 + m3)/m2
    auto center = [&](double v1) { return -(double(m1) * v1 + double(m3)) / double(m2); };

    // quick reject: the linear form attains its extremes at box corners
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double v1 : {0.5, 2.0})
        for (double v2 : {0.5, 2.0}) {
            double x = double(m1) * v1 + double(m2) * v2 + double(m3);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    if (lo > c / double(N) || hi < -c / double(N)) return 0.0;

    auto inner = [&](double v1) {
        double ctr = center(v1);
        double a = std::max(0.5, ctr - halfwidth);
        double b = std::min(2.0, ctr + halfwidth);
        if (b <= a) return 0.0;
        auto f = [&](double v2) { return R.abs(v2 / v1) * R.abs(v2); };
        // node spacing <= 1/(8 N |m2|) and <= 1/(16 T): GL16 panels
        double pw = std::min(16.0 / (8.0 * double(N) * std::fabs(double(m2))), 1.0 / (8.0 * T));
        auto panels = std::size_t(std::ceil((b - a) / pw));
        return gl_panels(f, a, b, std::max<std::size_t>(panels, 2));
    };
    auto outer = [&](double v1) {
        double iv = inner(v1);
        return iv == 0.0 ? 0.0 : R.abs(v1) * iv;
    };
    double pw = 1.0 / (8.0 * std::max({T, double(N) * std::fabs(double(m1)) / c, 4.0}));
    auto panels = std::size_t(std::ceil(1.5 / pw));
    double v = gl_panels(outer, 0.5, 2.0, panels);
    double v2 = gl_panels(outer, 0.5, 2.0, 2 * panels);
    if (std::fabs(v2 - v) > 0.05 * std::fabs(v2) + 1e-9)
        throw AccuracyNotReached("key_cancel_rhs: strip quadrature not settling");
    double N3 = double(N) * double(N) * double(N);
    return N3 * v2;
}

AfeResult afe_check(double t, std::int64_t N, double eps, double U) {
    if (std::fabs(t) < 4.0) throw DomainError("afe_check: |t| must be >= 4");
    int Mstar = int(std::ceil(std::pow(2.0 * std::fabs(t), 1.0 + eps) / double(N)));
    KahanC lhs_acc;
    for (int m = -Mstar; m <= Mstar; ++m) {
        if (m == 0) continue;
        lhs_acc.add(fourier_h(t, double(m) * double(N)));
    }
    double lhs = std::abs(lhs_acc.value());

    // the reflected polynomial has length ~ 2|t|/N; below one full term the
    // range is empty (spec example: both sides negligible when 2|t| < N)
    auto mmax = 2.0 * std::fabs(t) < double(N)
                    ? std::int64_t(0)
                    : std::int64_t(std::ceil(2.0 * std::fabs(t) / double(N)));
    std::vector<double> logm, ones;
    for (std::int64_t m = 1; m <= mmax; ++m) {
        logm.push_back(std::log(double(m)));
        ones.push_back(1.0);
    }
    auto f = [&](double u) {
        if (logm.empty()) return 0.0;
        return std::abs(
            kernels::phase_sum(logm.data(), ones.data(), logm.size(), -(t + u)));
    };
    double integral = integrate_refined(f, -U, U, 1e-7, 1e-10, 64, 1 << 14);
    return {lhs, integral / std::sqrt(std::fabs(t))};
}

double compute_Itilde(const PointSet& W, std::int64_t N, int m1, int m2, int m3,
                      const SmoothingSpec& spec, double M1, double M) {
    double am1 = std::fabs(double(m1)), am2 = std::fabs(double(m2)), am3 = std::fabs(double(m3));
    if (!(am1 > M1 && am1 <= 2.0 * M1))
        throw DomainError("compute_Itilde: |m1| not in (M1, 2 M1]");
    if (!(am2 >= 0.5 * M && am2 <= 4.0 * M && am3 >= 0.5 * M && am3 <= 4.0 * M))
        throw DomainError("compute_Itilde: |m2|,|m3| not comparable to M");
    if (W.size() == 0) return 0.0;
    RFunction R(W);
    auto f = [&](double v1) {
        double top = double(m1) * v1 + double(m3);
        double r1 = R.abs(v1);
        if (r1 == 0.0) return 0.0;
        double u1 = top / (double(m2) * v1);
        double u2 = top / double(m2);
        double a = R_smoothed(R, u1, spec, double(N));
        if (a == 0.0) return 0.0;
        double b = R_smoothed(R, u2, spec, double(N));
        return r1 * a * b;
    };
    double pw = 1.0 / (8.0 * double(N) * M);
    auto panels = std::size_t(std::ceil(1.5 / pw));
    return gl_panels(f, 0.5, 2.0, panels);
}

} // namespace lvlab
