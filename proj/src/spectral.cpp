#include "lvlab/spectral.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/kernels.hpp"
#include "lvlab/smooth_weight.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace lvlab {

double GramMatrix::hermitian_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

GramMatrix build_gram(const PointSet& W, std::int64_t N, std::uint64_t work_budget) {
    std::size_t m = W.size();
    if (std::uint64_t(m) * m * std::uint64_t(N) > work_budget)
        throw BudgetExceeded("build_gram: |W|^2 N over work budget");
    std::vector<double> logn, w2;
    logn.reserve(std::size_t(N));
    w2.reserve(std::size_t(N));
    for (std::int64_t n = N; n <= 2 * N; ++n) {
        double w = SmoothWeight::eval(double(n) / double(N));
        if (w == 0.0) continue;
        logn.push_back(std::log(double(n)));
        w2.push_back(w * w);
    }
    GramMatrix G;
    G.dim = m;
    G.N = N;
    G.a.assign(m * m, cdouble(0, 0));
    Kahan diag;
    for (double c : w2) diag.add(c);
    for (std::size_t i = 0; i < m; ++i) G.at(i, i) = diag.value();
    // upper triangle computed, lower mirrored
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            cdouble v = kernels::phase_sum(logn.data(), w2.data(), w2.size(),
                                           W.points[i] - W.points[j]);
            G.at(i, j) = v;
            G.at(j, i) = std::conj(v);
        }
    return G;
}

double trace_gram(const GramMatrix& G) {
    Kahan tr;
    for (std::size_t i = 0; i < G.dim; ++i) tr.add(G.at(i, i).real());
    return tr.value();
}

namespace {

std::vector<cdouble> matmul(const GramMatrix& G, const std::vector<cdouble>& B) {
    std::size_t m = G.dim;
    std::vector<cdouble> C(m * m, cdouble(0, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            cdouble g = G.at(i, k);
            for (std::size_t j = 0; j < m; ++j) C[i * m + j] += g * B[k * m + j];
        }
    return C;
}

std::vector<cdouble> apply(const GramMatrix& G, const std::vector<cdouble>& v) {
    std::size_t m = G.dim;
    std::vector<cdouble> out(m, cdouble(0, 0));
    for (std::size_t i = 0; i < m; ++i) {
        KahanC acc;
        for (std::size_t j = 0; j < m; ++j) acc.add(G.at(i, j) * v[j]);
        out[i] = acc.value();
    }
    return out;
}

double norm2(const std::vector<cdouble>& v) {
    Kahan s;
    for (auto& z : v) s.add(std::norm(z));
    return std::sqrt(s.value());
}

// Rayleigh-quotient power iteration; returns the converged eigenvalue or
// nullopt after max_iter.
std::optional<double> power_iterate(const GramMatrix& G, std::vector<cdouble> v,
                                    int max_iter = 500, double rel_tol = 1e-12) {
    double nv = norm2(v);
    if (nv == 0.0) return std::nullopt;
    for (auto& z : v) z /= nv;
    double lambda_prev = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        auto u = apply(G, v);
        Kahan ray_re;
        for (std::size_t i = 0; i < v.size(); ++i)
            ray_re.add((std::conj(v[i]) * u[i]).real());
        double lambda = ray_re.value();
        double nu = norm2(u);
        if (nu == 0.0) return 0.0;
        for (auto& z : u) z /= nu;
        v = std::move(u);
        if (it > 0 && std::fabs(lambda - lambda_prev) < rel_tol * std::fabs(lambda))
            return lambda;
        lambda_prev = lambda;
    }
    return std::nullopt;
}

} // namespace

double top_singular(const GramMatrix& G) {
    if (G.dim == 0) return 0.0;
    double tr1 = trace_gram(G);

    std::vector<cdouble> ones(G.dim, cdouble(1.0, 0.0));
    auto lambda = power_iterate(G, ones);
    if (!lambda) {
        // degenerate top gap: seeded random restarts, take the max estimate
        double best = -std::numeric_limits<double>::infinity();
        bool any = false;
        for (std::uint64_t s = 1; s <= 5; ++s) {
            Rng rng(0xABCD0000 + s);
            std::vector<cdouble> v(G.dim);
            for (auto& z : v) z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
            if (auto l = power_iterate(G, std::move(v))) {
                best = std::max(best, *l);
                any = true;
            }
        }
        if (!any) throw NoConvergence("top_singular: power iteration failed to settle");
        lambda = best;
    }

    // PSD check: shifted iteration for lambda_min, tolerance -1e-8 tr(G)
    double shift = 0.0;
    for (std::size_t i = 0; i < G.dim; ++i) {
        Kahan row;
        for (std::size_t j = 0; j < G.dim; ++j) row.add(std::abs(G.at(i, j)));
        shift = std::max(shift, row.value());
    }
    GramMatrix S;
    S.dim = G.dim;
    S.N = G.N;
    S.a.assign(G.dim * G.dim, cdouble(0, 0));
    for (std::size_t i = 0; i < G.dim; ++i)
        for (std::size_t j = 0; j < G.dim; ++j)
            S.at(i, j) = (i == j ? cdouble(shift, 0) : cdouble(0, 0)) - G.at(i, j);
    std::vector<cdouble> ones2(G.dim, cdouble(1.0, 0.0));
    if (auto ls = power_iterate(S, ones2, 500, 1e-10)) {
        double lambda_min = shift - *ls;
        if (lambda_min < -1e-8 * std::max(tr1, 1.0))
            throw DomainError("top_singular: Gram matrix is not PSD");
    }
    return std::sqrt(std::max(*lambda, 0.0));
}

Trace3 trace_gram_cubed(const GramMatrix& G) {
    auto G2 = matmul(G, G.a);
    std::size_t m = G.dim;
    KahanC tr;
    for (std::size_t i = 0; i < m; ++i) {
        KahanC row;
        for (std::size_t j = 0; j < m; ++j) row.add(G2[i * m + j] * G.at(j, i));
        tr.add(row.value());
    }
    cdouble v = tr.value();
    return {v.real(), std::fabs(v.imag())};
}

SpectrumSummary spectrum_summary(const GramMatrix& G) {
    SpectrumSummary s;
    s.trace1 = trace_gram(G);
    auto t3 = trace_gram_cubed(G);
    s.trace3 = t3.value;
    s.trace3_imag_residual = t3.imag_residual;
    s.hermitian_residual = G.hermitian_residual();
    s.s1 = top_singular(G);
    return s;
}

double trace_sv_bound(double trace1, double trace3, std::size_t m) {
    if (m == 0) throw DomainError("trace_sv_bound: m = 0");
    double dm = double(m);
    double gap = trace3 - trace1 * trace1 * trace1 / (dm * dm);
    if (gap < 0.0) gap = 0.0;
    return 2.0 * std::pow(gap, 1.0 / 6.0) + 2.0 * std::sqrt(trace1 / dm);
}

std::pair<double, double> real_power_inequality(const std::vector<double>& xs) {
    if (xs.empty()) throw DomainError("real_power_inequality: empty input");
    Kahan s2, s6;
    for (double x : xs) {
        if (x < 0.0) throw DomainError("real_power_inequality: negative entry");
        double x2 = x * x;
        s2.add(x2);
        s6.add(x2 * x2 * x2);
    }
    double k = double(xs.size());
    double gap = s6.value() - s2.value() * s2.value() * s2.value() / (k * k);
    if (gap < 0.0) gap = 0.0;
    double rhs = 2.0 * std::pow(gap, 1.0 / 6.0) + 2.0 * std::sqrt(s2.value() / k);
    return {xs.front(), rhs};
}

double spectral_count_bound(double N, double sigma, double s1) {
    if (!(sigma >= 0.5 && sigma < 1.0)) throw DomainError("spectral_count_bound: sigma");
    return std::pow(N, 1.0 - 2.0 * sigma) * s1 * s1;
}

} // namespace lvlab
