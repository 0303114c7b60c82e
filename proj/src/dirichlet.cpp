#include "lvlab/dirichlet.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/kernels.hpp"
#include "lvlab/quadrature.hpp"
#include "lvlab/smooth_weight.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace lvlab {

namespace {
constexpr std::uint64_t kPairMemoryBudget = 1ULL << 31; // bytes of pair-sum scratch
} // namespace

void PointSet::validate() const {
    double scale = std::max(1.0, std::fabs(t0) + std::fabs(length));
    double slack = 1e-9 * scale;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double p = points[i];
        if (!(p >= t0 - slack && p <= t0 + length + slack))
            throw DomainError("PointSet: point outside ambient interval");
        if (i > 0 && points[i] - points[i - 1] < separation - slack)
            throw DomainError("PointSet: separation violated");
    }
}

void PointSet::write(std::ostream& os) const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "T0=%.17g T=%.17g delta=%.17g\n", t0, length, separation);
    os << buf;
    for (double p : points) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", p);
        os << buf;
    }
}

PointSet PointSet::read(std::istream& is) {
    PointSet W;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    if (std::sscanf(line.c_str(), "T0=%lg T=%lg delta=%lg", &W.t0, &W.length, &W.separation) != 3)
        throw DomainError("PointSet::read: bad header: " + line);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        W.points.push_back(std::stod(line));
    }
    W.validate();
    return W;
}

PointSet random_separated_set(std::uint64_t seed, std::size_t count, double t0, double length,
                              double delta) {
    if (double(count) * delta > length + delta)
        throw DomainError("random_separated_set: cannot fit that many separated points");
    Rng rng(seed);
    std::vector<double> pts;
    std::size_t attempts = 0;
    while (pts.size() < count) {
        if (++attempts > 10000 * (count + 1))
            throw PlacementFailure("random_separated_set: rejection sampler stalled");
        double c = t0 + length * rng.next_double();
        bool ok = true;
        for (double p : pts)
            if (std::fabs(c - p) < delta) {
                ok = false;
                break;
            }
        if (ok) pts.push_back(c);
    }
    std::sort(pts.begin(), pts.end());
    PointSet W{std::move(pts), t0, length, delta};
    W.validate();
    return W;
}

DirichletPolynomial::DirichletPolynomial(std::int64_t N, double coefficient_bound)
    : N_(N), bound_(coefficient_bound) {
    if (N < 1) throw DomainError("DirichletPolynomial: N must be positive");
    bre_.assign(std::size_t(N), 0.0);
    bim_.assign(std::size_t(N), 0.0);
    logn_.resize(std::size_t(N));
    for (std::int64_t k = 0; k < N; ++k) logn_[std::size_t(k)] = std::log(double(N + 1 + k));
}

std::size_t DirichletPolynomial::idx(std::int64_t n) const {
    if (n <= N_ || n > 2 * N_)
        throw DomainError("DirichletPolynomial: index outside (N, 2N]");
    return std::size_t(n - N_ - 1);
}

cdouble DirichletPolynomial::coeff(std::int64_t n) const {
    std::size_t k = idx(n);
    return {bre_[k], bim_[k]};
}

void DirichletPolynomial::set_coeff(std::int64_t n, cdouble b) {
    if (std::abs(b) > bound_ * (1.0 + 1e-12))
        throw DomainError("DirichletPolynomial: coefficient above bound");
    std::size_t k = idx(n);
    bre_[k] = b.real();
    bim_[k] = b.imag();
    if (b.imag() != 0.0) has_imag_ = true;
    wre_.clear();
    wim_.clear();
}

cdouble DirichletPolynomial::eval_raw(double t) const {
    cdouble s = kernels::phase_sum(logn_.data(), bre_.data(), bre_.size(), t);
    if (has_imag_) {
        cdouble si = kernels::phase_sum(logn_.data(), bim_.data(), bim_.size(), t);
        s += cdouble(0.0, 1.0) * si;
    }
    return s;
}

void DirichletPolynomial::ensure_smoothed() const {
    if (!wre_.empty()) return;
    wre_.resize(bre_.size());
    wim_.resize(bim_.size());
    for (std::size_t k = 0; k < bre_.size(); ++k) {
        double w = SmoothWeight::eval(double(N_ + 1 + std::int64_t(k)) / double(N_));
        wre_[k] = w * bre_[k];
        wim_[k] = w * bim_[k];
    }
}

cdouble DirichletPolynomial::eval_smoothed(double t) const {
    ensure_smoothed();
    cdouble s = kernels::phase_sum(logn_.data(), wre_.data(), wre_.size(), t);
    if (has_imag_) {
        cdouble si = kernels::phase_sum(logn_.data(), wim_.data(), wim_.size(), t);
        s += cdouble(0.0, 1.0) * si;
    }
    return s;
}

void DirichletPolynomial::write(std::ostream& os) const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "N=%lld bound=%.17g\n", (long long)N_, bound_);
    os << buf;
    for (std::size_t k = 0; k < bre_.size(); ++k) {
        if (bre_[k] == 0.0 && bim_[k] == 0.0) continue;
        std::snprintf(buf, sizeof(buf), "%lld %.17g %.17g\n", (long long)(N_ + 1 + std::int64_t(k)),
                      bre_[k], bim_[k]);
        os << buf;
    }
}

DirichletPolynomial DirichletPolynomial::read(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    long long N = 0;
    double bound = 0.0;
    if (std::sscanf(line.c_str(), "N=%lld bound=%lg", &N, &bound) != 2)
        throw DomainError("DirichletPolynomial::read: bad header: " + line);
    DirichletPolynomial D(N, bound);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        long long n;
        double re, im;
        if (std::sscanf(line.c_str(), "%lld %lg %lg", &n, &re, &im) != 3)
            throw DomainError("DirichletPolynomial::read: bad row: " + line);
        D.set_coeff(n, {re, im});
    }
    return D;
}

PointSet extract_large_values(const std::vector<std::pair<double, double>>& values,
                              double threshold, double delta) {
    PointSet out;
    out.separation = delta;
    double last = -std::numeric_limits<double>::infinity();
    for (auto& [t, v] : values) {
        if (v >= threshold && t - last >= delta) {
            out.points.push_back(t);
            last = t;
        }
    }
    if (!values.empty()) {
        out.t0 = values.front().first;
        out.length = values.back().first - values.front().first;
    }
    return out;
}

std::vector<std::pair<double, double>> scan_abs(const DirichletPolynomial& D, double t_lo,
                                                double t_hi, double spacing, EvalKind kind) {
    const auto& logs = D.log_n();
    std::size_t n = logs.size();
    std::vector<double> cre(n), cim(n), sre(n), sim(n);
    for (std::size_t k = 0; k < n; ++k) {
        double ph = spacing * logs[k];
        sre[k] = std::cos(ph);
        sim[k] = std::sin(ph);
    }
    std::vector<std::pair<double, double>> out;
    std::size_t steps = std::size_t(std::floor((t_hi - t_lo) / spacing)) + 1;
    out.reserve(steps);
    // rotation drift is multiplicative; re-sync from exact phases periodically
    constexpr std::size_t kResync = 1024;
    std::vector<double> wre(n), wim(n);
    {
        std::int64_t N = D.length();
        for (std::size_t k = 0; k < n; ++k) {
            cdouble b = D.coeff(N + 1 + std::int64_t(k));
            double w = kind == EvalKind::Smoothed
                           ? SmoothWeight::eval(double(N + 1 + std::int64_t(k)) / double(N))
                           : 1.0;
            wre[k] = w * b.real();
            wim[k] = w * b.imag();
        }
    }
    auto sync_at = [&](double t) {
        for (std::size_t k = 0; k < n; ++k) {
            double ph = t * logs[k];
            double c = std::cos(ph), s = std::sin(ph);
            cre[k] = wre[k] * c - wim[k] * s;
            cim[k] = wre[k] * s + wim[k] * c;
        }
    };
    for (std::size_t i = 0; i < steps; ++i) {
        double t = t_lo + spacing * double(i);
        if (i % kResync == 0) {
            sync_at(t);
            Kahan re, im;
            for (std::size_t k = 0; k < n; ++k) {
                re.add(cre[k]);
                im.add(cim[k]);
            }
            out.emplace_back(t, std::hypot(re.value(), im.value()));
        } else {
            cdouble s = kernels::rotate_accumulate(cre.data(), cim.data(), sre.data(), sim.data(),
                                                   n);
            out.emplace_back(t, std::abs(s));
        }
    }
    return out;
}

std::uint64_t additive_energy(const PointSet& W, double slack) {
    std::size_t n = W.size();
    if (n == 0) return 0;
    std::uint64_t pairs = std::uint64_t(n) * n;
    if (pairs * sizeof(double) > kPairMemoryBudget)
        throw BudgetExceeded("additive_energy: |W|^2 pair-sum table over memory budget");
    std::vector<double> sums;
    sums.reserve(pairs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sums.push_back(W.points[i] + W.points[j]);
    std::sort(sums.begin(), sums.end());
    // sliding window: for each p, count q with |s_q - s_p| <= slack
    std::uint64_t total = 0;
    std::size_t lo = 0, hi = 0;
    for (std::size_t p = 0; p < sums.size(); ++p) {
        while (sums[p] - sums[lo] > slack) ++lo;
        if (hi < p) hi = p;
        while (hi + 1 < sums.size() && sums[hi + 1] - sums[p] <= slack) ++hi;
        total += std::uint64_t(hi - lo + 1);
    }
    return total;
}

std::uint64_t energy_bruteforce(const PointSet& W, double slack) {
    std::size_t n = W.size();
    if (n > 60) throw SizeLimit("energy_bruteforce: |W| > 60");
    std::uint64_t total = 0;
    const auto& p = W.points;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (std::fabs(p[a] + p[b] - p[c] - p[d]) <= slack) ++total;
    return total;
}

RFunction::RFunction(const PointSet& W) : pts_(W.points), ones_(W.points.size(), 1.0) {}

cdouble RFunction::operator()(double v) const {
    if (v == 0.0) throw DomainError("R(v): v = 0");
    return kernels::phase_sum(pts_.data(), ones_.data(), pts_.size(), std::log(std::fabs(v)));
}

double RFunction::abs(double v) const { return std::abs((*this)(v)); }

double R_smoothed(const RFunction& R, double u, const SmoothingSpec& spec, double N) {
    double NM = N * spec.M;
    double lo = std::max(0.5, u - 2.0 / NM);
    double hi = std::min(4.0, u + 2.0 / NM);
    if (hi <= lo) return 0.0;
    auto integrand = [&](double up) {
        double k1 = psi1_tilde(NM * (u - up));
        if (k1 == 0.0) return 0.0;
        double k2 = psi2_tilde(up);
        if (k2 == 0.0) return 0.0;
        cdouble r = R(up);
        return NM * k1 * k2 * std::norm(r);
    };
    // resolution <= 1/(4NM): the window has width <= 4/NM, so 16 panels seed
    double v = integrate_refined(integrand, lo, hi, 1e-8, 1e-13, 16, 4096);
    return std::sqrt(std::max(v, 0.0));
}

namespace {

double moment_Lp(const PointSet& W, int p) {
    if (W.separation < 1.0)
        throw DomainError("moment_Lp: requires separation >= 1");
    RFunction R(W);
    double T = std::max(W.length, 1.0);
    auto f = [&](double v) {
        double a = std::abs(R(v));
        return p == 2 ? a * a : a * a * a * a;
    };
    std::size_t seed = std::size_t(std::ceil(1.5 * 8.0 * T));
    return integrate_refined(f, 0.5, 2.0, 1e-9, 1e-12, seed, std::size_t(1) << 24);
}

} // namespace

double moment_L2(const PointSet& W) { return moment_Lp(W, 2); }
double moment_L4(const PointSet& W) { return moment_Lp(W, 4); }

double local_constancy_check(const PointSet& W, double v, double c) {
    RFunction R(W);
    double T = std::max(W.length, 1.0);
    double num = R.abs(v);
    auto f = [&](double vp) { return R.abs(vp); };
    double den = T * integrate_refined(f, v - c / T, v + c / T, 1e-9, 1e-13, 8, 1 << 16);
    return num / den;
}

double local_constancy_check(const DirichletPolynomial& D, double t, double c) {
    double num = std::abs(D.eval_raw(t));
    auto f = [&](double u) { return std::abs(D.eval_raw(u)); };
    double den = integrate_refined(f, t - c, t + c, 1e-9, 1e-13, 16, 1 << 16);
    return num / den;
}

ExtremalConstruction extremal_construction(std::int64_t N, double sigma, double eps,
                                           std::optional<double> T0opt) {
    if (!(sigma > 0.5 && sigma < 1.0)) throw DomainError("extremal_construction: sigma");
    double H = std::pow(double(N), sigma);
    int J = int(std::floor(eps * std::pow(double(N), 1.0 - sigma)));
    if (J < 2) throw DegenerateRange("extremal_construction: J < 2");
    double spacing = std::pow(double(N), 1.0 - sigma) / eps;
    double T0 = T0opt.value_or(double(N));
    std::int64_t block = N / J;
    if (double(block) < 2.0 * H)
        throw DegenerateRange("extremal_construction: blocks overlap (eps too large)");

    DirichletPolynomial D(N, 1.0);
    PointSet witnesses;
    witnesses.t0 = T0;
    witnesses.length = double(N);
    witnesses.separation = spacing;
    for (int j = 1; j <= J; ++j) {
        double tj = T0 + spacing * double(j - 1);
        witnesses.points.push_back(tj);
        std::int64_t base = N + std::int64_t(j - 1) * block;
        std::int64_t hlo = std::int64_t(std::floor(H)) + 1;
        std::int64_t hhi = std::int64_t(std::ceil(2.0 * H)) - 1;
        for (std::int64_t h = hlo; h <= hhi; ++h) {
            double w = SmoothWeight::eval(double(h) / H);
            if (w == 0.0) continue;
            std::int64_t n = base + h;
            if (n <= N || n > 2 * N)
                throw DegenerateRange("extremal_construction: block leaves (N, 2N]");
            double ph = -tj * std::log(double(n));
            D.set_coeff(n, {w * std::cos(ph), w * std::sin(ph)});
        }
    }
    witnesses.validate();
    return {std::move(D), std::move(witnesses), H, J};
}

} // namespace lvlab
