#include "lvlab/energy_moments.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace lvlab {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const {
        return std::size_t(p.first) * 0x9e3779b97f4a7c15ULL ^ std::size_t(p.second);
    }
};

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

} // namespace

double discrete_moment(const PointSet& W, std::int64_t M, int p, std::uint64_t work_budget) {
    if (p != 2 && p != 3 && p != 4) throw DomainError("discrete_moment: p must be 2, 3 or 4");
    if (std::uint64_t(M) * std::uint64_t(M) * W.size() > work_budget)
        throw BudgetExceeded("discrete_moment: M^2 |W| over work budget");
    RFunction R(W);
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, double, PairHash> cache;
    Kahan acc;
    for (std::int64_t n1 = M + 1; n1 <= 2 * M; ++n1)
        for (std::int64_t n2 = M + 1; n2 <= 2 * M; ++n2) {
            std::int64_t g = std::gcd(n1, n2);
            auto key = std::make_pair(n1 / g, n2 / g);
            auto it = cache.find(key);
            double a;
            if (it == cache.end()) {
                a = R.abs(double(key.first) / double(key.second));
                cache.emplace(key, a);
            } else {
                a = it->second;
            }
            acc.add(ipow(a, p));
        }
    return acc.value();
}

double discrete_moment_uncached(const PointSet& W, std::int64_t M, int p) {
    RFunction R(W);
    Kahan acc;
    for (std::int64_t n1 = M + 1; n1 <= 2 * M; ++n1)
        for (std::int64_t n2 = M + 1; n2 <= 2 * M; ++n2)
            acc.add(ipow(R.abs(double(n1) / double(n2)), p));
    return acc.value();
}

LevelSetSummary level_sets(const PointSet& W) {
    if (W.size() > 10000) throw BudgetExceeded("level_sets: |W| > 1e4");
    std::map<long long, std::uint64_t> r;
    for (double t1 : W.points)
        for (double t2 : W.points) ++r[(long long)std::floor(t1 - t2)];
    LevelSetSummary out;
    std::map<double, LevelSetSummary::Bucket> buckets;
    for (auto& [u, count] : r) {
        out.total_pairs += count;
        // dyadic scale with count in (B, 2B]
        double B = 0.5;
        while (double(count) > 2.0 * B) B *= 2.0;
        auto& bk = buckets[B];
        bk.B = B;
        bk.members.emplace_back(u, count);
        bk.count_sum += count;
        bk.count_sq_sum += count * count;
    }
    for (auto& [B, bk] : buckets) out.buckets.push_back(std::move(bk));
    return out;
}

GcdSplit gcd_split_moment(const PointSet& W, std::int64_t N, double D, int p,
                          std::uint64_t work_budget) {
    if (std::uint64_t(N) * std::uint64_t(N) * W.size() > work_budget)
        throw BudgetExceeded("gcd_split_moment: N^2 |W| over work budget");
    RFunction R(W);
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, double, PairHash> cache;
    GcdSplit out;
    out.threshold = D;
    Kahan small_acc, large_acc, total_acc;
    std::map<std::int64_t, Kahan> per_d;
    for (std::int64_t n1 = N + 1; n1 <= 2 * N; ++n1)
        for (std::int64_t n2 = N + 1; n2 <= 2 * N; ++n2) {
            std::int64_t g = std::gcd(n1, n2);
            auto key = std::make_pair(n1 / g, n2 / g);
            auto it = cache.find(key);
            double a;
            if (it == cache.end()) {
                a = R.abs(double(key.first) / double(key.second));
                cache.emplace(key, a);
            } else {
                a = it->second;
            }
            double v = ipow(a, p);
            total_acc.add(v);
            if (double(g) <= D)
                small_acc.add(v);
            else
                large_acc.add(v);
            if (g <= 64) per_d[g].add(v);
        }
    out.small_sum = small_acc.value();
    out.large_sum = large_acc.value();
    out.total = total_acc.value();
    for (auto& [d, acc] : per_d) out.per_d[d] = acc.value();
    return out;
}

double hb_sum(const PointSet& W, const std::vector<cdouble>& a, std::int64_t M,
              std::uint64_t work_budget) {
    if (a.size() != std::size_t(M)) throw DomainError("hb_sum: need M coefficients on (M,2M]");
    for (auto& z : a)
        if (std::abs(z) > 1.0 + 1e-12) throw DomainError("hb_sum: |a_n| <= 1 required");
    if (std::uint64_t(W.size()) * W.size() * std::uint64_t(M) > work_budget)
        throw BudgetExceeded("hb_sum: |W|^2 M over work budget");
    auto count = std::size_t(M);
    std::vector<double> logm(count, 0.0), are(count, 0.0), aim(count, 0.0);
    bool has_imag = false;
    for (std::int64_t k = 0; k < M; ++k) {
        logm[std::size_t(k)] = std::log(double(M + 1 + k));
        are[std::size_t(k)] = a[std::size_t(k)].real();
        aim[std::size_t(k)] = a[std::size_t(k)].imag();
        if (a[std::size_t(k)].imag() != 0.0) has_imag = true;
    }
    Kahan acc;
    for (double t1 : W.points)
        for (double t2 : W.points) {
            double dt = t1 - t2;
            cdouble s = kernels::phase_sum(logm.data(), are.data(), logm.size(), dt);
            if (has_imag)
                s += cdouble(0, 1) * kernels::phase_sum(logm.data(), aim.data(), logm.size(), dt);
            acc.add(std::norm(s));
        }
    return acc.value();
}

double hb_rhs(std::size_t set_size, double M, double T) {
    double w = double(set_size);
    return w * w * M + w * M * M + std::pow(w, 1.25) * std::sqrt(T) * M;
}

double energy_rhs_basic(std::size_t set_size, double N, double sigma) {
    double w = double(set_size);
    return w * w * w * std::pow(N, 1.0 - 2.0 * sigma) + w * w * std::pow(N, 2.0 - 2.0 * sigma);
}

double energy_rhs_refined(std::size_t set_size, double N, double T, double sigma) {
    double w = double(set_size);
    return w * std::pow(N, 4.0 - 4.0 * sigma) +
           std::pow(w, 21.0 / 8.0) * std::pow(T, 0.25) * std::pow(N, 1.0 - 2.0 * sigma) +
           w * w * w * std::pow(N, 1.0 - 2.0 * sigma);
}

} // namespace lvlab
