#include "lvlab/affine.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/smooth_weight.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

namespace lvlab {

DensityProfile::DensityProfile(double T) : T_(T), h_(1.0 / (8.0 * T)) {
    if (!(T >= 1.0)) throw DomainError("DensityProfile: T must be >= 1");
    auto n = std::size_t(std::floor((kHi - kLo) / h_)) + 1;
    f_.assign(n, 0.0);
}

void DensityProfile::set_sample(std::size_t i, double v) {
    if (v < 0.0) throw DomainError("DensityProfile: negative sample");
    f_[i] = v;
    dirty_ = true;
}

double DensityProfile::interp(double x) const {
    double idx = (x - kLo) / h_;
    if (idx < 0.0 || idx >= double(f_.size() - 1)) return 0.0;
    auto lo = std::size_t(idx);
    double frac = idx - double(lo);
    return f_[lo] * (1.0 - frac) + f_[lo + 1] * frac;
}

void DensityProfile::add_cell(double center) {
    // support of the cell is [center - 1/T, center + 1/T]
    double lo = center - 1.0 / T_, hi = center + 1.0 / T_;
    auto ilo = std::size_t(std::max(0.0, std::ceil((lo - kLo) / h_)));
    auto ihi = std::size_t(std::max(0.0, std::floor((hi - kLo) / h_)));
    ihi = std::min(ihi, f_.size() - 1);
    for (std::size_t i = ilo; i <= ihi && i < f_.size(); ++i)
        f_[i] += unit_bump(T_ * (grid(i) - center));
    dirty_ = true;
}

void DensityProfile::refresh() const {
    if (!dirty_) return;
    Kahan s1, s2;
    double mx = 0.0;
    for (std::size_t i = 0; i < f_.size(); ++i) {
        double wgt = (i == 0 || i + 1 == f_.size()) ? 0.5 : 1.0;
        s1.add(wgt * f_[i]);
        s2.add(wgt * f_[i] * f_[i]);
        mx = std::max(mx, f_[i]);
    }
    l1_ = h_ * s1.value();
    l2sq_ = h_ * s2.value();
    sup_ = mx;
    dirty_ = false;
}

double DensityProfile::l1() const {
    refresh();
    return l1_;
}
double DensityProfile::l2sq() const {
    refresh();
    return l2sq_;
}
double DensityProfile::sup() const {
    refresh();
    return sup_;
}

void DensityProfile::write(std::ostream& os, const std::string& provenance) const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "T=%.17g n=%zu", T_, f_.size());
    os << buf;
    if (!provenance.empty()) os << ' ' << provenance;
    os << '\n';
    for (double v : f_) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        os << buf;
    }
}

DensityProfile DensityProfile::read(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    double T = 0.0;
    std::size_t n = 0;
    if (std::sscanf(line.c_str(), "T=%lg n=%zu", &T, &n) != 2)
        throw DomainError("DensityProfile::read: bad header: " + line);
    DensityProfile p(T);
    if (p.size() != n) throw DomainError("DensityProfile::read: sample count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(is, line)) throw DomainError("DensityProfile::read: truncated");
        p.set_sample(i, std::stod(line));
    }
    return p;
}

namespace {

struct Triple {
    int m1, m2, m3;
};

std::vector<Triple> triple_box(int M1, int M2, int M3, double c3) {
    std::vector<Triple> out;
    int m3max = int(std::floor(c3 * double(M3)));
    for (int a1 = M1 + 1; a1 <= 2 * M1; ++a1)
        for (int sgn : {+1, -1})
            for (int m2 = M2 + 1; m2 <= 2 * M2; ++m2)
                for (int m3 = -m3max; m3 <= m3max; ++m3)
                    out.push_back({sgn * a1, m2, m3});
    return out;
}

} // namespace

double j_inner(const DensityProfile& f, double u, int M1, int M2, int M3, double c3) {
    Kahan acc;
    for (const auto& t : triple_box(M1, M2, M3, c3))
        acc.add(f.interp((double(t.m1) * u + double(t.m3)) / double(t.m2)));
    return acc.value();
}

double j_value(const DensityProfile& f, int M, JValueDetail* detail, double c3) {
    if (M > 64) throw BudgetExceeded("j_value: M > 64 brute-force budget");
    std::vector<int> dyadic;
    for (int v = 1; v <= M; v *= 2) dyadic.push_back(v);
    double best = 0.0;
    JValueDetail d;
    std::vector<double> total(f.size());
    for (int M1 : dyadic)
        for (int M2 : dyadic)
            for (int M3 : dyadic) {
                std::fill(total.begin(), total.end(), 0.0);
                for (const auto& t : triple_box(M1, M2, M3, c3)) {
                    double a = double(t.m1) / double(t.m2);
                    double b = double(t.m3) / double(t.m2);
                    for (std::size_t i = 0; i < f.size(); ++i)
                        total[i] += f.interp(a * f.grid(i) + b);
                }
                Kahan integ;
                for (std::size_t i = 0; i < total.size(); ++i) {
                    double wgt = (i == 0 || i + 1 == total.size()) ? 0.5 : 1.0;
                    integ.add(wgt * total[i] * total[i]);
                }
                double v = f.spacing() * integ.value();
                if (v > best) {
                    best = v;
                    d = {v, M1, M2, M3};
                }
            }
    if (detail) *detail = d;
    return best;
}

double propsumaff_bound(const DensityProfile& f, double M) {
    double M2 = M * M;
    double M4 = M2 * M2;
    return M4 * M2 * f.l1() * f.l1() + M4 * f.l2sq();
}

DensityProfile smooth_f(const DensityProfile& f) {
    DensityProfile out(f.T());
    double h = f.spacing();
    double T = f.T();
    // kernel support is 1/T = 8 grid cells wide on each side
    int reach = 8;
    for (std::size_t i = 0; i < out.size(); ++i) {
        Kahan acc;
        for (int d = -reach; d <= reach; ++d) {
            auto j = std::int64_t(i) + d;
            if (j < 0 || j >= std::int64_t(f.size())) continue;
            double wgt = (std::abs(d) == reach) ? 0.5 : 1.0;
            acc.add(wgt * unit_bump(T * h * double(d)) * f.sample(std::size_t(j)));
        }
        out.set_sample(i, T * h * acc.value());
    }
    return out;
}

DensityProfile fixture_random_intervals(double T, int count, std::uint64_t seed) {
    if (double(count) / T > 1.0)
        throw DomainError("fixture_random_intervals: count/T > 1");
    DensityProfile p(T);
    Rng rng(seed);
    std::vector<double> centers;
    std::size_t attempts = 0;
    while (centers.size() < std::size_t(count)) {
        if (++attempts > 10000u * std::size_t(std::max(count, 1)))
            throw PlacementFailure("fixture_random_intervals: could not place disjoint cells");
        double c = rng.uniform(0.5, 2.0);
        bool ok = true;
        for (double q : centers)
            if (std::fabs(c - q) < 2.5 / T) {
                ok = false;
                break;
            }
        if (ok) centers.push_back(c);
    }
    std::sort(centers.begin(), centers.end());
    for (double c : centers) p.add_cell(c);
    return p;
}

std::size_t farey_cell_count(int B) {
    std::set<std::pair<long, long>> reduced;
    for (long r = B + 1; r <= 2L * B; ++r)
        for (long s = B + 1; s <= 2L * B; ++s) {
            if (2 * r < s || r > 2 * s) continue; // r/s outside [1/2, 2]
            long g = std::gcd(r, s);
            reduced.emplace(r / g, s / g);
        }
    return reduced.size();
}

DensityProfile fixture_farey(int B, double T) {
    if (double(B) * double(B) > T) throw DomainError("fixture_farey: needs B^2 <= T");
    DensityProfile p(T);
    std::set<std::pair<long, long>> reduced;
    for (long r = B + 1; r <= 2L * B; ++r)
        for (long s = B + 1; s <= 2L * B; ++s) {
            if (2 * r < s || r > 2 * s) continue;
            long g = std::gcd(r, s);
            reduced.emplace(r / g, s / g);
        }
    for (auto& [num, den] : reduced) p.add_cell(double(num) / double(den));
    return p;
}

} // namespace lvlab
