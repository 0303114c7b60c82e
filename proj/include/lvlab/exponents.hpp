#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace lvlab {

// Exact rational exponent arithmetic: every bound in this module is a power
// of T with N = T^n substituted symbolically. No floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;

Rat rat_from_string(const std::string& s); // "3/4", "0.75" (decimal), "1"
double rat_to_double(const Rat& r);

// sigma in (1/2,1) exact, n in (0,1] with N = T^n, optional integer k.
// Denominators capped at 1e6 on construction.
struct RegimePoint {
    Rat sigma;
    Rat n;
    std::optional<int> k;

    RegimePoint(Rat sigma_, Rat n_, std::optional<int> k_ = std::nullopt);
};

// max(2n(1-s), 1 + n min(1-2s, 4-6s))
Rat classical_exponent(const RegimePoint& p);
// max(2n(1-s), n(18/5-4s), 1 + n(12/5-4s))
Rat thm1_exponent(const RegimePoint& p);
// max of the eight assembled terms; requires p.k
Rat fullbound_exponent(const RegimePoint& p);
// max(2n(1-s), 1/2 + n(3-4s), (30s-21)/5 + n(46-60s)/5); n in [5/6,1], s >= 7/10
Rat bigN_exponent(const RegimePoint& p);
// max(2n(1-s), 1 + n(10-16s)/3, 1 + n(18-24s))
Rat jutila_exponent(const RegimePoint& p);

struct KWindow {
    Rat lower, upper, length;
};
// admissible k interval for the BigN argument; poles at n=1 and s=7/10
KWindow k_window(const RegimePoint& p);

// smallest k with N^k >= T^{10/(6+10s)} given N = T^n; checks the upper
// window N^k <= T^{15/(6+10s)}
int kdef_select(const Rat& sigma, const Rat& n);

// 15(1-s) / ((3+5s)(18/5-4s)); pole at s = 9/10
Rat alpha(const Rat& sigma);

struct WBound2 {
    Rat lhs;  // 1 + (1-2s) alpha
    Rat rhs1; // (129-195s+50s^2) / (2(3+5s)(9-10s))
    Rat rhs2; // 15(1-s)/(3+5s) - (250(s-3/4)^2+3/8) / (2(3+5s)(9-10s))
};
WBound2 wbound2_identity(const Rat& sigma);

struct ZdCurves {
    Rat ingham;   // 3(1-s)/(2-s)
    Rat huxley;   // 3(1-s)/(3s-1)
    Rat znew;     // 15(1-s)/(3+5s)
    Rat envelope; // min of the three
};
ZdCurves zero_density_curves(const Rat& sigma);

// true iff 1 - y_exp < 13/30, i.e. y_exp > 17/30
bool prime_exponent_gate(const Rat& y_exp);

} // namespace lvlab
