#include "lvlab/exponents.hpp"
#include "lvlab/errors.hpp"

#include <algorithm>

namespace lvlab {

namespace {

using Int = boost::multiprecision::cpp_int;

Rat rat(long num, long den = 1) { return Rat(num, den); }

void check_denominator(const Rat& r, const char* who) {
    if (boost::multiprecision::denominator(r) > 1000000)
        throw DomainError(std::string(who) + ": denominator above 1e6");
}

Rat rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rmax(const Rat& a, const Rat& b) { return a > b ? a : b; }

} // namespace

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw DomainError("rat_from_string: zero denominator");
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Int den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rat(Int(digits), den);
    }
    return Rat(Int(s));
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

RegimePoint::RegimePoint(Rat sigma_, Rat n_, std::optional<int> k_)
    : sigma(std::move(sigma_)), n(std::move(n_)), k(k_) {
    check_denominator(sigma, "RegimePoint.sigma");
    check_denominator(n, "RegimePoint.n");
    if (!(sigma > rat(1, 2) && sigma < 1)) throw DomainError("RegimePoint: sigma not in (1/2,1)");
    if (!(n > 0 && n <= 1)) throw DomainError("RegimePoint: n not in (0,1]");
    if (k && *k < 1) throw DomainError("RegimePoint: k must be >= 1");
}

Rat classical_exponent(const RegimePoint& p) {
    const Rat &s = p.sigma, &n = p.n;
    Rat first = 2 * n * (1 - s);
    Rat second = 1 + n * rmin(1 - 2 * s, 4 - 6 * s);
    return rmax(first, second);
}

Rat thm1_exponent(const RegimePoint& p) {
    const Rat &s = p.sigma, &n = p.n;
    return rmax(rmax(2 * n * (1 - s), n * (rat(18, 5) - 4 * s)),
                1 + n * (rat(12, 5) - 4 * s));
}

Rat fullbound_exponent(const RegimePoint& p) {
    if (!p.k) throw DomainError("fullbound_exponent: k required");
    const Rat &s = p.sigma, &n = p.n;
    Rat k(*p.k);
    Rat terms[8] = {
        2 * n * (1 - s),
        n * (5 - 6 * s),
        (k / (k + 1)) * (1 + n * (4 - 6 * s)),
        (4 * k / (4 * k + 3)) * n * (5 - 6 * s) + 2 / (4 * k + 3),
        rat(4, 3) + n * (2 - 4 * s),
        rat(1, 2) + n * (3 - 4 * s),
        1 + n * (rat(9, 2) - 7 * s),
        rat(18, 19) + n * (72 - 112 * s) / 19,
    };
    Rat best = terms[0];
    for (auto& t : terms) best = rmax(best, t);
    return best;
}

Rat bigN_exponent(const RegimePoint& p) {
    const Rat &s = p.sigma, &n = p.n;
    if (!(n >= rat(5, 6) && n <= 1)) throw DomainError("bigN_exponent: n not in [5/6,1]");
    if (!(s >= rat(7, 10))) throw DomainError("bigN_exponent: sigma < 7/10");
    return rmax(rmax(2 * n * (1 - s), rat(1, 2) + n * (3 - 4 * s)),
                (30 * s - 21) / 5 + n * (46 - 60 * s) / 5);
}

Rat jutila_exponent(const RegimePoint& p) {
    const Rat &s = p.sigma, &n = p.n;
    if (!(n >= rat(5, 6) && n <= 1)) throw DomainError("jutila_exponent: n not in [5/6,1]");
    if (!(s >= rat(7, 10))) throw DomainError("jutila_exponent: sigma < 7/10");
    return rmax(rmax(2 * n * (1 - s), 1 + n * (10 - 16 * s) / 3), 1 + n * (18 - 24 * s));
}

KWindow k_window(const RegimePoint& p) {
    const Rat &s = p.sigma, &n = p.n;
    if (n == 1 || s == rat(7, 10)) throw DomainError("k_window: pole at n=1 or sigma=7/10");
    if (!(n >= rat(5, 6) && n < 1)) throw DomainError("k_window: n not in [5/6,1)");
    if (!(s > rat(7, 10) && s <= rat(39, 50)))
        throw DomainError("k_window: sigma not in (7/10,39/50]");
    KWindow w;
    w.lower = (73 - 138 * n - 90 * s + 180 * n * s) / (12 * (1 - n) * (10 * s - 7));
    w.upper = (-21 + 46 * n + 30 * s - 60 * n * s) / (2 * (1 - n) * (13 - 15 * s));
    w.length = 1 + 5 * (6 * n - 5) * (-41 + 123 * s - 90 * s * s) /
                       (12 * (1 - n) * (10 * s - 7) * (13 - 15 * s));
    return w;
}

int kdef_select(const Rat& sigma, const Rat& n) {
    if (!(sigma > rat(1, 2) && sigma < 1)) throw DomainError("kdef_select: sigma");
    if (!(n > 0 && n <= 1)) throw DomainError("kdef_select: n");
    Rat denom = 6 + 10 * sigma;
    Rat lo = 10 / denom, hi = 15 / denom;
    // smallest integer k with k*n >= lo
    Rat q = lo / n;
    Int num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    Int k = num / den;
    if (k * den < num) ++k;
    if (k < 1) k = 1;
    if (Rat(k) * n > hi)
        throw NoValidK("kdef_select: window empty (N outside the paper regime)");
    return int(k);
}

Rat alpha(const Rat& sigma) {
    if (!(sigma > rat(1, 2) && sigma < rat(9, 10)))
        throw DomainError("alpha: sigma not in (1/2, 9/10)");
    return 15 * (1 - sigma) / ((3 + 5 * sigma) * (rat(18, 5) - 4 * sigma));
}

WBound2 wbound2_identity(const Rat& sigma) {
    const Rat& s = sigma;
    WBound2 w;
    w.lhs = 1 + (1 - 2 * s) * alpha(s);
    w.rhs1 = (129 - 195 * s + 50 * s * s) / (2 * (3 + 5 * s) * (9 - 10 * s));
    Rat d = s - rat(3, 4);
    w.rhs2 = 15 * (1 - s) / (3 + 5 * s) -
             (250 * d * d + rat(3, 8)) / (2 * (3 + 5 * s) * (9 - 10 * s));
    return w;
}

ZdCurves zero_density_curves(const Rat& sigma) {
    const Rat& s = sigma;
    if (!(s > rat(1, 2) && s < 1)) throw DomainError("zero_density_curves: sigma");
    ZdCurves z;
    z.ingham = 3 * (1 - s) / (2 - s);
    z.huxley = 3 * (1 - s) / (3 * s - 1);
    z.znew = 15 * (1 - s) / (3 + 5 * s);
    z.envelope = rmin(rmin(z.ingham, z.huxley), z.znew);
    return z;
}

bool prime_exponent_gate(const Rat& y_exp) { return y_exp > rat(17, 30); }

} // namespace lvlab
