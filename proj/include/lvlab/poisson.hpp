#pragma once

#include "lvlab/dirichlet.hpp"
#include "lvlab/util.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace lvlab {

enum class TripleClass { Zero, OneNonzero, TwoNonzero, ThreeNonzero };

inline TripleClass classify_triple(int m1, int m2, int m3) {
    int nz = (m1 != 0) + (m2 != 0) + (m3 != 0);
    return TripleClass(nz);
}

// Shared cache of hhat_{dt}(xi) keyed on the exact float pair (dt, xi).
class HhatCache {
  public:
    cdouble get(double dt, double xi);
    std::size_t evaluations() const { return evals_; }
    std::size_t hits() const { return hits_; }

  private:
    struct Key {
        double dt, xi;
        bool operator==(const Key& o) const { return dt == o.dt && xi == o.xi; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    std::unordered_map<Key, cdouble, KeyHash> map_;
    std::size_t evals_ = 0, hits_ = 0;
};

// I_m = N^3 tr(A^(1) A^(2) A^(3)), A^(i)[j,k] = hhat_{t_j - t_k}(m_i N).
class ImComputer {
  public:
    ImComputer(const PointSet& W, std::int64_t N);

    cdouble I_m(int m1, int m2, int m3);
    std::size_t hhat_evaluations() const { return cache_.evaluations(); }

  private:
    const std::vector<cdouble>& matrix_for(int m);

    std::vector<double> pts_;
    std::int64_t N_;
    HhatCache cache_;
    std::unordered_map<int, std::vector<cdouble>> mats_;
};

struct TraceReport {
    std::int64_t N = 0;
    std::size_t set_size = 0;
    double trace3_exact = 0.0;          // route A: direct Gram cube
    double main_term = 0.0;             // computed class-zero total I_0 (real part)
    double main_term_asymptotic = 0.0;  // N^3 |W| ||w||_{L2}^6
    cdouble S0, S1, S2, S3;             // class totals from the Poisson route
    int truncation_radius = 0;          // M* = ceil(T^{1+eps}/N)
    double tail_bound = 0.0;            // sampled bound on the skipped |m| > M* tail
    double residual = 0.0;              // |tr3 - (S0+S1+S2+S3)|
    double residual_asymptotic = 0.0;   // |tr3 - (asymptotic main + S1+S2+S3)|
    double diag_gap = 0.0;              // |S0 - asymptotic main|
    double imag_residual = 0.0;         // |Im(S0+S1+S2+S3)|
    std::size_t hhat_evaluations = 0;
};

// Poisson split of tr(G^3) into the class totals, plus both residual forms.
TraceReport s_split(const PointSet& W, std::int64_t N, double eps = 0.1,
                    std::uint64_t work_budget = 1000000000ULL);

// N^3 * strip integral of |R(v1) R(v2/v1) R(v2)| over
// {|m1 v1 + m2 v2 + m3| <= c/N} inside [1/2,2]^2; 0 for an empty strip.
double key_cancel_rhs(const PointSet& W, std::int64_t N, int m1, int m2, int m3,
                      double c = 4.0);

struct AfeResult {
    double lhs; // |sum_{0<|m|<=M*} hhat_t(mN)|
    double rhs; // |t|^{-1/2} int_{|u|<=U} |sum_{m<=ceil(2|t|/N)} m^{-i(t+u)}| du
};
AfeResult afe_check(double t, std::int64_t N, double eps = 0.1, double U = 1.0);

// Itilde_m = int_{1/2}^{2} |R(v1) R~((m1 v1+m3)/(m2 v1)) R~((m1 v1+m3)/m2)| dv1
double compute_Itilde(const PointSet& W, std::int64_t N, int m1, int m2, int m3,
                      const SmoothingSpec& spec, double M1, double M);

} // namespace lvlab
